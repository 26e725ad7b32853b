"""Exact-rational toolkit for graded ALC over the Lukasiewicz operations.

Degrees are reduced fractions; every comparison in the package is exact.
The pieces: an algebra of truth degrees, a concept/axiom language with text
syntax, a finite-model evaluator and checker, a bounded grid-search model
finder, correspondence-instance solvers and encodings, a compiler from
instances to graded knowledge bases, and the truncated canonical model with
its end-to-end verifier.
"""

from .canonical import (
    CanonicalModel,
    ConsistentToDepth,
    CounterexampleReport,
    DEFAULT_MAX_NODES,
    MissingSuccessorError,
    ROOT_LABEL,
    Solved,
    build_canonical,
    build_homomorphism,
    check_canonical,
    label_depth,
    node_label,
    parse_node_label,
    verify_theorem,
)
from .concepts import (
    And,
    Atomic,
    BOT,
    Bottom,
    Concept,
    ConceptAssertion,
    Exists,
    Forall,
    Gci,
    KnowledgeBase,
    Not,
    Or,
    RoleAssertion,
    Scale,
    TOP,
    Top,
    concept_names,
    conjunction,
    disjunction,
    iff,
    implies,
    max_quantifier_depth,
    maximum,
    minimum,
    quantifier_depth,
    role_names,
)
from .concepts import scale as scale_concept
from .degrees import (
    Degree,
    DegreeRangeError,
    ONE,
    ZERO,
    implication,
    negation,
    parse_degree,
    scale,
    tconorm,
    tnorm,
)
from .errors import BudgetExceededError, ParseError, ValidationError
from .interp import (
    AxiomCheck,
    FuzzyInterpretation,
    KbReport,
    check_axiom,
    check_kb,
    eval_concept,
    eval_gci,
    find_witness,
    parse_model,
    print_model,
)
from .parser import parse_concept, parse_kb, print_concept, print_kb
from .pcp import (
    DEFAULT_MAX_ENUM,
    PcpInstance,
    Word,
    encode_word,
    palindrome,
    parse_pcp,
    prepend_encode,
    print_pcp,
    solve_pcp,
    solve_rpcp,
    to_rpcp,
)
from .reduction import (
    CONCEPT_NAMES,
    ROOT_INDIVIDUAL,
    ReductionConfig,
    build_kb,
    build_kb_prime,
    build_tbox_i,
    prime_restriction,
    role_name,
)
from .search import grid_search

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # degrees
    "Degree",
    "DegreeRangeError",
    "ZERO",
    "ONE",
    "parse_degree",
    "tnorm",
    "tconorm",
    "negation",
    "implication",
    "scale",
    # concepts and axioms
    "Concept",
    "Top",
    "Bottom",
    "Atomic",
    "And",
    "Or",
    "Not",
    "Exists",
    "Forall",
    "Scale",
    "TOP",
    "BOT",
    "scale_concept",
    "implies",
    "iff",
    "minimum",
    "maximum",
    "conjunction",
    "disjunction",
    "concept_names",
    "role_names",
    "quantifier_depth",
    "max_quantifier_depth",
    "Gci",
    "ConceptAssertion",
    "RoleAssertion",
    "KnowledgeBase",
    # text syntax
    "parse_concept",
    "parse_kb",
    "print_concept",
    "print_kb",
    # interpretations
    "FuzzyInterpretation",
    "AxiomCheck",
    "KbReport",
    "eval_concept",
    "eval_gci",
    "check_axiom",
    "check_kb",
    "find_witness",
    "parse_model",
    "print_model",
    "grid_search",
    # correspondence instances
    "Word",
    "PcpInstance",
    "DEFAULT_MAX_ENUM",
    "palindrome",
    "to_rpcp",
    "encode_word",
    "prepend_encode",
    "solve_pcp",
    "solve_rpcp",
    "parse_pcp",
    "print_pcp",
    # compilation
    "ReductionConfig",
    "CONCEPT_NAMES",
    "ROOT_INDIVIDUAL",
    "role_name",
    "prime_restriction",
    "build_tbox_i",
    "build_kb",
    "build_kb_prime",
    # canonical model
    "CanonicalModel",
    "ROOT_LABEL",
    "DEFAULT_MAX_NODES",
    "CounterexampleReport",
    "Solved",
    "ConsistentToDepth",
    "MissingSuccessorError",
    "node_label",
    "parse_node_label",
    "label_depth",
    "build_canonical",
    "check_canonical",
    "build_homomorphism",
    "verify_theorem",
    # errors
    "ParseError",
    "ValidationError",
    "BudgetExceededError",
]
