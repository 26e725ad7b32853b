"""The depth-truncated canonical interpretation of a compiled instance.

The full canonical model lives on the infinite prefix tree {1..p}*; each
node extends its parent by one pair index, and the concept values are the
exact rationals the compiled axioms force along the way.  Truncating at
depth d keeps every value exact: all compiled concepts have quantifier
depth at most 1, so values at interior nodes (those with all successors
present, i.e. |mu| <= d-1) never look past the frontier.  Inclusion axioms
are therefore quantified over interior nodes only; what the frontier loses
is only the ability to extend the tree further, never exactness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .concepts import KnowledgeBase, max_quantifier_depth
from .degrees import Degree, ONE
from .errors import BudgetExceededError, ValidationError
from .interp import FuzzyInterpretation, KbReport, check_kb, eval_concept
from .pcp import PcpInstance, encode_word, solve_rpcp
from .reduction import (
    CONCEPT_NAMES,
    ROOT_INDIVIDUAL,
    ReductionConfig,
    build_kb_prime,
    prime_restriction,
    role_name,
)

__all__ = [
    "DEFAULT_MAX_NODES",
    "ROOT_LABEL",
    "MissingSuccessorError",
    "CanonicalModel",
    "CounterexampleReport",
    "Solved",
    "ConsistentToDepth",
    "node_label",
    "parse_node_label",
    "label_depth",
    "build_canonical",
    "check_canonical",
    "build_homomorphism",
    "verify_theorem",
]

DEFAULT_MAX_NODES = 200_000
ROOT_LABEL = "eps"


class MissingSuccessorError(ValidationError):
    """A target model lacks the degree-1 successor an interior node needs."""


def node_label(sequence: tuple[int, ...]) -> str:
    """Serialize an index sequence: () -> "eps", (2,1,3) -> "2.1.3"."""
    return ".".join(str(i) for i in sequence) if sequence else ROOT_LABEL


def parse_node_label(label: str) -> tuple[int, ...]:
    if label == ROOT_LABEL:
        return ()
    parts = label.split(".")
    if not all(part.isdigit() and int(part) >= 1 for part in parts):
        raise ValidationError(f"not a node label: {label!r}")
    return tuple(int(part) for part in parts)


def label_depth(label: str) -> int:
    return len(parse_node_label(label))


@dataclass(frozen=True)
class CanonicalModel:
    """A truncated canonical interpretation plus its construction inputs.

    The domain is every index sequence of length at most ``depth`` in
    breadth-first order (then lexicographic within a level), labelled by
    dotted paths with root "eps".
    """

    instance: PcpInstance
    depth: int
    config: ReductionConfig
    interpretation: FuzzyInterpretation

    def interior_elements(self) -> tuple[str, ...]:
        """Nodes whose successors all exist: sequence length <= depth - 1."""
        return tuple(
            label
            for label in self.interpretation.domain
            if label_depth(label) < self.depth
        )

    def values_at(self, label: str) -> dict[str, Degree]:
        """The seven concept values at one node."""
        return {
            name: self.interpretation.concept_value(name, label)
            for name in CONCEPT_NAMES
        }


def build_canonical(
    instance: PcpInstance,
    depth: int,
    config: ReductionConfig | None = None,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> CanonicalModel:
    """Materialize the canonical interpretation down to ``depth``.

    At the root every concept is 0 except A, which starts at the configured
    epsilon grade.  Extending node mu by pair i shifts V right by len(v_i)
    digits into V1, puts the encoding of v_i itself into V2, sums the two
    into V (exactly, no clamping: the parts share no digit positions), and
    divides A by (s+1)**max(len(v_i), len(w_i)); W mirrors V.  Role R_i is
    1 exactly on the (mu, mu.i) edges.
    """
    if depth < 1:
        raise ValidationError(f"depth must be >= 1, got {depth}")
    if config is None:
        config = ReductionConfig()
    s = instance.alphabet_size
    base = s + 1
    p = len(instance.pairs)
    total = sum(p**level for level in range(depth + 1))
    if total > max_nodes:
        raise BudgetExceededError(
            f"canonical model would need {total} nodes, cap is {max_nodes}"
        )

    enc_v = [encode_word(v, s) for v, _ in instance.pairs]
    enc_w = [encode_word(w, s) for _, w in instance.pairs]
    shift_v = [base ** len(v) for v, _ in instance.pairs]
    shift_w = [base ** len(w) for _, w in instance.pairs]
    shift_a = [base ** max(len(v), len(w)) for v, w in instance.pairs]

    domain: list[str] = [ROOT_LABEL]
    concept_map: dict[tuple[str, str], Degree] = {
        ("A", ROOT_LABEL): config.epsilon_grade
    }
    role_map: dict[tuple[str, str, str], Degree] = {}

    # (label, V, W, A) per node of the current level, as exact fractions.
    level: list[tuple[tuple[int, ...], Fraction, Fraction, Fraction]] = [
        ((), Fraction(0), Fraction(0), config.epsilon_grade.value)
    ]
    for _ in range(depth):
        next_level: list[tuple[tuple[int, ...], Fraction, Fraction, Fraction]] = []
        for sequence, v_value, w_value, a_value in level:
            parent = node_label(sequence)
            for i in range(1, p + 1):
                child_seq = sequence + (i,)
                child = node_label(child_seq)
                v1 = v_value / shift_v[i - 1]
                w1 = w_value / shift_w[i - 1]
                v = enc_v[i - 1].value + v1
                w = enc_w[i - 1].value + w1
                a = a_value / shift_a[i - 1]
                domain.append(child)
                cell = concept_map
                cell[("V", child)] = Degree(v)
                cell[("W", child)] = Degree(w)
                if v1:
                    cell[("V1", child)] = Degree(v1)
                if w1:
                    cell[("W1", child)] = Degree(w1)
                cell[("V2", child)] = enc_v[i - 1]
                cell[("W2", child)] = enc_w[i - 1]
                cell[("A", child)] = Degree(a)
                role_map[(role_name(i), parent, child)] = ONE
                next_level.append((child_seq, v, w, a))
        level = next_level

    interpretation = FuzzyInterpretation(
        tuple(domain), concept_map, role_map, {ROOT_INDIVIDUAL: ROOT_LABEL}
    )
    return CanonicalModel(instance, depth, config, interpretation)


def check_canonical(model: CanonicalModel, kb: KnowledgeBase) -> KbReport:
    """Check a compiled knowledge base on the truncated model.

    Inclusion infima range over interior nodes only; that is exact because
    every concept is required to have quantifier depth at most 1 (checked
    here, refused otherwise) and interior nodes carry all their successors.
    """
    unknown_concepts = kb.concept_names() - set(CONCEPT_NAMES)
    valid_roles = {role_name(i) for i in range(1, len(model.instance.pairs) + 1)}
    unknown_roles = kb.role_names() - valid_roles
    unknown_individuals = kb.individuals() - {ROOT_INDIVIDUAL}
    if unknown_concepts or unknown_roles or unknown_individuals:
        strays = sorted(unknown_concepts | unknown_roles | unknown_individuals)
        raise ValidationError(
            f"names outside the compiled vocabulary: {', '.join(strays)}"
        )
    depth = max_quantifier_depth(kb)
    if depth > 1:
        raise ValidationError(
            f"interior-only checking needs quantifier depth <= 1, got {depth}"
        )
    return check_kb(model.interpretation, kb, model.interior_elements())


@dataclass(frozen=True)
class CounterexampleReport:
    """First defect found while matching a target model against the
    canonical values."""

    node: str
    name: str
    expected: Degree
    actual: Degree


def build_homomorphism(
    target: FuzzyInterpretation,
    instance: PcpInstance,
    depth: int,
    config: ReductionConfig | None = None,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> dict[str, str] | CounterexampleReport:
    """Map canonical nodes into ``target``, verifying the canonical values.

    Construction: the root goes to the element named by individual ``a``;
    a node's R_i-child goes to the first degree-1 R_i-successor of its
    image (such a successor must exist while successors are required,
    i.e. at every interior node).  At every visited node all seven concept
    values must match the canonical ones exactly and every tree edge must
    have role degree 1 in the target; the first mismatch is returned as a
    CounterexampleReport.  On success the full label-to-element map comes
    back.
    """
    canonical = build_canonical(instance, depth, config, max_nodes)
    values = canonical.interpretation
    mapping: dict[str, str] = {ROOT_LABEL: target.element_of(ROOT_INDIVIDUAL)}
    p = len(instance.pairs)
    for label in values.domain:
        image = mapping[label]
        for name in CONCEPT_NAMES:
            expected = values.concept_value(name, label)
            actual = target.concept_value(name, image)
            if expected != actual:
                return CounterexampleReport(label, name, expected, actual)
        if label_depth(label) >= depth:
            continue
        sequence = parse_node_label(label)
        for i in range(1, p + 1):
            role = role_name(i)
            successor = next(
                (y for y in target.domain if target.role_value(role, image, y) == ONE),
                None,
            )
            if successor is None:
                raise MissingSuccessorError(
                    f"no degree-1 {role}-successor at {image!r} (image of {label})"
                )
            mapping[node_label(sequence + (i,))] = successor
    return mapping


@dataclass(frozen=True)
class Solved:
    """A solution sequence exists within the depth bound; the recorded
    axiom value is strictly below 1, so the extended knowledge base has no
    witnessed model."""

    sequence: tuple[int, ...]
    node: str
    violated_axiom: int  # 1-based pair index of the violated added axiom
    value: Degree


@dataclass(frozen=True)
class ConsistentToDepth:
    """No solution up to the depth bound and the truncated canonical model
    satisfies the extended knowledge base there.  Not a proof of
    unsolvability: deeper solutions may exist."""

    depth: int
    report: KbReport


def verify_theorem(
    instance: PcpInstance,
    depth: int,
    config: ReductionConfig | None = None,
    max_nodes: int = DEFAULT_MAX_NODES,
    max_enum: int | None = None,
) -> Solved | ConsistentToDepth:
    """Decide the depth-bounded dichotomy for one instance.

    If a reverse-order solution of length <= depth exists, the added axiom
    of its last pair index evaluates strictly below 1 at the solution
    node's parent on the canonical model: Solved.  Otherwise every added
    axiom evaluates to exactly 1 at every interior node and the whole
    extended knowledge base checks out on the truncation: ConsistentToDepth.
    """
    if config is None:
        config = ReductionConfig()
    solver_kwargs = {} if max_enum is None else {"max_enum": max_enum}
    sequence = solve_rpcp(instance, depth, **solver_kwargs)
    model = build_canonical(instance, depth, config, max_nodes)
    if sequence is not None:
        last = sequence[-1]
        parent = node_label(sequence[:-1])
        value = eval_concept(model.interpretation, prime_restriction(last), parent)
        if value >= ONE:
            raise RuntimeError(
                f"solution {sequence} did not push the added axiom below 1"
            )
        return Solved(sequence, node_label(sequence), last, value)
    report = check_canonical(model, build_kb_prime(instance, config))
    if not report.satisfied:
        raise RuntimeError(
            "truncated canonical model rejected the compiled knowledge base "
            "despite no solution in range"
        )
    return ConsistentToDepth(depth, report)
