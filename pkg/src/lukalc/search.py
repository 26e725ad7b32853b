"""Bounded brute-force search for finite models of a knowledge base.

This is an oracle, not a decision procedure: satisfiable knowledge bases
need not have models on any finite grid (the logic lacks the finite model
property), so a miss only means "nothing of this shape".
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .concepts import KnowledgeBase
from .degrees import Degree
from .errors import BudgetExceededError, ValidationError
from .interp import FuzzyInterpretation, check_kb
from .pcp import DEFAULT_MAX_ENUM

__all__ = ["grid_search"]


def grid_search(
    kb: KnowledgeBase,
    domain_size: int,
    denominator: int,
    max_enum: int = DEFAULT_MAX_ENUM,
) -> FuzzyInterpretation | None:
    """First interpretation of the given shape satisfying ``kb``, else None.

    The shape: ``domain_size`` elements e0..e(n-1), every concept/role cell
    over the names occurring in the kb taking values in {0, 1/k, ..., 1},
    individuals mapped injectively.  Enumeration order is deterministic
    (individual assignments, then concept cells, then role cells, each in
    lexicographic order), so the returned model is reproducible.  None means
    no model of this shape, never unsatisfiability.
    """
    if domain_size < 1:
        raise ValidationError(f"domain size must be >= 1, got {domain_size}")
    if denominator < 1:
        raise ValidationError(f"denominator must be >= 1, got {denominator}")
    if max_enum < 1:
        raise ValidationError(f"max_enum must be >= 1, got {max_enum}")

    individuals = sorted(kb.individuals())
    if len(individuals) > domain_size:
        return None  # unique names force distinct elements
    domain = tuple(f"e{i}" for i in range(domain_size))
    levels = tuple(Degree(Fraction(j, denominator)) for j in range(denominator + 1))
    concept_cells = [
        (name, element) for name in sorted(kb.concept_names()) for element in domain
    ]
    role_cells = [
        (role, x, y)
        for role in sorted(kb.role_names())
        for x in domain
        for y in domain
    ]

    examined = 0
    for assignment in itertools.permutations(domain, len(individuals)):
        individual_map = dict(zip(individuals, assignment))
        for concept_values in itertools.product(levels, repeat=len(concept_cells)):
            concept_map = dict(zip(concept_cells, concept_values))
            for role_values in itertools.product(levels, repeat=len(role_cells)):
                examined += 1
                if examined > max_enum:
                    raise BudgetExceededError(
                        f"grid search enumerated more than {max_enum} interpretations"
                    )
                candidate = FuzzyInterpretation(
                    domain,
                    concept_map,
                    dict(zip(role_cells, role_values)),
                    individual_map,
                )
                if check_kb(candidate, kb).satisfied:
                    return candidate
    return None
