"""Shared test helpers: a reference evaluator, random generators, and the
classic three-pair instance used across the suite."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from lukalc import (
    And,
    Atomic,
    BOT,
    Bottom,
    Concept,
    Degree,
    Exists,
    Forall,
    FuzzyInterpretation,
    Not,
    ONE,
    Or,
    PcpInstance,
    Scale,
    TOP,
    Top,
    ZERO,
    implication,
    negation,
    scale,
    tconorm,
    tnorm,
    to_rpcp,
)

CONCEPT_POOL = ("A", "B", "C")
ROLE_POOL = ("R", "S")


def naive_eval(interp: FuzzyInterpretation, concept: Concept, x: str) -> Degree:
    """Reference evaluation: structural recursion with full-domain quantifier
    scans and no caching.  Deliberately independent of the library's sparse
    evaluator."""
    if isinstance(concept, Top):
        return ONE
    if isinstance(concept, Bottom):
        return ZERO
    if isinstance(concept, Atomic):
        return interp.concept_value(concept.name, x)
    if isinstance(concept, And):
        return tnorm(naive_eval(interp, concept.lhs, x), naive_eval(interp, concept.rhs, x))
    if isinstance(concept, Or):
        return tconorm(naive_eval(interp, concept.lhs, x), naive_eval(interp, concept.rhs, x))
    if isinstance(concept, Not):
        return negation(naive_eval(interp, concept.arg, x))
    if isinstance(concept, Scale):
        return scale(concept.count, naive_eval(interp, concept.arg, x))
    if isinstance(concept, Forall):
        return min(
            implication(interp.role_value(concept.role, x, y), naive_eval(interp, concept.arg, y))
            for y in interp.domain
        )
    if isinstance(concept, Exists):
        return max(
            tnorm(interp.role_value(concept.role, x, y), naive_eval(interp, concept.arg, y))
            for y in interp.domain
        )
    raise TypeError(f"not a concept: {concept!r}")


def random_degree(rng: random.Random, denominator: int = 6) -> Degree:
    return Degree(Fraction(rng.randint(0, denominator), denominator))


def random_concept(
    rng: random.Random,
    depth: int,
    names: tuple[str, ...] = CONCEPT_POOL,
    roles: tuple[str, ...] = ROLE_POOL,
) -> Concept:
    if depth == 0:
        leaf = rng.randrange(3)
        if leaf == 0:
            return TOP
        if leaf == 1:
            return BOT
        return Atomic(rng.choice(names))
    pick = rng.randrange(7)
    if pick == 0:
        return And(random_concept(rng, depth - 1, names, roles),
                   random_concept(rng, depth - 1, names, roles))
    if pick == 1:
        return Or(random_concept(rng, depth - 1, names, roles),
                  random_concept(rng, depth - 1, names, roles))
    if pick == 2:
        return Not(random_concept(rng, depth - 1, names, roles))
    if pick == 3:
        return Scale(rng.randint(2, 9), random_concept(rng, depth - 1, names, roles))
    if pick == 4:
        return Exists(rng.choice(roles), random_concept(rng, depth - 1, names, roles))
    if pick == 5:
        return Forall(rng.choice(roles), random_concept(rng, depth - 1, names, roles))
    return Atomic(rng.choice(names))


def random_model(
    rng: random.Random,
    size: int,
    names: tuple[str, ...] = CONCEPT_POOL,
    roles: tuple[str, ...] = ROLE_POOL,
    individuals: tuple[str, ...] = (),
    denominator: int = 6,
) -> FuzzyInterpretation:
    domain = tuple(f"e{i}" for i in range(size))
    concept_map = {
        (name, x): random_degree(rng, denominator) for name in names for x in domain
    }
    role_map = {
        (role, x, y): random_degree(rng, denominator)
        for role in roles
        for x in domain
        for y in domain
        if rng.random() < 0.6
    }
    individual_map = dict(zip(individuals, rng.sample(domain, len(individuals))))
    return FuzzyInterpretation(domain, concept_map, role_map, individual_map)


def random_instance(rng: random.Random, max_pairs: int = 3, max_word: int = 3) -> PcpInstance:
    s = 2
    pairs = []
    for _ in range(rng.randint(1, max_pairs)):
        v = tuple(rng.randint(1, s) for _ in range(rng.randint(1, max_word)))
        w = tuple(rng.randint(1, s) for _ in range(rng.randint(1, max_word)))
        pairs.append((v, w))
    return PcpInstance(s, tuple(pairs))


def rev_concat(instance: PcpInstance, sequence: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Right-to-left concatenations (v-side, w-side) for an index sequence."""
    v: list[int] = []
    w: list[int] = []
    for i in reversed(sequence):
        left, right = instance.pair(i)
        v.extend(left)
        w.extend(right)
    return tuple(v), tuple(w)


def left_concat(instance: PcpInstance, sequence: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Left-to-right concatenations (v-side, w-side) for an index sequence."""
    v: list[int] = []
    w: list[int] = []
    for i in sequence:
        left, right = instance.pair(i)
        v.extend(left)
        w.extend(right)
    return tuple(v), tuple(w)


def renamed_copy(interp: FuzzyInterpretation) -> tuple[FuzzyInterpretation, dict[str, str]]:
    """A bijectively renamed copy of an interpretation plus the renaming."""
    new_name = {x: f"n{i}" for i, x in enumerate(interp.domain)}
    copy = FuzzyInterpretation(
        tuple(new_name[x] for x in interp.domain),
        {
            (name, new_name[x]): degree
            for (name, x), degree in interp.concept_map.items()
        },
        {
            (role, new_name[x], new_name[y]): degree
            for (role, x, y), degree in interp.role_map.items()
        },
        {name: new_name[element] for name, element in interp.individual_map.items()},
    )
    return copy, new_name


@pytest.fixture
def classic() -> PcpInstance:
    return PcpInstance(2, (((1,), (1, 1, 1)), ((1, 2, 1, 1, 1), (1, 2)), ((1, 2), (2,))))


@pytest.fixture
def classic_pal(classic: PcpInstance) -> PcpInstance:
    return to_rpcp(classic)


@pytest.fixture
def nosol() -> PcpInstance:
    return PcpInstance(2, (((1,), (2,)),))
