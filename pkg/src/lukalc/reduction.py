"""Compile an RPCP instance into a graded knowledge base.

The compiled vocabulary is closed: concepts V, V1, V2, W, W1, W2, A, roles
R1..Rp and the single individual ``a``.  V and W accumulate the base-(s+1)
encodings of the reverse-order concatenations along role chains; A carries a
strictly shrinking positive value whose survival forces the chains to be
total.  On top of that, ``build_kb_prime`` adds one axiom per pair stating
that no reachable point may satisfy both V = W and A > 0 -- which is exactly
what a solution sequence would produce.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .concepts import (
    Atomic,
    ConceptAssertion,
    Exists,
    Forall,
    Gci,
    KnowledgeBase,
    Not,
    Or,
    TOP,
    iff,
    scale,
)
from .degrees import Degree, negation
from .errors import ValidationError
from .pcp import PcpInstance, encode_word

__all__ = [
    "ReductionConfig",
    "CONCEPT_NAMES",
    "ROOT_INDIVIDUAL",
    "role_name",
    "prime_restriction",
    "build_tbox_i",
    "build_kb",
    "build_kb_prime",
]

CONCEPT_NAMES = ("V", "V1", "V2", "W", "W1", "W2", "A")
ROOT_INDIVIDUAL = "a"

_V, _V1, _V2 = Atomic("V"), Atomic("V1"), Atomic("V2")
_W, _W1, _W2 = Atomic("W"), Atomic("W1"), Atomic("W2")
_A = Atomic("A")


def role_name(pair_index: int) -> str:
    return f"R{pair_index}"


@dataclass(frozen=True)
class ReductionConfig:
    """Tunable constants of the compilation.

    ``epsilon_grade`` is the root membership grade of A.  Any value strictly
    between 0 and 1 works: the separation argument only needs the constant
    to be at most 1, and the paired assertion on (not A) needs 1 - epsilon
    to be a positive grade.
    """

    epsilon_grade: Degree = Degree(Fraction(1, 100))

    def __post_init__(self):
        if not isinstance(self.epsilon_grade, Degree):
            raise ValidationError("epsilon_grade must be a Degree")
        if not 0 < self.epsilon_grade.value < 1:
            raise ValidationError("epsilon_grade must lie strictly between 0 and 1")


def _shared_tbox() -> tuple[Gci, ...]:
    # V and W are each equivalent to the disjunction of their two parts;
    # equivalences expand into inclusion pairs.
    return (
        Gci(_V, Or(_V1, _V2)),
        Gci(Or(_V1, _V2), _V),
        Gci(_W, Or(_W1, _W2)),
        Gci(Or(_W1, _W2), _W),
    )


def build_tbox_i(
    instance: PcpInstance, pair_index: int, config: ReductionConfig | None = None
) -> tuple[Gci, ...]:
    """The 11 axioms governing the role R_i of one word pair.

    Along an R_i edge: V gains the digits of v_i in front (split into the
    shifted old value V1 and the fresh digits V2, tied together by scale
    coefficients and by the graded axioms pinning V2 to the encoding of
    v_i), W dually, and A shrinks by the larger of the two word lengths.
    """
    del config  # reserved; the per-pair axioms carry no tunable constants
    s = instance.alphabet_size
    v, w = instance.pair(pair_index)
    base = s + 1
    ri = role_name(pair_index)
    enc_v = encode_word(v, s)
    enc_w = encode_word(w, s)
    return (
        Gci(TOP, Exists(ri, TOP)),
        Gci(_V, scale(base ** len(v), Forall(ri, _V1))),
        Gci(scale(base ** len(v), Exists(ri, _V1)), _V),
        Gci(_W, scale(base ** len(w), Forall(ri, _W1))),
        Gci(scale(base ** len(w), Exists(ri, _W1)), _W),
        Gci(TOP, Forall(ri, _V2), enc_v),
        Gci(TOP, Forall(ri, Not(_V2)), negation(enc_v)),
        Gci(TOP, Forall(ri, _W2), enc_w),
        Gci(TOP, Forall(ri, Not(_W2)), negation(enc_w)),
        Gci(_A, scale(base ** max(len(v), len(w)), Forall(ri, _A))),
        Gci(scale(base ** max(len(v), len(w)), Exists(ri, _A)), _A),
    )


def _abox(config: ReductionConfig) -> tuple[ConceptAssertion, ...]:
    return (
        ConceptAssertion(ROOT_INDIVIDUAL, Not(_V)),
        ConceptAssertion(ROOT_INDIVIDUAL, Not(_W)),
        ConceptAssertion(ROOT_INDIVIDUAL, _A, config.epsilon_grade),
        ConceptAssertion(ROOT_INDIVIDUAL, Not(_A), negation(config.epsilon_grade)),
    )


def build_kb(
    instance: PcpInstance, config: ReductionConfig | None = None
) -> KnowledgeBase:
    """The base knowledge base: shared equivalences, all per-pair boxes, and
    the root assertions.  4 + 11p + 4 axioms."""
    if config is None:
        config = ReductionConfig()
    tbox = list(_shared_tbox())
    for i in range(1, len(instance.pairs) + 1):
        tbox.extend(build_tbox_i(instance, i, config))
    return KnowledgeBase(tuple(tbox), _abox(config))


def prime_restriction(pair_index: int) -> Forall:
    """(all Ri (or (not (iff V W)) (not A))): every R_i-successor either
    separates V from W or has lost A entirely."""
    return Forall(role_name(pair_index), Or(Not(iff(_V, _W)), Not(_A)))


def build_kb_prime(
    instance: PcpInstance, config: ReductionConfig | None = None
) -> KnowledgeBase:
    """build_kb plus one grade-1 axiom per pair; a solution sequence yields
    a point where V = W while A is still positive, violating that axiom."""
    if config is None:
        config = ReductionConfig()
    tbox = list(_shared_tbox())
    for i in range(1, len(instance.pairs) + 1):
        tbox.extend(build_tbox_i(instance, i, config))
    for i in range(1, len(instance.pairs) + 1):
        tbox.append(Gci(TOP, prime_restriction(i)))
    return KnowledgeBase(tuple(tbox), _abox(config))
