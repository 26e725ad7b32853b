"""Syntax trees for concepts, axioms and knowledge bases.

The concept language is ALC extended with a bounded-sum node: ``Scale(n, C)``
behaves exactly like the n-fold disjunction ``C or C or ... or C`` but stores
the multiplicity as an integer, so coefficients like ``3**13`` stay cheap.
Derived connectives (implication, biconditional, pointwise min and max) are
not nodes; the factory functions below expand them into the core language.

All nodes are frozen and hashable, so concepts serve directly as cache keys
and set members.  Structural equality is syntactic: ``And(a, b) != And(b, a)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union

from .degrees import Degree, ONE
from .errors import ValidationError

__all__ = [
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
    "RESERVED",
    "is_valid_name",
    "scale",
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
    "Assertion",
    "Axiom",
    "KnowledgeBase",
]

# Words with a fixed meaning in the concrete syntax; they can never be
# concept, role or individual names, which keeps printing unambiguous.
RESERVED = frozenset(
    {
        "top",
        "bot",
        "and",
        "or",
        "not",
        "some",
        "all",
        "scale",
        "impl",
        "iff",
        "min",
        "max",
        "gci",
        "instance",
        "related",
    }
)

_NAME_RE = re.compile(r"\A[A-Za-z_][A-Za-z0-9_]*\Z")


def is_valid_name(text: str) -> bool:
    return bool(_NAME_RE.match(text)) and text not in RESERVED


def _check_name(text: str, what: str) -> None:
    if not isinstance(text, str) or not _NAME_RE.match(text):
        raise ValidationError(f"invalid {what} name: {text!r}")
    if text in RESERVED:
        raise ValidationError(f"{what} name {text!r} is a reserved word")


class Concept:
    """Base class for concept nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Top(Concept):
    pass


@dataclass(frozen=True)
class Bottom(Concept):
    pass


@dataclass(frozen=True)
class Atomic(Concept):
    name: str

    def __post_init__(self):
        _check_name(self.name, "concept")


@dataclass(frozen=True)
class And(Concept):
    lhs: Concept
    rhs: Concept


@dataclass(frozen=True)
class Or(Concept):
    lhs: Concept
    rhs: Concept


@dataclass(frozen=True)
class Not(Concept):
    arg: Concept


@dataclass(frozen=True)
class Exists(Concept):
    role: str
    arg: Concept

    def __post_init__(self):
        _check_name(self.role, "role")


@dataclass(frozen=True)
class Forall(Concept):
    role: str
    arg: Concept

    def __post_init__(self):
        _check_name(self.role, "role")


@dataclass(frozen=True)
class Scale(Concept):
    """n-fold disjunction of ``arg`` with itself, n >= 2.

    A multiplicity of 1 is the identity, so such nodes are never built;
    construct through :func:`scale`, which collapses that case.
    """

    count: int
    arg: Concept

    def __post_init__(self):
        if not isinstance(self.count, int) or self.count < 1:
            raise ValidationError(f"scale count must be at least 1, got {self.count}")
        if self.count == 1:
            raise ValidationError("Scale(1, C) collapses to C; build it via scale()")


TOP = Top()
BOT = Bottom()


def scale(count: int, arg: Concept) -> Concept:
    """Build ``Scale(count, arg)``, collapsing the trivial multiplicity 1."""
    if not isinstance(count, int) or count < 1:
        raise ValidationError(f"scale count must be at least 1, got {count}")
    return arg if count == 1 else Scale(count, arg)


def implies(lhs: Concept, rhs: Concept) -> Concept:
    """Material implication: (not lhs) or rhs."""
    return Or(Not(lhs), rhs)


def iff(lhs: Concept, rhs: Concept) -> Concept:
    """Biconditional: (lhs -> rhs) and (rhs -> lhs)."""
    return And(implies(lhs, rhs), implies(rhs, lhs))


def minimum(first: Concept, second: Concept, *rest: Concept) -> Concept:
    """Pointwise minimum: C and (C -> D), folded left over the arguments."""
    result = And(first, implies(first, second))
    for arg in rest:
        result = And(result, implies(result, arg))
    return result


def maximum(first: Concept, second: Concept, *rest: Concept) -> Concept:
    """Pointwise maximum: (C -> D) -> D, folded left over the arguments."""
    result = implies(implies(first, second), second)
    for arg in rest:
        result = implies(implies(result, arg), arg)
    return result


def conjunction(first: Concept, second: Concept, *rest: Concept) -> Concept:
    result = And(first, second)
    for arg in rest:
        result = And(result, arg)
    return result


def disjunction(first: Concept, second: Concept, *rest: Concept) -> Concept:
    result = Or(first, second)
    for arg in rest:
        result = Or(result, arg)
    return result


def _walk(concept: Concept) -> Iterator[Concept]:
    stack = [concept]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, (And, Or)):
            stack.append(node.lhs)
            stack.append(node.rhs)
        elif isinstance(node, (Not, Scale, Exists, Forall)):
            stack.append(node.arg)


def concept_names(concept: Concept) -> frozenset[str]:
    return frozenset(n.name for n in _walk(concept) if isinstance(n, Atomic))


def role_names(concept: Concept) -> frozenset[str]:
    return frozenset(n.role for n in _walk(concept) if isinstance(n, (Exists, Forall)))


def quantifier_depth(concept: Concept) -> int:
    """Maximum nesting depth of role restrictions."""
    if isinstance(concept, (Top, Bottom, Atomic)):
        return 0
    if isinstance(concept, (And, Or)):
        return max(quantifier_depth(concept.lhs), quantifier_depth(concept.rhs))
    if isinstance(concept, (Not, Scale)):
        return quantifier_depth(concept.arg)
    if isinstance(concept, (Exists, Forall)):
        return 1 + quantifier_depth(concept.arg)
    raise TypeError(f"not a concept: {concept!r}")


def max_quantifier_depth(kb: "KnowledgeBase") -> int:
    """Largest quantifier depth over every concept in the knowledge base."""
    return max((quantifier_depth(c) for c in kb.concepts()), default=0)


def _check_grade(grade: Degree) -> None:
    if not isinstance(grade, Degree):
        raise ValidationError(f"grade must be a Degree, got {grade!r}")
    if grade.value == 0:
        raise ValidationError("axiom grade must be positive")


@dataclass(frozen=True)
class Gci:
    """Graded inclusion: the truth value of lhs -> rhs is at least ``grade``
    at every domain element."""

    lhs: Concept
    rhs: Concept
    grade: Degree = ONE

    def __post_init__(self):
        _check_grade(self.grade)


@dataclass(frozen=True)
class ConceptAssertion:
    """Graded membership: the individual belongs to ``concept`` to at least
    ``grade``."""

    individual: str
    concept: Concept
    grade: Degree = ONE

    def __post_init__(self):
        _check_name(self.individual, "individual")
        _check_grade(self.grade)


@dataclass(frozen=True)
class RoleAssertion:
    """Graded link: ``role`` holds from ``subject`` to ``target`` to at
    least ``grade``."""

    subject: str
    target: str
    role: str
    grade: Degree = ONE

    def __post_init__(self):
        _check_name(self.subject, "individual")
        _check_name(self.target, "individual")
        _check_name(self.role, "role")
        _check_grade(self.grade)


Assertion = Union[ConceptAssertion, RoleAssertion]
Axiom = Union[Gci, ConceptAssertion, RoleAssertion]


@dataclass(frozen=True)
class KnowledgeBase:
    """A TBox of graded inclusions plus an ABox of graded assertions.

    Construction deduplicates while preserving first-occurrence order and
    checks that concept and role names do not overlap.
    """

    tbox: tuple[Gci, ...] = ()
    abox: tuple[Assertion, ...] = ()

    def __post_init__(self):
        tbox = tuple(dict.fromkeys(self.tbox))
        abox = tuple(dict.fromkeys(self.abox))
        for axiom in tbox:
            if not isinstance(axiom, Gci):
                raise ValidationError(f"tbox entries must be Gci, got {axiom!r}")
        for axiom in abox:
            if not isinstance(axiom, (ConceptAssertion, RoleAssertion)):
                raise ValidationError(f"abox entries must be assertions, got {axiom!r}")
        object.__setattr__(self, "tbox", tbox)
        object.__setattr__(self, "abox", abox)
        overlap = self.concept_names() & self.role_names()
        if overlap:
            raise ValidationError(
                f"names used as both concept and role: {', '.join(sorted(overlap))}"
            )

    def axioms(self) -> tuple[Axiom, ...]:
        return self.tbox + self.abox

    def concepts(self) -> Iterator[Concept]:
        """Every concept expression occurring in some axiom."""
        for axiom in self.tbox:
            yield axiom.lhs
            yield axiom.rhs
        for axiom in self.abox:
            if isinstance(axiom, ConceptAssertion):
                yield axiom.concept

    def concept_names(self) -> frozenset[str]:
        names: set[str] = set()
        for concept in self.concepts():
            names |= concept_names(concept)
        return frozenset(names)

    def role_names(self) -> frozenset[str]:
        names: set[str] = set()
        for concept in self.concepts():
            names |= role_names(concept)
        names.update(a.role for a in self.abox if isinstance(a, RoleAssertion))
        return frozenset(names)

    def individuals(self) -> frozenset[str]:
        names: set[str] = set()
        for axiom in self.abox:
            if isinstance(axiom, ConceptAssertion):
                names.add(axiom.individual)
            else:
                names.add(axiom.subject)
                names.add(axiom.target)
        return frozenset(names)
