"""Finite fuzzy interpretations and the concept/axiom evaluator.

An interpretation maps concept names and role names to [0,1]-valued tables
over a finite ordered domain; anything not listed is 0.  Quantifier values
are taken over the whole (finite) domain, so every sup and inf is attained
and the usual witnessed-model conditions hold automatically.

The evaluator exploits the default-0 convention: a y with R(x,y) = 0
contributes 1 to every (all R C) infimum and 0 to every (some R C)
supremum, so only positive role entries are ever visited.  Results are
identical to the full-domain scan; tests compare against a naive reference
evaluator to keep it that way.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

from .concepts import (
    And,
    Atomic,
    Axiom,
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
    Top,
    is_valid_name,
)
from .degrees import (
    Degree,
    ONE,
    ZERO,
    implication,
    negation,
    parse_degree,
    scale,
    tconorm,
    tnorm,
)
from .errors import ParseError, ValidationError

__all__ = [
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
]

_ELEMENT_RE = re.compile(r"\A[^\s#()]+\Z")


@dataclass(frozen=True)
class FuzzyInterpretation:
    """A finite fuzzy interpretation with sparse degree tables.

    ``concept_map`` is keyed by (concept-name, element) and ``role_map`` by
    (role-name, element, element); missing keys mean degree 0, and explicit
    zero entries are dropped on construction so equal interpretations compare
    equal regardless of how sparsely they were written down.  The individual
    map is injective: distinct individuals denote distinct elements.
    """

    domain: tuple[str, ...]
    concept_map: Mapping[tuple[str, str], Degree] = field(default_factory=dict)
    role_map: Mapping[tuple[str, str, str], Degree] = field(default_factory=dict)
    individual_map: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        domain = tuple(self.domain)
        if not domain:
            raise ValidationError("domain must be nonempty")
        if len(set(domain)) != len(domain):
            raise ValidationError("domain elements must be distinct")
        for element in domain:
            if not isinstance(element, str) or not _ELEMENT_RE.match(element):
                raise ValidationError(f"invalid element identifier: {element!r}")
        members = frozenset(domain)

        concept_map: dict[tuple[str, str], Degree] = {}
        for (name, element), degree in dict(self.concept_map).items():
            if not is_valid_name(name):
                raise ValidationError(f"invalid concept name: {name!r}")
            if element not in members:
                raise ValidationError(f"unknown element {element!r} in concept map")
            if not isinstance(degree, Degree):
                raise ValidationError(f"degree must be a Degree, got {degree!r}")
            if degree != ZERO:
                concept_map[(name, element)] = degree

        role_map: dict[tuple[str, str, str], Degree] = {}
        for (role, x, y), degree in dict(self.role_map).items():
            if not is_valid_name(role):
                raise ValidationError(f"invalid role name: {role!r}")
            if x not in members or y not in members:
                raise ValidationError(f"unknown element in role entry ({role}, {x}, {y})")
            if not isinstance(degree, Degree):
                raise ValidationError(f"degree must be a Degree, got {degree!r}")
            if degree != ZERO:
                role_map[(role, x, y)] = degree

        individual_map = dict(self.individual_map)
        for individual, element in individual_map.items():
            if not is_valid_name(individual):
                raise ValidationError(f"invalid individual name: {individual!r}")
            if element not in members:
                raise ValidationError(
                    f"individual {individual!r} mapped to unknown element {element!r}"
                )
        if len(set(individual_map.values())) != len(individual_map):
            raise ValidationError("individual map must be injective (unique names)")

        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "concept_map", concept_map)
        object.__setattr__(self, "role_map", role_map)
        object.__setattr__(self, "individual_map", individual_map)
        object.__setattr__(self, "_members", members)
        index = {element: i for i, element in enumerate(domain)}
        object.__setattr__(self, "_index", index)
        # Positive role successors per (role, x), in domain order: the
        # evaluator only ever needs these.
        support: dict[tuple[str, str], list[tuple[str, Degree]]] = {}
        for (role, x, y), degree in sorted(
            role_map.items(), key=lambda item: (item[0][0], index[item[0][1]], index[item[0][2]])
        ):
            support.setdefault((role, x), []).append((y, degree))
        object.__setattr__(self, "_support", support)

    def has_element(self, element: str) -> bool:
        return element in self._members

    def concept_value(self, name: str, element: str) -> Degree:
        if element not in self._members:
            raise ValidationError(f"unknown element {element!r}")
        return self.concept_map.get((name, element), ZERO)

    def role_value(self, role: str, x: str, y: str) -> Degree:
        if x not in self._members or y not in self._members:
            raise ValidationError(f"unknown element in role lookup ({x!r}, {y!r})")
        return self.role_map.get((role, x, y), ZERO)

    def role_successors(self, role: str, x: str) -> Sequence[tuple[str, Degree]]:
        """Pairs (y, R(x,y)) with positive degree, in domain order."""
        return self._support.get((role, x), ())

    def element_of(self, individual: str) -> str:
        element = self.individual_map.get(individual)
        if element is None:
            raise ValidationError(f"individual {individual!r} is not mapped")
        return element


_Memo = dict


def _eval(interp: FuzzyInterpretation, concept: Concept, x: str, memo: _Memo) -> Degree:
    key = (concept, x)
    cached = memo.get(key)
    if cached is not None:
        return cached
    if isinstance(concept, Atomic):
        value = interp.concept_map.get((concept.name, x), ZERO)
    elif isinstance(concept, Top):
        value = ONE
    elif isinstance(concept, Bottom):
        value = ZERO
    elif isinstance(concept, And):
        value = tnorm(_eval(interp, concept.lhs, x, memo), _eval(interp, concept.rhs, x, memo))
    elif isinstance(concept, Or):
        value = tconorm(_eval(interp, concept.lhs, x, memo), _eval(interp, concept.rhs, x, memo))
    elif isinstance(concept, Not):
        value = negation(_eval(interp, concept.arg, x, memo))
    elif isinstance(concept, Scale):
        value = scale(concept.count, _eval(interp, concept.arg, x, memo))
    elif isinstance(concept, Forall):
        value = ONE
        for y, degree in interp.role_successors(concept.role, x):
            term = implication(degree, _eval(interp, concept.arg, y, memo))
            if term < value:
                value = term
    elif isinstance(concept, Exists):
        value = ZERO
        for y, degree in interp.role_successors(concept.role, x):
            term = tnorm(degree, _eval(interp, concept.arg, y, memo))
            if term > value:
                value = term
    else:
        raise TypeError(f"not a concept: {concept!r}")
    memo[key] = value
    return value


def eval_concept(
    interp: FuzzyInterpretation, concept: Concept, element: str, memo: _Memo | None = None
) -> Degree:
    """Truth degree of ``concept`` at ``element``.

    Quantifiers range over the whole finite domain; ``memo`` (shared across
    calls if supplied) caches (node, element) pairs.
    """
    if not interp.has_element(element):
        raise ValidationError(f"unknown element {element!r}")
    return _eval(interp, concept, element, {} if memo is None else memo)


def eval_gci(
    interp: FuzzyInterpretation,
    lhs: Concept,
    rhs: Concept,
    elements: Sequence[str] | None = None,
    memo: _Memo | None = None,
) -> Degree:
    """Degree of the inclusion: the infimum over elements of lhs(x) => rhs(x).

    ``elements`` restricts the infimum (callers use it to quantify over
    interior nodes of a truncated model); default is the whole domain.
    """
    if memo is None:
        memo = {}
    if elements is None:
        elements = interp.domain
    value = ONE
    for x in elements:
        if not interp.has_element(x):
            raise ValidationError(f"unknown element {x!r}")
        term = implication(_eval(interp, lhs, x, memo), _eval(interp, rhs, x, memo))
        if term < value:
            value = term
    return value


@dataclass(frozen=True)
class AxiomCheck:
    axiom: Axiom
    value: Degree
    satisfied: bool


@dataclass(frozen=True)
class KbReport:
    checks: tuple[AxiomCheck, ...]

    @property
    def satisfied(self) -> bool:
        return all(check.satisfied for check in self.checks)

    def violations(self) -> tuple[AxiomCheck, ...]:
        return tuple(check for check in self.checks if not check.satisfied)

    def __iter__(self) -> Iterator[AxiomCheck]:
        return iter(self.checks)

    def __len__(self) -> int:
        return len(self.checks)


def check_axiom(
    interp: FuzzyInterpretation,
    axiom: Axiom,
    gci_elements: Sequence[str] | None = None,
    memo: _Memo | None = None,
) -> AxiomCheck:
    """Evaluate one axiom: satisfied iff its degree reaches the grade."""
    if memo is None:
        memo = {}
    if isinstance(axiom, Gci):
        value = eval_gci(interp, axiom.lhs, axiom.rhs, gci_elements, memo)
    elif isinstance(axiom, ConceptAssertion):
        element = interp.element_of(axiom.individual)
        value = _eval(interp, axiom.concept, element, memo)
    elif isinstance(axiom, RoleAssertion):
        subject = interp.element_of(axiom.subject)
        target = interp.element_of(axiom.target)
        value = interp.role_value(axiom.role, subject, target)
    else:
        raise TypeError(f"not an axiom: {axiom!r}")
    return AxiomCheck(axiom, value, value >= axiom.grade)


def check_kb(
    interp: FuzzyInterpretation,
    kb: KnowledgeBase,
    gci_elements: Sequence[str] | None = None,
) -> KbReport:
    """Check every axiom; the knowledge base is satisfied iff all are.

    ``gci_elements`` restricts GCI infima only; assertions always evaluate
    at the asserted individuals.
    """
    memo: _Memo = {}
    checks = tuple(
        check_axiom(interp, axiom, gci_elements, memo) for axiom in kb.axioms()
    )
    return KbReport(checks)


def find_witness(interp: FuzzyInterpretation, concept: Concept, element: str) -> str:
    """Element attaining the sup (some) or inf (all) of a quantified concept.

    Scans the whole domain; ties break to the first element in domain order,
    so results are deterministic.
    """
    if not isinstance(concept, (Exists, Forall)):
        raise ValidationError("find_witness needs a quantified concept at top level")
    if not interp.has_element(element):
        raise ValidationError(f"unknown element {element!r}")
    memo: _Memo = {}
    best_y: str | None = None
    best: Degree | None = None
    for y in interp.domain:
        degree = interp.role_value(concept.role, element, y)
        inner = _eval(interp, concept.arg, y, memo)
        if isinstance(concept, Exists):
            term = tnorm(degree, inner)
            better = best is None or term > best
        else:
            term = implication(degree, inner)
            better = best is None or term < best
        if better:
            best, best_y = term, y
    assert best_y is not None  # domain is nonempty by construction
    return best_y


def parse_model(text: str) -> FuzzyInterpretation:
    """Parse the model format: one ``domain:`` line, then ``individual:``,
    ``concept:`` and ``role:`` entries; unlisted values are 0."""
    domain: tuple[str, ...] | None = None
    concept_map: dict[tuple[str, str], Degree] = {}
    role_map: dict[tuple[str, str, str], Degree] = {}
    individual_map: dict[str, str] = {}

    def parse_entry_degree(token: str, number: int) -> Degree:
        try:
            return parse_degree(token)
        except ValidationError as exc:
            raise ParseError(str(exc), number, 1) from None

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, colon, rest = line.partition(":")
        if not colon:
            raise ParseError("expected 'key: ...'", number, 1)
        fields = rest.split()
        if key == "domain":
            if domain is not None:
                raise ParseError("duplicate domain line", number, 1)
            if not fields:
                raise ParseError("domain must be nonempty", number, 1)
            domain = tuple(fields)
        elif key == "individual":
            if len(fields) != 3 or fields[1] != "->":
                raise ParseError("expected 'individual: name -> element'", number, 1)
            if fields[0] in individual_map:
                raise ParseError(f"duplicate individual {fields[0]!r}", number, 1)
            individual_map[fields[0]] = fields[2]
        elif key == "concept":
            if len(fields) != 3:
                raise ParseError("expected 'concept: name element degree'", number, 1)
            cell = (fields[0], fields[1])
            if cell in concept_map:
                raise ParseError(f"duplicate concept entry {cell}", number, 1)
            concept_map[cell] = parse_entry_degree(fields[2], number)
        elif key == "role":
            if len(fields) != 4:
                raise ParseError("expected 'role: name element element degree'", number, 1)
            entry = (fields[0], fields[1], fields[2])
            if entry in role_map:
                raise ParseError(f"duplicate role entry {entry}", number, 1)
            role_map[entry] = parse_entry_degree(fields[3], number)
        else:
            raise ParseError(f"unknown entry kind {key!r}", number, 1)
    if domain is None:
        raise ParseError("missing domain line", 1, 1)
    return FuzzyInterpretation(domain, concept_map, role_map, individual_map)


def print_model(interp: FuzzyInterpretation) -> str:
    """Canonical text for a model: domain order preserved, entries sorted,
    zero entries omitted.  parse_model inverts it exactly."""
    index = {element: i for i, element in enumerate(interp.domain)}
    lines = ["domain: " + " ".join(interp.domain)]
    for individual in sorted(interp.individual_map):
        lines.append(f"individual: {individual} -> {interp.individual_map[individual]}")
    for (name, element) in sorted(interp.concept_map, key=lambda c: (c[0], index[c[1]])):
        lines.append(f"concept: {name} {element} {interp.concept_map[(name, element)]}")
    for (role, x, y) in sorted(
        interp.role_map, key=lambda r: (r[0], index[r[1]], index[r[2]])
    ):
        lines.append(f"role: {role} {x} {y} {interp.role_map[(role, x, y)]}")
    return "\n".join(lines) + "\n"
