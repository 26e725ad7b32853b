"""Concrete text syntax for concepts and knowledge bases.

Concepts are s-expressions:

    top | bot | NAME
    (and C C ...)   (or C C ...)    (not C)
    (some R C)      (all R C)       (scale N C)
    (impl C C)      (iff C C)       (min C C ...)   (max C C ...)

``impl``, ``iff``, ``min`` and ``max`` are sugar; they parse into the core
connectives and do not exist as nodes.  Variadic forms fold to the left.

A knowledge-base file holds two optional sections::

    tbox:
      (gci C C [degree])
    abox:
      (instance ind C [degree])
      (related ind ind role [degree])

``#`` starts a comment running to end of line.  A missing degree means 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

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
    RESERVED,
    RoleAssertion,
    Scale,
    TOP,
    Top,
    concept_names,
    iff,
    implies,
    maximum,
    minimum,
    role_names,
    scale,
)
from .degrees import Degree, DegreeRangeError, ONE, parse_degree
from .errors import ParseError, ValidationError

__all__ = ["parse_concept", "parse_kb", "print_concept", "print_kb"]

_INT_RE = re.compile(r"\A\d+\Z")
_DEGREE_RE = re.compile(r"\A\d+(/\d+)?\Z")


@dataclass(frozen=True)
class _Token:
    kind: str  # "lparen" | "rparen" | "symbol" | "section" | "eof"
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, column = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            column = 1
            i += 1
        elif ch in " \t\r":
            column += 1
            i += 1
        elif ch == "#":
            while i < len(text) and text[i] != "\n":
                i += 1
        elif ch == "(":
            tokens.append(_Token("lparen", "(", line, column))
            column += 1
            i += 1
        elif ch == ")":
            tokens.append(_Token("rparen", ")", line, column))
            column += 1
            i += 1
        else:
            start = i
            while i < len(text) and text[i] not in " \t\r\n()#":
                i += 1
            word = text[start:i]
            kind = "section" if word.endswith(":") else "symbol"
            tokens.append(_Token(kind, word, line, column))
            column += i - start
    tokens.append(_Token("eof", "", line, column))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self._tokens = _tokenize(text)
        self._pos = 0

    def peek(self) -> _Token:
        return self._tokens[self._pos]

    def advance(self) -> _Token:
        token = self._tokens[self._pos]
        if token.kind != "eof":
            self._pos += 1
        return token

    def fail(self, message: str, token: _Token) -> ParseError:
        found = "end of input" if token.kind == "eof" else repr(token.text)
        return ParseError(f"{message} (found {found})", token.line, token.column)

    def expect(self, kind: str, what: str) -> _Token:
        token = self.advance()
        if token.kind != kind:
            raise self.fail(f"expected {what}", token)
        return token

    def parse_name(self, what: str) -> str:
        token = self.expect("symbol", f"a {what} name")
        if token.text in RESERVED:
            raise ParseError(
                f"{what} name {token.text!r} is a reserved word", token.line, token.column
            )
        if not re.match(r"\A[A-Za-z_][A-Za-z0-9_]*\Z", token.text):
            raise ParseError(f"invalid {what} name {token.text!r}", token.line, token.column)
        return token.text

    def parse_concept(self) -> Concept:
        token = self.advance()
        if token.kind == "symbol":
            if token.text == "top":
                return TOP
            if token.text == "bot":
                return BOT
            if token.text in RESERVED or not re.match(
                r"\A[A-Za-z_][A-Za-z0-9_]*\Z", token.text
            ):
                raise self.fail("expected a concept", token)
            return Atomic(token.text)
        if token.kind != "lparen":
            raise self.fail("expected a concept", token)
        head = self.expect("symbol", "an operator")
        op = head.text
        if op in ("and", "or", "min", "max"):
            args = self.parse_concepts_until_rparen(head, minimum_arity=2)
            fold = {"and": And, "or": Or}.get(op)
            if fold is not None:
                result = fold(args[0], args[1])
                for arg in args[2:]:
                    result = fold(result, arg)
                return result
            build = minimum if op == "min" else maximum
            return build(args[0], args[1], *args[2:])
        if op == "not":
            arg = self.parse_concept()
            self.close(head)
            return Not(arg)
        if op in ("some", "all"):
            role = self.parse_name("role")
            arg = self.parse_concept()
            self.close(head)
            return Exists(role, arg) if op == "some" else Forall(role, arg)
        if op == "scale":
            count_tok = self.expect("symbol", "a positive integer")
            if not _INT_RE.match(count_tok.text):
                raise self.fail("expected a positive integer", count_tok)
            count = int(count_tok.text)
            if count < 1:
                raise ParseError(
                    "scale count must be at least 1", count_tok.line, count_tok.column
                )
            arg = self.parse_concept()
            self.close(head)
            return scale(count, arg)
        if op in ("impl", "iff"):
            lhs = self.parse_concept()
            rhs = self.parse_concept()
            self.close(head)
            return implies(lhs, rhs) if op == "impl" else iff(lhs, rhs)
        raise ParseError(f"unknown operator {op!r}", head.line, head.column)

    def parse_concepts_until_rparen(self, head: _Token, minimum_arity: int) -> list[Concept]:
        args: list[Concept] = []
        while self.peek().kind != "rparen":
            if self.peek().kind == "eof":
                raise self.fail(f"unterminated ({head.text} ...)", self.peek())
            args.append(self.parse_concept())
        self.advance()
        if len(args) < minimum_arity:
            raise ParseError(
                f"({head.text} ...) needs at least {minimum_arity} arguments",
                head.line,
                head.column,
            )
        return args

    def close(self, head: _Token) -> None:
        token = self.advance()
        if token.kind != "rparen":
            raise self.fail(f"too many arguments to ({head.text} ...)", token)

    def parse_optional_grade(self) -> Degree:
        token = self.peek()
        if token.kind == "rparen":
            return ONE
        if token.kind == "symbol" and _DEGREE_RE.match(token.text):
            self.advance()
            try:
                grade = parse_degree(token.text)
            except DegreeRangeError:
                raise ParseError(
                    f"degree {token.text} outside [0, 1]", token.line, token.column
                ) from None
            except ValidationError:
                raise self.fail("expected a degree", token) from None
            if grade.value == 0:
                raise ParseError("axiom grade must be positive", token.line, token.column)
            return grade
        raise self.fail("expected a degree or ')'", token)


def parse_concept(text: str) -> Concept:
    """Parse a single concept; trailing input is an error."""
    parser = _Parser(text)
    concept = parser.parse_concept()
    tail = parser.peek()
    if tail.kind != "eof":
        raise parser.fail("unexpected input after concept", tail)
    overlap = concept_names(concept) & role_names(concept)
    if overlap:
        raise ValidationError(
            f"names used as both concept and role: {', '.join(sorted(overlap))}"
        )
    return concept


def parse_kb(text: str) -> KnowledgeBase:
    """Parse a knowledge-base file into a KnowledgeBase."""
    parser = _Parser(text)
    tbox: list[Gci] = []
    abox: list[ConceptAssertion | RoleAssertion] = []
    seen: set[str] = set()
    section: str | None = None
    while True:
        token = parser.peek()
        if token.kind == "eof":
            break
        if token.kind == "section":
            parser.advance()
            name = token.text[:-1]
            if name not in ("tbox", "abox"):
                raise parser.fail("unknown section", token)
            if name in seen:
                raise ParseError(f"duplicate section {token.text!r}", token.line, token.column)
            seen.add(name)
            section = name
            continue
        if token.kind != "lparen":
            raise parser.fail("expected a section header or an axiom", token)
        if section is None:
            raise parser.fail("axiom outside of a tbox: or abox: section", token)
        parser.advance()
        head = parser.expect("symbol", "an axiom form")
        if section == "tbox":
            if head.text != "gci":
                raise ParseError(
                    f"unknown tbox form {head.text!r}", head.line, head.column
                )
            lhs = parser.parse_concept()
            rhs = parser.parse_concept()
            grade = parser.parse_optional_grade()
            parser.close(head)
            tbox.append(Gci(lhs, rhs, grade))
        elif head.text == "instance":
            individual = parser.parse_name("individual")
            concept = parser.parse_concept()
            grade = parser.parse_optional_grade()
            parser.close(head)
            abox.append(ConceptAssertion(individual, concept, grade))
        elif head.text == "related":
            subject = parser.parse_name("individual")
            target = parser.parse_name("individual")
            role = parser.parse_name("role")
            grade = parser.parse_optional_grade()
            parser.close(head)
            abox.append(RoleAssertion(subject, target, role, grade))
        else:
            raise ParseError(f"unknown abox form {head.text!r}", head.line, head.column)
    return KnowledgeBase(tuple(tbox), tuple(abox))


def _match_iff(concept: Concept) -> tuple[Concept, Concept] | None:
    # Recognize the expansion And((not a) or b, (not b) or a) so printed
    # axioms read as (iff a b).  Reparsing the sugared form rebuilds the
    # identical tree, so print/parse stays a bijection on syntax trees.
    if not isinstance(concept, And):
        return None
    left, right = concept.lhs, concept.rhs
    if not (isinstance(left, Or) and isinstance(right, Or)):
        return None
    if not (isinstance(left.lhs, Not) and isinstance(right.lhs, Not)):
        return None
    a, b = left.lhs.arg, left.rhs
    if right.lhs.arg == b and right.rhs == a:
        return a, b
    return None


def print_concept(concept: Concept) -> str:
    """Canonical text for a concept; parse_concept inverts it exactly."""
    if isinstance(concept, Top):
        return "top"
    if isinstance(concept, Bottom):
        return "bot"
    if isinstance(concept, Atomic):
        return concept.name
    sugared = _match_iff(concept)
    if sugared is not None:
        return f"(iff {print_concept(sugared[0])} {print_concept(sugared[1])})"
    if isinstance(concept, And):
        return f"(and {print_concept(concept.lhs)} {print_concept(concept.rhs)})"
    if isinstance(concept, Or):
        return f"(or {print_concept(concept.lhs)} {print_concept(concept.rhs)})"
    if isinstance(concept, Not):
        return f"(not {print_concept(concept.arg)})"
    if isinstance(concept, Exists):
        return f"(some {concept.role} {print_concept(concept.arg)})"
    if isinstance(concept, Forall):
        return f"(all {concept.role} {print_concept(concept.arg)})"
    if isinstance(concept, Scale):
        return f"(scale {concept.count} {print_concept(concept.arg)})"
    raise TypeError(f"not a concept: {concept!r}")


def print_kb(kb: KnowledgeBase) -> str:
    """Canonical text for a knowledge base; the grade is always explicit."""
    lines: list[str] = []
    if kb.tbox:
        lines.append("tbox:")
        for axiom in kb.tbox:
            lines.append(
                f"  (gci {print_concept(axiom.lhs)} {print_concept(axiom.rhs)} {axiom.grade})"
            )
    if kb.abox:
        lines.append("abox:")
        for axiom in kb.abox:
            if isinstance(axiom, ConceptAssertion):
                lines.append(
                    f"  (instance {axiom.individual} {print_concept(axiom.concept)} {axiom.grade})"
                )
            else:
                lines.append(
                    f"  (related {axiom.subject} {axiom.target} {axiom.role} {axiom.grade})"
                )
    return "\n".join(lines) + "\n" if lines else ""
