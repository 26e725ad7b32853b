"""Post-correspondence instances, word encodings and brute-force solvers.

Words are tuples of digits drawn from {1..s}; zero never occurs.  Reading a
word as the fractional digits of a base-(s+1) number therefore gives an
injective map from words to rationals in [0,1): distinct words of length at
most L differ by at least (s+1)**(-L).  The empty word encodes to 0.

The solvers below are bounded oracles only: they enumerate index sequences
shortest-first (then lexicographically) up to a caller-chosen length, so a
negative answer never proves unsolvability.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .degrees import Degree
from .errors import BudgetExceededError, ParseError, ValidationError

__all__ = [
    "Word",
    "PcpInstance",
    "DEFAULT_MAX_ENUM",
    "word_from_text",
    "word_to_text",
    "palindrome",
    "to_rpcp",
    "encode_word",
    "prepend_encode",
    "solve_pcp",
    "solve_rpcp",
    "parse_pcp",
    "print_pcp",
]

Word = tuple[int, ...]

DEFAULT_MAX_ENUM = 1_000_000


def _check_word(word: Word, alphabet_size: int, allow_empty: bool = False) -> None:
    if not allow_empty and len(word) == 0:
        raise ValidationError(
            "empty words are not allowed in instances (every list entry "
            "must have at least one digit)"
        )
    for digit in word:
        if not isinstance(digit, int) or not 1 <= digit <= alphabet_size:
            raise ValidationError(
                f"digit {digit!r} outside alphabet {{1..{alphabet_size}}}"
            )


@dataclass(frozen=True)
class PcpInstance:
    """An ordered list of word pairs (v_i, w_i) over the alphabet {1..s}."""

    alphabet_size: int
    pairs: tuple[tuple[Word, Word], ...]

    def __post_init__(self):
        if not isinstance(self.alphabet_size, int) or self.alphabet_size < 1:
            raise ValidationError(f"alphabet size must be >= 1, got {self.alphabet_size!r}")
        pairs = tuple((tuple(v), tuple(w)) for v, w in self.pairs)
        if not pairs:
            raise ValidationError("an instance needs at least one pair")
        for v, w in pairs:
            _check_word(v, self.alphabet_size)
            _check_word(w, self.alphabet_size)
        object.__setattr__(self, "pairs", pairs)

    @property
    def base(self) -> int:
        return self.alphabet_size + 1

    def pair(self, index: int) -> tuple[Word, Word]:
        """The 1-based pair (v_i, w_i)."""
        if not 1 <= index <= len(self.pairs):
            raise ValidationError(f"pair index {index} outside 1..{len(self.pairs)}")
        return self.pairs[index - 1]


def palindrome(word: Word) -> Word:
    """Character-reversed word."""
    return tuple(reversed(word))


def to_rpcp(instance: PcpInstance) -> PcpInstance:
    """Reverse every word of the instance.

    A sequence solves the original as a PCP exactly when the same sequence
    solves the transformed instance as an RPCP (right-to-left concatenation),
    because reversing a concatenation reverses the factor order.
    """
    return PcpInstance(
        instance.alphabet_size,
        tuple((palindrome(v), palindrome(w)) for v, w in instance.pairs),
    )


def encode_word(word: Word, alphabet_size: int) -> Degree:
    """Read a word as the digits of a base-(s+1) fraction: sum of d_j*(s+1)**-j.

    Zero-free digits make this injective; the empty word encodes to 0.
    """
    _check_word(word, alphabet_size, allow_empty=True)
    base = alphabet_size + 1
    value = Fraction(0)
    for digit in reversed(word):
        value = (digit + value) / base
    return Degree(value)


def prepend_encode(prefix: Word, tail_value: Degree, alphabet_size: int) -> Degree:
    """Value of the word ``prefix ++ tail`` given the encoding of ``tail``.

    The tail's digits shift right by len(prefix) positions:
    encode(prefix) + (s+1)**(-len(prefix)) * tail_value.
    """
    _check_word(prefix, alphabet_size, allow_empty=True)
    if tail_value.value >= 1:
        raise ValidationError("tail value must lie in [0, 1)")
    base = alphabet_size + 1
    shifted = tail_value.value / base ** len(prefix)
    return Degree(encode_word(prefix, alphabet_size).value + shifted)


def _solve(
    instance: PcpInstance, max_len: int, reverse: bool, max_enum: int
) -> tuple[int, ...] | None:
    if max_len < 1:
        raise ValidationError(f"max_len must be >= 1, got {max_len}")
    if max_enum < 1:
        raise ValidationError(f"max_enum must be >= 1, got {max_enum}")
    indices = range(1, len(instance.pairs) + 1)
    examined = 0
    for length in range(1, max_len + 1):
        for sequence in itertools.product(indices, repeat=length):
            examined += 1
            if examined > max_enum:
                raise BudgetExceededError(
                    f"solver enumerated more than {max_enum} sequences"
                )
            order = tuple(reversed(sequence)) if reverse else sequence
            left: list[int] = []
            right: list[int] = []
            for i in order:
                v, w = instance.pairs[i - 1]
                left.extend(v)
                right.extend(w)
            if left == right:
                return sequence
    return None


def solve_pcp(
    instance: PcpInstance, max_len: int, max_enum: int = DEFAULT_MAX_ENUM
) -> tuple[int, ...] | None:
    """Shortest-then-lexicographic search for a PCP solution of length <= max_len.

    Concatenation is left-to-right: v[i1] v[i2] ... v[ik].  None means no
    solution up to the bound, never unsolvability.
    """
    return _solve(instance, max_len, reverse=False, max_enum=max_enum)


def solve_rpcp(
    instance: PcpInstance, max_len: int, max_enum: int = DEFAULT_MAX_ENUM
) -> tuple[int, ...] | None:
    """Like solve_pcp but words concatenate right-to-left: v[ik] ... v[i1]."""
    return _solve(instance, max_len, reverse=True, max_enum=max_enum)


def word_from_text(text: str, alphabet_size: int) -> Word:
    """Parse a word: a digit string like ``12111``, or dot-separated digits
    like ``10.2.11`` (the printed notation once digits exceed 9; a dotless
    token then denotes a single digit)."""
    if "." in text:
        parts = text.split(".")
    elif alphabet_size <= 9:
        parts = list(text)
    else:
        parts = [text]
    try:
        word = tuple(int(part) for part in parts)
    except ValueError:
        raise ValidationError(f"not a word: {text!r}") from None
    _check_word(word, alphabet_size)
    return word


def word_to_text(word: Word, alphabet_size: int) -> str:
    if alphabet_size <= 9:
        return "".join(str(d) for d in word)
    return ".".join(str(d) for d in word)


def parse_pcp(text: str) -> PcpInstance:
    """Parse the instance format: header line ``s p``, then p lines ``v_i w_i``."""
    rows: list[tuple[list[str], int]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((line.split(), number))
    if not rows:
        raise ParseError("missing header line 's p'", 1, 1)
    header, header_line = rows[0]
    if len(header) != 2 or not all(f.isdigit() for f in header):
        raise ParseError("header must be two integers 's p'", header_line, 1)
    alphabet_size, count = int(header[0]), int(header[1])
    if len(rows) - 1 != count:
        raise ParseError(
            f"expected {count} pair lines, found {len(rows) - 1}", header_line, 1
        )
    pairs = []
    for fields, number in rows[1:]:
        if len(fields) != 2:
            raise ParseError("each pair line must hold exactly two words", number, 1)
        try:
            pairs.append(
                (
                    word_from_text(fields[0], alphabet_size),
                    word_from_text(fields[1], alphabet_size),
                )
            )
        except ValidationError as exc:
            raise ParseError(str(exc), number, 1) from None
    return PcpInstance(alphabet_size, tuple(pairs))


def print_pcp(instance: PcpInstance) -> str:
    s = instance.alphabet_size
    lines = [f"{s} {len(instance.pairs)}"]
    for v, w in instance.pairs:
        lines.append(f"{word_to_text(v, s)} {word_to_text(w, s)}")
    return "\n".join(lines) + "\n"
