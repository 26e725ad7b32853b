"""Operation tables and algebraic laws of the degree algebra."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lukalc import (
    Degree,
    DegreeRangeError,
    ONE,
    ValidationError,
    ZERO,
    implication,
    negation,
    parse_degree,
    scale,
    tconorm,
    tnorm,
)


def d(numerator: int, denominator: int = 1) -> Degree:
    return Degree(Fraction(numerator, denominator))


degrees = st.fractions(min_value=0, max_value=1, max_denominator=40).map(Degree)


def test_construction_rejects_out_of_range():
    with pytest.raises(DegreeRangeError):
        Degree(Fraction(3, 2))
    with pytest.raises(DegreeRangeError):
        Degree(Fraction(-1, 2))


def test_construction_rejects_floats():
    with pytest.raises(TypeError):
        Degree(0.5)


def test_integers_coerce_to_fractions():
    assert Degree(1) == ONE
    assert Degree(0) == ZERO


@pytest.mark.parametrize(
    "a, b, want",
    [
        (d(1, 2), d(7, 10), d(1, 5)),
        (d(1, 3), d(1, 3), ZERO),
        (d(2, 3), ONE, d(2, 3)),
        (ONE, ONE, ONE),
    ],
)
def test_tnorm_examples(a, b, want):
    assert tnorm(a, b) == want


@pytest.mark.parametrize(
    "a, b, want",
    [
        (d(1, 4), d(1, 4), d(1, 2)),
        (d(2, 3), d(2, 3), ONE),
        (d(1, 3), ZERO, d(1, 3)),
    ],
)
def test_tconorm_examples(a, b, want):
    assert tconorm(a, b) == want


@pytest.mark.parametrize(
    "a, want",
    [(ZERO, ONE), (ONE, ZERO), (d(1, 4), d(3, 4))],
)
def test_negation_examples(a, want):
    assert negation(a) == want


@pytest.mark.parametrize(
    "a, b, want",
    [
        (d(3, 4), d(1, 2), d(3, 4)),
        (d(1, 2), d(3, 4), ONE),
        (ONE, d(1, 3), d(1, 3)),
        (ZERO, ZERO, ONE),
    ],
)
def test_implication_examples(a, b, want):
    assert implication(a, b) == want


@pytest.mark.parametrize(
    "n, a, want",
    [
        (3, d(2, 5), ONE),
        (1, d(2, 5), d(2, 5)),
        (4, d(1, 9), d(4, 9)),
        (7, ZERO, ZERO),
    ],
)
def test_scale_examples(n, a, want):
    assert scale(n, a) == want


def test_scale_rejects_nonpositive_count():
    with pytest.raises(ValidationError):
        scale(0, d(1, 2))


@pytest.mark.parametrize(
    "text, value", [("0", ZERO), ("1", ONE), ("1/2", d(1, 2)), ("2/4", d(1, 2))]
)
def test_parse_degree(text, value):
    assert parse_degree(text) == value


@pytest.mark.parametrize("text", ["", "-1/2", "0.5", "1/0", "a", "1 / 2", "+1"])
def test_parse_degree_rejects_malformed(text):
    with pytest.raises(ValidationError):
        parse_degree(text)


def test_parse_degree_rejects_out_of_range():
    with pytest.raises(DegreeRangeError):
        parse_degree("3/2")


def test_str_is_canonical_reduced_form():
    assert str(d(2, 4)) == "1/2"
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert str(d(99, 100)) == "99/100"


def test_ordering_is_exact():
    assert d(1, 3) < d(34, 100) < d(1, 2)


@given(degrees, degrees, degrees)
def test_residuation(a, b, c):
    # c <= (a -> b) exactly when a (x) c <= b: the implication is the
    # residuum of the t-norm.
    assert (c <= implication(a, b)) == (tnorm(a, c) <= b)


@given(degrees, degrees)
def test_de_morgan(a, b):
    assert tconorm(a, b) == negation(tnorm(negation(a), negation(b)))
    assert tnorm(a, b) == negation(tconorm(negation(a), negation(b)))


@given(degrees)
def test_negation_is_involutive(a):
    assert negation(negation(a)) == a


@given(degrees)
def test_excluded_middle(a):
    assert tconorm(a, negation(a)) == ONE


@given(degrees, degrees)
def test_implication_is_negation_then_tconorm(a, b):
    assert implication(a, b) == tconorm(negation(a), b)


@given(degrees, degrees)
def test_commutativity(a, b):
    assert tnorm(a, b) == tnorm(b, a)
    assert tconorm(a, b) == tconorm(b, a)


@given(degrees, degrees, degrees)
def test_associativity(a, b, c):
    assert tnorm(tnorm(a, b), c) == tnorm(a, tnorm(b, c))
    assert tconorm(tconorm(a, b), c) == tconorm(a, tconorm(b, c))


@given(degrees)
def test_units(a):
    assert tnorm(a, ONE) == a
    assert tconorm(a, ZERO) == a


@given(st.integers(min_value=1, max_value=32), degrees)
def test_scale_equals_tconorm_fold(n, a):
    folded = a
    for _ in range(n - 1):
        folded = tconorm(folded, a)
    assert scale(n, a) == folded


@given(degrees, degrees)
def test_min_and_max_identities(a, b):
    # a (x) (a -> b) is the pointwise minimum; (a -> b) -> b the maximum.
    assert tnorm(a, implication(a, b)) == min(a, b)
    assert implication(implication(a, b), b) == max(a, b)
