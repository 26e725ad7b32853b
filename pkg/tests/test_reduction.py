"""Compilation of word-pair instances into graded knowledge bases."""

from fractions import Fraction

import pytest

from lukalc import (
    Atomic,
    ConceptAssertion,
    Degree,
    Exists,
    Forall,
    Gci,
    Not,
    ONE,
    Or,
    PcpInstance,
    ReductionConfig,
    Scale,
    TOP,
    ValidationError,
    build_kb,
    build_kb_prime,
    build_tbox_i,
    encode_word,
    parse_kb,
    prime_restriction,
    print_concept,
    print_kb,
    role_name,
)
from lukalc.reduction import CONCEPT_NAMES, ROOT_INDIVIDUAL

V, V1, V2 = Atomic("V"), Atomic("V1"), Atomic("V2")
W, W1, W2 = Atomic("W"), Atomic("W1"), Atomic("W2")
A = Atomic("A")

SINGLE = PcpInstance(2, (((1,), (2,)),))


def test_shared_equivalences_expand_into_inclusion_pairs(classic_pal):
    tbox = build_kb(classic_pal).tbox
    assert tbox[0] == Gci(V, Or(V1, V2))
    assert tbox[1] == Gci(Or(V1, V2), V)
    assert tbox[2] == Gci(W, Or(W1, W2))
    assert tbox[3] == Gci(Or(W1, W2), W)


def test_per_pair_axioms_structure_and_order(classic_pal):
    v, w = classic_pal.pair(1)
    assert (v, w) == ((1,), (1, 1, 1))
    axioms = build_tbox_i(classic_pal, 1)
    assert len(axioms) == 11
    assert axioms[0] == Gci(TOP, Exists("R1", TOP))
    assert axioms[1] == Gci(V, Scale(3, Forall("R1", V1)))
    assert axioms[2] == Gci(Scale(3, Exists("R1", V1)), V)
    assert axioms[3] == Gci(W, Scale(27, Forall("R1", W1)))
    assert axioms[4] == Gci(Scale(27, Exists("R1", W1)), W)
    assert axioms[5] == Gci(TOP, Forall("R1", V2), Degree(Fraction(1, 3)))
    assert axioms[6] == Gci(TOP, Forall("R1", Not(V2)), Degree(Fraction(2, 3)))
    assert axioms[7] == Gci(TOP, Forall("R1", W2), Degree(Fraction(13, 27)))
    assert axioms[8] == Gci(TOP, Forall("R1", Not(W2)), Degree(Fraction(14, 27)))
    assert axioms[9] == Gci(A, Scale(27, Forall("R1", A)))
    assert axioms[10] == Gci(Scale(27, Exists("R1", A)), A)


def test_scale_coefficients_track_word_lengths(classic_pal):
    base = classic_pal.base
    for i in range(1, len(classic_pal.pairs) + 1):
        v, w = classic_pal.pair(i)
        axioms = build_tbox_i(classic_pal, i)
        assert axioms[1].rhs.count == base ** len(v)
        assert axioms[3].rhs.count == base ** len(w)
        assert axioms[9].rhs.count == base ** max(len(v), len(w))


def test_word_grades_are_encodings_and_complements(classic_pal):
    s = classic_pal.alphabet_size
    for i in range(1, len(classic_pal.pairs) + 1):
        v, w = classic_pal.pair(i)
        axioms = build_tbox_i(classic_pal, i)
        assert axioms[5].grade == encode_word(v, s)
        assert axioms[7].grade == encode_word(w, s)
        assert axioms[5].grade.value + axioms[6].grade.value == 1
        assert axioms[7].grade.value + axioms[8].grade.value == 1


def test_pair_index_is_validated(classic_pal):
    with pytest.raises(ValidationError):
        build_tbox_i(classic_pal, 0)
    with pytest.raises(ValidationError):
        build_tbox_i(classic_pal, 4)


def test_axiom_counts():
    assert len(build_kb(SINGLE).tbox) == 15
    assert len(build_kb(SINGLE).axioms()) == 19
    assert len(build_kb_prime(SINGLE).axioms()) == 20


def test_axiom_counts_three_pairs(classic_pal):
    assert len(build_kb(classic_pal).axioms()) == 41
    assert len(build_kb_prime(classic_pal).axioms()) == 44


def test_prime_extends_base(classic_pal):
    base = build_kb(classic_pal)
    prime = build_kb_prime(classic_pal)
    assert prime.tbox[: len(base.tbox)] == base.tbox
    assert prime.abox == base.abox
    extra = prime.tbox[len(base.tbox) :]
    assert extra == tuple(
        Gci(TOP, prime_restriction(i)) for i in (1, 2, 3)
    )


def test_vocabulary_is_closed(classic_pal):
    kb = build_kb_prime(classic_pal)
    assert kb.concept_names() == frozenset(CONCEPT_NAMES)
    assert kb.role_names() == frozenset({"R1", "R2", "R3"})
    assert kb.individuals() == frozenset({ROOT_INDIVIDUAL})
    assert role_name(2) == "R2"


def test_prime_restriction_prints_with_iff_sugar():
    assert (
        print_concept(prime_restriction(1))
        == "(all R1 (or (not (iff V W)) (not A)))"
    )


GOLDEN_SINGLE = """\
tbox:
  (gci V (or V1 V2) 1)
  (gci (or V1 V2) V 1)
  (gci W (or W1 W2) 1)
  (gci (or W1 W2) W 1)
  (gci top (some R1 top) 1)
  (gci V (scale 3 (all R1 V1)) 1)
  (gci (scale 3 (some R1 V1)) V 1)
  (gci W (scale 3 (all R1 W1)) 1)
  (gci (scale 3 (some R1 W1)) W 1)
  (gci top (all R1 V2) 1/3)
  (gci top (all R1 (not V2)) 2/3)
  (gci top (all R1 W2) 2/3)
  (gci top (all R1 (not W2)) 1/3)
  (gci A (scale 3 (all R1 A)) 1)
  (gci (scale 3 (some R1 A)) A 1)
abox:
  (instance a (not V) 1)
  (instance a (not W) 1)
  (instance a A 1/100)
  (instance a (not A) 99/100)
"""


def test_golden_text_single_pair():
    assert print_kb(build_kb(SINGLE)) == GOLDEN_SINGLE


def test_golden_prime_inserts_one_axiom():
    expected = GOLDEN_SINGLE.replace(
        "abox:",
        "  (gci top (all R1 (or (not (iff V W)) (not A))) 1)\nabox:",
    )
    assert print_kb(build_kb_prime(SINGLE)) == expected


def test_compiled_kb_roundtrips_through_text(classic_pal):
    for kb in (build_kb(classic_pal), build_kb_prime(classic_pal)):
        assert parse_kb(print_kb(kb)) == kb


def test_epsilon_is_configurable():
    config = ReductionConfig(Degree(Fraction(1, 7)))
    kb = build_kb(SINGLE, config)
    assert kb.abox[2] == ConceptAssertion("a", A, Degree(Fraction(1, 7)))
    assert kb.abox[3] == ConceptAssertion("a", Not(A), Degree(Fraction(6, 7)))
    # only the root assertions move; the boxes do not depend on epsilon
    assert kb.tbox == build_kb(SINGLE).tbox


@pytest.mark.parametrize("bad", [Degree(0), Degree(1), Fraction(1, 2)])
def test_epsilon_must_be_interior_degree(bad):
    with pytest.raises(ValidationError):
        ReductionConfig(bad)


def test_root_assertions_pin_membership():
    abox = build_kb(SINGLE).abox
    assert [type(x) for x in abox] == [ConceptAssertion] * 4
    assert abox[0] == ConceptAssertion("a", Not(V))
    assert abox[1] == ConceptAssertion("a", Not(W))
    assert abox[0].grade is ONE and abox[1].grade is ONE
