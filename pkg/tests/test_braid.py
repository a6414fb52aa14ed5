from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from butforms.braid import (
    BraidError,
    BraidGenerator,
    InadmissibleScaling,
    apply_word,
    braid_act,
    braid_matrix,
    check_phi,
    closed_form_act,
    parse_word,
    reflection_involutive,
    total_braid_check,
    verify_affine_braid_relation,
    verify_braid_automorphism,
    verify_braid_relation,
    verify_closed_form,
)
from butforms.cli import dump
from butforms.shapes import ButShape

rat = st.fractions(min_value=-20, max_value=20, max_denominator=9)


@st.composite
def unitriangular(draw, n):
    A = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            A[i][j] = draw(rat)
    return A


def test_dump_braid_matrix():
    d = dump("braid-matrix", ButShape.uniform(2, 1), 1)
    assert d["matrix"] == [["a[1,2]", "-1"], ["1", "0"]]


def test_dump_braid_matrix_numeric():
    shape = ButShape.uniform(3, 1)
    A = [[1, 5, 0], [0, 1, 0], [0, 0, 1]]
    B = braid_matrix([[Fraction(x) for x in r] for r in A], shape, 1)
    assert B[0][:2] == [5, -1] and B[1][:2] == [1, 0]


@given(unitriangular(3))
def test_inverse_round_trip(A):
    shape = ButShape.uniform(3, 1)
    for I in (1, 2):
        assert braid_act(braid_act(A, shape, I), shape, I, True) == A


@given(unitriangular(4))
def test_braid_relation_numeric(A):
    shape = ButShape.uniform(4, 1)
    w1 = parse_word("b1 b2 b1", 4)
    w2 = parse_word("b2 b1 b2", 4)
    assert apply_word(A, shape, w1) == apply_word(A, shape, w2)
    far = apply_word(A, shape, parse_word("b1 b3", 4))
    assert far == apply_word(A, shape, parse_word("b3 b1", 4))


@given(unitriangular(3))
def test_closed_form_numeric(A):
    shape = ButShape.uniform(3, 1)
    for I in (1, 2):
        assert closed_form_act(A, shape, I) == braid_act(A, shape, I)


@given(unitriangular(3))
def test_output_stays_unitriangular(A):
    B = braid_act(A, ButShape.uniform(3, 1), 1)
    assert all(B[i][i] == 1 for i in range(3))
    assert all(B[i][j] == 0 for i in range(3) for j in range(i))


def test_operator_order():
    # rightmost generator acts first
    shape = ButShape.uniform(3, 1)
    A = [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
    A[0][1], A[0][2], A[1][2] = Fraction(2), Fraction(3), Fraction(7)
    got = apply_word(A, shape, parse_word("b1 b2", 3))
    assert got == braid_act(braid_act(A, shape, 2), shape, 1)
    assert got != braid_act(braid_act(A, shape, 1), shape, 2)


@pytest.mark.parametrize("n, m", [(3, 1), (3, 2), (4, 1)])
def test_braid_relation_symbolic(n, m):
    assert verify_braid_relation(n, m)["status"] == "pass"


@pytest.mark.parametrize("n, m", [(3, 1), (2, 2)])
def test_automorphism(n, m):
    assert verify_braid_automorphism(n, m)["status"] == "pass"


@pytest.mark.parametrize("n, m", [(3, 1), (3, 2)])
def test_closed_form_symbolic(n, m):
    assert verify_closed_form(n, m)["status"] == "pass"


@pytest.mark.parametrize("n, m", [(2, 2), (3, 1), (3, 2)])
def test_total_braid(n, m):
    assert total_braid_check(n, m)["status"] == "pass"


def test_affine_relation():
    assert verify_affine_braid_relation(3, 1, 2)["status"] == "pass"


@pytest.mark.parametrize("bad", ["b0", "c1", "b1^2", "b4"])
def test_bad_words(bad):
    with pytest.raises(BraidError):
        parse_word(bad, 4)


def test_generator_bounds():
    with pytest.raises(BraidError):
        BraidGenerator(1)
    assert parse_word("bn1 b2^-1", 3)[1].inv() == BraidGenerator(3, 2)


def test_scaling_admissibility():
    shape = ButShape.uniform(3, 1)
    check_phi(shape, [0, 0, 0])
    with pytest.raises(InadmissibleScaling):
        check_phi(shape, [1, 0, 1])
    assert reflection_involutive(shape)
