import pytest
from hypothesis import given
from hypothesis import strategies as st

from butforms.kernel.gens import a_gen
from butforms.kernel.mpoly import MPoly
from butforms.quantum.algebra import algebra_for, qpow
from butforms.quantum.matrices import (
    UnsupportedBlock,
    bar,
    diagonal_dagger_ok,
    hermitian,
    letter_block,
    matrices_equal,
    qdet,
    qdet_checks,
    qinverse,
    qinverse_dagger,
    qmatmul,
    star,
    star_checks,
    unit_matrix,
)
from butforms.shapes import ButShape

ALG = algebra_for(ButShape.full(2), True)
ALG22 = algebra_for(ButShape.uniform(2, 2), True)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=4).map(tuple))
def test_star_involutive_on_words(w):
    p = ALG.poly({w: qpow(1) + 2})
    assert star(star(p)) == p


def test_bar():
    assert bar(qpow(2) + 3) == qpow(-2) + 3
    assert bar(MPoly.const(5)) == MPoly.const(5)


@pytest.mark.parametrize("alg", [ALG, ALG22], ids=["full:2", "uniform:2,2"])
def test_star_checks(alg):
    rep = star_checks(alg, max_len=2)
    assert rep == {"involutive_failures": [], "reversal_failures": [], "ideal_failures": []}


def test_star_of_letters():
    a12, a21 = a_gen(1, 2), a_gen(2, 1)
    assert star(ALG.gen(a21)) == ALG.gen(a21).scale(qpow(1))
    assert star(ALG.gen(a12)) == ALG.gen(a12).scale(qpow(1)) + ALG.gen(a21).scale(1 - qpow(2))


def test_diagonal_block_conjugate():
    assert diagonal_dagger_ok(ALG22, 1) and diagonal_dagger_ok(ALG22, 3)


@pytest.mark.parametrize("alg", [ALG, ALG22], ids=["full:2", "uniform:2,2"])
def test_qdet_checks(alg):
    rep = qdet_checks(alg)
    assert all(v == [] for v in rep.values()), rep


def test_qdet_formula():
    blk = letter_block(ALG, 1, 2)
    want = ALG.word(a_gen(1, 1), a_gen(2, 2)) - ALG.word(a_gen(1, 2), a_gen(2, 1)).scale(qpow(2))
    assert qdet(blk) == want


def test_inverse_two_sided():
    blk = letter_block(ALG, 1, 2)
    inv = qinverse(ALG, blk)
    E = unit_matrix(ALG, 2)
    assert matrices_equal(qmatmul(blk, inv), E) == []
    assert matrices_equal(qmatmul(inv, blk), E) == []
    assert matrices_equal(hermitian(inv), qinverse_dagger(ALG, blk)) == []


def test_unsupported_block():
    alg = algebra_for(ButShape.full(3))
    with pytest.raises(UnsupportedBlock):
        qdet(letter_block(alg, 1, 3))
