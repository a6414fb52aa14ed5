from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from butforms.kernel.gens import a_gen
from butforms.kernel.mpoly import MPoly
from butforms.quantum import confluence_probe, q_one_commutators, termination_probe
from butforms.quantum.algebra import NCPoly, QAlgebra, RewritingBound, algebra_for, qpow
from butforms.shapes import ButShape

ALG2 = algebra_for(ButShape.full(2))
ALG3 = algebra_for(ButShape.full(3))


def words(alg, max_len=4):
    return st.lists(st.integers(0, len(alg.letters) - 1), min_size=1, max_size=max_len).map(tuple)


def is_ordered(w):
    return all(a <= b for a, b in zip(w, w[1:]))


def test_reorders_with_correction_term():
    a11, a12, a21 = a_gen(1, 1), a_gen(1, 2), a_gen(2, 1)
    got = ALG2.word(a12, a11)
    want = ALG2.word(a11, a12) + ALG2.word(a11, a21).scale(qpow(-1) - qpow(1))
    assert got == want


def test_ordered_words_unchanged():
    for w in product(range(4), repeat=2):
        if is_ordered(w):
            assert ALG2.poly({w: MPoly.const(1)}).terms == {w: MPoly.const(1)}


@given(words(ALG3))
def test_normal_form_is_ordered_and_idempotent(w):
    p = ALG3.poly({w: MPoly.const(1)})
    assert all(is_ordered(v) for v in p.terms)
    assert p.normal() == p


@given(words(ALG2, 3), words(ALG2, 3), words(ALG2, 2))
def test_associative(u, v, w):
    U, V, W = (ALG2.poly({x: MPoly.const(1)}) for x in (u, v, w))
    assert (U * V) * W == U * (V * W)


@given(words(ALG2, 3), words(ALG2, 3))
def test_linear(u, v):
    c = qpow(2) - 3
    U = NCPoly(ALG2, {u: MPoly.const(1)})
    V = NCPoly(ALG2, {v: MPoly.const(1)})
    # normal form of c u + v, against c nf(u) + nf(v)
    lhs = (U.scale(c) + V).normal()
    rhs = U.normal().scale(c) + V.normal()
    assert lhs == rhs


@pytest.mark.parametrize("N", [1, 2, 3])
def test_relation_residues_vanish(N):
    assert list(algebra_for(ButShape.full(N)).relation_residues()) == []


@pytest.mark.parametrize("label", ["uniform:2,2", "uniform:3,1"])
def test_relation_residues_on_masked_shapes(label):
    assert list(algebra_for(ButShape.parse(label)).relation_residues()) == []


def test_confluence_exhaustive_n2():
    rep = confluence_probe(2)
    assert rep["status"] == "pass" and rep["checked"] == 4**3


def test_confluence_sampled_n3():
    rep = confluence_probe(3, sample=150, seed=4)
    assert rep["status"] == "pass" and rep["sampled"]


def test_confluence_refuses_large_n():
    with pytest.raises(ValueError):
        confluence_probe(5)


def test_termination():
    assert termination_probe(3, count=20, length=5)["status"] == "pass"


def test_step_bound():
    alg = QAlgebra(ButShape.full(3), step_bound=3)
    w = tuple(reversed(range(len(alg.letters))))
    with pytest.raises(RewritingBound):
        alg.poly({w: MPoly.const(1)})


@pytest.mark.parametrize("N", [2, 3])
def test_commutative_at_q_one(N):
    assert q_one_commutators(N)["status"] == "pass"


def test_zero_and_constants():
    z = NCPoly(ALG2)
    assert not z and z.is_zero()
    one = NCPoly.const(ALG2, 1)
    x = ALG2.gen(a_gen(1, 2))
    assert one * x == x == x * one
    assert (x - x).is_zero()
