import pytest

from butforms.kernel.gens import LAM, MU, Q
from butforms.kernel.mpoly import MPoly
from butforms.rmatrix import (
    QTensor,
    classical_r,
    projection_identities,
    q_one_check,
    quantum_R,
    r_operator_reconstruction,
    reflection_consistency,
    relation_in_extracted_span,
    rmatrix_bracket_check,
    ybe_check,
)

lam, mu, q = MPoly.gen(LAM), MPoly.gen(MU), MPoly.gen(Q)


@pytest.mark.parametrize("N", [2, 3])
def test_ybe(N):
    assert ybe_check(N)["status"] == "pass"


@pytest.mark.parametrize("N", [2, 3])
def test_q_one(N):
    assert q_one_check(N)["status"] == "pass"


def test_q_one_direct():
    R = quantum_R(2).subs({Q: 1})
    assert R == QTensor.identity(2).scale(lam - mu)


def test_diagonal_entry():
    R = quantum_R(3)
    want = MPoly.gen(Q, -1) * lam - q * mu
    for i in (1, 2, 3):
        assert R.data[((i, i), (i, i))] == want


def test_classical_r_entries():
    r = classical_r(2)
    assert r.data[((2, 1), (1, 2))] == MPoly.const(2)
    assert ((1, 2), (2, 1)) not in r.data


@pytest.mark.parametrize("N", [2, 3])
def test_rmatrix_bracket(N):
    assert rmatrix_bracket_check(N)["status"] == "pass"


@pytest.mark.parametrize("N", [2, 3])
def test_r_operators(N):
    assert r_operator_reconstruction(N)["status"] == "pass"
    assert projection_identities(N)["status"] == "pass"


def test_reflection_consistency():
    rep = reflection_consistency(2)
    assert rep["status"] == "pass"
    assert rep["extracted_rank"] == rep["relation_rank"] == 6


def test_relation_in_span():
    assert relation_in_extracted_span((1, 1, 1, 2))
