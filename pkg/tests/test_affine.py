import pytest
from hypothesis import given
from hypothesis import strategies as st

from butforms.affine import (
    DivergentKernel,
    KLevel,
    SeriesMatrix,
    affine_generator_bracket,
    coefficient,
    generic_entry,
    kernel_resummation_residue,
    kernel_series,
    klevel_reduce,
)
from butforms.shapes import ButShape


@pytest.mark.parametrize("order", [1, 4, 7])
def test_kernel_resummation(order):
    # denominator * truncated series - numerator is the single tail monomial
    # -2 x^(order+1) for the series in x (x = mu/lam or lam*mu), and
    # -2 (lam*mu)^-order for the expansion in (lam*mu)^-1
    n = order
    assert kernel_resummation_residue("k1", n) == {(-n, n + 1): -2}
    assert kernel_resummation_residue("k2", n) == {(n + 1, n + 1): -2}
    assert kernel_resummation_residue("k2", n, "outer") == {(-n, -n): -2}


def test_kernel_series_coefficients():
    assert kernel_series("k1", 2) == {(0, 0): 1, (-1, 1): 2, (-2, 2): 2}
    assert kernel_series("k2", 1, "outer") == {(0, 0): -1, (-1, -1): -2}


@pytest.mark.parametrize("K", [1, 2, 3])
def test_transpose_symmetry(K):
    S = klevel_reduce(ButShape.full(3), K)
    for t in range(K + 1):
        for a in range(1, 4):
            for b in range(1, 4):
                assert S.entry(t, a, b) == S.entry(K - t, b, a)


def test_series_json_round_trip():
    S = klevel_reduce(ButShape.uniform(2, 1), 2)
    assert SeriesMatrix.from_json(S.to_json()) == S


def test_inner_expansion_needs_bound():
    with pytest.raises(DivergentKernel):
        coefficient(0, 1, 2, 0, 1, 2, generic_entry(ButShape.full(2)), "inner")


@pytest.mark.parametrize("label, K", [("full:2", 2), ("uniform:2,1", 2), ("uniform:3,1", 2)])
def test_klevel_algebra(label, K):
    lv = KLevel(ButShape.parse(label), K)
    assert lv.antisymmetry_violations() == []
    assert lv.jacobi_violations() == []
    assert lv.homomorphism_check()["status"] == "pass"


idx = st.integers(1, 2)


@given(st.integers(0, 2), idx, idx, st.integers(0, 2), idx, idx)
def test_expansions_agree_on_reduction(p, i, j, r, k, l):
    shape = ButShape.full(2)
    a = affine_generator_bracket(p, i, j, r, k, l, 2, shape, region="inner")
    b = affine_generator_bracket(p, i, j, r, k, l, 2, shape, region="outer")
    assert a == b


def test_level_zero_matches_classical():
    from butforms.brackets import BracketRule, generator_bracket

    shape = ButShape.full(3)
    rule = BracketRule(shape)
    assert affine_generator_bracket(0, 1, 2, 0, 2, 3, 2, shape) == generator_bracket(rule, 1, 2, 2, 3)


def test_level_range():
    with pytest.raises(ValueError):
        affine_generator_bracket(3, 1, 2, 0, 1, 2, 2)
