import pytest

from butforms.brackets import BracketRule, poisson_tensor_rank, shape_point
from butforms.central import (
    census,
    central_set,
    commutation_exponent,
    independence_check,
    is_constant,
    leaf_dimension,
    poly_central_coeffs,
    verify_central,
    verify_minor_commutation,
)
from butforms.kernel.sampling import rand_rational, task_rng
from butforms.shapes import ButShape


@pytest.mark.parametrize("label", ["uniform:2,2", "uniform:3,1", "partition:2,3", "symmetric:3"])
def test_central_elements(label):
    shape = ButShape.parse(label)
    rule = BracketRule.of(shape)
    cs = central_set(shape)
    for c in cs["c"]:
        assert verify_central(c, rule)["status"] == "pass"
    for b in cs["b"].values():
        if not is_constant(b):
            assert verify_central(b, rule)["status"] == "pass"


def test_non_central_is_caught():
    shape = ButShape.full(3)
    rule = BracketRule(shape)
    a12 = shape.matrix()[0][1]
    rep = verify_central(a12, rule)
    assert rep["status"] == "fail" and rep["witness"]


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_palindrome(N):
    cs = poly_central_coeffs(ButShape.full(N).matrix())
    assert all(cs[k] == cs[N - k] for k in range(N + 1))


@pytest.mark.parametrize("N, d", [(3, 1), (3, 2), (4, 1), (4, 2), (4, 3)])
def test_minor_commutation(N, d):
    assert verify_minor_commutation(d, N)["status"] == "pass"


def test_commutation_exponent_values():
    assert commutation_exponent(1, 1, 1, 3) == 2
    assert commutation_exponent(1, 3, 3, 3) == -2


@pytest.mark.parametrize(
    "n, m, dim",
    [(3, 1, 2), (2, 2, 8), (2, 3, 20)],
)
def test_leaf_dimension_formula(n, m, dim):
    assert leaf_dimension(n, m) == dim


@pytest.mark.parametrize("label", ["full:3", "full:4", "uniform:3,1", "uniform:2,2"])
def test_rank_at_seeded_points(label):
    shape = ButShape.parse(label)
    rule = BracketRule.of(shape)
    want = shape.N**2 - shape.N if shape.kind == "full" else leaf_dimension(shape.n, shape.m)
    for t in range(2):
        point = shape_point(shape, task_rng(3, "rank-test", t), rand_rational)
        r = poisson_tensor_rank(rule, point)
        assert r == want and r % 2 == 0


@pytest.mark.parametrize("label", ["uniform:2,2", "uniform:3,1", "uniform:2,3"])
def test_independence_census(label):
    rep = independence_check(ButShape.parse(label))
    assert rep["status"] == "pass"
    assert rep["independent"] == census(ButShape.parse(label))["nonconstant"]
