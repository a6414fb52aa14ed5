from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from butforms.brackets import (
    BracketRule,
    ForeignGenerator,
    IndexRange,
    bracket,
    coisotropy_check,
    full_bracket,
    generator_bracket,
    jacobi_sweep,
    numeric_jacobi,
    symmetric_matches_reduced_full,
    table_bracket,
    table_conformance,
    table_jacobi_failures,
)
from butforms.kernel.gens import a_gen
from butforms.kernel.mpoly import MPoly, from_text
from butforms.kernel.sampling import rand_rational, task_rng
from butforms.shapes import FIG_STAIRCASE, ButShape

idx3 = st.integers(1, 3)


def A(i, j):
    return MPoly.gen(a_gen(i, j))


@given(idx3, idx3, idx3, idx3)
def test_antisymmetry(i, j, k, l):
    assert full_bracket(i, j, k, l) == -full_bracket(k, l, i, j)


def test_triangular_example():
    rule = BracketRule(ButShape.uniform(3, 1))
    assert generator_bracket(rule, 1, 2, 2, 3) == from_text("a[1,2]*a[2,3]-2*a[1,3]")


def test_leibniz_consistency():
    # {a12, a13 a23 - a12} expanded term by term
    rule = BracketRule(ButShape.uniform(3, 1))
    f = A(1, 3) * A(2, 3) - A(1, 2)
    want = generator_bracket(rule, 1, 2, 1, 3) * A(2, 3) + A(1, 3) * generator_bracket(rule, 1, 2, 2, 3)
    assert bracket(rule, A(1, 2), f) == want


@pytest.mark.parametrize("label", ["full:3", "uniform:3,1", "uniform:2,2", "symmetric:3"])
def test_jacobi_symbolic(label):
    rule = BracketRule.of(ButShape.parse(label))
    assert all(not v for _, v in jacobi_sweep(rule))


def test_jacobi_numeric_full5():
    shape = ButShape.full(5)
    rule = BracketRule(shape)
    rng = task_rng(0, "test-jacobi")
    point = {g: rand_rational(rng) for g in shape.free_gens}
    assert numeric_jacobi(rule, point) == []


def test_numeric_jacobi_catches_a_broken_bracket():
    class Broken(BracketRule):
        def gen_bracket(self, x, y):
            v = super().gen_bracket(x, y)
            return v + v if (x, y) == (a_gen(1, 2), a_gen(2, 3)) else v

    shape = ButShape.uniform(4, 1)
    rule = Broken(shape)
    rng = task_rng(1, "broken")
    point = {g: rand_rational(rng) for g in shape.free_gens}
    assert numeric_jacobi(rule, point)


@pytest.mark.parametrize(
    "label",
    ["uniform:2,2", "uniform:3,1", "uniform:3,2", "partition:2,3", "staircase:" + ",".join(map(str, FIG_STAIRCASE)), "symmetric:4"],
)
def test_coisotropy(label):
    assert coisotropy_check(ButShape.parse(label))["status"] == "pass"


@pytest.mark.parametrize("N", [2, 3, 4])
def test_symmetric_bracket_matches_folded_full(N):
    assert symmetric_matches_reduced_full(N) == []


def test_table_conformance_every_case_line():
    rep = table_conformance(5)
    assert rep["status"] == "pass"
    assert all(n > 0 for n in rep["cases"].values())


@pytest.mark.parametrize("N, failures", [(4, 9), (5, 54)])
def test_literal_table_fails_jacobi(N, failures):
    assert len(table_jacobi_failures(N, corrected=False)) == failures
    assert table_jacobi_failures(N) == []


def test_literal_table_differs_only_on_two_lines():
    rep = table_conformance(5, corrected=False)
    assert {w["case"] for w in rep["witness"]} <= {"i<j<k<l", "i=j"}


def test_table_antisymmetry():
    for (i, k), (j, l) in combinations([(1, 2), (1, 3), (2, 3), (2, 4)], 2):
        assert table_bracket(i, k, j, l) == -table_bracket(j, l, i, k)


def test_errors():
    rule = BracketRule(ButShape.uniform(3, 1))
    with pytest.raises(IndexRange):
        generator_bracket(rule, 1, 4, 1, 2)
    with pytest.raises(ForeignGenerator):
        bracket(rule, A(2, 1), A(1, 2))
