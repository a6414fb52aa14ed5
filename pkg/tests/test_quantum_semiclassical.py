"""Independent sympy oracle for the q -> 1 expansion of the quantum relations.

Writing the instance (i, s, j, t) as q^al x y - q^be y x = RHS(q) with
x = a[i,s], y = a[j,t], the commutator is
[x, y] = (RHS - (q^al - q^be) y x) / q^al, and its coefficient of h at
q = 1 + h, read commutatively, is RHS'(1) - (al - be) x y.
"""

import re
from itertools import product

import pytest
import sympy as sp

from butforms.kernel.mpoly import to_text
from butforms.quantum import SEMICLASSICAL_SCALAR, measured_scalars, semiclassical_bridge
from butforms.quantum.algebra import algebra_for
from butforms.quantum.checks import commutator_first_order
from butforms.shapes import ButShape

q, h = sp.symbols("q h")


def sym(i, j):
    return sp.Symbol(f"a_{i}_{j}")


def d(a, b):
    return int(a == b)


def gt(a, b):
    return int(a > b)


def rhs(i, s, j, t):
    k1 = gt(t, s) - gt(i, j)
    return (
        (q - 1 / q) * q ** d(s, i) * k1 * sym(j, s) * sym(i, t)
        + (q - 1 / q) * (q ** d(s, t) * gt(t, i) * sym(j, i) * sym(t, s) - q ** d(i, j) * gt(s, j) * sym(i, j) * sym(s, t))
        + (q - 1 / q) ** 2 * gt(s, i) * k1 * sym(j, i) * sym(s, t)
    )


def oracle_first_order(i, s, j, t):
    al = d(s, j) + d(i, j)
    be = d(s, t) + d(i, t)
    expr = rhs(i, s, j, t).subs(q, 1 + h)
    first = sp.diff(expr, h).subs(h, 0)
    return sp.expand(first - (al - be) * sym(i, s) * sym(j, t))


def sign(x):
    return (x > 0) - (x < 0)


def poisson(i, j, k, l):
    return sp.expand(
        (sign(j - l) + sign(i - k)) * sym(i, l) * sym(k, j)
        + (sign(j - k) + 1) * sym(j, l) * sym(i, k)
        + (sign(i - l) - 1) * sym(l, j) * sym(k, i)
    )


def to_sympy(p):
    text = re.sub(r"a\[(\d+),(\d+)\]", r"a_\1_\2", to_text(p)).replace("^", "**")
    return sp.expand(sp.sympify(text))


def oracle_scalars(N):
    ratios = set()
    for i, s, j, t in product(range(1, N + 1), repeat=4):
        c, b = oracle_first_order(i, s, j, t), poisson(i, s, j, t)
        if b == 0:
            assert c == 0
            continue
        ratios.add(sp.simplify(c / b))
    return ratios


@pytest.mark.parametrize("N", [2, 3])
def test_oracle_measures_one_scalar(N):
    assert oracle_scalars(N) == {SEMICLASSICAL_SCALAR}


@pytest.mark.parametrize("N", [1, 2, 3])
def test_library_first_order_matches_oracle(N):
    alg = algebra_for(ButShape.full(N))
    for x, y in product(alg.letters, repeat=2):
        got = to_sympy(commutator_first_order(alg, x, y))
        assert got == oracle_first_order(x.row, x.col, y.row, y.col)


@pytest.mark.parametrize("N", [1, 2, 3])
def test_bridge(N):
    assert semiclassical_bridge(N)["status"] == "pass"
    assert measured_scalars(N) <= {"zero", SEMICLASSICAL_SCALAR}


def test_wrong_scalar_fails():
    assert semiclassical_bridge(2, scalar=1)["status"] == "fail"
