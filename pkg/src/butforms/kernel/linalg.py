"""Exact dense linear algebra over rationals, polynomials and rational functions.

Matrices are plain lists of rows.  Entries may be ``int``/``Fraction``,
:class:`MPoly` or :class:`RatFunc`; the helpers only rely on ring operations
(plus exact division where stated).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Callable, Sequence

from .mpoly import MPoly
from .ratfunc import RatFunc

Matrix = list  # list[list[entry]]


def zeros(r: int, c: int | None = None) -> Matrix:
    return [[0] * (r if c is None else c) for _ in range(r)]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(m):
            acc = 0
            for t in range(k):
                x = ai[t]
                if isinstance(x, int) and x == 0:
                    continue
                y = b[t][j]
                if isinstance(y, int) and y == 0:
                    continue
                acc = acc + x * y
            row.append(acc)
        out.append(row)
    return out


def matadd(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matsub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matscale(c, a: Matrix) -> Matrix:
    return [[c * x for x in row] for row in a]


def matmap(f: Callable, a: Matrix) -> Matrix:
    return [[f(x) for x in row] for row in a]


def trace(a: Matrix):
    acc = 0
    for i in range(len(a)):
        acc = acc + a[i][i]
    return acc


def submatrix(a: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    return [[a[i][j] for j in cols] for i in rows]


def is_zero(x) -> bool:
    if isinstance(x, (int, Fraction)):
        return x == 0
    return not x


def mat_is_zero(a: Matrix) -> bool:
    return all(is_zero(x) for row in a for x in row)


# determinants ---------------------------------------------------------------


def _exact_div(x, y):
    if isinstance(x, MPoly) or isinstance(y, MPoly):
        xp = x if isinstance(x, MPoly) else MPoly.const(x)
        yp = y if isinstance(y, MPoly) else MPoly.const(y)
        if yp.is_const():
            return xp.scale(Fraction(1) / yp.const_value())
        q = xp.exact_div(yp)
        if q is None:
            raise ArithmeticError("Bareiss step is not an exact division")
        return q
    if isinstance(x, RatFunc) or isinstance(y, RatFunc):
        return RatFunc.lift(x) / RatFunc.lift(y)
    if isinstance(x, int) and isinstance(y, int):
        q, r = divmod(x, y)
        if r:
            raise ArithmeticError("Bareiss step is not an exact division")
        return q
    return Fraction(x) / Fraction(y)


def det_bareiss(a: Matrix):
    """Fraction-free (Bareiss) determinant; exact division at every step."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if is_zero(m[k][k]):
            for r in range(k + 1, n):
                if not is_zero(m[r][k]):
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = _exact_div(m[i][j] * pivot - m[i][k] * m[k][j], prev)
        prev = pivot
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d


def det_laplace(a: Matrix):
    """Division-free determinant by expansion over row prefixes with memoized
    column-subset minors; O(n 2^n) ring multiplications."""
    n = len(a)
    if n == 0:
        return 1
    cache: dict[tuple[int, ...], object] = {(): 1}
    for size in range(1, n + 1):
        row = a[size - 1]
        for cols in combinations(range(n), size):
            acc = 0
            for pos, c in enumerate(cols):
                x = row[c]
                if is_zero(x):
                    continue
                minor = cache[cols[:pos] + cols[pos + 1 :]]
                if is_zero(minor):
                    continue
                term = x * minor
                acc = acc + term if (size - 1 - pos) % 2 == 0 else acc - term
            cache[cols] = acc
        for cols in combinations(range(n), size - 1):
            if size - 1 > 0:
                cache.pop(cols, None)
    return cache[tuple(range(n))]


def det(a: Matrix):
    return det_bareiss(a)


# rank and inverse over the rationals ---------------------------------------------


def _to_integer_rows(a: Matrix) -> list[list[int]]:
    rows = []
    for row in a:
        fr = [Fraction(x) for x in row]
        d = 1
        for x in fr:
            d = lcm(d, x.denominator)
        rows.append([int(x * d) for x in fr])
    return rows


def rank(a: Matrix) -> int:
    """Exact rank of a numeric matrix (integer Bareiss elimination)."""
    for row in a:
        for x in row:
            if not isinstance(x, (int, Fraction)):
                if isinstance(x, MPoly) and x.is_const():
                    continue
                raise TypeError("exact_rank needs numeric entries; evaluate first")
    if not a:
        return 0
    m = _to_integer_rows([[x.const_value() if isinstance(x, MPoly) else x for x in row] for row in a])
    nr, nc = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(nc):
        piv = next((i for i in range(r, nr) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, nr):
            mic = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c + 1, nc):
                row_i[j] = (row_i[j] * p - mic * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == nr:
            break
    return r


exact_rank = rank


def inverse(a: Matrix) -> Matrix:
    """Gauss-Jordan inverse over a field (Fraction or RatFunc entries)."""
    n = len(a)
    symbolic = any(not isinstance(x, (int, Fraction)) for row in a for x in row)
    lift = RatFunc.lift if symbolic else Fraction
    m = [[lift(x) for x in row] + [lift(1 if i == j else 0) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        piv = next((i for i in range(c, n) if not is_zero(m[i][c])), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c] if symbolic else Fraction(1) / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and not is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [row[n:] for row in m]


def nullspace(a: Matrix) -> list[list[Fraction]]:
    """Basis of the right nullspace of a numeric matrix."""
    if not a:
        return []
    nr, nc = len(a), len(a[0])
    m = [[Fraction(x) for x in row] for row in a]
    pivots = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(nr):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * nc
        v[fc] = Fraction(1)
        for row_idx, pc in enumerate(pivots):
            v[pc] = -m[row_idx][fc]
        basis.append(v)
    return basis


def adjugate(a: Matrix) -> Matrix:
    n = len(a)
    if n == 1:
        return [[1]]
    out = zeros(n)
    for i in range(n):
        for j in range(n):
            minor = [[a[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
            d = det_laplace(minor)
            out[j][i] = d if (i + j) % 2 == 0 else -d
    return out
