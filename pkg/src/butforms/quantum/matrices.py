"""Star structure, quantum determinants, block inverses and matrices of
noncommutative polynomials.

The inverse of the quantum determinant of a diagonal block enters as a
formal invertible symbol ``qdet[r,r]`` (r the first row of the block).  It is
central and self-adjoint; both facts are checked by ``qdet_checks``.  A
polynomial carrying such denominators vanishes iff it vanishes after
multiplying through by determinant powers and substituting the determinant
polynomial for each symbol (``vanishes``).
"""

from __future__ import annotations

from ..kernel.gens import Gen, Kind, Q, declare_unit_name, unit
from ..kernel.mpoly import MPoly
from ..shapes import ButShape
from .algebra import NCPoly, QAlgebra, algebra_for, qpow

QDET = "qdet"
declare_unit_name(QDET)

Matrix = list  # list of rows of NCPoly


class UnsupportedBlock(ValueError):
    """Block size outside the supported quantum cases."""


def qdet_symbol(r: int) -> Gen:
    return unit(QDET, r, r)


def _is_qdet(g: Gen) -> bool:
    return g.kind == Kind.UNIT and g.name == QDET


# coefficients ------------------------------------------------------------------
def bar(c: MPoly) -> MPoly:
    """q -> q^-1 on a coefficient; determinant symbols are fixed."""
    if Q not in c.gens():
        return c
    out = MPoly()
    for e, part in c.collect(Q).items():
        out = out + part * qpow(-e)
    return out


# star ------------------------------------------------------------------------------
def star_letter(alg: QAlgebra, g: Gen) -> NCPoly:
    """Image of a generator under the conjugation law of the shape."""
    i, j = g.row, g.col
    x = alg.entry(i, j)
    if i >= j:
        return x if i == j else x.scale(qpow(1))
    # upper entry: the lower partner is present only inside a diagonal block
    return x.scale(qpow(1)) + alg.entry(j, i).scale(1 - qpow(2))


def _star_table(alg: QAlgebra) -> list:
    tab = getattr(alg, "_star_tab", None)
    if tab is None:
        tab = [star_letter(alg, g) for g in alg.letters]
        alg._star_tab = tab
    return tab


def star(p: NCPoly) -> NCPoly:
    """Antilinear antiautomorphism: conjugate coefficients, reverse words,
    map letters by the conjugation law."""
    alg = p.alg
    tab = _star_table(alg)
    out = NCPoly(alg)
    for w, c in p.terms.items():
        acc = NCPoly.const(alg, bar(c))
        for x in reversed(w):
            acc = acc * tab[x]
        out = out + acc
    return out


def hermitian(X: Matrix) -> Matrix:
    """Entrywise star of the transpose."""
    rows, cols = len(X), len(X[0])
    return [[star(X[j][i]) for j in range(rows)] for i in range(cols)]


# matrices ---------------------------------------------------------------------------
def zero_matrix(alg, r, c) -> Matrix:
    return [[NCPoly(alg) for _ in range(c)] for _ in range(r)]


def unit_matrix(alg, n) -> Matrix:
    return [[NCPoly.const(alg, int(i == j)) for j in range(n)] for i in range(n)]


def qmatmul(X: Matrix, Y: Matrix) -> Matrix:
    """Row-by-column product; in each term the X factor stands on the left."""
    alg = X[0][0].alg
    n, k, m = len(X), len(Y), len(Y[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = NCPoly(alg)
            for t in range(k):
                if X[i][t] and Y[t][j]:
                    acc = acc + X[i][t] * Y[t][j]
            row.append(acc)
        out.append(row)
    return out


def qmatadd(X: Matrix, Y: Matrix) -> Matrix:
    return [[a + b for a, b in zip(r, s)] for r, s in zip(X, Y)]


def qmatsub(X: Matrix, Y: Matrix) -> Matrix:
    return [[a - b for a, b in zip(r, s)] for r, s in zip(X, Y)]


def qmatscale(X: Matrix, c) -> Matrix:
    return [[a.scale(c) for a in r] for r in X]


def transpose(X: Matrix) -> Matrix:
    return [list(r) for r in zip(*X)]


def get_block(X: Matrix, shape: ButShape, I: int, J: int) -> Matrix:
    ri, cj = shape.block_indices(I), shape.block_indices(J)
    return [[X[r - 1][c - 1] for c in cj] for r in ri]


def put_block(X: Matrix, shape: ButShape, I: int, J: int, blk: Matrix) -> None:
    ri, cj = shape.block_indices(I), shape.block_indices(J)
    for a, r in enumerate(ri):
        for b, c in enumerate(cj):
            X[r - 1][c - 1] = blk[a][b]


# determinants -----------------------------------------------------------------------
def letter_block(alg: QAlgebra, r: int, size: int) -> Matrix:
    return [[alg.entry(r + a, r + b) for b in range(size)] for a in range(size)]


def block_origin(alg: QAlgebra, blk: Matrix) -> int:
    """First row r of the diagonal block whose letters fill ``blk`` verbatim."""
    p = blk[0][0]
    if len(p.terms) == 1:
        ((w, c),) = p.terms.items()
        if len(w) == 1 and c == MPoly.const(1):
            g = alg.letters[w[0]]
            if g.row == g.col and blk == letter_block(alg, g.row, len(blk)):
                return g.row
    raise UnsupportedBlock("block is not a verbatim diagonal block of letters")


def qdet(blk: Matrix) -> NCPoly:
    """a11 a22 - q^2 a12 a21 for a 2 x 2 block; 1 for a pinned 1 x 1 block."""
    if len(blk) == 1:
        return blk[0][0]
    if len(blk) != 2:
        raise UnsupportedBlock(f"quantum determinant of a {len(blk)} x {len(blk)} block")
    return blk[0][0] * blk[1][1] - (blk[0][1] * blk[1][0]).scale(qpow(2))


def qdet_inv(alg: QAlgebra, blk: Matrix) -> MPoly:
    if len(blk) == 1:
        return MPoly.const(1)
    return MPoly.gen(qdet_symbol(block_origin(alg, blk)), -1)


def qinverse(alg: QAlgebra, blk: Matrix) -> Matrix:
    """Two-sided inverse of a diagonal block, over the determinant symbol."""
    if len(blk) == 1:
        if blk[0][0] != NCPoly.const(alg, 1):
            raise UnsupportedBlock("size-one blocks are pinned to 1")
        return [[NCPoly.const(alg, 1)]]
    d = qdet_inv(alg, blk)
    (a11, a12), (a21, a22) = blk
    h = qpow(1) - qpow(-1)
    adj = [[a22, -a12 + a21.scale(h)], [-a21.scale(qpow(2)), a11]]
    return qmatscale(adj, d)


def qinverse_dagger(alg: QAlgebra, blk: Matrix) -> Matrix:
    """Hermitian conjugate of the inverse, in closed form."""
    if len(blk) == 1:
        return qinverse(alg, blk)
    d = qdet_inv(alg, blk)
    (a11, a12), (a21, a22) = blk
    return qmatscale([[a22, -a21.scale(qpow(-1))], [-a12.scale(qpow(1)), a11]], d)


def hermitian_block(alg: QAlgebra, shape: ButShape, I: int, J: int) -> Matrix:
    """Conjugate of block (I, J) of the generic matrix of the shape."""
    return hermitian(get_block(alg.matrix(), shape, I, J))


# vanishing modulo the determinant symbols ------------------------------------------
def _qdet_poly(alg: QAlgebra, r: int) -> NCPoly:
    cache = alg.__dict__.setdefault("_qdet_poly", {})
    if r not in cache:
        size = len(alg.shape.block_indices(alg.shape.block_of(r)))
        cache[r] = qdet(letter_block(alg, r, size))
    return cache[r]


def _qdet_power(alg, r, k) -> NCPoly:
    cache = alg.__dict__.setdefault("_qdet_pow", {})
    key = (r, k)
    if key not in cache:
        cache[key] = NCPoly.const(alg, 1) if k == 0 else _qdet_power(alg, r, k - 1) * _qdet_poly(alg, r)
    return cache[key]


def clear_denominators(p: NCPoly) -> NCPoly:
    """Multiply by the least determinant powers making every exponent
    non-negative and substitute each determinant symbol by its polynomial."""
    alg = p.alg
    syms = {g for c in p.terms.values() for g in c.gens() if _is_qdet(g)}
    if not syms:
        return p
    shift = {g: max(0, -min(c.min_degree(g) for c in p.terms.values())) for g in syms}
    out = NCPoly(alg)
    for w, c in p.terms.items():
        for g, k in shift.items():
            if k:
                c = c * MPoly.gen(g, k)
        # split c by determinant exponents
        parts = {(): c}
        for g in syms:
            nxt = {}
            for key, part in parts.items():
                for e, sub in part.collect(g).items():
                    nxt[key + ((g.row, e),)] = sub
            parts = nxt
        base = NCPoly(alg, {w: MPoly.const(1)})
        for key, sub in parts.items():
            term = base.scale(sub)
            for r, e in key:
                if e:
                    term = _qdet_power(alg, r, e) * term
            out = out + term
    return out


def vanishes(p: NCPoly) -> bool:
    """Exact zero test in the algebra localized at the block determinants.

    A zero normal form settles it.  Otherwise the polynomial is moved to the
    plain algebra (no determinant reduction) and denominators are cleared,
    so a nonzero verdict never rests on the reduction being canonical."""
    if p.is_zero():
        return True
    if p.alg.qdet_reduce:
        p = NCPoly(algebra_for(p.alg.shape), p.terms)
    return clear_denominators(p).is_zero()


def matrices_equal(X: Matrix, Y: Matrix) -> list:
    """Positions (1-based) where X - Y does not vanish."""
    return [
        (i + 1, j + 1)
        for i, (r, s) in enumerate(zip(X, Y))
        for j, (a, b) in enumerate(zip(r, s))
        if not vanishes(a - b)
    ]


# checks --------------------------------------------------------------------------------
def qdet_checks(alg: QAlgebra) -> dict:
    """Centrality (against every letter) and self-adjointness of each
    block determinant, plus both inverse identities."""
    shape = alg.shape
    out = {"central": [], "self_adjoint": [], "right_inverse": [], "left_inverse": [], "inverse_dagger": []}
    for I in range(1, shape.n + 1):
        rows = shape.block_indices(I)
        if len(rows) != 2:
            continue
        r = rows[0]
        blk = letter_block(alg, r, 2)
        d = qdet(blk)
        for g in alg.letters:
            x = alg.gen(g)
            if not (d * x - x * d).is_zero():
                out["central"].append((r, str(g)))
        if not (star(d) - d).is_zero():
            out["self_adjoint"].append(r)
        inv = qinverse(alg, blk)
        E = unit_matrix(alg, 2)
        if matrices_equal(qmatmul(blk, inv), E):
            out["right_inverse"].append(r)
        if matrices_equal(qmatmul(inv, blk), E):
            out["left_inverse"].append(r)
        if matrices_equal(hermitian(inv), qinverse_dagger(alg, blk)):
            out["inverse_dagger"].append(r)
    return out


def star_checks(alg: QAlgebra, max_len: int = 3) -> dict:
    """Involutivity on letters, reversal on words up to ``max_len`` and
    compatibility with every relation instance."""
    from itertools import product

    inv = [str(g) for g in alg.letters if star(star(alg.gen(g))) != alg.gen(g)]
    rev = []
    G = len(alg.letters)
    for L in range(2, max_len + 1):
        for w in product(range(G), repeat=L):
            lhs = star(alg.poly({w: MPoly.const(1)}))
            rhs = NCPoly.const(alg, 1)
            for x in reversed(w):
                rhs = rhs * star(alg.gen(alg.letters[x]))
            if lhs != rhs:
                rev.append(w)
    ideal = []
    N = alg.N
    for quad in product(range(1, N + 1), repeat=4):
        rel = NCPoly(alg, alg.relation(*quad))  # raw words, star expands them
        if not star(rel).is_zero():
            ideal.append(quad)
    return {"involutive_failures": inv, "reversal_failures": rev, "ideal_failures": ideal}


def diagonal_dagger_ok(alg: QAlgebra, r: int) -> bool:
    """The conjugate of a 2 x 2 diagonal block matches its closed form."""
    q = qpow(1)
    a = lambda i, j: alg.entry(r + i - 1, r + j - 1)  # noqa: E731
    want = [[a(1, 1), a(2, 1).scale(q)], [a(1, 2).scale(q) + a(2, 1).scale(1 - qpow(2)), a(2, 2)]]
    return not matrices_equal(hermitian(letter_block(alg, r, 2)), want)


def conjugation_law_defects(alg: QAlgebra, X: Matrix) -> list:
    """Entries of X whose star differs from the conjugation law of the
    shape applied to the entries of X."""
    shape = alg.shape
    N = shape.N
    bad = []
    q = qpow(1)
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            if not shape.admitted(i, j) or shape.unit_entry(i, j):
                continue
            x = X[i - 1][j - 1]
            if i == j:
                want = x
            elif i > j:
                want = x.scale(q)
            else:
                want = x.scale(q) + X[j - 1][i - 1].scale(1 - qpow(2))
            if not vanishes(star(x) - want):
                bad.append((i, j))
    return bad


def relation_defects(alg: QAlgebra, X: Matrix, quadruples) -> list:
    """Relation instances that the entries of X fail to satisfy."""
    N = alg.N
    h = qpow(1) - qpow(-1)
    e = lambda i, j: X[i - 1][j - 1] if 1 <= i <= N and 1 <= j <= N else NCPoly(alg)  # noqa: E731
    d = lambda a, b: int(a == b)  # noqa: E731
    gt = lambda a, b: int(a > b)  # noqa: E731
    bad = []
    for i, s, j, t in quadruples:
        lhs = (e(i, s) * e(j, t)).scale(qpow(d(s, j) + d(i, j))) - (e(j, t) * e(i, s)).scale(qpow(d(s, t) + d(i, t)))
        k1 = gt(t, s) - gt(i, j)
        rhs = NCPoly(alg)
        if k1:
            rhs = rhs + (e(j, s) * e(i, t)).scale(h * qpow(d(s, i)) * k1)
        if gt(t, i):
            rhs = rhs + (e(j, i) * e(t, s)).scale(h * qpow(d(s, t)))
        if gt(s, j):
            rhs = rhs - (e(i, j) * e(s, t)).scale(h * qpow(d(i, j)))
        if gt(s, i) and k1:
            rhs = rhs + (e(j, i) * e(s, t)).scale(h * h * k1)
        if not vanishes(lhs - rhs):
            bad.append((i, s, j, t))
    return bad
