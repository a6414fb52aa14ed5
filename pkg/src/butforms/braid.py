"""Braid-group action on block-upper-triangular forms.

Matrices are lists of rows whose entries are MPoly or RatFunc.  Composition
follows operator order: ``apply_word(A, [b1, b2])`` computes b1[b2[A]], so
the rightmost generator acts first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .affine import SeriesMatrix, klevel_reduce
from .brackets import BracketRule, bracket
from .central import reflection_map, scaling_map, scaling_parameters
from .kernel.linalg import adjugate, det_laplace, identity, inverse, matmul, transpose, zeros
from .kernel.mpoly import MPoly
from .kernel.ratfunc import RatFunc, simplify
from .shapes import ButShape


class BraidError(ValueError):
    pass


class SingularBlock(BraidError):
    pass


@dataclass(frozen=True)
class BraidGenerator:
    """beta_{I,I+1} for 1 <= I < n, or the affine beta_{n,1} (``affine=True``)."""

    n: int
    index: int = 1
    affine: bool = False
    inverse: bool = False

    def __post_init__(self):
        if self.n < 2:
            raise BraidError("braid generators need n >= 2")
        if not self.affine and not 1 <= self.index < self.n:
            raise BraidError(f"generator index {self.index} outside 1..{self.n - 1}")

    def label(self) -> str:
        base = "bn1" if self.affine else f"b{self.index}"
        return base + ("^-1" if self.inverse else "")

    def inv(self) -> "BraidGenerator":
        return BraidGenerator(self.n, self.index, self.affine, not self.inverse)


_TOKEN = re.compile(r"^b(n1|\d+)(\^-1)?$")


def parse_word(text: str, n: int) -> list[BraidGenerator]:
    """``"b1 b2 b1"``, ``"bn1"``, ``"b2^-1"``; written in operator order."""
    out = []
    for tok in text.split():
        mt = _TOKEN.match(tok)
        if not mt:
            raise BraidError(f"bad braid token {tok!r}")
        inv = mt.group(2) is not None
        if mt.group(1) == "n1":
            out.append(BraidGenerator(n, n, True, inv))
        else:
            out.append(BraidGenerator(n, int(mt.group(1)), False, inv))
    return out


def _require_uniform(shape: ButShape) -> None:
    if shape.kind != "uniform":
        raise BraidError(f"the braid action needs equal block sizes, got {shape}")
    if shape.n < 2:
        raise BraidError("the braid action needs at least two blocks")


def _clean(x):
    if isinstance(x, RatFunc):
        return simplify(x)
    return x


def _cmat(A):
    return [[_clean(x) for x in row] for row in A]


def block_inverse(blk):
    """Inverse of a square block: adjugate over the determinant, exact."""
    d = det_laplace(blk)
    if not d:
        raise SingularBlock("diagonal block is singular")
    adj = adjugate(blk)
    if isinstance(d, (int, Fraction)):
        return [[Fraction(x) / d for x in row] for row in adj]
    if RatFunc.lift(d) == 1:
        return _cmat(adj)
    inv_d = RatFunc.lift(d).inverse()
    return [[_clean(RatFunc.lift(x) * inv_d) for x in row] for row in adj]


def _get_block(A, shape: ButShape, I: int, J: int):
    return shape.block(A, I, J)


def _put_block(M, shape: ButShape, I: int, J: int, blk) -> None:
    for a, r in enumerate(shape.block_indices(I)):
        for b, c in enumerate(shape.block_indices(J)):
            M[r - 1][c - 1] = blk[a][b]


def _eye(m):
    return identity(m)


def _neg(blk):
    return [[-x for x in row] for row in blk]


def braid_matrix(A, shape: ButShape, I: int):
    """B_{I,I+1}: blocks A_{I,I+1}^T A_II^{-T}, -E, A_II A_II^{-T}, O at
    (I,I), (I,I+1), (I+1,I), (I+1,I+1); identity elsewhere."""
    _require_uniform(shape)
    if not 1 <= I < shape.n:
        raise BraidError(f"generator index {I} outside 1..{shape.n - 1}")
    m = shape.m
    Aii = _get_block(A, shape, I, I)
    Aij = _get_block(A, shape, I, I + 1)
    inv_t = transpose(block_inverse(Aii))
    B = identity(shape.N)
    _put_block(B, shape, I, I, _cmat(matmul(transpose(Aij), inv_t)))
    _put_block(B, shape, I, I + 1, _neg(_eye(m)))
    _put_block(B, shape, I + 1, I, _cmat(matmul(Aii, inv_t)))
    _put_block(B, shape, I + 1, I + 1, zeros(m))
    return B


def conjugate(B, A):
    """B A B^T."""
    return _cmat(matmul(matmul(B, A), transpose(B)))


def braid_act(A, shape: ButShape, I: int, inverse_: bool = False):
    """beta_{I,I+1}[A] = B A B^T, or its inverse."""
    if inverse_:
        return braid_inverse_act(A, shape, I)
    return conjugate(braid_matrix(A, shape, I), A)


def braid_inverse_act(At, shape: ButShape, I: int):
    """Preimage of At under beta_{I,I+1}.  The matrix B of the preimage only
    needs A_II = At_{I+1,I+1} and A_{I,I+1} = At_{I,I+1}^T; B is then inverted
    exactly."""
    _require_uniform(shape)
    pre = [list(row) for row in At]
    _put_block(pre, shape, I, I, _get_block(At, shape, I + 1, I + 1))
    _put_block(pre, shape, I, I + 1, transpose(_get_block(At, shape, I, I + 1)))
    B = braid_matrix(pre, shape, I)
    Binv = _cmat(inverse(B))
    return conjugate(Binv, At)


def closed_form_act(A, shape: ButShape, I: int):
    """Blockwise update: diagonal blocks swap, A_{I,I+1} -> A_{I,I+1}^T, and
    the blocks in rows/columns I, I+1 mix as in the conjugation."""
    _require_uniform(shape)
    n = shape.n
    blk = lambda J, L: _get_block(A, shape, J, L)  # noqa: E731
    Aii = blk(I, I)
    inv = block_inverse(Aii)
    inv_t = transpose(inv)
    out = [list(row) for row in A]
    _put_block(out, shape, I, I, blk(I + 1, I + 1))
    _put_block(out, shape, I + 1, I + 1, Aii)
    _put_block(out, shape, I, I + 1, transpose(blk(I, I + 1)))
    for J in range(1, I):
        left = matmul(blk(J, I), inv)
        new_ji = [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(matmul(left, blk(I, I + 1)), blk(J, I + 1))]
        _put_block(out, shape, J, I, new_ji)
        _put_block(out, shape, J, I + 1, matmul(left, transpose(Aii)))
    for J in range(I + 2, n + 1):
        top = matmul(matmul(transpose(blk(I, I + 1)), inv_t), blk(I, J))
        new_ij = [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(top, blk(I + 1, J))]
        _put_block(out, shape, I, J, new_ij)
        _put_block(out, shape, I + 1, J, matmul(matmul(Aii, inv_t), blk(I, J)))
    return _cmat(out)


def apply_word(A, shape: ButShape, word):
    """Apply generators in operator order (rightmost first)."""
    for g in reversed(list(word)):
        if g.affine:
            raise BraidError("the affine generator acts on series, use affine_apply_word")
        A = braid_act(A, shape, g.index, g.inverse)
    return A


def first_difference(X, Y):
    """First (row, col) where two matrices differ, as 1-based indices, or None."""
    for i, (rx, ry) in enumerate(zip(X, Y)):
        for j, (x, y) in enumerate(zip(rx, ry)):
            if RatFunc.lift(x) != RatFunc.lift(y):
                return (i + 1, j + 1)
    return None


def _report(name, shape, checked, witness):
    return {
        "check": name,
        "shape": shape.label(),
        "status": "pass" if witness is None else "fail",
        "checked": checked,
        "witness": witness,
    }


def verify_braid_relation(n: int, m: int) -> dict:
    """b_I b_{I+1} b_I = b_{I+1} b_I b_{I+1} on the generic constrained matrix."""
    if n < 3:
        raise BraidError("braid relations need n >= 3")
    shape = ButShape.uniform(n, m)
    A = shape.chart_matrix()
    checked = 0
    for I in range(1, n - 1):
        g, h = BraidGenerator(n, I), BraidGenerator(n, I + 1)
        lhs = apply_word(A, shape, [g, h, g])
        rhs = apply_word(A, shape, [h, g, h])
        checked += 1
        diff = first_difference(lhs, rhs)
        if diff:
            return _report("braid-relation", shape, checked, {"I": I, "entry": list(diff)})
    return _report("braid-relation", shape, checked, None)


def verify_closed_form(n: int, m: int) -> dict:
    """Conjugation and the blockwise closed form agree entrywise."""
    shape = ButShape.uniform(n, m)
    A = shape.chart_matrix()
    for I in range(1, n):
        diff = first_difference(braid_act(A, shape, I), closed_form_act(A, shape, I))
        if diff:
            return _report("closed-form", shape, I, {"I": I, "entry": list(diff)})
    return _report("closed-form", shape, n - 1, None)


def pushforward_violations(shape: ButShape, image: dict, pairs=None) -> list:
    """Generator pairs (x, y) with {image x, image y} != image {x, y} on the
    constrained variety.  ``image`` maps every free generator to its image."""
    rule = BracketRule.of(shape)
    gens = shape.free_gens
    bad = []
    for x, y in pairs or ((x, y) for i, x in enumerate(gens) for y in gens[i + 1:]):
        lhs = shape.on_variety(RatFunc.lift(bracket(rule, image[x], image[y])))
        rhs = shape.on_variety(RatFunc.lift(rule.gen_bracket(x, y)).subs(image))
        if lhs != rhs:
            bad.append((x, y))
    return bad


def image_map(shape: ButShape, At) -> dict:
    return {g: At[g.row - 1][g.col - 1] for g in shape.free_gens}


def verify_braid_automorphism(n: int, m: int) -> dict:
    """{b(x), b(y)} = b({x, y}) for all generator pairs and every generator."""
    shape = ButShape.uniform(n, m)
    _require_uniform(shape)
    A = shape.chart_matrix()
    checked = 0
    for I in range(1, n):
        At = braid_act(A, shape, I)
        bad = pushforward_violations(shape, image_map(shape, At))
        checked += 1
        if bad:
            x, y = bad[0]
            return _report("braid-automorphism", shape, checked, {"I": I, "pair": [str(x), str(y)]})
    return _report("braid-automorphism", shape, checked, None)


def total_braid_closed_form(A, shape: ButShape):
    """(A_II A_II^{-T})^{n-2} A_IJ (A_JJ^{-1} A_JJ^T)^{n-2} blockwise."""
    n = shape.n
    out = [list(row) for row in A]
    left, right = {}, {}
    for I in range(1, n + 1):
        Aii = _get_block(A, shape, I, I)
        inv = block_inverse(Aii)
        L = _cmat(matmul(Aii, transpose(inv)))
        R = _cmat(matmul(inv, transpose(Aii)))
        Lp, Rp = identity(shape.m), identity(shape.m)
        for _ in range(n - 2):
            Lp, Rp = _cmat(matmul(Lp, L)), _cmat(matmul(Rp, R))
        left[I], right[I] = Lp, Rp
    for I in range(1, n + 1):
        for J in range(I, n + 1):
            _put_block(out, shape, I, J, _cmat(matmul(matmul(left[I], _get_block(A, shape, I, J)), right[J])))
    return out


def total_braid_check(n: int, m: int) -> dict:
    """(b_{n-1} ... b_2 b_1)^n [A] against the closed form."""
    shape = ButShape.uniform(n, m)
    A = shape.chart_matrix()
    cycle = [BraidGenerator(n, I) for I in range(n - 1, 0, -1)]
    At = apply_word(A, shape, cycle * n)
    diff = first_difference(At, total_braid_closed_form(A, shape))
    return _report("total-braid", shape, 1, None if diff is None else {"entry": list(diff)})


# affine extension ------------------------------------------------------------


@dataclass
class AffineResult:
    series: SeriesMatrix
    lost: tuple  # levels outside 0..K that carried nonzero coefficients


def _levels(G: SeriesMatrix) -> dict:
    return {t: [list(r) for r in G.levels[t]] for t in range(G.K + 1)}


def _affine_bn1_factors(lv: dict, shape: ButShape):
    """B_{n,1}(lam) as {power of lam^-1: matrix}."""
    n, m, N = shape.n, shape.m, shape.N
    if 1 not in lv:
        raise BraidError("the affine generator needs level 1")
    Ann = _get_block(lv[0], shape, n, n)
    inv_t = transpose(block_inverse(Ann))
    G1 = _get_block(lv[1], shape, n, 1)
    B = {-1: zeros(N), 0: zeros(N), 1: zeros(N)}
    for I in range(2, n):
        _put_block(B[0], shape, I, I, _eye(m))
    _put_block(B[-1], shape, 1, n, _cmat(matmul(Ann, inv_t)))
    _put_block(B[1], shape, n, 1, _neg(_eye(m)))
    _put_block(B[0], shape, n, n, _cmat(matmul(transpose(G1), inv_t)))
    return B


def affine_braid_act(G: SeriesMatrix, gen: BraidGenerator, shape: ButShape) -> AffineResult:
    """Adjacent generators conjugate every level by the same constant B built
    from level 0.  The affine generator acts as B(lam) G(lam) B(1/lam)^T; the
    output coefficients outside levels 0..K are dropped and reported."""
    _require_uniform(shape)
    lv = _levels(G)
    if not gen.affine:
        A = lv[0]
        if gen.inverse:
            pre = [list(row) for row in A]
            I = gen.index
            _put_block(pre, shape, I, I, _get_block(A, shape, I + 1, I + 1))
            _put_block(pre, shape, I, I + 1, transpose(_get_block(A, shape, I, I + 1)))
            B = _cmat(inverse(braid_matrix(pre, shape, I)))
        else:
            B = braid_matrix(A, shape, gen.index)
        out = tuple(tuple(tuple(r) for r in conjugate(B, lv[t])) for t in range(G.K + 1))
        return AffineResult(SeriesMatrix(G.N, G.K, out), ())
    if gen.inverse:
        raise BraidError("the inverse of the affine generator is not implemented")
    B = _affine_bn1_factors(lv, shape)
    acc: dict[int, list] = {}
    for a, Ba in B.items():
        for s, Gs in lv.items():
            left = matmul(Ba, Gs)
            for b, Bb in B.items():
                # B(1/lam)^T contributes lam^-b through the coefficient of lam^{+b}
                term = matmul(left, transpose(B[-b]))
                t = a + s + b
                acc[t] = term if t not in acc else [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(acc[t], term)]
    lost = tuple(sorted(t for t, M in acc.items() if not 0 <= t <= G.K and any(x for row in M for x in row)))
    out = tuple(tuple(tuple(_clean(x) for x in r) for r in acc.get(t, zeros(G.N))) for t in range(G.K + 1))
    return AffineResult(SeriesMatrix(G.N, G.K, out), lost)


def affine_apply_word(G: SeriesMatrix, shape: ButShape, word) -> AffineResult:
    lost: set = set()
    for g in reversed(list(word)):
        res = affine_braid_act(G, g, shape)
        G = res.series
        lost |= set(res.lost)
    return AffineResult(G, tuple(sorted(lost)))


def verify_affine_braid_relation(n: int, m: int, K: int) -> dict:
    """Braid relations among b_1..b_{n-1} and b_{n,1}, cyclically mod n, on
    the K-level reduction.  Only levels represented exactly on both sides
    are compared; a truncation loss is reported with the result."""
    shape = ButShape.uniform(n, m)
    G = klevel_reduce(shape, K)
    gens = [BraidGenerator(n, I) for I in range(1, n)] + [BraidGenerator(n, n, affine=True)]
    checked, lost_any = 0, set()
    for a in range(n):
        g, h = gens[a], gens[(a + 1) % n]
        lhs = affine_apply_word(G, shape, [g, h, g])
        rhs = affine_apply_word(G, shape, [h, g, h])
        lost_any |= set(lhs.lost) | set(rhs.lost)
        exact = K + 1 if not (lhs.lost or rhs.lost) else 0
        for t in range(exact):
            diff = first_difference(lhs.series.levels[t], rhs.series.levels[t])
            checked += 1
            if diff:
                rep = _report("affine-braid-relation", shape, checked,
                              {"pair": [g.label(), h.label()], "level": t, "entry": list(diff)})
                rep["K"], rep["lost_levels"] = K, sorted(lost_any)
                return rep
    rep = _report("affine-braid-relation", shape, checked, None)
    rep["K"], rep["lost_levels"] = K, sorted(lost_any)
    if lost_any and checked == 0:
        rep["status"] = "inconclusive"
    return rep


# discrete maps ----------------------------------------------------------------


class InadmissibleScaling(ValueError):
    pass


def check_phi(shape: ButShape, phi) -> None:
    N = shape.N
    if len(phi) != N:
        raise InadmissibleScaling(f"phi needs {N} entries")
    for i in range(N):
        if phi[i] != phi[N - 1 - i]:
            raise InadmissibleScaling("phi must satisfy phi_i = phi_{N+1-i}")
    for I in range(1, shape.n + 1):
        if sum(phi[i - 1] for i in shape.block_indices(I)):
            raise InadmissibleScaling(f"phi does not sum to zero over block {I}")


def discrete_maps(shape: ButShape, phi=None) -> dict:
    """The reflection a[i,j] -> a[N+1-j, N+1-i] and the scaling map.  With
    ``phi`` given (integer vector), the scaling uses one formal symbol e with
    e^{phi_i}; otherwise it runs over the full admissible lattice."""
    if phi is not None:
        check_phi(shape, phi)
        basis = [list(phi)]
    else:
        basis = scaling_parameters(shape)
    S, _ = scaling_map(shape, basis)
    return {"reflection": reflection_map(shape), "scaling": S}


def reflection_involutive(shape: ButShape) -> bool:
    P = reflection_map(shape)
    return all(P[g].subs(P) == MPoly.gen(g) for g in shape.free_gens)

