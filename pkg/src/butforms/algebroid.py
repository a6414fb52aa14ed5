"""The Lie algebroid of infinitesimal morphisms and the groupoid of block
upper triangular bilinear forms.

Matrices are lists of rows.  Symbolic checks run over MPoly/RatFunc entries;
groupoid arrows live over exact rationals.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .brackets import full_bracket, sgn, shape_point
from .central import poly_central_coeffs
from .kernel.gens import aux
from .kernel.linalg import det, identity, inverse, matmul, trace, transpose, zeros
from .kernel.mpoly import MPoly
from .kernel.ratfunc import RatFunc, simplify
from .kernel.sampling import rand_small, task_rng
from .shapes import ButShape

# {a[i,j], a[k,l]} = BIVECTOR_SCALE * Pi(E_ji, E_lk); fixed by direct comparison
BIVECTOR_SCALE = -2

HALF = Fraction(1, 2)


class AlgebroidError(ValueError):
    pass


class SingularMorphism(AlgebroidError):
    pass


class BaseMismatch(AlgebroidError):
    pass


class DegenerateBase(AlgebroidError):
    pass


def _add(X, Y):
    return [[x + y for x, y in zip(r, s)] for r, s in zip(X, Y)]


def _sub(X, Y):
    return [[x - y for x, y in zip(r, s)] for r, s in zip(X, Y)]


def _clean(X):
    return [[simplify(x) if isinstance(x, RatFunc) else x for x in row] for row in X]


def unit_matrix(N: int, i: int, j: int):
    M = zeros(N)
    M[i - 1][j - 1] = 1
    return M


def project_half(X, sign: int):
    """Entrywise (1 + sign * sgn(j - i)) / 2 * x[i,j]; sign is +1 or -1."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    n = len(X)
    out = zeros(n)
    for i in range(n):
        for j in range(n):
            f = Fraction(1 + sign * sgn(j - i), 2)
            if f and X[i][j]:
                out[i][j] = X[i][j] * f if f != 1 else X[i][j]
    return out


@dataclass(frozen=True)
class AlgebroidElement:
    g: tuple
    witness: tuple  # covector w with g = P_A(w)


def p_map(A, w):
    """P_-(w A) - P_+(w^T A^T)."""
    return _clean(_sub(project_half(matmul(w, A), -1), project_half(matmul(transpose(w), transpose(A)), 1)))


def p_element(A, w) -> AlgebroidElement:
    g = p_map(A, w)
    return AlgebroidElement(tuple(map(tuple, g)), tuple(map(tuple, w)))


def anchor(A, g):
    """A g + g^T A."""
    return _clean(_add(matmul(A, g), matmul(transpose(g), A)))


def bivector_form(A, w1, w2):
    """Tr(w1 D_A P_A(w2))."""
    return trace(matmul(w1, anchor(A, p_map(A, w2))))


def recovered_bracket(A, i: int, j: int, k: int, l: int):
    N = len(A)
    v = bivector_form(A, unit_matrix(N, j, i), unit_matrix(N, l, k))
    return v * BIVECTOR_SCALE


# symbolic covectors ------------------------------------------------------------------


def block_lower_mask(shape: ButShape, i: int, j: int) -> bool:
    """Non-strict block-lower support; every entry for unblocked shapes."""
    if not shape.is_block:
        return True
    return shape.block_of(i) >= shape.block_of(j)


def symbolic_covector(shape: ButShape, name: str, support: str = "block-lower"):
    """Matrix of formal symbols name[i,j]; ``support`` is ``block-lower`` or
    ``full``."""
    N = shape.N
    W = zeros(N)
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            if support == "full" or block_lower_mask(shape, i, j):
                W[i - 1][j - 1] = MPoly.gen(aux(name, i, j))
    return W


def conformant_covector(shape: ButShape, name: str, A=None):
    """Block-lower symbolic covector with tr(A_II^{-1} w_II) = 0 imposed by
    solving for the last diagonal entry of each block."""
    from .braid import block_inverse

    A = A if A is not None else shape.chart_matrix()
    W = symbolic_covector(shape, name)
    for I in range(1, shape.n + 1):
        idx = shape.block_indices(I)
        inv = block_inverse(shape.block(A, I, I))
        last = idx[-1]
        coef = inv[len(idx) - 1][len(idx) - 1]
        rest = MPoly()
        for a, r in enumerate(idx):
            for b, c in enumerate(idx):
                if (r, c) != (last, last):
                    rest = rest + inv[b][a] * W[r - 1][c - 1]
        W[last - 1][last - 1] = simplify(-RatFunc.lift(rest) / coef)
    return W


def covector_trace_defects(shape: ButShape, A, w) -> list[int]:
    from .braid import block_inverse

    bad = []
    for I in range(1, shape.n + 1):
        t = trace(matmul(block_inverse(shape.block(A, I, I)), shape.block(w, I, I)))
        if _nonzero(shape, t):
            bad.append(I)
    return bad


def _nonzero(shape: ButShape, x) -> bool:
    if isinstance(x, (int, Fraction)):
        return x != 0
    return bool(shape.on_variety(x))


# checks -----------------------------------------------------------------------------


def _report(name, shape, checked, witness, **extra):
    rep = {"check": name, "shape": shape.label(), "status": "pass" if witness is None else "fail",
           "checked": checked, "witness": witness}
    rep.update(extra)
    return rep


def skew_symmetry_check(shape: ButShape) -> dict:
    """bivector_form(A, w, w) vanishes for a fully symbolic w."""
    A = shape.matrix()
    w = symbolic_covector(shape, "w", "full")
    v = shape.reduce(bivector_form(A, w, w))
    return _report("bivector-skew", shape, 1, None if not v else {"residue": str(v)})


def bracket_recovery_check(shape: ButShape) -> dict:
    """Elementary covector pairs reproduce the masked bracket."""
    A = shape.matrix()
    gens = shape.free_gens
    checked = 0
    for x in gens:
        for y in gens:
            got = shape.reduce(recovered_bracket(A, x.row, x.col, y.row, y.col))
            want = shape.reduce(full_bracket(x.row, x.col, y.row, y.col))
            checked += 1
            if got != want:
                return _report("bracket-recovery", shape, checked, {"pair": [str(x), str(y)]})
    return _report("bracket-recovery", shape, checked, None)


def omega_formula(shape: ButShape, A, w1, w2):
    """The covector whose P-image is the bracket of the sections P_A(w1),
    P_A(w2), masked to non-strict block-lower support."""
    T = transpose
    Pp = lambda X: project_half(X, 1)  # noqa: E731
    Pm = lambda X: project_half(X, -1)  # noqa: E731
    plus = [
        matmul(Pp(matmul(T(w2), T(A))), w1),
        matmul(Pp(matmul(w2, A)), w1),
        matmul(w2, Pp(matmul(T(A), T(w1)))),
        matmul(w1, Pm(matmul(A, w2))),
    ]
    minus = [
        matmul(Pp(matmul(T(w1), T(A))), w2),
        matmul(Pp(matmul(w1, A)), w2),
        matmul(w1, Pp(matmul(T(A), T(w2)))),
        matmul(w2, Pm(matmul(A, w1))),
    ]
    acc = zeros(shape.N)
    for X in plus:
        acc = _add(acc, X)
    for X in minus:
        acc = _sub(acc, X)
    N = shape.N
    return _clean([[acc[i][j] if block_lower_mask(shape, i + 1, j + 1) else 0 for j in range(N)] for i in range(N)])


def section_lie_bracket(shape: ButShape, A, w1, w2):
    """[g1, g2] + sum_ij dg2/da_ij D(g1)_ij - dg1/da_ij D(g2)_ij for the
    sections g_k = P_A(w_k) with constant w_k."""
    g1, g2 = p_map(A, w1), p_map(A, w2)
    d1, d2 = anchor(A, g1), anchor(A, g2)
    out = _sub(matmul(g1, g2), matmul(g2, g1))
    N = shape.N
    for g_ in shape.free_gens:
        i, j = g_.row - 1, g_.col - 1
        if not d1[i][j] and not d2[i][j]:
            continue
        for a in range(N):
            for b in range(N):
                t2 = g2[a][b].diff(g_) if hasattr(g2[a][b], "diff") else 0
                t1 = g1[a][b].diff(g_) if hasattr(g1[a][b], "diff") else 0
                if t2 or t1:
                    out[a][b] = out[a][b] + t2 * d1[i][j] - t1 * d2[i][j]
    return _clean(out)


def section_bracket(shape: ButShape, A, w1, w2):
    """(omega, check): check is True when P_A(omega) equals the section bracket."""
    om = omega_formula(shape, A, w1, w2)
    lhs = p_map(A, om)
    rhs = section_lie_bracket(shape, A, w1, w2)
    ok = all(not _nonzero(shape, x - y) for rl, rr in zip(lhs, rhs) for x, y in zip(rl, rr))
    return om, ok


def section_closure_check(shape: ButShape) -> dict:
    A = shape.matrix()
    w1 = symbolic_covector(shape, "w")
    w2 = symbolic_covector(shape, "v")
    _, ok = section_bracket(shape, A, w1, w2)
    return _report("section-closure", shape, 1, None if ok else {"covectors": "generic block-lower"})


def tangency_defects(shape: ButShape, dA) -> list:
    """Ways in which dA fails to be a tangent vector: entries outside the
    shape, and diagonal blocks with tr(A_II^{-1} dA_II) != 0."""
    from .braid import block_inverse

    bad = []
    N = shape.N
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            if (not shape.admitted(i, j) or shape.unit_entry(i, j)) and _nonzero(shape, dA[i - 1][j - 1]):
                bad.append(f"entry ({i},{j})")
    A = shape.chart_matrix()
    for I in shape.det_blocks:
        t = trace(matmul(block_inverse(shape.block(A, I, I)), shape.block(dA, I, I)))
        if _nonzero(shape, t):
            bad.append(f"trace block {I}")
    return bad


def tangency_check(shape: ButShape, constrained: bool = True) -> dict:
    """The anchor image of a symbolic covector is tangent to the shape."""
    A = shape.chart_matrix()
    w = conformant_covector(shape, "w", A) if constrained else symbolic_covector(shape, "w")
    bad = tangency_defects(shape, anchor(A, p_map(A, w)))
    return _report("anchor-tangency", shape, 1, None if not bad else {"defects": bad})


def kernel_witness(shape: ButShape, seed: int = 0, constrained: bool = False):
    """A nonzero block-lower covector with P_A(w) = 0 at a random base point,
    or None when the P-map is injective there.  With ``constrained`` the
    trace conditions on the diagonal blocks are imposed as well."""
    from .braid import block_inverse
    from .kernel.linalg import nullspace

    rng = task_rng(seed, "kernel-witness", shape.label())
    point = shape_point(shape, rng, rand_small)
    A = base_matrix(shape, point)
    N = shape.N
    slots = [(i, j) for i in range(1, N + 1) for j in range(1, N + 1) if block_lower_mask(shape, i, j)]
    cols = [sum(p_map(A, unit_matrix(N, i, j)), []) for (i, j) in slots]
    rows = [list(r) for r in zip(*cols)]
    if constrained:
        for I in range(1, shape.n + 1):
            inv = block_inverse(shape.block(A, I, I))
            idx = shape.block_indices(I)
            rows.append([inv[idx.index(j)][idx.index(i)] if i in idx and j in idx else 0 for (i, j) in slots])
    basis = nullspace(rows)
    if not basis:
        return None
    w = zeros(N)
    for (i, j), v in zip(slots, basis[0]):
        w[i - 1][j - 1] = v
    return {"base": A, "w": w, "dimension": len(basis)}


# groupoid -------------------------------------------------------------------------


def base_matrix(shape: ButShape, point: dict):
    N = shape.N
    out = []
    for i in range(1, N + 1):
        row = []
        for j in range(1, N + 1):
            e = shape.entry(i, j)
            row.append(e.eval_at(point))
        out.append(row)
    return out


def _frac_matrix(X):
    return tuple(tuple(Fraction(x) if not isinstance(x, Fraction) else x for x in row) for row in X)


@dataclass(frozen=True)
class GroupoidArrow:
    base: tuple
    B: tuple

    @classmethod
    def make(cls, base, B) -> "GroupoidArrow":
        return cls(_frac_matrix(base), _frac_matrix(B))

    @property
    def target(self) -> tuple:
        return _frac_matrix(matmul(matmul(self.B, self.base), transpose(self.B)))

    def to_json(self) -> dict:
        return {"base": [[str(x) for x in r] for r in self.base], "B": [[str(x) for x in r] for r in self.B]}

    @classmethod
    def from_json(cls, d) -> "GroupoidArrow":
        return cls.make([[Fraction(x) for x in r] for r in d["base"]], [[Fraction(x) for x in r] for r in d["B"]])


def _block_minor(A, shape: ButShape, I: int, d: int) -> Fraction:
    if d == 0:
        return Fraction(1)
    idx = shape.block_indices(I)
    m = len(idx)
    return det([[A[r - 1][c - 1] for c in idx[:d]] for r in idx[m - d:]])


def rational_central_values(A, shape: ButShape) -> dict:
    """{d: multiset of b_d over the blocks} at a numeric matrix.  Raises
    DegenerateBase when a denominator minor vanishes."""
    out: dict[int, Counter] = {}
    for I in range(1, shape.n + 1):
        m = len(shape.block_indices(I))
        for d in range(0, (m - 1) // 2 + 1):
            den = _block_minor(A, shape, I, d)
            if den == 0:
                raise DegenerateBase(f"corner minor M_{d} of block {I} vanishes")
            out.setdefault(d, Counter())[_block_minor(A, shape, I, m - d) / den] += 1
    return out


def shape_defect(shape: ButShape, A) -> str | None:
    N = shape.N
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            x = A[i - 1][j - 1]
            if not shape.admitted(i, j) and x != 0:
                return f"entry ({i},{j}) should vanish"
            if shape.unit_entry(i, j) and x != 1:
                return f"entry ({i},{i}) should be 1"
    for I in shape.det_blocks:
        d = det(shape.block(A, I, I))
        if d != 1:
            return f"det of diagonal block {I} is {d}"
    return None


def groupoid_membership(shape: ButShape, A, B) -> tuple[bool, dict]:
    """(member, witness).  The witness names the first violated condition and
    carries the informational flag ``c_preserved``."""
    if det(B) == 0:
        raise SingularMorphism("morphism matrix is singular")
    base_defect = shape_defect(shape, A)
    if base_defect:
        raise AlgebroidError(f"base is not in the shape: {base_defect}")
    tgt = matmul(matmul(B, A), transpose(B))
    c_pres = poly_central_coeffs(tgt) == poly_central_coeffs(A)
    defect = shape_defect(shape, tgt)
    if defect:
        return False, {"violation": defect, "c_preserved": c_pres}
    before = rational_central_values(A, shape)
    after = rational_central_values(tgt, shape)
    for d in sorted(before):
        if before[d] != after.get(d):
            return False, {"violation": f"b_{d} values changed", "c_preserved": c_pres}
    return True, {"violation": None, "c_preserved": c_pres}


def groupoid_identity(A) -> GroupoidArrow:
    return GroupoidArrow.make(A, identity(len(A)))


def groupoid_compose(arrow2: GroupoidArrow, arrow1: GroupoidArrow) -> GroupoidArrow:
    """(A, B2 B1) when arrow2 starts where arrow1 ends."""
    if arrow2.base != arrow1.target:
        raise BaseMismatch("second arrow does not start at the target of the first")
    return GroupoidArrow.make(arrow1.base, matmul(arrow2.B, arrow1.B))


def groupoid_inverse(arrow: GroupoidArrow) -> GroupoidArrow:
    if det(arrow.B) == 0:
        raise SingularMorphism("morphism matrix is singular")
    return GroupoidArrow.make(arrow.target, inverse(arrow.B))


def braid_arrow(shape: ButShape, A, I: int, inverse_: bool = False) -> GroupoidArrow:
    """The arrow of beta_{I,I+1} (or its inverse) at a numeric base."""
    from .braid import braid_matrix, braid_inverse_act

    if not inverse_:
        return GroupoidArrow.make(A, braid_matrix(A, shape, I))
    pre = braid_inverse_act(A, shape, I)
    fwd = GroupoidArrow.make(pre, braid_matrix(pre, shape, I))
    return groupoid_inverse(fwd)


def sign_arrow(shape: ButShape, A, signs) -> GroupoidArrow:
    """Blockwise +-1 rescaling, which keeps every diagonal block."""
    N = shape.N
    B = zeros(N)
    for I, s in enumerate(signs, start=1):
        for i in shape.block_indices(I):
            B[i - 1][i - 1] = s
    return GroupoidArrow.make(A, B)


def random_arrow(shape: ButShape, rng, base=None) -> GroupoidArrow:
    """A member arrow built as a product of random braid generators, their
    inverses and block sign flips, starting at ``base`` or a random point."""
    if base is None:
        base = base_matrix(shape, shape_point(shape, rng, rand_small))
    arrow = groupoid_identity(base)
    for _ in range(rng.randint(1, 4)):
        cur = arrow.target
        if shape.kind == "uniform" and shape.n >= 2 and rng.random() < 0.75:
            step = braid_arrow(shape, cur, rng.randint(1, shape.n - 1), rng.random() < 0.3)
        else:
            step = sign_arrow(shape, cur, [rng.choice((1, -1)) for _ in range(shape.n)])
        arrow = groupoid_compose(step, arrow)
    return arrow


def groupoid_axioms(shape: ButShape, count: int = 20, seed: int = 0) -> dict:
    """Membership, identity, inverse and associativity on seeded arrows."""
    rng = task_rng(seed, "groupoid", shape.label())
    checked = 0
    for k in range(count):
        f = random_arrow(shape, rng)
        g = random_arrow(shape, rng, base=f.target)
        h = random_arrow(shape, rng, base=g.target)
        for name, arrow in (("f", f), ("g", g), ("h", h)):
            ok, wit = groupoid_membership(shape, arrow.base, arrow.B)
            if not ok:
                return _report("groupoid-axioms", shape, checked, {"arrow": k, "which": name, **wit})
        inv = groupoid_inverse(f)
        tests = {
            "membership(inverse)": groupoid_membership(shape, inv.base, inv.B)[0],
            "membership(compose)": groupoid_membership(shape, f.base, groupoid_compose(g, f).B)[0],
            "left identity": groupoid_compose(groupoid_identity(f.target), f) == f,
            "right identity": groupoid_compose(f, groupoid_identity(f.base)) == f,
            "inverse left": groupoid_compose(inv, f) == groupoid_identity(f.base),
            "inverse right": groupoid_compose(f, inv) == groupoid_identity(f.target),
            "associativity": groupoid_compose(h, groupoid_compose(g, f)) == groupoid_compose(groupoid_compose(h, g), f),
        }
        checked += 1
        for name, ok in tests.items():
            if not ok:
                return _report("groupoid-axioms", shape, checked, {"arrow": k, "law": name})
    return _report("groupoid-axioms", shape, checked, None)


def braid_generators_membership(shape: ButShape, seed: int = 0, points: int = 3) -> dict:
    """Every braid generator and its inverse is a member arrow at generic points."""
    rng = task_rng(seed, "braid-membership", shape.label())
    checked = 0
    for _ in range(points):
        A = base_matrix(shape, shape_point(shape, rng, rand_small))
        for I in range(1, shape.n):
            for inv in (False, True):
                arrow = braid_arrow(shape, A, I, inv)
                ok, wit = groupoid_membership(shape, arrow.base, arrow.B)
                checked += 1
                if not ok:
                    return _report("braid-membership", shape, checked, {"I": I, "inverse": inv, **wit})
    return _report("braid-membership", shape, checked, None)
