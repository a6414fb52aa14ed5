"""Central elements: determinant coefficients and corner-minor ratios."""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .affine import KLevel, zero_p_bracket
from .brackets import BracketRule, bracket, shape_point
from .kernel.gens import Gen, Kind, a_gen, aux, level_gen, unit
from .kernel.linalg import det_laplace, nullspace, rank
from .kernel.mpoly import MPoly, to_text
from .kernel.ratfunc import RatFunc
from .kernel.sampling import rand_small, task_rng
from .shapes import ButShape

T = aux("t")  # formal lam^-1 in det(A + lam^-1 A^T)


class DegenerateMinor(ValueError):
    pass


def poly_central_coeffs(A) -> list[MPoly]:
    """Coefficients c_0..c_N of lam^-k in det(A + lam^-1 A^T)."""
    N = len(A)
    t = MPoly.gen(T)
    M = [[A[i][j] + t * A[j][i] for j in range(N)] for i in range(N)]
    d = det_laplace(M)
    if not isinstance(d, MPoly):
        d = MPoly.const(d)
    parts = d.collect(T)
    return [parts.get(k, MPoly()) for k in range(N + 1)]


def affine_central_coeffs(level: KLevel) -> list[MPoly]:
    """Coefficients of lam^-r, r = 0..N K, in det of the reduced generating function."""
    N, K = level.shape.N, level.K
    t = MPoly.gen(T)
    M = []
    for i in range(1, N + 1):
        row = []
        for j in range(1, N + 1):
            acc = MPoly()
            for p in range(K + 1):
                e = level.project(p, i, j)
                if e:
                    acc = acc + e * t**p
            row.append(acc)
        M.append(row)
    d = det_laplace(M)
    if not isinstance(d, MPoly):
        d = MPoly.const(d)
    parts = d.collect(T)
    return [parts.get(k, MPoly()) for k in range(N * K + 1)]


def corner_minor(A, shape: ButShape, I: int, d: int) -> MPoly:
    """det of the d x d lower-left corner of diagonal block I (M_0 = 1)."""
    if d == 0:
        return MPoly.const(1)
    idx = shape.block_indices(I)
    m = len(idx)
    if not 0 <= d <= m:
        raise ValueError("minor size out of range")
    rows = idx[m - d:]
    cols = idx[:d]
    v = det_laplace([[A[r - 1][c - 1] for c in cols] for r in rows])
    return v if isinstance(v, MPoly) else MPoly.const(v)


def rational_central(A, shape: ButShape, I: int, d: int):
    """b_d = M_{m-d} / M_d for block I; an MPoly when d = 0."""
    m = len(shape.block_indices(I))
    if not 0 <= d <= (m - 1) // 2 and not (m == 1 and d == 0):
        raise ValueError(f"d must lie in 0..{(m - 1) // 2}")
    num = corner_minor(A, shape, I, m - d)
    den = corner_minor(A, shape, I, d)
    if not den:
        raise DegenerateMinor(f"corner minor M_{d} of block {I} vanishes identically")
    if den == 1:
        return num
    return RatFunc(num) / den


def central_set(shape: ButShape) -> dict:
    """All candidate central elements of a shape, tagged by name."""
    A = shape.matrix()
    cs = poly_central_coeffs(A)
    out = {"c": cs, "b": {}}
    if shape.kind in ("uniform", "partition", "full"):
        for I in range(1, shape.n + 1):
            m = len(shape.block_indices(I))
            for d in range(0, (m - 1) // 2 + 1):
                out["b"][(I, d)] = rational_central(A, shape, I, d)
    return out


def is_constant(x) -> bool:
    if isinstance(x, RatFunc):
        return x.is_poly() and x.num.is_const()
    return x.is_const()


def census(shape: ButShape) -> dict:
    """Nonconstant independent central elements predicted for a block shape,
    together with the tally that also counts the d = 0 ratios."""
    N = shape.N
    if shape.kind == "full":
        return {"nonconstant": N, "with_d0": N}
    sizes = shape.sizes
    nonconst = N // 2 + sum((m - 1) // 2 for m in sizes)
    with_d0 = N // 2 + sum((m + 1) // 2 for m in sizes)
    return {"nonconstant": nonconst, "with_d0": with_d0}


def independent_candidates(shape: ButShape) -> list[tuple[str, object]]:
    """The census list: c_1..c_[N/2], the nonconstant b_d, and det A for the
    unrestricted matrix."""
    cs = central_set(shape)
    out = []
    for k in range(1, shape.N // 2 + 1):
        out.append((f"c{k}", cs["c"][k]))
    for (I, d), b in sorted(cs["b"].items()):
        if shape.kind == "full" and d == 0:
            out.append(("det", b))
        elif d >= 1 and not is_constant(b):
            out.append((f"b{d}^({I})", b))
    return out


# verification ----------------------------------------------------------------------


def verify_central(element, context, gens=None) -> dict:
    """Bracket of ``element`` with every generator of ``context`` (a
    BracketRule or a KLevel reduction) must vanish identically."""
    if isinstance(context, KLevel):
        gens = gens or context.gens
        br = context.bracket
    else:
        gens = gens or context.shape.free_gens
        br = lambda f, g: bracket(context, f, g)  # noqa: E731
    for g in gens:
        v = br(element, MPoly.gen(g))
        if v:
            return {"status": "fail", "witness": {"generator": str(g), "bracket": str(v)}}
    return {"status": "pass", "witness": None, "checked": len(gens)}


def bracket_with_level(f, p: int, k: int, l: int, shape: ButShape):
    """{f, G(p)[k,l]} on the unreduced affine algebra, f in level-0 entries."""
    acc = MPoly()
    for x in f.gens():
        if x.kind != Kind.A:
            continue
        zp = zero_p_bracket(x.row, x.col, p, k, l, shape)
        if zp:
            acc = acc + f.diff(x) * zp
    return acc


def commutation_exponent(d: int, k: int, l: int, N: int) -> int:
    return -int(k + d > N) + int(d + 1 > l) + int(d + 1 > k) - int(l + d > N)


def full_corner_minor(N: int, d: int) -> MPoly:
    if d == 0:
        return MPoly.const(1)
    rows = range(N - d + 1, N + 1)
    v = det_laplace([[MPoly.gen(a_gen(r, c)) for c in range(1, d + 1)] for r in rows])
    return v


def verify_minor_commutation(d: int, N: int, K: int = 1) -> dict:
    """{M_d, G(p)[k,l]} = c^d_{k,l} G(p)[k,l] M_d for p = 0 and, when K >= 1,
    for p = 1 both in the K-level reduction and on the unreduced algebra."""
    shape = ButShape.full(N)
    Md = full_corner_minor(N, d)
    rule = BracketRule(shape)
    checks = 0
    for k in range(1, N + 1):
        for l in range(1, N + 1):
            c = commutation_exponent(d, k, l, N)
            x = MPoly.gen(a_gen(k, l))
            cases = [("p=0", bracket(rule, Md, x), x * Md * c)]
            if K >= 1:
                lv = KLevel(shape, K)
                g1 = lv.project(1, k, l)
                cases.append((f"p=1,K={K}", lv.bracket(Md, g1), g1 * Md * c))
                G1 = MPoly.gen(level_gen(1, k, l))
                cases.append(("p=1,unreduced", bracket_with_level(Md, 1, k, l, shape), G1 * Md * c))
            for label, got, want in cases:
                checks += 1
                if got != want:
                    return {"status": "fail", "checks": checks,
                            "witness": {"case": label, "k": k, "l": l, "got": str(got), "want": str(want)}}
    return {"status": "pass", "checks": checks, "witness": None}


def leaf_dimension(n: int, m: int) -> int:
    s = 1 if m % 2 else 0
    return n * (n + 1) // 2 * m * m - n * m - s * (n // 2)


def _grad_at(f, gens, point) -> list[Fraction]:
    out = []
    for g in gens:
        df = f.diff(g)
        out.append(df.eval_at(point) if df else Fraction(0))
    return out


def independence_check(shape: ButShape, seed: int = 0, attempts: int = 5) -> dict:
    """Jacobian rank of the census elements (together with the block
    determinant constraints) at a random point of the shape."""
    cands = independent_candidates(shape)
    gens = list(shape.free_gens)
    A = shape.matrix()
    det_cons = []
    for I in shape.det_blocks:
        idx = shape.block_indices(I)
        det_cons.append(det_laplace([[A[r - 1][c - 1] for c in idx] for r in idx]))
    for attempt in range(attempts):
        rng = task_rng(seed, "independence", shape.label(), attempt)
        point = shape_point(shape, rng, rand_small)
        try:
            rows = [_grad_at(f, gens, point) for _, f in cands]
            cons = [_grad_at(f, gens, point) for f in det_cons]
        except ZeroDivisionError:
            continue
        r_all = rank(rows + cons) if rows or cons else 0
        r_cons = rank(cons) if cons else 0
        indep = r_all - r_cons
        return {"status": "pass" if indep == len(cands) == census(shape)["nonconstant"] else "fail",
                "independent": indep, "candidates": [name for name, _ in cands],
                "census": census(shape), "attempt": attempt}
    return {"status": "degenerate", "independent": None, "candidates": [n for n, _ in cands]}


# (anti)automorphisms ---------------------------------------------------------------


def reflect_entry(i: int, j: int, N: int) -> tuple[int, int]:
    return (N + 1 - j, N + 1 - i)


def reflection_map(shape: ButShape) -> dict[Gen, MPoly]:
    N = shape.N
    return {g: shape.entry(*reflect_entry(g.row, g.col, N)) for g in shape.free_gens}


def antiautomorphism_violations(shape: ButShape) -> list:
    """Pairs where {P a, P b} != -P{a, b}."""
    rule = BracketRule.of(shape)
    P = reflection_map(shape)
    bad = []
    gens = shape.free_gens
    for x in gens:
        for y in gens:
            lhs = bracket(rule, P[x], P[y])
            rhs = -rule.gen_bracket(x, y).subs(P)
            if lhs != rhs:
                bad.append((x, y))
    return bad


def scaling_parameters(shape: ButShape) -> list[list[int]]:
    """Integer basis of admissible phi: phi_i = phi_{N+1-i} and zero sum over
    every diagonal block.  Row s gives the exponents of the s-th free symbol."""
    N = shape.N
    rows = []
    for i in range(1, N + 1):
        j = N + 1 - i
        if i < j:
            r = [0] * N
            r[i - 1], r[j - 1] = 1, -1
            rows.append(r)
    # zero sum over each diagonal block (the whole matrix when there are none)
    for I in range(1, shape.n + 1):
        r = [0] * N
        for i in shape.block_indices(I):
            r[i - 1] = 1
        rows.append(r)
    basis = nullspace(rows)
    out = []
    for v in basis:
        den = lcm(*(x.denominator for x in v))
        out.append([int(x * den) for x in v])
    return out


def scaling_map(shape: ButShape, basis=None) -> tuple[dict[Gen, MPoly], list[MPoly]]:
    """a[i,j] -> e^{phi_i + phi_j} a[i,j] with formal invertible symbols; also
    returns the list of e^{phi_i}."""
    basis = basis if basis is not None else scaling_parameters(shape)
    N = shape.N
    ephi = []
    for i in range(N):
        powers = {unit("e", s + 1): v[i] for s, v in enumerate(basis) if v[i]}
        ephi.append(MPoly.monomial(powers) if powers else MPoly.const(1))
    return {g: shape.entry(g.row, g.col) * ephi[g.row - 1] * ephi[g.col - 1] for g in shape.free_gens}, ephi


def scaling_report(shape: ButShape) -> dict:
    """Scaled c_k are invariant, each b_d rescales by the predicted monomial,
    and generator brackets are preserved."""
    S, ephi = scaling_map(shape)
    cs = central_set(shape)
    for k, c in enumerate(cs["c"]):
        if c.subs(S) != c:
            return {"status": "fail", "witness": f"c{k} not invariant"}
    for (I, d), b in cs["b"].items():
        idx = shape.block_indices(I)
        m = len(idx)
        factor = MPoly.const(1)
        for r in idx[d:]:  # rows and cols of M_{m-d}
            factor = factor * ephi[r - 1]
        for c in idx[: m - d]:
            factor = factor * ephi[c - 1]
        for r in idx[m - d:]:  # divide by rows and cols of M_d
            factor = factor * ephi[r - 1] ** -1
        for c in idx[:d]:
            factor = factor * ephi[c - 1] ** -1
        scaled = b.subs(S)
        if RatFunc.lift(scaled) != RatFunc.lift(b) * factor:
            return {"status": "fail", "witness": f"b{d}^({I}) scaling factor"}
    rule = BracketRule.of(shape)
    for x in shape.free_gens:
        for y in shape.free_gens:
            if bracket(rule, S[x], S[y]) != rule.gen_bracket(x, y).subs(S):
                return {"status": "fail", "witness": f"bracket {x},{y}"}
    return {"status": "pass", "witness": None}


def central_set_record(shape: ButShape) -> dict:
    cs = central_set(shape)
    rec = {"shape": shape.to_json(), "c": [to_text(c) for c in cs["c"]], "b": []}
    for (I, d), b in sorted(cs["b"].items()):
        rec["b"].append({"block": I, "d": d, "value": str(b)})
    return rec
