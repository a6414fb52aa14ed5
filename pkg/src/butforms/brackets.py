"""The classical quadratic bracket on matrix entries and its reductions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .kernel.gens import Gen, Kind, a_gen
from .kernel.linalg import rank
from .kernel.mpoly import MPoly
from .kernel.ratfunc import RatFunc
from .shapes import ButShape


def sgn(x: int) -> int:
    return (x > 0) - (x < 0)


def _a(i, j) -> MPoly:
    return MPoly.gen(a_gen(i, j))


@lru_cache(maxsize=None)
def full_bracket(i: int, j: int, k: int, l: int) -> MPoly:
    """{a[i,j], a[k,l]} on the unrestricted matrix."""
    return (
        _a(i, l) * _a(k, j) * (sgn(j - l) + sgn(i - k))
        + _a(j, l) * _a(i, k) * (sgn(j - k) + 1)
        + _a(l, j) * _a(k, i) * (sgn(i - l) - 1)
    )


@lru_cache(maxsize=None)
def sym_bracket(i: int, j: int, k: int, l: int) -> MPoly:
    """The reduced bracket on symmetric matrices, before folding a[j,i] -> a[i,j]."""
    return _a(i, l) * _a(k, j) * (sgn(j - l) + sgn(i - k)) + _a(j, l) * _a(k, i) * (sgn(j - k) + sgn(i - l))


class ForeignGenerator(ValueError):
    pass


class IndexRange(ValueError):
    pass


@dataclass(frozen=True)
class BracketRule:
    shape: ButShape
    variant: str = "but"  # "but" (masked full bracket) or "symmetric"

    def __post_init__(self):
        if self.variant not in ("but", "symmetric"):
            raise ValueError(f"unknown bracket variant {self.variant!r}")
        if self.variant == "symmetric" and self.shape.kind != "symmetric":
            raise ValueError("symmetric variant needs a symmetric shape")

    @classmethod
    def of(cls, shape: ButShape) -> "BracketRule":
        return cls(shape, "symmetric" if shape.kind == "symmetric" else "but")

    @property
    def N(self) -> int:
        return self.shape.N

    def generator_bracket(self, i: int, j: int, k: int, l: int) -> MPoly:
        return _masked_bracket(self, i, j, k, l)

    def gen_bracket(self, x: Gen, y: Gen) -> MPoly:
        return _masked_bracket(self, x.row, x.col, y.row, y.col)


@lru_cache(maxsize=None)
def _masked_bracket(rule: BracketRule, i, j, k, l) -> MPoly:
    N = rule.N
    if not all(1 <= x <= N for x in (i, j, k, l)):
        raise IndexRange(f"index out of range 1..{N}: {(i, j, k, l)}")
    raw = sym_bracket(i, j, k, l) if rule.variant == "symmetric" else full_bracket(i, j, k, l)
    return rule.shape.reduce(raw)


def generator_bracket(rule: BracketRule, i: int, j: int, k: int, l: int) -> MPoly:
    return rule.generator_bracket(i, j, k, l)


# Leibniz extension -------------------------------------------------------------


def _check_gens(rule: BracketRule, f) -> list[Gen]:
    """Level-0 generators of f; other symbol kinds are treated as constants."""
    free = set(rule.shape.free_gens)
    out = []
    for g in sorted(f.gens()):
        if g.kind == Kind.A:
            if g not in free:
                raise ForeignGenerator(f"{g} is not a free generator of {rule.shape}")
            out.append(g)
        elif g.kind == Kind.G:
            raise ForeignGenerator(f"level generator {g} in a level-0 bracket")
    return out


def bracket(rule: BracketRule, f, g):
    """Biderivation extension: sum over generator pairs of df/dx dg/dy {x, y}.
    Works for MPoly and RatFunc arguments alike."""
    if isinstance(f, (int, Fraction)) or isinstance(g, (int, Fraction)):
        return MPoly()
    xs = _check_gens(rule, f)
    ys = _check_gens(rule, g)
    if not xs or not ys:
        return MPoly()
    dfs = [(x, f.diff(x)) for x in xs]
    dgs = [(y, g.diff(y)) for y in ys]
    acc = MPoly()
    for x, dfx in dfs:
        if not dfx:
            continue
        for y, dgy in dgs:
            if not dgy:
                continue
            b = rule.gen_bracket(x, y)
            if b:
                acc = acc + dfx * dgy * b
    if isinstance(acc, RatFunc) and not acc.den:
        return acc.num
    return acc


def jacobiator(rule: BracketRule, f, g, h):
    return bracket(rule, f, bracket(rule, g, h)) + bracket(rule, g, bracket(rule, h, f)) + bracket(rule, h, bracket(rule, f, g))


def generator_jacobiator(rule: BracketRule, x: Gen, y: Gen, z: Gen) -> MPoly:
    """Cyclic Jacobi sum on three generators, using {x, p} = sum_w dp/dw {x, w}."""

    def br_gen(u: Gen, p: MPoly) -> MPoly:
        acc = MPoly()
        for w in p.gens():
            if w.kind == Kind.A:
                acc = acc + p.diff(w) * rule.gen_bracket(u, w)
        return acc

    return br_gen(x, rule.gen_bracket(y, z)) + br_gen(y, rule.gen_bracket(z, x)) + br_gen(z, rule.gen_bracket(x, y))


def jacobi_sweep(rule: BracketRule, gens=None):
    """All unordered triples of distinct free generators; yields (triple, jacobiator)."""
    gens = list(gens or rule.shape.free_gens)
    for x, y, z in combinations(gens, 3):
        yield (x, y, z), generator_jacobiator(rule, x, y, z)


# numeric Poisson tensor ----------------------------------------------------------------


def tensor_at(rule: BracketRule, point: dict, gens=None) -> list[list[Fraction]]:
    """Matrix of generator brackets over ``gens`` evaluated at ``point``."""
    gens = list(gens or rule.shape.free_gens)
    n = len(gens)
    M = [[Fraction(0)] * n for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            v = rule.gen_bracket(gens[a], gens[b]).eval_at(point)
            M[a][b] = v
            M[b][a] = -v
    return M


def numeric_jacobi(rule: BracketRule, point: dict, gens=None) -> list[tuple]:
    """Cyclic Jacobi sums for every triple of generators at a numeric point;
    returns the list of violating triples (empty when Jacobi holds there)."""
    gens = list(gens or rule.shape.free_gens)
    idx = {g: t for t, g in enumerate(gens)}
    PI = tensor_at(rule, point, gens)
    n = len(gens)
    grad: dict[tuple[int, int], dict[int, Fraction]] = {}
    for a in range(n):
        for b in range(a + 1, n):
            p = rule.gen_bracket(gens[a], gens[b])
            d = {}
            for w in p.gens():
                if w in idx:
                    v = p.diff(w).eval_at(point)
                    if v:
                        d[idx[w]] = v
            grad[(a, b)] = d
            grad[(b, a)] = {w: -v for w, v in d.items()}

    def term(x, y, z):
        return sum((PI[x][w] * v for w, v in grad[(y, z)].items()), Fraction(0))

    bad = []
    for x, y, z in combinations(range(n), 3):
        s = term(x, y, z) + term(y, z, x) + term(z, x, y)
        if s:
            bad.append((gens[x], gens[y], gens[z]))
    return bad


def poisson_tensor_rank(rule: BracketRule, point: dict) -> int:
    """Exact rank of the bracket matrix on the chart coordinates of the shape;
    ``point`` must satisfy the shape constraints (see :func:`shape_point`)."""
    shape = rule.shape
    check_point(shape, point)
    return rank(tensor_at(rule, point, shape.chart_gens()))


class PointError(ValueError):
    pass


def check_point(shape: ButShape, point: dict) -> None:
    from .kernel.linalg import det

    for g in shape.free_gens:
        if g not in point:
            raise PointError(f"point does not assign {g}")
    for I in shape.det_blocks:
        idx = shape.block_indices(I)
        blk = [[point[a_gen(r, c)] for c in idx] for r in idx]
        if det(blk) != 1:
            raise PointError(f"det of diagonal block {I} is not 1 at the point")


def shape_point(shape: ButShape, rng, draw) -> dict:
    """Random point respecting the shape.  ``draw(rng)`` yields rationals; the
    bottom-right entry of every constrained block is solved from det = 1."""
    from .kernel.linalg import det

    while True:
        point = {g: draw(rng) for g in shape.free_gens}
        ok = True
        for I in shape.det_blocks:
            idx = shape.block_indices(I)
            s = len(idx)
            top = [[point[a_gen(r, c)] for c in idx[:-1]] for r in idx[:-1]]
            cof = det(top) if s > 1 else 1
            if cof == 0:
                ok = False
                break
            blk0 = [[point[a_gen(r, c)] if (r, c) != (idx[-1], idx[-1]) else 0 for c in idx] for r in idx]
            # det is affine in the corner entry with slope equal to the top-left minor
            rest = det(blk0)
            point[a_gen(idx[-1], idx[-1])] = (Fraction(1) - rest) / cof
        if ok:
            return point


# reductions ---------------------------------------------------------------------


def constraint_generators(shape: ButShape) -> list[tuple[str, MPoly]]:
    """Generators of the constraint ideal, as (label, polynomial in full entries)."""
    from .kernel.linalg import det

    N = shape.N
    out = []
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            if shape.kind == "symmetric":
                if i < j:
                    out.append((f"a[{i},{j}]-a[{j},{i}]", _a(i, j) - _a(j, i)))
            elif not shape.admitted(i, j):
                out.append((f"a[{i},{j}]", _a(i, j)))
            elif shape.unit_entry(i, j):
                out.append((f"a[{i},{i}]-1", _a(i, i) - 1))
    for I in shape.det_blocks:
        idx = shape.block_indices(I)
        d = det([[_a(r, c) for c in idx] for r in idx])
        out.append((f"det A[{I},{I}]-1", d - 1))
    return out


def coisotropy_check(shape: ButShape) -> dict:
    """Check that the constraint ideal is a Poisson ideal of the full bracket:
    {c, a[k,l]} reduces to 0 modulo the constraints for every constraint c and
    every entry (k, l).  Returns a report with the first violation witness."""
    full = BracketRule(ButShape.full(shape.N))
    N = shape.N
    checked = 0
    for label, c in constraint_generators(shape):
        for k in range(1, N + 1):
            for l in range(1, N + 1):
                b = bracket(full, c, _a(k, l))
                red = shape.reduce(b)
                checked += 1
                if red:
                    return {"shape": shape.label(), "status": "fail", "checked": checked,
                            "witness": {"constraint": label, "entry": f"a[{k},{l}]", "residue": str(red)}}
    return {"shape": shape.label(), "status": "pass", "checked": checked, "witness": None}


def symmetric_matches_reduced_full(N: int) -> list[tuple]:
    """Quadruples where the folded full bracket differs from the symmetric
    bracket; empty when they agree term for term."""
    shape = ButShape.symmetric(N)
    bad = []
    for i in range(1, N + 1):
        for j in range(i, N + 1):
            for k in range(1, N + 1):
                for l in range(k, N + 1):
                    if shape.reduce(full_bracket(i, j, k, l)) != shape.reduce(sym_bracket(i, j, k, l)):
                        bad.append((i, j, k, l))
    return bad


# case table for the unipotent triangular shape (n, m) = (N, 1) --------------------------

TABLE_CASES = ("i<k<j<l", "i<j<l<k", "i<j<k<l", "k=j", "l=k", "i=j")


def _tri(i: int, j: int) -> MPoly:
    if i == j:
        return MPoly.const(1)
    return _a(i, j) if i < j else MPoly()


def table_case(i: int, k: int, j: int, l: int) -> str | None:
    """Case line covering {a_ik, a_jl} for i<k, j<l with (i,k) before (j,l);
    None when the pair needs the antisymmetric swap or is diagonal."""
    if not (i < k and j < l) or (i, k) >= (j, l):
        return None
    if i == j:
        return "i=j"
    if k < j:
        return "i<k<j<l"
    if k == j:
        return "k=j"
    if l < k:
        return "i<j<l<k"
    if l == k:
        return "l=k"
    return "i<j<k<l"


def table_bracket(i: int, k: int, j: int, l: int, corrected: bool = True) -> MPoly:
    """{a_ik, a_jl} from the case table, extended by antisymmetry.

    The literal table prints a_kj in the i<j<k<l line and +a_kl in the i=j
    line; the corrected reading uses a_jk and +2 a_kl."""
    if (i, k) == (j, l):
        return MPoly()
    if (i, k) > (j, l):
        return -table_bracket(j, l, i, k, corrected)
    case = table_case(i, k, j, l)
    if case is None:
        raise IndexRange(f"not an upper triangular pair: {(i, k, j, l)}")
    A = _tri
    if case in ("i<k<j<l", "i<j<l<k"):
        return MPoly()
    if case == "i<j<k<l":
        cross = A(j, k) if corrected else A(k, j)
        return (A(i, j) * A(k, l) - A(i, l) * cross).scale(2)
    if case == "k=j":
        return A(i, k) * A(k, l) - A(i, l).scale(2)
    if case == "l=k":
        return -A(i, k) * A(j, k) + A(i, j).scale(2)
    return -A(i, k) * A(i, l) + A(k, l).scale(2 if corrected else 1)


def table_conformance(N: int = 5, corrected: bool = True) -> dict:
    """Masked bracket on the shape (N, 1) against the case table, per case line."""
    shape = ButShape.uniform(N, 1)
    rule = BracketRule(shape)
    gens = sorted(shape.free_gens)
    per_case = {c: 0 for c in TABLE_CASES}
    bad = []
    for x, y in combinations(gens, 2):
        case = table_case(x.row, x.col, y.row, y.col)
        per_case[case] += 1
        if rule.gen_bracket(x, y) != table_bracket(x.row, x.col, y.row, y.col, corrected):
            bad.append({"pair": [str(x), str(y)], "case": case})
    return {"shape": shape.label(), "status": "fail" if bad else "pass", "checked": sum(per_case.values()),
            "cases": per_case, "witness": bad[:5] or None, "corrected": corrected}


def table_jacobi_failures(N: int, corrected: bool = True) -> list[tuple]:
    """Generator triples of the shape (N, 1) where the table bracket fails Jacobi."""
    gens = sorted(ButShape.uniform(N, 1).free_gens)

    def br_gen(u: Gen, p: MPoly) -> MPoly:
        acc = MPoly()
        for w in p.gens():
            acc = acc + p.diff(w) * table_bracket(u.row, u.col, w.row, w.col, corrected)
        return acc

    def tb(x, y):
        return table_bracket(x.row, x.col, y.row, y.col, corrected)

    bad = []
    for x, y, z in combinations(gens, 3):
        if br_gen(x, tb(y, z)) + br_gen(y, tb(z, x)) + br_gen(z, tb(x, y)):
            bad.append((x, y, z))
    return bad
