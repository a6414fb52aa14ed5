"""Affine (generating-function) bracket and its k-level reductions.

The level-(p, r) bracket {G(p)[i,j], G(r)[k,l]} is the coefficient of
lam^-p mu^-r in the four-kernel formula.  Two expansions of the kernels are
available:

* ``inner``: (lam+mu)/(lam-mu) = 1 + 2 sum (mu/lam)^s and
  (1+lam mu)/(1-lam mu) = 1 + 2 sum (lam mu)^s.  The second series couples to
  arbitrarily high levels, so on the unreduced algebra it is only meaningful
  modulo a level cutoff; on a k-level reduction it is finite.
* ``outer``: the second kernel expanded as -1 - 2 sum (lam mu)^-s, which is
  finite on the unreduced algebra and is the form obtained by the formal
  limit lam -> infinity.

On every k-level reduction the two expansions give the same bracket.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Callable

from .brackets import sgn
from .kernel.gens import Gen, Kind, level_gen, parse_gen
from .kernel.mpoly import MPoly, from_text, to_text
from .shapes import ButShape

Entry = Callable[[int, int, int], MPoly]


class DivergentKernel(ValueError):
    pass


# kernel series ---------------------------------------------------------------


def kernel_series(which: str, order: int, region: str = "inner") -> dict[tuple[int, int], int]:
    """Truncated kernel expansion as {(lam exponent, mu exponent): coeff}."""
    out: dict[tuple[int, int], int] = {}
    if which == "k1":
        out[(0, 0)] = 1
        for s in range(1, order + 1):
            out[(-s, s)] = 2
    elif which == "k2":
        if region == "inner":
            out[(0, 0)] = 1
            for s in range(1, order + 1):
                out[(s, s)] = 2
        else:
            out[(0, 0)] = -1
            for s in range(1, order + 1):
                out[(-s, -s)] = -2
    else:
        raise ValueError(which)
    return out


def kernel_resummation_residue(which: str, order: int, region: str = "inner") -> dict[tuple[int, int], int]:
    """(denominator * truncated series - numerator), as a Laurent polynomial in
    (lam, mu); only terms of total degree beyond the truncation survive."""
    ser = kernel_series(which, order, region)
    if which == "k1":
        den, num = {(1, 0): 1, (0, 1): -1}, {(1, 0): 1, (0, 1): 1}
    else:
        den, num = {(0, 0): 1, (1, 1): -1}, {(0, 0): 1, (1, 1): 1}
    prod: dict[tuple[int, int], int] = {}
    for (a, b), c in ser.items():
        for (x, y), d in den.items():
            key = (a + x, b + y)
            prod[key] = prod.get(key, 0) + c * d
    for key, c in num.items():
        prod[key] = prod.get(key, 0) - c
    return {k: v for k, v in prod.items() if v}


# coefficient extraction ------------------------------------------------------------


def coefficient(p, i, j, r, k, l, E: Entry, region: str = "inner", top: int | None = None) -> MPoly:
    """Coefficient of lam^-p mu^-r on the right-hand side; ``E(t, a, b)`` is
    the level-t entry (a, b), zero for t < 0.  ``top`` bounds the levels that
    ``E`` can return nonzero values for (needed by the inner expansion)."""
    t1 = E(p, k, j) * E(r, i, l) * (sgn(i - k) - 1)
    for s in range(1, p + 1):
        t1 = t1 - E(p - s, k, j) * E(r + s, i, l) * 2
    t2 = E(r, k, j) * E(p, i, l) * (sgn(j - l) + 1)
    for s in range(1, p + 1):
        t2 = t2 + E(r + s, k, j) * E(p - s, i, l) * 2
    if region == "inner":
        if top is None:
            raise DivergentKernel("inner expansion needs a level bound")
        t3 = E(p, i, k) * E(r, j, l) * (sgn(j - k) - 1)
        t4 = E(p, l, j) * E(r, k, i) * (sgn(i - l) + 1)
        for s in range(1, top - max(p, r) + 1):
            t3 = t3 - E(p + s, i, k) * E(r + s, j, l) * 2
            t4 = t4 + E(p + s, l, j) * E(r + s, k, i) * 2
    elif region == "outer":
        t3 = E(p, i, k) * E(r, j, l) * (sgn(j - k) + 1)
        t4 = E(p, l, j) * E(r, k, i) * (sgn(i - l) - 1)
        for s in range(1, min(p, r) + 1):
            t3 = t3 + E(p - s, i, k) * E(r - s, j, l) * 2
            t4 = t4 - E(p - s, l, j) * E(r - s, k, i) * 2
    else:
        raise ValueError(f"unknown expansion region {region!r}")
    return t1 + t2 + t3 + t4


def generic_entry(shape: ButShape) -> Entry:
    """Unreduced generating function: level 0 masked by the shape, higher
    levels free."""

    def E(t, a, b):
        if t < 0:
            return MPoly()
        if t == 0:
            return shape.entry(a, b)
        return MPoly.gen(level_gen(t, a, b))

    return E


@dataclass(frozen=True)
class TruncatedBracket:
    value: MPoly
    valid_below: int  # exact modulo generators of level >= valid_below


def affine_generator_bracket(p, i, j, r, k, l, K: int, shape: ButShape | None = None,
                             reduced: bool = True, region: str = "inner"):
    """Level-(p, r) bracket.  In reduced mode the result is expressed in the
    generators of the K-level reduction.  In unreduced mode with the inner
    expansion the answer is returned with its level cutoff annotation."""
    shape = shape or ButShape.full(max(i, j, k, l))
    if not (0 <= p <= K and 0 <= r <= K):
        raise ValueError("levels must lie in 0..K")
    N = shape.N
    if not all(1 <= x <= N for x in (i, j, k, l)):
        raise ValueError("index out of range")
    if reduced:
        return KLevel(shape, K).lift_bracket((p, i, j), (r, k, l), region)
    E = generic_entry(shape)
    if region == "outer":
        return coefficient(p, i, j, r, k, l, E, "outer")
    E_cut = _cut(E, K)
    return TruncatedBracket(coefficient(p, i, j, r, k, l, E_cut, "inner", top=K), K - max(p, r) + 1)


def _cut(E: Entry, K: int) -> Entry:
    def F(t, a, b):
        return E(t, a, b) if t <= K else MPoly()

    return F


def zero_p_bracket(i, j, p, k, l, shape: ButShape | None = None) -> MPoly:
    """Closed form of {a[i,j], G(p)[k,l]} for p >= 1."""
    if p < 1:
        raise ValueError("p must be at least 1")
    shape = shape or ButShape.full(max(i, j, k, l))
    a = shape.entry

    def G(x, y):
        return MPoly.gen(level_gen(p, x, y))

    return (
        a(k, j) * G(i, l) * (sgn(i - k) - 1)
        + G(k, j) * a(i, l) * (sgn(j - l) + 1)
        + a(i, k) * G(j, l) * (sgn(j - k) + 1)
        + a(l, j) * G(k, i) * (sgn(i - l) - 1)
    )


# k-level reductions ----------------------------------------------------------------


@dataclass(frozen=True)
class SeriesMatrix:
    N: int
    K: int
    levels: tuple  # K+1 matrices (tuples of tuples of MPoly)

    def to_json(self) -> str:
        lv = [[[to_text(x) for x in row] for row in L] for L in self.levels]
        return json.dumps({"N": self.N, "K": self.K, "levels": lv}, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "SeriesMatrix":
        d = json.loads(text)
        lv = tuple(tuple(tuple(from_text(str(x)) for x in row) for row in L) for L in d["levels"])
        return cls(d["N"], d["K"], lv)

    def level(self, t: int):
        return self.levels[t]

    def entry(self, t: int, a: int, b: int) -> MPoly:
        if 0 <= t <= self.K:
            return self.levels[t][a - 1][b - 1]
        return MPoly()


def klevel_reduce(shape: ButShape, K: int) -> SeriesMatrix:
    """The K-level reduced generating function A + ... + lam^-K A^T with the
    transpose symmetry between levels t and K - t."""
    if K < 1:
        raise ValueError("K must be at least 1")
    N = shape.N
    rng = range(1, N + 1)
    levels = [None] * (K + 1)
    levels[0] = tuple(tuple(shape.entry(a, b) for b in rng) for a in rng)
    for t in range(1, K):
        if 2 * t < K:
            levels[t] = tuple(tuple(MPoly.gen(level_gen(t, a, b)) for b in rng) for a in rng)
        elif 2 * t == K:
            levels[t] = tuple(
                tuple(MPoly.gen(level_gen(t, a, b) if a >= b else level_gen(t, b, a)) for b in rng) for a in rng
            )
    for t in range(1, K + 1):
        if 2 * t > K:
            src = levels[K - t]
            levels[t] = tuple(tuple(src[b - 1][a - 1] for b in rng) for a in rng)
    return SeriesMatrix(N, K, tuple(levels))


def level_of(g: Gen) -> int:
    if g.kind == Kind.A:
        return 0
    if g.kind == Kind.G:
        return g.level
    raise ValueError(f"{g} is not a level generator")


class KLevel:
    """The Poisson algebra of a K-level reduction."""

    _instances: dict = {}

    def __new__(cls, shape: ButShape, K: int):
        key = (shape, K)
        inst = cls._instances.get(key)
        if inst is None:
            inst = super().__new__(cls)
            inst.shape = shape
            inst.K = K
            inst.series = klevel_reduce(shape, K)
            inst._cache = {}
            cls._instances[key] = inst
        return inst

    def __init__(self, shape: ButShape, K: int):
        pass

    @cached_property
    def gens(self) -> tuple[Gen, ...]:
        """Free generators of the reduced algebra."""
        out = list(self.shape.free_gens)
        N, K = self.shape.N, self.K
        for t in range(1, (K + 1) // 2 + (1 if K % 2 == 0 else 0)):
            for a in range(1, N + 1):
                for b in range(1, N + 1):
                    if 2 * t == K and a < b:
                        continue
                    out.append(level_gen(t, a, b))
        return tuple(out)

    def home(self, g: Gen) -> tuple[int, int, int]:
        return (level_of(g), g.row, g.col)

    def project(self, t: int, a: int, b: int) -> MPoly:
        return self.series.entry(t, a, b)

    def entry_fn(self) -> Entry:
        return self.series.entry

    def lift_bracket(self, x: tuple, y: tuple, region: str = "inner") -> MPoly:
        """pi({G(p)[i,j], G(r)[k,l]}) for arbitrary unreduced generators x, y
        given as (level, row, col)."""
        key = (x, y, region)
        v = self._cache.get(key)
        if v is None:
            (p, i, j), (r, k, l) = x, y
            v = coefficient(p, i, j, r, k, l, self.series.entry, region, top=self.K)
            self._cache[key] = v
        return v

    def gen_bracket(self, x: Gen, y: Gen) -> MPoly:
        return self.lift_bracket(self.home(x), self.home(y))

    def bracket(self, f, g):
        fg = [x for x in sorted(f.gens()) if x.kind in (Kind.A, Kind.G)]
        gg = [y for y in sorted(g.gens()) if y.kind in (Kind.A, Kind.G)]
        acc = MPoly()
        for x in fg:
            dfx = f.diff(x)
            for y in gg:
                b = self.gen_bracket(x, y)
                if b:
                    acc = acc + dfx * g.diff(y) * b
        return acc

    def homomorphism_check(self, region: str = "inner", extra_levels: int = 1) -> dict:
        """pi{x, y} = {pi x, pi y} for all unreduced generator pairs of levels
        0..K+extra_levels (levels above K map to 0)."""
        N, K = self.shape.N, self.K
        unreduced = []
        for t in range(0, K + extra_levels + 1):
            for a in range(1, N + 1):
                for b in range(1, N + 1):
                    unreduced.append((t, a, b))
        checked = 0
        for x in unreduced:
            px = self.project(*x)
            for y in unreduced:
                py = self.project(*y)
                lhs = self.lift_bracket(x, y, region)
                rhs = self.bracket(px, py) if (px and py) else MPoly()
                checked += 1
                if lhs != rhs:
                    return {"K": K, "shape": self.shape.label(), "status": "fail", "checked": checked,
                            "witness": {"x": list(x), "y": list(y), "lhs": str(lhs), "rhs": str(rhs)}}
        return {"K": K, "shape": self.shape.label(), "status": "pass", "checked": checked, "witness": None}

    def antisymmetry_violations(self) -> list:
        bad = []
        gs = self.gens
        for a, x in enumerate(gs):
            for y in gs[a:]:
                if self.gen_bracket(x, y) != -self.gen_bracket(y, x):
                    bad.append((x, y))
        return bad

    def jacobi_violations(self, limit: int | None = None) -> list:
        from itertools import combinations

        bad = []
        for n, (x, y, z) in enumerate(combinations(self.gens, 3)):
            if limit is not None and n >= limit:
                break
            X, Y, Z = (MPoly.gen(g) for g in (x, y, z))
            s = (self.bracket(X, self.gen_bracket(y, z)) + self.bracket(Y, self.gen_bracket(z, x))
                 + self.bracket(Z, self.gen_bracket(x, y)))
            if s:
                bad.append((x, y, z))
        return bad


def parse_level_gen(text: str) -> Gen:
    return parse_gen(text)
