"""Rational functions whose denominators are products of declared factors.

A :class:`RatFunc` is ``num / prod(f_k ** e_k)`` where each factor ``f_k`` is a
polynomial normalized to leading coefficient 1.  No multivariate GCD is ever
taken: factors are cancelled only by exact division, and equality is decided
by cross-multiplication.  This covers every denominator the constructions
need (diagonal-block determinants, corner minors, quantum parameters).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .gens import Gen, gen_of
from .mpoly import MPoly, mono_key


def _normalize_factor(p: MPoly) -> tuple[object, MPoly, MPoly]:
    """Split p = c * unit_mono * f with f of leading coefficient 1 and with
    the monomial content in invertible generators removed."""
    lo: dict[int, int] = {}
    first = True
    for mono in p.terms:
        d = dict(mono)
        if first:
            lo = {g: e for g, e in d.items() if gen_of(g).invertible}
            first = False
        else:
            keys = set(lo) | {g for g in d if gen_of(g).invertible}
            lo = {g: min(lo.get(g, 0), d.get(g, 0)) for g in keys}
    unit = {g: e for g, e in lo.items() if e}
    unit_mono = MPoly({tuple(sorted(unit.items())): 1}, _clean=True)
    f = p
    if unit:
        f = p * MPoly({tuple(sorted((g, -e) for g, e in unit.items())): 1}, _clean=True)
    _, c = f.leading()
    f = f.scale(Fraction(1) / c)
    return c, unit_mono, f


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num=0, den: Mapping[MPoly, int] | None = None, _raw: bool = False):
        if not isinstance(num, MPoly):
            num = MPoly.const(num)
        self.num: MPoly = num
        self.den: dict[MPoly, int] = dict(den or {})
        if not _raw:
            self._cancel()

    # helpers --------------------------------------------------------------
    def _cancel(self) -> None:
        if not self.num:
            self.den = {}
            return
        for f in list(self.den):
            e = self.den[f]
            while e > 0:
                qt = self.num.exact_div(f)
                if qt is None:
                    break
                self.num = qt
                e -= 1
            if e:
                self.den[f] = e
            else:
                del self.den[f]

    def den_poly(self) -> MPoly:
        d = MPoly.const(1)
        for f, e in self.den.items():
            d = d * f**e
        return d

    @staticmethod
    def lift(x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, MPoly):
            return RatFunc(x, _raw=True)
        if isinstance(x, (int, Fraction)):
            return RatFunc(MPoly.const(x), _raw=True)
        raise TypeError(f"cannot lift {x!r}")

    def is_poly(self) -> bool:
        return not self.den

    def as_poly(self) -> MPoly:
        if self.den:
            raise ValueError("rational function has a nontrivial denominator")
        return self.num

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        try:
            o = RatFunc.lift(other)
        except TypeError:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        den = dict(self.den)
        for f, e in o.den.items():
            den[f] = max(den.get(f, 0), e)
        a = self.num
        for f, e in den.items():
            k = e - self.den.get(f, 0)
            if k:
                a = a * f**k
        b = o.num
        for f, e in den.items():
            k = e - o.den.get(f, 0)
            if k:
                b = b * f**k
        return RatFunc(a + b, den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _raw=True)

    def __sub__(self, other):
        try:
            o = RatFunc.lift(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return RatFunc.lift(other) + (-self)

    def __mul__(self, other):
        try:
            o = RatFunc.lift(other)
        except TypeError:
            return NotImplemented
        den = dict(self.den)
        for f, e in o.den.items():
            den[f] = den.get(f, 0) + e
        return RatFunc(self.num * o.num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        c, unit_mono, f = _normalize_factor(self.num)
        num = self.den_poly().scale(Fraction(1) / c)
        if unit_mono != 1:
            num = num * unit_mono**-1
        if f == 1:
            return RatFunc(num, _raw=True)
        return RatFunc(num, {f: 1})

    def __truediv__(self, other):
        try:
            o = RatFunc.lift(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return RatFunc.lift(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        r = RatFunc(1)
        for _ in range(n):
            r = r * self
        return r

    def __eq__(self, other) -> bool:
        try:
            o = RatFunc.lift(other)
        except TypeError:
            return NotImplemented
        return (self.num * o.den_poly() - o.num * self.den_poly()).terms == {}

    def __hash__(self):
        raise TypeError("RatFunc is not hashable")

    def __bool__(self) -> bool:
        return bool(self.num)

    # calculus and substitution ----------------------------------------------
    def diff(self, g: Gen) -> "RatFunc":
        dn = self.num.diff(g)
        if not self.den:
            return RatFunc(dn, _raw=True)
        # d(n/D) = (n' * F - n * sum e_k f_k' F/f_k) / (D * F),  F = prod f_k
        factors = list(self.den.items())
        F = MPoly.const(1)
        for f, _ in factors:
            F = F * f
        acc = dn * F
        for f, e in factors:
            fp = f.diff(g)
            if fp:
                rest = MPoly.const(1)
                for h, _ in factors:
                    if h is not f:
                        rest = rest * h
                acc = acc - self.num * fp * rest * e
        den = {f: e + 1 for f, e in factors}
        return RatFunc(acc, den)

    def subs(self, mapping: Mapping[Gen, object]) -> "RatFunc":
        n = RatFunc.lift(self.num.subs(mapping))
        d = RatFunc(1)
        for f, e in self.den.items():
            d = d * RatFunc.lift(f.subs(mapping)) ** e
        return n / d

    def eval_at(self, point: Mapping[Gen, object]) -> Fraction:
        n = self.num.eval_at(point)
        d = Fraction(1)
        for f, e in self.den.items():
            d *= f.eval_at(point) ** e
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the point")
        return n / d

    def gens(self) -> set[Gen]:
        s = self.num.gens()
        for f in self.den:
            s |= f.gens()
        return s

    def __str__(self) -> str:
        if not self.den:
            return str(self.num)
        den = "*".join(
            f"({f})" if e == 1 else f"({f})^{e}"
            for f, e in sorted(self.den.items(), key=lambda fe: mono_key(fe[0].leading()[0]))
        )
        return f"({self.num})/({den})"

    __repr__ = __str__


def as_ratfunc(x) -> RatFunc:
    return RatFunc.lift(x)


def simplify(x):
    """Return an MPoly when a RatFunc has a trivial denominator."""
    if isinstance(x, RatFunc) and not x.den:
        return x.num
    return x
