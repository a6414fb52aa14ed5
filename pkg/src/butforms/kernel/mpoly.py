"""Sparse multivariate polynomials with exact rational coefficients.

A monomial is a tuple of ``(generator id, exponent)`` pairs sorted by id.
Negative exponents are allowed only on invertible generators (q, lambda, mu,
nu and declared unit symbols), which makes the same class serve as a Laurent
polynomial ring in those symbols.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping

from .gens import Gen, gen_of, gid, parse_gen

Mono = tuple  # tuple[tuple[int, int], ...]

ONE_MONO: Mono = ()


class LaurentError(ValueError):
    pass


def _check_exp(g: int, e: int) -> None:
    if e < 0 and not gen_of(g).invertible:
        raise LaurentError(f"negative power of non-invertible generator {gen_of(g)}")


def mono_mul(m1: Mono, m2: Mono) -> Mono:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for g, e in m2:
        ne = d.get(g, 0) + e
        if ne:
            d[g] = ne
        else:
            del d[g]
    return tuple(sorted(d.items()))


def mono_div(m1: Mono, m2: Mono) -> Mono | None:
    """m1 / m2 if every resulting exponent is admissible, else None."""
    d = dict(m1)
    for g, e in m2:
        ne = d.get(g, 0) - e
        if ne < 0 and not gen_of(g).invertible:
            return None
        if ne:
            d[g] = ne
        else:
            d.pop(g, None)
    for g, e in d.items():
        if e < 0 and not gen_of(g).invertible:
            return None
    return tuple(sorted(d.items()))


def mono_key(m: Mono) -> tuple:
    """Graded-lex sort key over the documented generator order; the
    leading (largest) monomial has the smallest key."""
    items = sorted((gen_of(g), e) for g, e in m)
    return (-sum(e for _, e in items), tuple((g, -e) for g, e in items))


def _coerce(c):
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return Fraction(c.numerator, c.denominator)
    raise TypeError(f"unsupported coefficient {c!r}")


class MPoly:
    """Immutable sparse polynomial.  Coefficients are ``int`` or ``Fraction``."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[Mono, object] | None = None, _clean: bool = False):
        if terms is None:
            self._t = {}
        elif _clean:
            self._t = terms  # type: ignore[assignment]
        else:
            self._t = {m: _coerce(c) for m, c in terms.items() if c}
        self._hash = None

    # constructors ---------------------------------------------------------
    @classmethod
    def const(cls, c) -> "MPoly":
        c = _coerce(c)
        return cls({(): c}, _clean=True) if c else cls()

    @classmethod
    def gen(cls, g: Gen, e: int = 1) -> "MPoly":
        i = gid(g)
        _check_exp(i, e)
        return cls({((i, e),) if e else (): 1}, _clean=True)

    @classmethod
    def monomial(cls, powers: Mapping[Gen, int], c=1) -> "MPoly":
        d = {}
        for g, e in powers.items():
            if e:
                i = gid(g)
                _check_exp(i, e)
                d[i] = d.get(i, 0) + e
        return cls({tuple(sorted(d.items())): _coerce(c)}) if c else cls()

    # basic protocol -----------------------------------------------------
    @property
    def terms(self) -> dict:
        return self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def __len__(self) -> int:
        return len(self._t)

    def is_const(self) -> bool:
        return not self._t or (len(self._t) == 1 and () in self._t)

    def const_value(self):
        if not self.is_const():
            raise ValueError("polynomial is not constant")
        return self._t.get((), 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self._t == other._t
        if isinstance(other, (int, Fraction)):
            return self.is_const() and self._t.get((), 0) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    # arithmetic ---------------------------------------------------------
    @staticmethod
    def _lift(x) -> "MPoly | None":
        if isinstance(x, MPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return MPoly.const(x)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o._t:
            return self
        if not self._t:
            return o
        t = dict(self._t)
        for m, c in o._t.items():
            nc = t.get(m, 0) + c
            if nc:
                t[m] = nc
            else:
                t.pop(m, None)
        return MPoly(t, _clean=True)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly({m: -c for m, c in self._t.items()}, _clean=True)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c) -> "MPoly":
        c = _coerce(c)
        if not c:
            return MPoly()
        return MPoly({m: v * c for m, v in self._t.items()}, _clean=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return MPoly()
        if len(a) < len(b):
            a, b = b, a
        t: dict = {}
        for m2, c2 in b.items():
            for m1, c1 in a.items():
                m = mono_mul(m1, m2)
                nc = t.get(m, 0) + c1 * c2
                if nc:
                    t[m] = nc
                else:
                    del t[m]
        return MPoly(t, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            if len(self._t) == 1:
                ((m, c),) = self._t.items()
                for g, e in m:
                    _check_exp(g, -e * (-n))
                inv = MPoly({tuple((g, -e) for g, e in m): _coerce(Fraction(1) / c)}, _clean=True)
                return inv ** (-n)
            raise LaurentError("negative power of a non-monomial")
        result = MPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / _coerce(other))
        if isinstance(other, MPoly):
            if other.is_const():
                return self.scale(Fraction(1) / other.const_value())
            q = self.exact_div(other)
            if q is not None:
                return q
            from .ratfunc import RatFunc

            return RatFunc(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        from .ratfunc import RatFunc

        return RatFunc(MPoly._lift(other)) / self

    # structure -----------------------------------------------------------
    def gens(self) -> set[Gen]:
        return {gen_of(g) for m in self._t for g, _ in m}

    def degree(self, g: Gen | None = None) -> int:
        if not self._t:
            return -1
        if g is None:
            return max(sum(e for _, e in m) for m in self._t)
        i = gid(g)
        return max(dict(m).get(i, 0) for m in self._t)

    def min_degree(self, g: Gen) -> int:
        i = gid(g)
        return min(dict(m).get(i, 0) for m in self._t) if self._t else 0

    def items(self) -> Iterator[tuple[dict[Gen, int], object]]:
        for m, c in self._t.items():
            yield {gen_of(g): e for g, e in m}, c

    def coeff_in(self, g: Gen, e: int) -> "MPoly":
        """Coefficient of g**e, viewing self as a Laurent polynomial in g."""
        i = gid(g)
        t = {}
        for m, c in self._t.items():
            d = dict(m)
            if d.get(i, 0) == e:
                d.pop(i, None)
                t[tuple(sorted(d.items()))] = c
        return MPoly(t, _clean=True)

    def collect(self, g: Gen) -> dict[int, "MPoly"]:
        i = gid(g)
        out: dict[int, dict] = {}
        for m, c in self._t.items():
            d = dict(m)
            e = d.pop(i, 0)
            out.setdefault(e, {})[tuple(sorted(d.items()))] = c
        return {e: MPoly(t, _clean=True) for e, t in out.items()}

    def diff(self, g: Gen) -> "MPoly":
        i = gid(g)
        t: dict = {}
        for m, c in self._t.items():
            for k, (h, e) in enumerate(m):
                if h == i:
                    nm = m[:k] + ((h, e - 1),) + m[k + 1 :] if e != 1 else m[:k] + m[k + 1 :]
                    t[nm] = t.get(nm, 0) + c * e
                    break
        return MPoly({m: c for m, c in t.items() if c}, _clean=True)

    def leading(self) -> tuple[Mono, object]:
        m = min(self._t, key=mono_key)
        return m, self._t[m]

    def exact_div(self, other: "MPoly") -> "MPoly | None":
        """Quotient self / other when it is a polynomial, else None."""
        if not other._t:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._t:
            return MPoly()
        if len(other._t) == 1:
            ((m2, c2),) = other._t.items()
            t = {}
            for m, c in self._t.items():
                nm = mono_div(m, m2)
                if nm is None:
                    return None
                t[nm] = Fraction(c) / c2
            return MPoly(t)
        lm, lc = other.leading()
        rem = self
        quot: dict = {}
        limit = 4 * (len(self._t) + 1) * (len(other._t) + 1) + 1000
        while rem._t:
            limit -= 1
            if limit < 0:
                return None
            m, c = rem.leading()
            qm = mono_div(m, lm)
            if qm is None:
                return None
            qc = Fraction(c) / lc
            qc = qc.numerator if qc.denominator == 1 else qc
            quot[qm] = quot.get(qm, 0) + qc
            rem = rem - MPoly({qm: qc}, _clean=True) * other
        return MPoly(quot)

    # substitution and evaluation --------------------------------------------
    def subs(self, mapping: Mapping[Gen, object]):
        """Substitute generators; values may be numbers, MPoly or RatFunc."""
        idmap = {gid(g): v for g, v in mapping.items()}
        cache: dict = {}

        def power(i, e):
            key = (i, e)
            if key not in cache:
                v = idmap[i]
                if e >= 0:
                    r = 1
                    for _ in range(e):
                        r = r * v
                else:
                    r = 1
                    for _ in range(-e):
                        r = r * v
                    r = Fraction(1) / r if isinstance(r, (int, Fraction)) else 1 / r
                cache[key] = r
            return cache[key]

        total = MPoly()
        keep_t: dict = {}
        for m, c in self._t.items():
            val = None
            rest = []
            for g, e in m:
                if g in idmap:
                    p = power(g, e)
                    val = p if val is None else val * p
                else:
                    rest.append((g, e))
            if val is None:
                keep_t[m] = c
                continue
            term = MPoly({tuple(rest): c}, _clean=True) * val if rest else val * c
            total = total + term
        if keep_t:
            total = total + MPoly(keep_t, _clean=True)
        if isinstance(total, MPoly) and total.is_const():
            return total
        return total

    def eval_at(self, point: Mapping[Gen, object]) -> Fraction:
        """Exact value at a rational point assigning every generator present."""
        vals = {gid(g): Fraction(v) for g, v in point.items()}
        total = Fraction(0)
        for m, c in self._t.items():
            term = Fraction(c)
            for g, e in m:
                if g not in vals:
                    raise KeyError(f"no value assigned to {gen_of(g)}")
                v = vals[g]
                if e < 0 and v == 0:
                    raise ZeroDivisionError(f"zero assigned to invertible {gen_of(g)}")
                term *= v**e
            total += term
        return total

    # text form -------------------------------------------------------------
    def sorted_terms(self) -> list[tuple[Mono, object]]:
        return sorted(self._t.items(), key=lambda mc: mono_key(mc[0]))

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"MPoly({to_text(self)!r})"


def gen(g: Gen, e: int = 1) -> MPoly:
    return MPoly.gen(g, e)


def const(c) -> MPoly:
    return MPoly.const(c)


def to_text(p: MPoly) -> str:
    """Canonical text: ``coef*gen^e*...+...``, coefficients as ``p/q``."""
    if not p.terms:
        return "0"
    parts = []
    for m, c in p.sorted_terms():
        factors = []
        for g, e in sorted((gen_of(g), e) for g, e in m):
            factors.append(str(g) if e == 1 else f"{g}^{e}")
        cs = str(Fraction(c))
        if factors:
            if cs == "1":
                body = "*".join(factors)
            elif cs == "-1":
                body = "-" + "*".join(factors)
            else:
                body = cs + "*" + "*".join(factors)
        else:
            body = cs
        parts.append(body)
    out = parts[0]
    for s in parts[1:]:
        out += s if s.startswith("-") else "+" + s
    return out


_TERM_SPLIT = re.compile(r"(?<=[^\^*/\[,(])(?=[+-])")


def from_text(text: str) -> MPoly:
    text = text.replace(" ", "")
    if text in ("", "0"):
        return MPoly()
    total = MPoly()
    for term in _TERM_SPLIT.split(text):
        sign = 1
        if term.startswith("+"):
            term = term[1:]
        elif term.startswith("-"):
            sign, term = -1, term[1:]
        coef = Fraction(sign)
        powers: dict[Gen, int] = {}
        for factor in term.split("*"):
            if re.fullmatch(r"\d+(/\d+)?", factor):
                coef *= Fraction(factor)
                continue
            if "^" in factor:
                base, e = factor.rsplit("^", 1)
                g, ee = parse_gen(base), int(e)
            else:
                g, ee = parse_gen(factor), 1
            powers[g] = powers.get(g, 0) + ee
        total = total + MPoly.monomial(powers, coef)
    return total


def poly_sum(items: Iterable) -> MPoly:
    t: dict = {}
    for p in items:
        if isinstance(p, (int, Fraction)):
            p = MPoly.const(p)
        for m, c in p.terms.items():
            nc = t.get(m, 0) + c
            if nc:
                t[m] = nc
            else:
                t.pop(m, None)
    return MPoly(t, _clean=True)
