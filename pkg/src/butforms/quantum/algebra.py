"""Noncommutative polynomials modulo the quantum quadratic relations.

Letters are the free entries a[i,j] of a shape, ordered by (row, col).  A
word is in normal form when its letters are non-decreasing.  Each
out-of-order pair x y (x > y) is rewritten with the relation instance whose
left side pairs y = a[i,s] with x = a[j,t]:

    q^(d_sj + d_ij) a_is a_jt - q^(d_st + d_it) a_jt a_is = RHS(i,s,j,t).

Coefficients are Laurent polynomials in q; the inverses of quantum
determinants enter as central invertible symbols (see ``matrices``).
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from ..kernel.gens import Gen, Q, a_gen
from ..kernel.mpoly import MPoly, to_text
from ..shapes import ButShape

Word = tuple[int, ...]

STEP_BOUND = 200_000

_q = MPoly.gen(Q)
_qi = MPoly.gen(Q, -1)
_ONE = MPoly.const(1)


def qpow(e: int) -> MPoly:
    return MPoly.gen(Q, e) if e else _ONE


def _d(a, b) -> int:
    return int(a == b)


def _gt(a, b) -> int:
    return int(a > b)


class RewritingBound(RuntimeError):
    """The rewriting step bound was exceeded."""


class NCPoly:
    """Sum of coefficient * word over a fixed :class:`QAlgebra`.  Arithmetic
    returns normal forms."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: "QAlgebra", terms: dict | None = None):
        self.alg = alg
        self.terms: dict[Word, MPoly] = {w: c for w, c in (terms or {}).items() if c}

    # construction ----------------------------------------------------------
    @classmethod
    def const(cls, alg, c) -> "NCPoly":
        c = c if isinstance(c, MPoly) else MPoly.const(c)
        return cls(alg, {(): c} if c else {})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other) -> "NCPoly":
        if isinstance(other, NCPoly):
            return other
        return NCPoly.const(self.alg, other)

    # arithmetic ---------------------------------------------------------------
    def __add__(self, other) -> "NCPoly":
        o = self._coerce(other)
        t = dict(self.terms)
        for w, c in o.terms.items():
            v = t.get(w, MPoly()) + c
            if v:
                t[w] = v
            else:
                t.pop(w, None)
        return NCPoly(self.alg, t)

    __radd__ = __add__

    def __neg__(self) -> "NCPoly":
        return NCPoly(self.alg, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other) -> "NCPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "NCPoly":
        return self._coerce(other) - self

    def scale(self, c) -> "NCPoly":
        c = c if isinstance(c, MPoly) else MPoly.const(c)
        if not c:
            return NCPoly(self.alg)
        return NCPoly(self.alg, {w: v * c for w, v in self.terms.items()})

    def __mul__(self, other) -> "NCPoly":
        if not isinstance(other, NCPoly):
            return self.scale(other)
        acc: dict[Word, MPoly] = {}
        self.alg.reset_steps()
        nf = self.alg.nf_word
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                c = c1 * c2
                for w, d in nf(w1 + w2).items():
                    v = acc.get(w, MPoly()) + c * d
                    if v:
                        acc[w] = v
                    else:
                        acc.pop(w, None)
        return NCPoly(self.alg, acc)

    def __rmul__(self, other) -> "NCPoly":
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, MPoly)):
            other = NCPoly.const(self.alg, other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("NCPoly is not hashable")

    def normal(self) -> "NCPoly":
        """Normal form (terms entered by hand may hold unordered words)."""
        return NCPoly(self.alg, {}) + sum_terms(self.alg, self.terms)

    def coeff_map(self, fn) -> "NCPoly":
        return NCPoly(self.alg, {w: fn(c) for w, c in self.terms.items()})

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            word = " ".join(str(self.alg.letters[x]) for x in w) or "1"
            parts.append(f"({to_text(self.terms[w])}) * {word}")
        return " + ".join(parts)

    __str__ = to_text

    def __repr__(self) -> str:
        return f"NCPoly({self.to_text()})"


def sum_terms(alg, terms: dict) -> NCPoly:
    acc: dict[Word, MPoly] = {}
    for w0, c in terms.items():
        for w, d in alg.nf_word(w0).items():
            v = acc.get(w, MPoly()) + c * d
            if v:
                acc[w] = v
            else:
                acc.pop(w, None)
    return NCPoly(alg, acc)


@dataclass
class QAlgebra:
    """The quadratic algebra of a shape: letters are its free entries,
    masked entries are 0 and pinned diagonal entries are 1."""

    shape: ButShape
    step_bound: int | None = None  # None: the module default STEP_BOUND
    qdet_reduce: bool = False
    letters: tuple = field(init=False)
    index: dict = field(init=False)
    rules: dict = field(init=False)

    def __post_init__(self):
        if self.step_bound is None:
            self.step_bound = STEP_BOUND
        gens = sorted(self.shape.free_gens, key=lambda g: (g.row, g.col))
        self.letters = tuple(gens)
        self.index = {g: k for k, g in enumerate(gens)}
        self._steps = 0
        self.rules = self._derive_rules()
        self.plain_word = lru_cache(maxsize=None)(self._nf_word)
        if self.qdet_reduce:
            self._det_blocks = self._qdet_blocks()
            self._red_word = lru_cache(maxsize=None)(self._det_reduce_word)
            self.nf_word = lru_cache(maxsize=None)(self._reduced_nf)
        else:
            self.nf_word = self.plain_word

    @property
    def N(self) -> int:
        return self.shape.N

    # entries -------------------------------------------------------------------
    def entry_terms(self, i: int, j: int) -> dict:
        """a[i,j] as {word: coeff}: a letter, the constant 1, or nothing."""
        if not (1 <= i <= self.N and 1 <= j <= self.N):
            return {}
        if self.shape.kind == "symmetric":
            raise ValueError("the quantum algebra is defined for block shapes")
        if not self.shape.admitted(i, j):
            return {}
        if self.shape.unit_entry(i, j):
            return {(): _ONE}
        return {(self.index[a_gen(i, j)],): _ONE}

    def entry(self, i: int, j: int) -> NCPoly:
        return NCPoly(self, self.entry_terms(i, j))

    def gen(self, g: Gen) -> NCPoly:
        return self.entry(g.row, g.col)

    def matrix(self) -> list[list[NCPoly]]:
        return [[self.entry(i, j) for j in range(1, self.N + 1)] for i in range(1, self.N + 1)]

    # relations -------------------------------------------------------------------
    def relation_sides(self, i: int, s: int, j: int, t: int) -> tuple[dict, dict]:
        """Both sides of the instance (i, s, j, t) as raw {word: coeff} maps
        (words need not be ordered)."""
        q, qi = _q, _qi
        e = self.entry_terms
        h = q - qi

        def prod2(x, y, c):
            out = {}
            for w1, c1 in e(*x).items():
                for w2, c2 in e(*y).items():
                    out[w1 + w2] = out.get(w1 + w2, MPoly()) + c * c1 * c2
            return out

        def merge(*parts):
            out: dict = {}
            for p in parts:
                for w, c in p.items():
                    out[w] = out.get(w, MPoly()) + c
            return {w: c for w, c in out.items() if c}

        lhs = merge(
            prod2((i, s), (j, t), qpow(_d(s, j) + _d(i, j))),
            prod2((j, t), (i, s), -qpow(_d(s, t) + _d(i, t))),
        )
        k1 = _gt(t, s) - _gt(i, j)
        parts = []
        if k1:
            parts.append(prod2((j, s), (i, t), h * qpow(_d(s, i)) * k1))
        if _gt(t, i):
            parts.append(prod2((j, i), (t, s), h * qpow(_d(s, t))))
        if _gt(s, j):
            parts.append(prod2((i, j), (s, t), -h * qpow(_d(i, j))))
        if _gt(s, i) and k1:
            parts.append(prod2((j, i), (s, t), h * h * k1))
        return lhs, merge(*parts)

    def relation(self, i: int, s: int, j: int, t: int) -> dict:
        """LHS - RHS of the instance, unreduced."""
        lhs, rhs = self.relation_sides(i, s, j, t)
        out = dict(lhs)
        for w, c in rhs.items():
            out[w] = out.get(w, MPoly()) - c
        return {w: c for w, c in out.items() if c}

    def _derive_rules(self) -> dict:
        rules = {}
        for y, gy in enumerate(self.letters):
            for x in range(y + 1, len(self.letters)):
                gx = self.letters[x]
                i, s, j, t = gy.row, gy.col, gx.row, gx.col
                rel = self.relation(i, s, j, t)
                c = rel.pop((x, y), None)
                if not c:
                    raise ValueError(f"instance {(i, s, j, t)} does not contain the product {gx} {gy}")
                # c * x y + rest = 0  ->  x y = -rest / c
                inv = c ** -1 if len(c) == 1 else None
                if inv is None:
                    raise ValueError(f"non-monomial leading coefficient {c}")
                rules[(x, y)] = {w: -v * inv for w, v in rel.items()}
        return rules

    # normal form ---------------------------------------------------------------------
    def _nf_word(self, w: Word) -> dict:
        for p in range(len(w) - 1):
            if w[p] > w[p + 1]:
                break
        else:
            return {w: _ONE}
        self._steps += 1
        if self._steps > self.step_bound:
            self._steps = 0
            raise RewritingBound(f"more than {self.step_bound} rewriting steps")
        head, tail = w[:p], w[p + 2:]
        acc: dict[Word, MPoly] = {}
        for mid, c in self.rules[(w[p], w[p + 1])].items():
            for v, d in self.plain_word(head + mid + tail).items():
                s = acc.get(v, MPoly()) + c * d
                if s:
                    acc[v] = s
                else:
                    acc.pop(v, None)
        return acc

    # reduction modulo the block determinants ------------------------------------------
    def _qdet_blocks(self) -> list:
        """(diagonal letters, determinant terms, symbol) for every 2 x 2
        diagonal block; larger blocks are added by ``register_det``."""
        from .matrices import qdet_symbol

        out = []
        for I in range(1, self.shape.n + 1):
            rows = self.shape.block_indices(I)
            if len(rows) != 2:
                continue
            r = rows[0]
            x = [self.index[a_gen(r + i, r + j)] for i in (0, 1) for j in (0, 1)]
            terms = {(x[0], x[3]): _ONE, (x[1], x[2]): -qpow(2)}
            out.append(((x[0], x[3]), terms, MPoly.gen(qdet_symbol(r))))
        return out

    def register_det(self, r: int, size: int, terms: dict) -> None:
        """Reduce modulo a further central block determinant (rows r..r+size-1)
        whose normal form contains the product of the diagonal letters."""
        from .matrices import qdet_symbol

        if not self.qdet_reduce:
            raise ValueError("determinant reduction is off for this algebra")
        diag = tuple(self.index[a_gen(r + i, r + i)] for i in range(size))
        self._det_blocks.append((diag, dict(terms), MPoly.gen(qdet_symbol(r))))
        self._red_word.cache_clear()
        self.nf_word.cache_clear()

    def _det_reduce_word(self, w: Word) -> dict:
        """Rewrite an ordered word holding all diagonal letters of a block
        through det * w' = w + (other ordered words), det -> symbol."""
        for diag, det, sym in self._det_blocks:
            if all(x in w for x in diag):
                break
        else:
            return {w: _ONE}
        self._steps += 1
        if self._steps > self.step_bound:
            self._steps = 0
            raise RewritingBound(f"more than {self.step_bound} determinant reductions")
        rest = list(w)
        for x in diag:
            rest.remove(x)
        rest = tuple(rest)
        P: dict[Word, MPoly] = {}
        for mid, c in det.items():
            for v, d in self.plain_word(mid + rest).items():
                P[v] = P.get(v, MPoly()) + c * d
        lead = P.pop(w, MPoly())
        if len(lead) != 1:
            raise ValueError(f"non-monomial determinant coefficient {lead}")
        inv = lead ** -1
        terms = {rest: sym * inv}
        for v, c in P.items():
            if c:
                terms[v] = terms.get(v, MPoly()) - c * inv
        acc: dict[Word, MPoly] = {}
        for v, c in terms.items():
            for u, d in self._red_word(v).items():
                s = acc.get(u, MPoly()) + c * d
                if s:
                    acc[u] = s
                else:
                    acc.pop(u, None)
        return acc

    def _reduced_nf(self, w: Word) -> dict:
        acc: dict[Word, MPoly] = {}
        for v, c in self.plain_word(w).items():
            for u, d in self._red_word(v).items():
                s = acc.get(u, MPoly()) + c * d
                if s:
                    acc[u] = s
                else:
                    acc.pop(u, None)
        return acc

    def reset_steps(self) -> None:
        self._steps = 0

    def poly(self, terms: dict) -> NCPoly:
        self.reset_steps()
        return sum_terms(self, terms)

    def word(self, *gens: Gen) -> NCPoly:
        return self.poly({tuple(self.index[g] for g in gens): _ONE})

    # checks ---------------------------------------------------------------------------
    def relation_residues(self, quadruples=None):
        """Instances whose normal form is not zero (masked ones included)."""
        rng = range(1, self.N + 1)
        bad = []
        for quad in quadruples or product(rng, repeat=4):
            r = self.poly(self.relation(*quad))
            if r:
                bad.append((quad, r))
        return bad

    def diamond(self, w: Word) -> bool:
        """Reduce the leftmost and the rightmost descent of a word first; the
        two normal forms must agree."""
        descents = [p for p in range(len(w) - 1) if w[p] > w[p + 1]]
        if len(descents) < 2:
            return True
        outs = []
        for p in (descents[0], descents[-1]):
            terms = {w[:p] + mid + w[p + 2:]: c for mid, c in self.rules[(w[p], w[p + 1])].items()}
            outs.append(self.poly(terms))
        return outs[0] == outs[1]


def with_recursion(limit: int = 20000):
    if sys.getrecursionlimit() < limit:
        sys.setrecursionlimit(limit)


with_recursion()


_ALGEBRAS: dict = {}


def set_step_bound(bound: int) -> None:
    """Rewriting step bound for new and cached algebras."""
    global STEP_BOUND
    if bound <= 0:
        raise ValueError("step bound must be positive")
    STEP_BOUND = bound
    for alg in _ALGEBRAS.values():
        alg.step_bound = bound


def algebra_for(shape: ButShape, qdet_reduce: bool = False) -> QAlgebra:
    key = (shape, qdet_reduce)
    if key not in _ALGEBRAS:
        _ALGEBRAS[key] = QAlgebra(shape, qdet_reduce=qdet_reduce)
    return _ALGEBRAS[key]
