"""Classical r-matrix and trigonometric R-matrix on tensor powers of C^N.

A :class:`QTensor` is an operator on the tensor product of ``spaces`` copies
of C^N, stored sparsely.  Basis vectors e_{i1} x ... x e_{is} are flattened
row-major with the first slot major: flat = sum_s (i_s - 1) N^(spaces-1-s).
The entry at (row, col) of E_ij x E_kl is therefore ((i,k), (j,l)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .brackets import full_bracket
from .kernel.gens import LAM, MU, NU, Q, a_gen
from .kernel.mpoly import MPoly, to_text

Index = tuple[int, ...]
_HALF = Fraction(1, 2)


def _poly(x) -> MPoly:
    return x if isinstance(x, MPoly) else MPoly.const(x)


@dataclass
class QTensor:
    N: int
    spaces: int = 2
    data: dict = field(default_factory=dict)  # {(row multi-index, col multi-index): MPoly}

    # construction ----------------------------------------------------------
    @classmethod
    def zero(cls, N: int, spaces: int = 2) -> "QTensor":
        return cls(N, spaces, {})

    @classmethod
    def identity(cls, N: int, spaces: int = 2) -> "QTensor":
        return cls(N, spaces, {(ix, ix): MPoly.const(1) for ix in product(range(1, N + 1), repeat=spaces)})

    @classmethod
    def kron(cls, *mats) -> "QTensor":
        """M_1 x M_2 x ... for N x N matrices given as lists of rows."""
        N = len(mats[0])
        data = {}
        for rows in product(range(1, N + 1), repeat=len(mats)):
            for cols in product(range(1, N + 1), repeat=len(mats)):
                v = MPoly.const(1)
                for M, r, c in zip(mats, rows, cols):
                    x = M[r - 1][c - 1]
                    if not x:
                        v = None
                        break
                    v = v * x
                if v:
                    data[(rows, cols)] = v
        return cls(N, len(mats), data)

    def add_unit(self, rows: Index, cols: Index, coeff) -> None:
        c = _poly(coeff)
        key = (rows, cols)
        v = self.data.get(key, MPoly()) + c
        if v:
            self.data[key] = v
        else:
            self.data.pop(key, None)

    # arithmetic ------------------------------------------------------------
    def _same(self, other: "QTensor") -> None:
        if (self.N, self.spaces) != (other.N, other.spaces):
            raise ValueError("tensor shapes differ")

    def __add__(self, other: "QTensor") -> "QTensor":
        self._same(other)
        out = QTensor(self.N, self.spaces, dict(self.data))
        for k, v in other.data.items():
            out.add_unit(*k, v)
        return out

    def __neg__(self) -> "QTensor":
        return QTensor(self.N, self.spaces, {k: -v for k, v in self.data.items()})

    def __sub__(self, other: "QTensor") -> "QTensor":
        return self + (-other)

    def scale(self, c) -> "QTensor":
        c = _poly(c)
        out = QTensor(self.N, self.spaces)
        for k, v in self.data.items():
            out.add_unit(*k, v * c)
        return out

    def __matmul__(self, other: "QTensor") -> "QTensor":
        self._same(other)
        by_row: dict = {}
        for (r, c), v in other.data.items():
            by_row.setdefault(r, []).append((c, v))
        acc: dict = {}
        for (r, mid), v in self.data.items():
            for c, w in by_row.get(mid, ()):
                key = (r, c)
                acc[key] = acc.get(key, MPoly()) + v * w
        return QTensor(self.N, self.spaces, {k: v for k, v in acc.items() if v})

    def __eq__(self, other) -> bool:
        if not isinstance(other, QTensor):
            return NotImplemented
        return (self.N, self.spaces) == (other.N, other.spaces) and (self - other).data == {}

    def is_zero(self) -> bool:
        return not self.data

    def entry(self, rows: Index, cols: Index) -> MPoly:
        return self.data.get((tuple(rows), tuple(cols)), MPoly())

    # index operations ----------------------------------------------------------
    def transpose(self, slots=None) -> "QTensor":
        """Transpose in the given slots (1-based); all slots when None."""
        slots = set(range(1, self.spaces + 1)) if slots is None else set(slots)
        out = {}
        for (r, c), v in self.data.items():
            r2, c2 = list(r), list(c)
            for s in slots:
                r2[s - 1], c2[s - 1] = c[s - 1], r[s - 1]
            out[(tuple(r2), tuple(c2))] = v
        return QTensor(self.N, self.spaces, out)

    def partial_trace(self, slot: int):
        """Trace over one slot.  A two-space tensor traces down to an N x N
        matrix (list of rows); larger ones to a QTensor."""
        acc: dict = {}
        for (r, c), v in self.data.items():
            if r[slot - 1] != c[slot - 1]:
                continue
            key = (r[: slot - 1] + r[slot:], c[: slot - 1] + c[slot:])
            acc[key] = acc.get(key, MPoly()) + v
        if self.spaces == 2:
            M = [[MPoly() for _ in range(self.N)] for _ in range(self.N)]
            for (r, c), v in acc.items():
                M[r[0] - 1][c[0] - 1] = v
            return M
        return QTensor(self.N, self.spaces - 1, {k: v for k, v in acc.items() if v})

    def embed(self, slots: tuple[int, int], spaces: int = 3) -> "QTensor":
        """Two-space tensor acting on ``slots`` of a ``spaces``-fold product."""
        if self.spaces != 2:
            raise ValueError("embed expects a two-space tensor")
        others = [s for s in range(1, spaces + 1) if s not in slots]
        out = {}
        for (r, c), v in self.data.items():
            for rest in product(range(1, self.N + 1), repeat=len(others)):
                rr, cc = [0] * spaces, [0] * spaces
                for s, a, b in zip(slots, r, c):
                    rr[s - 1], cc[s - 1] = a, b
                for s, x in zip(others, rest):
                    rr[s - 1] = cc[s - 1] = x
                out[(tuple(rr), tuple(cc))] = v
        return QTensor(self.N, spaces, out)

    def subs(self, mapping) -> "QTensor":
        out = QTensor(self.N, self.spaces)
        for k, v in self.data.items():
            out.add_unit(*k, _poly(v.subs(mapping)))
        return out

    def flat(self, ix: Index) -> int:
        f = 0
        for i in ix:
            f = f * self.N + (i - 1)
        return f

    def triplets(self) -> list[tuple[int, int, str]]:
        """Sparse (row, col, text) triplets with flattened 0-based indices."""
        out = [(self.flat(r), self.flat(c), to_text(v)) for (r, c), v in self.data.items()]
        return sorted(out)


# r and R -------------------------------------------------------------------------------


def classical_r(N: int) -> QTensor:
    """sum_i E_ii x E_ii + 2 sum_{i>j} E_ij x E_ji."""
    r = QTensor.zero(N)
    for i in range(1, N + 1):
        r.add_unit((i, i), (i, i), 1)
        for j in range(1, i):
            r.add_unit((i, j), (j, i), 2)
    return r


def quantum_R(N: int, lam=None, mu=None) -> QTensor:
    """The trigonometric R(lam, mu) with formal q; spectral arguments are
    MPoly values (default: the generators lam and mu)."""
    lam = MPoly.gen(LAM) if lam is None else _poly(lam)
    mu = MPoly.gen(MU) if mu is None else _poly(mu)
    q = MPoly.gen(Q)
    qi = MPoly.gen(Q, -1)
    R = QTensor.zero(N)
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            if i == j:
                R.add_unit((i, i), (i, i), qi * lam - q * mu)
            else:
                R.add_unit((i, j), (i, j), lam - mu)
                # E_ij x E_ji sits at rows (i, j), cols (j, i)
                R.add_unit((i, j), (j, i), (qi - q) * (lam if i < j else mu))
    return R


def _report(name, checked, witness, **extra):
    rep = {"check": name, "status": "pass" if witness is None else "fail", "checked": checked, "witness": witness}
    rep.update(extra)
    return rep


def ybe_check(N: int) -> dict:
    """R12(lam,mu) R13(lam,nu) R23(mu,nu) = R23(mu,nu) R13(lam,nu) R12(lam,mu)."""
    lam, mu, nu = MPoly.gen(LAM), MPoly.gen(MU), MPoly.gen(NU)
    R12 = quantum_R(N, lam, mu).embed((1, 2))
    R13 = quantum_R(N, lam, nu).embed((1, 3))
    R23 = quantum_R(N, mu, nu).embed((2, 3))
    diff = R12 @ R13 @ R23 - R23 @ R13 @ R12
    wit = None
    if not diff.is_zero():
        (r, c), v = sorted(diff.data.items())[0]
        wit = {"row": list(r), "col": list(c), "residue": to_text(v)}
    return _report("yang-baxter", 1, wit, N=N)


def q_one_check(N: int) -> dict:
    """R(lam, mu) at q = 1 equals (lam - mu) times the identity."""
    lhs = quantum_R(N).subs({Q: 1})
    rhs = QTensor.identity(N).scale(MPoly.gen(LAM) - MPoly.gen(MU))
    return _report("r-matrix-q1", 1, None if lhs == rhs else {"N": N}, N=N)


# the classical bracket in tensor form ------------------------------------------------------


def generic_matrix(N: int):
    return [[MPoly.gen(a_gen(i, j)) for j in range(1, N + 1)] for i in range(1, N + 1)]


def _identity_matrix(N: int):
    return [[MPoly.const(int(i == j)) for j in range(N)] for i in range(N)]


def rmatrix_bracket(A) -> QTensor:
    """-(A2 A1 r - r A1 A2 + A2 r^T1 A1 - A1 r^T1 A2); the entry at
    ((i,k), (j,l)) is {a_ij, a_kl}."""
    N = len(A)
    E = _identity_matrix(N)
    A1, A2 = QTensor.kron(A, E), QTensor.kron(E, A)
    r = classical_r(N)
    rT1 = r.transpose([1])
    return -(A2 @ A1 @ r - r @ A1 @ A2 + A2 @ rT1 @ A1 - A1 @ rT1 @ A2)


def rmatrix_bracket_check(N: int) -> dict:
    """The unpacked tensor bracket against the coordinate bracket for every
    index quadruple on the unrestricted N x N matrix."""
    T = rmatrix_bracket(generic_matrix(N))
    checked = 0
    for i, j, k, l in product(range(1, N + 1), repeat=4):
        checked += 1
        if T.entry((i, k), (j, l)) != full_bracket(i, j, k, l):
            return _report("rmatrix-bracket", checked, {"quadruple": [i, j, k, l]}, N=N)
    return _report("rmatrix-bracket", checked, None, N=N)


def _in_slot(X, slot: int) -> QTensor:
    E = _identity_matrix(len(X))
    return QTensor.kron(X, E) if slot == 1 else QTensor.kron(E, X)


def r_operators(X, which: str):
    """The four partial-trace operators: ``1+`` = Tr_2(r^T X_2)/2,
    ``2+`` = Tr_1(r X_1)/2, ``1-`` = Tr_2(r X_2)/2, ``2-`` = Tr_1(r^T X_1)/2.
    Here r^T is the transpose in both spaces."""
    N = len(X)
    r = classical_r(N)
    rT = r.transpose()
    table = {"1+": (rT, 2), "2+": (r, 1), "1-": (r, 2), "2-": (rT, 1)}
    if which not in table:
        raise ValueError(f"unknown r-operator {which!r}")
    rr, slot = table[which]
    M = (rr @ _in_slot(X, slot)).partial_trace(slot)
    return [[x.scale(_HALF) for x in row] for row in M]


def _matmul(X, Y):
    n = len(X)
    return [[sum((X[i][k] * Y[k][j] for k in range(n)), MPoly()) for j in range(n)] for i in range(n)]


def _transpose(X):
    return [list(r) for r in zip(*X)]


def p_map_slot1(A, w):
    """g in space 1: 1r-(w A) - 1r+(w^T A^T)."""
    a = r_operators(_matmul(w, A), "1-")
    b = r_operators(_matmul(_transpose(w), _transpose(A)), "1+")
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(a, b)]


def p_map_slot2(A, w):
    """g in space 2: 2r-(w A) - 2r+(w^T A^T), both arguments living in space 1."""
    a = r_operators(_matmul(w, A), "2-")
    b = r_operators(_matmul(_transpose(w), _transpose(A)), "2+")
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(a, b)]


def r_operator_reconstruction(N: int) -> dict:
    """Both tensor formulas for the P-map agree with the direct projection
    formula on symbolic A and w."""
    from .algebroid import p_map
    from .kernel.gens import aux

    A = generic_matrix(N)
    w = [[MPoly.gen(aux("w", i, j)) for j in range(1, N + 1)] for i in range(1, N + 1)]
    direct = [[_poly(x) for x in row] for row in p_map(A, w)]
    for name, fn in (("slot1", p_map_slot1), ("slot2", p_map_slot2)):
        got = fn(A, w)
        if got != direct:
            return _report("r-operators", 1, {"formula": name}, N=N)
    return _report("r-operators", 2, None, N=N)


def projection_identities(N: int) -> dict:
    """1r- = 2r- = P_- and 1r+ = 2r+ = P_+ on a symbolic matrix."""
    from .algebroid import project_half
    from .kernel.gens import aux

    X = [[MPoly.gen(aux("x", i, j)) for j in range(1, N + 1)] for i in range(1, N + 1)]
    want = {"-": project_half(X, -1), "+": project_half(X, 1)}
    for which in ("1-", "2-", "1+", "2+"):
        got = r_operators(X, which)
        exp = [[_poly(x) for x in row] for row in want[which[1]]]
        if got != exp:
            return _report("r-operator-projections", 1, {"operator": which}, N=N)
    return _report("r-operator-projections", 4, None, N=N)



# reflection equation at level zero -----------------------------------------------------------
def _nc_slot(alg, slot: int) -> dict:
    """A_1 or A_2 as {((i,k),(j,l)): {word: coeff}} over the quantum algebra."""
    N = alg.N
    ix = list(product(range(1, N + 1), repeat=2))
    out = {}
    for (i, k), (j, l) in product(ix, repeat=2):
        x = (i, j) if slot == 1 else (k, l)
        same = k == l if slot == 1 else i == j
        if same and alg.entry_terms(*x):
            out[((i, k), (j, l))] = alg.entry_terms(*x)
    return out


def _nc_scalar(T: QTensor) -> dict:
    return {k: {(): v} for k, v in T.data.items()}


def _nc_mul(X: dict, Y: dict) -> dict:
    by_row: dict = {}
    for (m, c), y in Y.items():
        by_row.setdefault(m, []).append((c, y))
    out: dict = {}
    for (r, m), x in X.items():
        for c, y in by_row.get(m, ()):
            d = out.setdefault((r, c), {})
            for w1, c1 in x.items():
                for w2, c2 in y.items():
                    d[w1 + w2] = d.get(w1 + w2, MPoly()) + c1 * c2
    return out


def reflection_coefficients(N: int = 2) -> dict:
    """R(l,m) A_1 R(1/l,m)^T1 A_2 - A_2 R(1/l,m)^T1 A_1 R(l,m), with A the
    level-zero matrix, split by the (lambda, mu) monomial:
    {(deg lam, deg mu): {tensor entry: {word: coeff in q}}}."""
    from .quantum.algebra import algebra_for
    from .shapes import ButShape

    alg = algebra_for(ButShape.full(N))
    R = _nc_scalar(quantum_R(N))
    Rt = _nc_scalar(quantum_R(N, MPoly.gen(LAM, -1), MPoly.gen(MU)).transpose((1,)))
    A1, A2 = _nc_slot(alg, 1), _nc_slot(alg, 2)
    left = _nc_mul(_nc_mul(_nc_mul(R, A1), Rt), A2)
    right = _nc_mul(_nc_mul(_nc_mul(A2, Rt), A1), R)
    out: dict = {}
    for key in set(left) | set(right):
        diff = dict(left.get(key, {}))
        for w, c in right.get(key, {}).items():
            diff[w] = diff.get(w, MPoly()) - c
        for w, c in diff.items():
            for e_lam, part in c.collect(LAM).items():
                for e_mu, rest in part.collect(MU).items():
                    if rest:
                        slot = out.setdefault((e_lam, e_mu), {}).setdefault(key, {})
                        slot[w] = slot.get(w, MPoly()) + rest
    return out


def _rows_at(rows: list[dict], words: list, qval) -> list[list[Fraction]]:
    return [[Fraction(r.get(w, MPoly()).subs({Q: qval}).const_value()) if r.get(w) else Fraction(0) for w in words] for r in rows]


def reflection_consistency(N: int = 2, q_value: int = 3) -> dict:
    """Leading (top total degree in lambda, mu) coefficients of the
    reflection equation against the quadratic relation set.

    Every extracted coefficient must normal-form to 0, and the extracted
    span must have the rank of the relation span (checked at q = q_value;
    a specialization can only lower rank, so equality is exact)."""
    from .kernel.linalg import rank
    from .quantum.algebra import algebra_for
    from .shapes import ButShape

    if N != 2:
        raise ValueError("reflection consistency is evaluated at N = 2")
    alg = algebra_for(ButShape.full(N))
    coeffs = reflection_coefficients(N)
    top = max(a + b for a, b in coeffs)
    words = list(product(range(len(alg.letters)), repeat=2))
    relations = [alg.relation(*quad) for quad in product(range(1, N + 1), repeat=4)]
    rel_rank = rank(_rows_at(relations, words, q_value))
    levels = {}
    extracted = []
    for (a, b), entries in sorted(coeffs.items()):
        rows = [{w: c for w, c in e.items() if c} for e in entries.values()]
        outside = sum(1 for r in rows if alg.poly(r))
        levels[f"lam^{a} mu^{b}"] = {"coefficients": len(rows), "outside_ideal": outside, "top": a + b == top}
        if a + b == top:
            extracted += rows
    ext_rank = rank(_rows_at(extracted, words, q_value))
    joint_rank = rank(_rows_at(extracted + relations, words, q_value))
    ok = all(v["outside_ideal"] == 0 for v in levels.values() if v["top"]) and ext_rank == rel_rank == joint_rank
    wit = None if ok else {"extracted_rank": ext_rank, "relation_rank": rel_rank, "joint_rank": joint_rank}
    return _report(
        "reflection-consistency",
        len(extracted),
        wit,
        N=N,
        levels=levels,
        extracted_rank=ext_rank,
        relation_rank=rel_rank,
        ordered_words=len(words) - rel_rank,
    )


def relation_in_extracted_span(quad, N: int = 2, q_value: int = 3) -> bool:
    """The relation instance ``quad`` lies in the span of the leading
    reflection coefficients (rank test at q = q_value)."""
    from .kernel.linalg import rank
    from .quantum.algebra import algebra_for
    from .shapes import ButShape

    alg = algebra_for(ButShape.full(N))
    coeffs = reflection_coefficients(N)
    top = max(a + b for a, b in coeffs)
    rows = [e for (a, b), entries in coeffs.items() if a + b == top for e in entries.values()]
    words = list(product(range(len(alg.letters)), repeat=2))
    base = rank(_rows_at(rows, words, q_value))
    return rank(_rows_at(rows + [alg.relation(*quad)], words, q_value)) == base
