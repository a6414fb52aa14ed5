"""Quantum braid action on block matrices of noncommutative polynomials.

The generator for blocks (I, I+1) acts by A -> B A B^dagger where, on the
rows and columns of blocks I and I+1,

    B = [[q^-a A_{I,I+1}^dag A_II^-dag, -q^-a E],
         [q^-b A_II A_II^-dag,            O     ]]

and B is the identity elsewhere.  Default exponents are b = m - 1, a = b + 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from ..shapes import ButShape
from .algebra import NCPoly, QAlgebra, algebra_for, qpow
from .matrices import (
    Matrix,
    UnsupportedBlock,
    conjugation_law_defects,
    get_block,
    hermitian,
    matrices_equal,
    put_block,
    qinverse,
    qinverse_dagger,
    qmatmul,
    qmatscale,
    relation_defects,
    unit_matrix,
    vanishes,
)


class BraidDefect(AssertionError):
    """A structural property of the image (mask, swapped diagonal) failed."""


def default_exponents(m: int) -> tuple[int, int]:
    if m not in (1, 2):
        raise UnsupportedBlock(f"quantum braid action is supported for m in (1, 2), got {m}")
    b = m - 1
    return b + 1, b


@dataclass
class QButMatrix:
    """Block upper triangular matrix over a quantum algebra."""

    alg: QAlgebra
    entries: Matrix

    @classmethod
    def generic(cls, shape: ButShape, qdet_reduce: bool = True) -> "QButMatrix":
        alg = algebra_for(shape, qdet_reduce)
        return cls(alg, alg.matrix())

    @property
    def shape(self) -> ButShape:
        return self.alg.shape

    def block(self, I: int, J: int) -> Matrix:
        return get_block(self.entries, self.shape, I, J)

    def dagger(self) -> Matrix:
        return hermitian(self.entries)

    def text(self) -> list[list[str]]:
        return [[p.to_text() for p in row] for row in self.entries]


def braid_matrix(X: QButMatrix, I: int, a: int, b: int, inverse_dagger=qinverse_dagger) -> Matrix:
    shape, alg = X.shape, X.alg
    N = shape.N
    m = len(shape.block_indices(I))
    B = unit_matrix(alg, N)
    Aii = X.block(I, I)
    inv_dag = inverse_dagger(alg, Aii)
    top = qmatscale(qmatmul(hermitian(X.block(I, I + 1)), inv_dag), qpow(-a))
    low = qmatscale(qmatmul(Aii, inv_dag), qpow(-b))
    put_block(B, shape, I, I, top)
    put_block(B, shape, I, I + 1, qmatscale(unit_matrix(alg, m), -qpow(-a)))
    put_block(B, shape, I + 1, I, low)
    put_block(B, shape, I + 1, I + 1, [[NCPoly(alg) for _ in range(m)] for _ in range(m)])
    return B


def quantum_braid_act(X: QButMatrix, I: int, a: int | None = None, b: int | None = None) -> QButMatrix:
    """Image of X under the generator for blocks (I, I+1).

    The diagonal blocks of the image are checked to be the swapped diagonal
    blocks of X and replaced by them verbatim, so that later inverses stay
    expressed through determinant symbols."""
    shape = X.shape
    if not shape.is_block or len(set(shape.sizes)) != 1:
        raise UnsupportedBlock("quantum braid action needs a uniform block shape")
    if not 1 <= I < shape.n:
        raise ValueError(f"block index {I} out of range for n = {shape.n}")
    m = shape.m
    da, db = default_exponents(m)
    a = da if a is None else a
    b = db if b is None else b
    return adjoint_act(X, I, a, b, qinverse_dagger)


def adjoint_act(X: QButMatrix, I: int, a: int, b: int, inverse_dagger) -> QButMatrix:
    """B X B^dagger for any block size, given the conjugated inverse of a
    diagonal block."""
    shape = X.shape
    m = shape.m
    B = braid_matrix(X, I, a, b, inverse_dagger)
    Y = qmatmul(qmatmul(B, X.entries), hermitian(B))
    for J in range(1, shape.n + 1):
        for K in range(1, J):
            if matrices_equal(get_block(Y, shape, J, K), [[NCPoly(X.alg)] * m] * m):
                raise BraidDefect(f"block ({J},{K}) of the image is not zero")
            put_block(Y, shape, J, K, [[NCPoly(X.alg) for _ in range(m)] for _ in range(m)])
    for J, src in ((I, I + 1), (I + 1, I)):
        want = X.block(src, src)
        if matrices_equal(get_block(Y, shape, J, J), want):
            raise BraidDefect(f"diagonal block {J} of the image is not block {src}")
        put_block(Y, shape, J, J, want)
    return QButMatrix(X.alg, Y)


def apply_word(X: QButMatrix, word, a=None, b=None) -> QButMatrix:
    """Apply generators right to left: word [I1, I2] means beta_I1 beta_I2."""
    for I in reversed(list(word)):
        X = quantum_braid_act(X, I, a, b)
    return X


def _report(check, shape, witness, checked, **extra) -> dict:
    out = {"check": check, "shape": shape.label(), "status": "fail" if witness else "pass", "checked": checked, "witness": witness}
    out.update(extra)
    return out


def all_quadruples(N: int):
    return list(product(range(1, N + 1), repeat=4))


def sampled_quadruples(N: int, count: int, seed: int):
    rng = random.Random(f"quadruples:{N}:{seed}")
    quads = all_quadruples(N)
    return quads if count >= len(quads) else rng.sample(quads, count)


def relation_preservation(shape: ButShape, I: int = 1, count: int | None = None, seed: int = 0, a=None, b=None) -> dict:
    """Every relation instance (or a seeded sample of ``count``) holds for
    the entries of the image."""
    X = QButMatrix.generic(shape)
    Y = quantum_braid_act(X, I, a, b)
    quads = all_quadruples(shape.N) if count is None else sampled_quadruples(shape.N, count, seed)
    bad = relation_defects(X.alg, Y.entries, quads)
    return _report("quantum.braid.relations", shape, [list(q) for q in bad[:5]], len(quads), generator=I)


def conjugation_preservation(shape: ButShape, I: int = 1, a=None, b=None) -> dict:
    X = QButMatrix.generic(shape)
    Y = quantum_braid_act(X, I, a, b)
    bad = conjugation_law_defects(X.alg, Y.entries)
    return _report("quantum.braid.conjugation", shape, [list(p) for p in bad[:5]], shape.N * shape.N, generator=I)


def automorphism_n2(m: int) -> dict:
    """For two blocks the action swaps the diagonal blocks and transposes
    the corner block."""
    shape = ButShape.uniform(2, m)
    X = QButMatrix.generic(shape)
    Y = quantum_braid_act(X, 1)
    want = [row[:] for row in X.entries]
    put_block(want, shape, 1, 1, X.block(2, 2))
    put_block(want, shape, 2, 2, X.block(1, 1))
    put_block(want, shape, 1, 2, [list(r) for r in zip(*X.block(1, 2))])
    bad = matrices_equal(Y.entries, want)
    return _report("quantum.braid.swap", shape, [list(p) for p in bad], shape.N * shape.N)


def middle_entry_law(m: int = 2) -> dict:
    """(A11 A11^-dag A13)^dag = q^-1 [A11 A11^-dag A13]^T at n = 3."""
    shape = ButShape.uniform(3, m)
    X = QButMatrix.generic(shape)
    alg = X.alg
    A11 = X.block(1, 1)
    M = qmatmul(qmatmul(A11, qinverse_dagger(alg, A11)), X.block(1, 3))
    lhs = hermitian(M)
    rhs = qmatscale([list(r) for r in zip(*M)], qpow(-1))
    bad = matrices_equal(lhs, rhs)
    return _report("quantum.braid.middle_entry", shape, [list(p) for p in bad], m * m)


def braid_relation(n: int, m: int, a=None, b=None) -> dict:
    shape = ButShape.uniform(n, m)
    X = QButMatrix.generic(shape)
    bad = []
    for I in range(2, n):
        lhs = apply_word(X, [I, I - 1, I], a, b)
        rhs = apply_word(X, [I - 1, I, I - 1], a, b)
        bad += [[I, *p] for p in matrices_equal(lhs.entries, rhs.entries)]
    return _report("quantum.braid.relation", shape, bad[:5], max(n - 2, 0), a=a, b=b)


def _power(alg, X: Matrix, k: int) -> Matrix:
    out = unit_matrix(alg, len(X))
    for _ in range(k):
        out = qmatmul(out, X)
    return out


def total_braid(n: int, m: int, a=None, b=None) -> dict:
    """(beta_{n-1} ... beta_1)^n against the closed form on every block."""
    shape = ButShape.uniform(n, m)
    X = QButMatrix.generic(shape)
    alg = X.alg
    Y = X
    for _ in range(n):
        Y = apply_word(Y, list(range(n - 1, 0, -1)), a, b)
    bad = []
    for I in range(1, n + 1):
        Aii = X.block(I, I)
        left = _power(alg, qmatmul(Aii, qinverse_dagger(alg, Aii)), n - 2)
        for J in range(I, n + 1):
            Ajj = X.block(J, J)
            right = _power(alg, qmatmul(qinverse(alg, Ajj), hermitian(Ajj)), n - 2)
            want = qmatmul(qmatmul(left, X.block(I, J)), right)
            if matrices_equal(Y.block(I, J), want):
                bad.append([I, J])
    return _report("quantum.braid.total", shape, bad[:5], n * (n + 1) // 2, a=a, b=b)


def inverse_identity(shape: ButShape) -> dict:
    """block * inverse = E for every 2 x 2 diagonal block."""
    X = QButMatrix.generic(shape)
    alg = X.alg
    bad = []
    for I in range(1, shape.n + 1):
        blk = X.block(I, I)
        if len(blk) != 2:
            continue
        if matrices_equal(qmatmul(blk, qinverse(alg, blk)), unit_matrix(alg, 2)):
            bad.append(I)
    return _report("quantum.inverse", shape, bad, shape.n)


__all__ = [
    "BraidDefect",
    "QButMatrix",
    "apply_word",
    "automorphism_n2",
    "braid_matrix",
    "braid_relation",
    "conjugation_preservation",
    "adjoint_act",
    "default_exponents",
    "inverse_identity",
    "middle_entry_law",
    "quantum_braid_act",
    "relation_preservation",
    "total_braid",
    "vanishes",
]
