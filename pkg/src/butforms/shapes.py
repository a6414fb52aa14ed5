"""Block structures of the zero-level matrix.

A shape decides which entries a[i,j] are identically zero, which diagonal
entries are pinned to 1 (blocks of size one), and which diagonal blocks carry
a unit-determinant constraint.  Indices are 1-based throughout.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .kernel.gens import Gen, a_gen
from .kernel.mpoly import MPoly

KINDS = ("full", "symmetric", "uniform", "partition", "staircase")


class ShapeError(ValueError):
    pass


@dataclass(frozen=True)
class ButShape:
    N: int
    kind: str = "full"
    sizes: tuple[int, ...] = ()
    boundary: tuple[int, ...] = ()
    unit_det: bool = True

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ShapeError(f"unknown shape kind {self.kind!r}")
        if self.N < 1:
            raise ShapeError("N must be positive")
        if self.kind in ("uniform", "partition"):
            if not self.sizes or any(s < 1 for s in self.sizes) or sum(self.sizes) != self.N:
                raise ShapeError(f"block sizes {self.sizes} do not partition N={self.N}")
            if self.kind == "uniform" and len(set(self.sizes)) != 1:
                raise ShapeError("uniform shape needs equal block sizes")
        if self.kind == "staircase":
            b = self.boundary
            if len(b) != self.N or any(not 1 <= x <= self.N + 1 for x in b):
                raise ShapeError("staircase boundary needs one first-column entry per row")
            if any(b[r] > b[r + 1] for r in range(self.N - 1)):
                raise ShapeError("staircase boundary must be nondecreasing")

    # constructors ---------------------------------------------------------
    @classmethod
    def full(cls, N: int) -> "ButShape":
        return cls(N, "full")

    @classmethod
    def symmetric(cls, N: int) -> "ButShape":
        return cls(N, "symmetric")

    @classmethod
    def uniform(cls, n: int, m: int) -> "ButShape":
        if n < 1 or m < 1:
            raise ShapeError("n and m must be positive")
        return cls(n * m, "uniform", (m,) * n)

    @classmethod
    def partition(cls, sizes) -> "ButShape":
        sizes = tuple(int(s) for s in sizes)
        return cls(sum(sizes), "partition", sizes)

    @classmethod
    def staircase(cls, boundary) -> "ButShape":
        boundary = tuple(int(b) for b in boundary)
        return cls(len(boundary), "staircase", (), boundary)

    @classmethod
    def parse(cls, text: str) -> "ButShape":
        """``full:4``, ``symmetric:3``, ``uniform:3,1``, ``partition:2,3``,
        ``staircase:1,1,2,4,5``."""
        try:
            kind, _, args = text.partition(":")
            nums = [int(x) for x in args.split(",") if x.strip()]
            if kind == "full":
                (N,) = nums
                return cls.full(N)
            if kind == "symmetric":
                (N,) = nums
                return cls.symmetric(N)
            if kind == "uniform":
                n, m = nums
                return cls.uniform(n, m)
            if kind == "partition":
                return cls.partition(nums)
            if kind == "staircase":
                return cls.staircase(nums)
        except (ValueError, TypeError) as exc:
            raise ShapeError(f"bad shape {text!r}: {exc}") from None
        raise ShapeError(f"bad shape {text!r}")

    def to_json(self) -> dict:
        if self.kind in ("full", "symmetric"):
            return {"kind": self.kind, "N": self.N}
        if self.kind == "uniform":
            return {"kind": "uniform", "n": self.n, "m": self.m}
        if self.kind == "partition":
            return {"kind": "partition", "sizes": list(self.sizes)}
        return {"kind": "staircase", "boundary": list(self.boundary)}

    @classmethod
    def from_json(cls, d) -> "ButShape":
        if isinstance(d, str):
            d = json.loads(d)
        kind = d.get("kind")
        if kind == "full":
            return cls.full(d["N"])
        if kind == "symmetric":
            return cls.symmetric(d["N"])
        if kind == "uniform":
            return cls.uniform(d["n"], d["m"])
        if kind == "partition":
            return cls.partition(d["sizes"])
        if kind == "staircase":
            return cls.staircase(d["boundary"])
        raise ShapeError(f"bad shape record {d!r}")

    def label(self) -> str:
        if self.kind in ("full", "symmetric"):
            return f"{self.kind}:{self.N}"
        if self.kind == "uniform":
            return f"uniform:{self.n},{self.m}"
        if self.kind == "partition":
            return "partition:" + ",".join(map(str, self.sizes))
        return "staircase:" + ",".join(map(str, self.boundary))

    def __str__(self) -> str:
        return self.label()

    # block structure -------------------------------------------------------
    @property
    def is_block(self) -> bool:
        return self.kind in ("uniform", "partition")

    @property
    def n(self) -> int:
        return len(self.sizes) if self.is_block else 1

    @property
    def m(self) -> int:
        if self.kind != "uniform":
            raise ShapeError("m is defined for uniform shapes only")
        return self.sizes[0]

    @cached_property
    def blocks(self) -> tuple[tuple[int, int], ...]:
        """1-based inclusive index ranges of the diagonal blocks."""
        if not self.is_block:
            return ((1, self.N),)
        out, start = [], 1
        for s in self.sizes:
            out.append((start, start + s - 1))
            start += s
        return tuple(out)

    def block_indices(self, I: int) -> list[int]:
        lo, hi = self.blocks[I - 1]
        return list(range(lo, hi + 1))

    @cached_property
    def _block_of(self) -> dict[int, int]:
        return {i: I + 1 for I, (lo, hi) in enumerate(self.blocks) for i in range(lo, hi + 1)}

    def block_of(self, i: int) -> int:
        return self._block_of[i]

    def admitted(self, i: int, j: int) -> bool:
        """True when a[i,j] is not identically zero."""
        if self.kind == "staircase":
            return j >= self.boundary[i - 1]
        if self.is_block:
            return self._block_of[i] <= self._block_of[j]
        return True

    def unit_entry(self, i: int, j: int) -> bool:
        """Diagonal entries of size-one blocks are pinned to 1."""
        return self.is_block and i == j and self.sizes[self._block_of[i] - 1] == 1

    @cached_property
    def det_blocks(self) -> tuple[int, ...]:
        """Diagonal blocks (1-based) of size >= 2 with a unit-determinant constraint."""
        if not (self.is_block and self.unit_det):
            return ()
        return tuple(I + 1 for I, s in enumerate(self.sizes) if s >= 2)

    @cached_property
    def free_gens(self) -> tuple[Gen, ...]:
        """Generators that are neither masked nor pinned, in generator order."""
        out = []
        for i in range(1, self.N + 1):
            for j in range(1, self.N + 1):
                if self.kind == "symmetric" and i > j:
                    continue
                if self.admitted(i, j) and not self.unit_entry(i, j):
                    out.append(a_gen(i, j))
        return tuple(out)

    def eliminated_gens(self) -> tuple[Gen, ...]:
        """Bottom-right entry of every determinant-constrained block."""
        return tuple(a_gen(self.blocks[I - 1][1], self.blocks[I - 1][1]) for I in self.det_blocks)

    def chart_gens(self) -> tuple[Gen, ...]:
        """Coordinates on the constrained variety (free minus eliminated)."""
        elim = set(self.eliminated_gens())
        return tuple(g for g in self.free_gens if g not in elim)

    @property
    def constrained_dim(self) -> int:
        return len(self.free_gens) - len(self.det_blocks)

    @cached_property
    def mask_subs(self) -> dict[Gen, object]:
        """Substitution normal form of the constraint ideal (determinants aside)."""
        subs: dict[Gen, object] = {}
        for i in range(1, self.N + 1):
            for j in range(1, self.N + 1):
                g = a_gen(i, j)
                if self.kind == "symmetric":
                    if i > j:
                        subs[g] = MPoly.gen(a_gen(j, i))
                elif not self.admitted(i, j):
                    subs[g] = 0
                elif self.unit_entry(i, j):
                    subs[g] = 1
        return subs

    def entry(self, i: int, j: int) -> MPoly:
        g = a_gen(i, j)
        v = self.mask_subs.get(g)
        if v is None:
            return MPoly.gen(g)
        return v if isinstance(v, MPoly) else MPoly.const(v)

    def matrix(self) -> list[list[MPoly]]:
        return [[self.entry(i, j) for j in range(1, self.N + 1)] for i in range(1, self.N + 1)]

    def block(self, A, I: int, J: int):
        """Sub-block (I, J) of an N x N matrix given as a list of rows."""
        ri = self.block_indices(I)
        cj = self.block_indices(J)
        return [[A[r - 1][c - 1] for c in cj] for r in ri]

    def reduce(self, p: MPoly) -> MPoly:
        """Normal form modulo the mask ideal (zeros, unit diagonal, symmetry)."""
        if not isinstance(p, MPoly):
            return p if hasattr(p, "gens") else MPoly.const(p)
        subs = {g: v for g, v in self.mask_subs.items() if g in p.gens()}
        if not subs:
            return p
        return p.subs(subs)

    @cached_property
    def corner_subs(self) -> dict:
        """Eliminated corner entries solved from det = 1, as rational functions
        of the chart coordinates."""
        from .kernel.linalg import det_laplace
        from .kernel.ratfunc import RatFunc

        out = {}
        for I in self.det_blocks:
            idx = self.block_indices(I)
            corner = a_gen(idx[-1], idx[-1])
            blk = [[self.entry(r, c) for c in idx] for r in idx]
            minor = det_laplace([row[:-1] for row in blk[:-1]])
            rest = det_laplace(blk).subs({corner: 0})
            out[corner] = RatFunc.lift(1 - rest) / minor
        return out

    def chart_matrix(self) -> list:
        """The matrix on the constrained variety: masked entries with every
        constrained corner replaced by its solution."""
        subs = self.corner_subs
        return [[subs.get(a_gen(i, j), self.entry(i, j)) for j in range(1, self.N + 1)]
                for i in range(1, self.N + 1)]

    def on_variety(self, x):
        """Restrict a polynomial or rational function to the constrained variety."""
        x = self.reduce(x)
        subs = {g: v for g, v in self.corner_subs.items() if g in x.gens()}
        return x.subs(subs) if subs else x

    def closure_ok(self) -> bool:
        """If a[i,j] vanishes then so do a[s,j] (s >= i) and a[i,t] (t <= j)."""
        N = self.N
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                if not self.admitted(i, j):
                    if any(self.admitted(s, j) for s in range(i, N + 1)):
                        return False
                    if any(self.admitted(i, t) for t in range(1, j + 1)):
                        return False
        return True


# the Fig-style staircase used by the reduction suite: rows 1-2 start at
# column 1, row 3 at column 2, row 4 at column 4, row 5 at column 5
FIG_STAIRCASE = (1, 1, 2, 4, 5)
