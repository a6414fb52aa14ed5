"""Generators: the named commuting symbols every polynomial is built from.

The total order on generators is the tuple order of :class:`Gen`, i.e. by
kind, then level, then row, then column, then name.  Generators are interned
to small integers for fast monomial arithmetic; the integer ids are an
internal cache and never leak into printed or serialized output.
"""

from __future__ import annotations

import re
from enum import IntEnum
from typing import NamedTuple


class Kind(IntEnum):
    A = 0  # zero-level matrix entry a[i,j]
    G = 1  # level-p entry g{p}[i,j], p >= 1
    Q = 2
    LAM = 3
    MU = 4
    NU = 5
    UNIT = 6  # declared invertible auxiliary symbol (e.g. exp(phi_i))
    AUX = 7  # ordinary auxiliary symbol (covector entries, parameters)


INVERTIBLE_KINDS = frozenset({Kind.Q, Kind.LAM, Kind.MU, Kind.NU, Kind.UNIT})


class Gen(NamedTuple):
    kind: int
    level: int = 0
    row: int = 0
    col: int = 0
    name: str = ""

    @property
    def invertible(self) -> bool:
        return self.kind in INVERTIBLE_KINDS

    def __str__(self) -> str:
        k = self.kind
        if k == Kind.A:
            return f"a[{self.row},{self.col}]"
        if k == Kind.G:
            return f"g{self.level}[{self.row},{self.col}]"
        if k == Kind.Q:
            return "q"
        if k == Kind.LAM:
            return "lam"
        if k == Kind.MU:
            return "mu"
        if k == Kind.NU:
            return "nu"
        if self.row:
            return f"{self.name}[{self.row},{self.col}]"
        return self.name


def a_gen(i: int, j: int) -> Gen:
    return Gen(Kind.A, 0, i, j)


def level_gen(p: int, i: int, j: int) -> Gen:
    """Entry (i, j) of the level-p coefficient matrix; level 0 is the a-matrix."""
    if p == 0:
        return Gen(Kind.A, 0, i, j)
    return Gen(Kind.G, p, i, j)


Q = Gen(Kind.Q)
LAM = Gen(Kind.LAM)
MU = Gen(Kind.MU)
NU = Gen(Kind.NU)


def aux(name: str, i: int = 0, j: int = 0) -> Gen:
    return Gen(Kind.AUX, 0, i, j, name)


def unit(name: str, i: int = 0, j: int = 0) -> Gen:
    return Gen(Kind.UNIT, 0, i, j, name)


_GEN_RE = re.compile(
    r"^(?:a\[(\d+),(\d+)\]|g(\d+)\[(\d+),(\d+)\]|(q|lam|mu|nu)"
    r"|([A-Za-z_][A-Za-z_0-9]*)(?:\[(\d+),(\d+)\])?)$"
)

_UNIT_NAMES: set[str] = set()


def declare_unit_name(name: str) -> None:
    """Make ``parse_gen`` read ``name`` / ``name[i,j]`` as an invertible symbol."""
    _UNIT_NAMES.add(name)


def parse_gen(text: str) -> Gen:
    m = _GEN_RE.match(text.strip())
    if not m:
        raise ValueError(f"not a generator: {text!r}")
    if m.group(1):
        return a_gen(int(m.group(1)), int(m.group(2)))
    if m.group(3):
        p = int(m.group(3))
        return level_gen(p, int(m.group(4)), int(m.group(5)))
    if m.group(6):
        return {"q": Q, "lam": LAM, "mu": MU, "nu": NU}[m.group(6)]
    name = m.group(7)
    i = int(m.group(8)) if m.group(8) else 0
    j = int(m.group(9)) if m.group(9) else 0
    if name in _UNIT_NAMES:
        return unit(name, i, j)
    return aux(name, i, j)


# interning -----------------------------------------------------------------

_IDS: dict[Gen, int] = {}
_GENS: list[Gen] = []


def gid(g: Gen) -> int:
    i = _IDS.get(g)
    if i is None:
        i = len(_GENS)
        _IDS[g] = i
        _GENS.append(g)
    return i


def gen_of(i: int) -> Gen:
    return _GENS[i]
