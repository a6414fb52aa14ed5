"""Consistency checks of the rewriting system and its classical limit."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from ..brackets import BracketRule, generator_bracket
from ..kernel.gens import Q
from ..kernel.mpoly import MPoly, to_text
from ..shapes import ButShape
from .algebra import NCPoly, QAlgebra, RewritingBound, algebra_for

# First-order coefficient of [x, y] at q = 1 + h over the classical bracket.
# Measured with an independent series expansion, see tests/test_quantum_semiclassical.py.
SEMICLASSICAL_SCALAR = -1


def _report(check, shape, witness, checked, **extra) -> dict:
    out = {"check": check, "shape": shape.label(), "status": "fail" if witness else "pass", "checked": checked, "witness": witness}
    out.update(extra)
    return out


def nc_normal_form(p: NCPoly) -> NCPoly:
    return p.normal()


def confluence_probe(N: int, sample: int | None = None, seed: int = 0, shape: ButShape | None = None) -> dict:
    """Diamond check on length-3 words: all of them, or ``sample`` seeded ones."""
    if N > 4:
        raise ValueError("confluence probe is for N <= 4")
    shape = shape or ButShape.full(N)
    alg = algebra_for(shape)
    k = len(alg.letters)
    words = list(product(range(k), repeat=3))
    if sample is not None and sample < len(words):
        words = random.Random(f"confluence:{shape.label()}:{seed}").sample(words, sample)
    bad = [[str(alg.letters[x]) for x in w] for w in words if not alg.diamond(w)]
    return _report("quantum.confluence", shape, bad[:5], len(words), sampled=sample is not None)


def termination_probe(N: int, count: int = 50, length: int = 6, seed: int = 0) -> dict:
    """Random words normal-form within the step bound."""
    alg = QAlgebra(ButShape.full(N))
    rng = random.Random(f"termination:{N}:{seed}")
    bad = []
    for _ in range(count):
        w = tuple(rng.randrange(len(alg.letters)) for _ in range(length))
        try:
            alg.poly({w: MPoly.const(1)})
        except RewritingBound:
            bad.append([str(alg.letters[x]) for x in w])
    return _report("quantum.termination", alg.shape, bad[:5], count)


def first_order(p: NCPoly) -> MPoly:
    """Coefficient of (q - 1) in p, read as a commutative polynomial."""
    out = MPoly()
    for w, c in p.terms.items():
        d = c.diff(Q).subs({Q: 1})
        if not d:
            continue
        mono = MPoly.const(1)
        for x in w:
            mono = mono * MPoly.gen(p.alg.letters[x])
        out = out + d * mono
    return out


def commutator_first_order(alg: QAlgebra, x, y) -> MPoly:
    return first_order(alg.word(x, y) - alg.word(y, x))


def _coerce_ratio(a, b):
    r = Fraction(a) / Fraction(b)
    return int(r) if r.denominator == 1 else r


def measured_scalars(N: int) -> set:
    """Every ratio first-order commutator / classical bracket seen at full N."""
    alg = algebra_for(ButShape.full(N))
    rule = BracketRule(ButShape.full(N))
    ratios = set()
    for x, y in product(alg.letters, repeat=2):
        c = commutator_first_order(alg, x, y)
        b = generator_bracket(rule, x.row, x.col, y.row, y.col)
        if not b:
            ratios.add("zero" if not c else "unmatched")
            continue
        k = _coerce_ratio(c.leading()[1], b.leading()[1])
        ratios.add(k if c == b.scale(k) else "unmatched")
    return ratios


def semiclassical_bridge(N: int, scalar=SEMICLASSICAL_SCALAR) -> dict:
    """First order of [a_is, a_jt] equals scalar * bracket for every pair."""
    shape = ButShape.full(N)
    alg = algebra_for(shape)
    rule = BracketRule(shape)
    bad = []
    for x, y in product(alg.letters, repeat=2):
        c = commutator_first_order(alg, x, y)
        b = generator_bracket(rule, x.row, x.col, y.row, y.col)
        if c != b.scale(scalar):
            bad.append([str(x), str(y), to_text(c)])
    return _report("quantum.semiclassical", shape, bad[:5], len(alg.letters) ** 2, scalar=str(scalar))


def q_one_commutators(N: int) -> dict:
    """At q = 1 every commutator normal-forms to 0."""
    shape = ButShape.full(N)
    alg = algebra_for(shape)
    bad = []
    for x, y in product(alg.letters, repeat=2):
        c = alg.word(x, y) - alg.word(y, x)
        if any(v.subs({Q: 1}) for v in c.terms.values()):
            bad.append([str(x), str(y)])
    return _report("quantum.q_one", shape, bad, len(alg.letters) ** 2)
