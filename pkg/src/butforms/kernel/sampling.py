"""Seeded, reproducible random rationals.

Every independent task draws from its own ``random.Random`` derived from the
run seed and a task label, so results do not depend on scheduling order.
"""

from __future__ import annotations

import hashlib
import random
from fractions import Fraction

# coordinate range for random points; large enough for Schwartz-Zippel guards
COORD_RANGE = 10**6


def task_rng(seed: int, *label) -> random.Random:
    h = hashlib.sha256(repr((seed,) + tuple(label)).encode()).digest()
    return random.Random(int.from_bytes(h[:8], "big"))


def rand_rational(rng: random.Random, span: int = COORD_RANGE, nonzero: bool = True) -> Fraction:
    while True:
        num = rng.randint(-span, span)
        den = rng.randint(1, 97)
        if num or not nonzero:
            return Fraction(num, den)


def rand_small(rng: random.Random, span: int = 9, nonzero: bool = True) -> Fraction:
    """Small rationals; keeps sizes of exact intermediate values down."""
    while True:
        num = rng.randint(-span, span)
        den = rng.choice((1, 1, 2, 3))
        if num or not nonzero:
            return Fraction(num, den)
