"""Shared helpers for the test suite: small seeded rational generators."""

import random
from fractions import Fraction


def rand_fraction(rng: random.Random, height: int = 12) -> Fraction:
    """Nonzero rational with numerator/denominator bounded by `height`."""
    return Fraction(rng.randint(1, height) * rng.choice((1, -1)), rng.randint(1, height))


def rand_q(rng: random.Random, height: int = 12) -> Fraction:
    while True:
        q = rand_fraction(rng, height)
        if q not in (1, -1):
            return q
