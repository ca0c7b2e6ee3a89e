"""Seeded generator of random monomial ideals and ideal pairs.

The generator is ``random.Random(seed)`` (Mersenne Twister) consumed in a fixed
order: for each ideal, the variable count via ``randint(1, max_vars)``, the
generator count via ``randint(1, max_gens)``, then every exponent via
``randint(0, max_deg)`` in variable order.  An all-zero draw is redrawn.  The
left ideal of a pair is drawn before the right one.  Left variables are named
``x1, x2, ...`` and right variables ``y1, y2, ...``.
"""

from __future__ import annotations

import random
from typing import Iterator

from .core import MonomialIdeal, Ring
from .errors import DomainError


def _check_params(max_vars: int, max_gens: int, max_deg: int):
    if max_vars < 1 or max_gens < 1 or max_deg < 1:
        raise DomainError("max-vars, max-gens and max-deg must all be at least 1")


def random_ideal(rng: random.Random, max_vars: int, max_gens: int, max_deg: int,
                 prefix: str = "x") -> MonomialIdeal:
    nvars = rng.randint(1, max_vars)
    ngens = rng.randint(1, max_gens)
    ring = Ring(tuple(f"{prefix}{i + 1}" for i in range(nvars)))
    gens = []
    while len(gens) < ngens:
        e = tuple(rng.randint(0, max_deg) for _ in range(nvars))
        if any(e):
            gens.append(e)
    # nonzero draws guarantee a proper, nonzero ideal
    return MonomialIdeal(ring, gens)


def corpus_ideals(seed: int, count: int, max_vars: int, max_gens: int,
                  max_deg: int, prefix: str = "x") -> Iterator[MonomialIdeal]:
    _check_params(max_vars, max_gens, max_deg)
    rng = random.Random(seed)
    for _ in range(count):
        yield random_ideal(rng, max_vars, max_gens, max_deg, prefix)


def corpus_pairs(seed: int, count: int, max_vars: int, max_gens: int,
                 max_deg: int) -> Iterator[tuple]:
    _check_params(max_vars, max_gens, max_deg)
    rng = random.Random(seed)
    for _ in range(count):
        left = random_ideal(rng, max_vars, max_gens, max_deg, "x")
        right = random_ideal(rng, max_vars, max_gens, max_deg, "y")
        yield left, right
