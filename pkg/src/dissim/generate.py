"""Seeded random hat-families for a requested realization class.

Families are drawn as integer numerators in ``[1, 1000]`` over a fixed
denominator and kept only when the class checker accepts them (or, for
``"none"``, when every checker rejects them).  Proposals are deliberately
biased towards clustered values, repeated maxima and vanishing slacks,
because uniform draws almost never land in the narrower classes.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .classes import CLASSES, check_all, check_class
from .errors import DissimError, WrongN
from .family import DissimilarityFamily
from .graphs import GRAPH_N4_INTERNAL

DENOMINATOR = 10
NUM_LOW, NUM_HIGH = 1, 1000
MAX_ATTEMPTS = 10_000
NONE = "none"


class GenerationFailed(DissimError):
    pass


def _propose(rng: random.Random, n: int) -> list[int] | None:
    if rng.random() < 0.15:
        nums = [rng.randint(NUM_LOW, NUM_HIGH) for _ in range(n)]
    else:
        hi = rng.randint(max(n, 20), NUM_HIGH)
        spread = int(hi * rng.random() ** 2)
        nums = [rng.randint(max(NUM_LOW, hi - spread), hi) for _ in range(n)]
    if rng.random() < 0.4:
        top = max(nums)
        for i in rng.sample(range(n), rng.randint(2, n)):
            nums[i] = top
    if rng.random() < 0.3:
        # force one vanishing slack: (n - 2) * x_r = sum of the others
        r = rng.randrange(n)
        others = [i for i in range(n) if i != r]
        total = sum(nums[i] for i in others)
        fix = -total % (n - 2)
        j = rng.choice(others)
        if nums[j] + fix > NUM_HIGH:
            return None
        nums[j] += fix
        total += fix
        nums[r] = total // (n - 2)
        if not NUM_LOW <= nums[r] <= NUM_HIGH:
            return None
    return nums


def _accepts(f: DissimilarityFamily, cls: str) -> bool:
    if cls == NONE:
        return not any(v.passed for v in check_all(f).values())
    return check_class(f, cls).passed


def random_family(rng: random.Random, n: int, cls: str, max_attempts: int = MAX_ATTEMPTS) -> DissimilarityFamily:
    if cls != NONE and cls not in CLASSES:
        raise ValueError(f"unknown class {cls!r}; expected one of {list(CLASSES) + [NONE]}")
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if cls == GRAPH_N4_INTERNAL and n != 4:
        raise WrongN(f"{cls} needs n = 4, got n = {n}")
    for _ in range(max_attempts):
        nums = _propose(rng, n)
        if nums is None:
            continue
        f = DissimilarityFamily([Fraction(x, DENOMINATOR) for x in nums])
        if _accepts(f, cls):
            return f
    raise GenerationFailed(f"no {cls} family with n = {n} found in {max_attempts} attempts")


def generate_families(n: int, cls: str, seed: int = 0, count: int = 1) -> list[DissimilarityFamily]:
    """``count`` families from one RNG stream; identical for identical arguments."""
    rng = random.Random(seed)
    return [random_family(rng, n, cls) for _ in range(count)]
