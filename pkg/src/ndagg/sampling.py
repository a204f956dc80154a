"""Seeded samplers feeding the law checkers and property suites.

Algebraic laws are checked with exact equality, so the sampler can draw from
a dyadic grid (multiples of 2**-k).  On that grid every product of up to
three factors and every bounded sum this package forms is an exact float,
which keeps round-off out of the verdicts without weakening any law.
"""

from __future__ import annotations

import random
from typing import Callable

from .core import NDimInterval, Permutation, WeightingVector

DEFAULT_SEED = 1729
DYADIC_BITS = 10


class Sampler:
    """Random source with reproducible draws for checker batches."""

    def __init__(self, seed: int = DEFAULT_SEED):
        self.seed = seed
        self._rng = random.Random(seed)

    def unit(self) -> float:
        return self._rng.random()

    def dyadic(self, bits: int = DYADIC_BITS) -> float:
        return self._rng.randrange((1 << bits) + 1) / (1 << bits)

    def dyadic_below(self, cap: float, bits: int = DYADIC_BITS) -> float:
        steps = int(cap * (1 << bits))
        return self._rng.randrange(steps + 1) / (1 << bits)

    def ndim(self, n: int) -> NDimInterval:
        return NDimInterval(sorted(self._rng.random() for _ in range(n)))

    def ndim_dyadic(self, n: int, bits: int = DYADIC_BITS) -> NDimInterval:
        return NDimInterval(sorted(self.dyadic(bits) for _ in range(n)))

    def ndim_dyadic_below(self, n: int, cap: float, bits: int = DYADIC_BITS) -> NDimInterval:
        return NDimInterval(sorted(self.dyadic_below(cap, bits) for _ in range(n)))

    def comparable_pair(self, n: int, bits: int = DYADIC_BITS) -> tuple[NDimInterval, NDimInterval]:
        """A pair ordered under the componentwise order, built by adding
        nonnegative noise and re-sorting."""
        lo = sorted(self.dyadic(bits) for _ in range(n))
        hi = sorted(min(1.0, v + self.dyadic_below(1.0 - v, bits)) for v in lo)
        return NDimInterval(lo), NDimInterval(hi)

    def permutation(self, n: int) -> Permutation:
        order = list(range(1, n + 1))
        self._rng.shuffle(order)
        return Permutation(order)

    def nonidentity_permutation(self, n: int) -> Permutation:
        if n < 2:
            raise ValueError("no nonidentity permutation exists for n < 2")
        while True:
            p = self.permutation(n)
            if not p.is_identity:
                return p

    def weights(self, m: int) -> WeightingVector:
        return WeightingVector.normalize([self._rng.random() + 1e-3 for _ in range(m)])

    def dyadic_weights(self, m: int, bits: int = DYADIC_BITS, strictly_positive: bool = True) -> WeightingVector:
        """Weights on the dyadic grid summing to exactly 1.0.

        Cut points on the grid partition [0, 1]; the gap widths are the
        weights, so the float sum is exact by construction.
        """
        grid = 1 << bits
        while True:
            cuts = sorted(self._rng.randrange(grid + 1) for _ in range(m - 1))
            parts = []
            prev = 0
            for c in cuts:
                parts.append(c - prev)
                prev = c
            parts.append(grid - prev)
            if not strictly_positive or all(p > 0 for p in parts):
                return WeightingVector(p / grid for p in parts)

    def choice(self, items):
        return self._rng.choice(items)

    def randint(self, a: int, b: int) -> int:
        return self._rng.randint(a, b)

    def shuffled(self, items: list) -> list:
        out = list(items)
        self._rng.shuffle(out)
        return out

    def spawn(self, salt: int) -> "Sampler":
        return Sampler(self.seed * 1_000_003 + salt)


def quasi_random_points(arity: int, count: int) -> list[tuple[float, ...]]:
    """Deterministic low-discrepancy points in the unit cube.

    Additive recurrence with square-root irrationals; used by the
    registration-time spot checks so they need no seed at all.
    """
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53]
    while len(primes) < arity:
        primes.append(primes[-1] + 6)
    alphas = [primes[i] ** 0.5 % 1.0 for i in range(arity)]
    pts = []
    for j in range(1, count + 1):
        pts.append(tuple((0.5 + j * alphas[i]) % 1.0 for i in range(arity)))
    return pts


def corner_points(arity: int) -> list[tuple[float, ...]]:
    """Every 0/1 corner of the cube; kept to arities where 2**m stays small."""
    if arity > 10:
        return []
    out = []
    for mask in range(1 << arity):
        out.append(tuple(1.0 if mask >> i & 1 else 0.0 for i in range(arity)))
    return out
