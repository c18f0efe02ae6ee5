"""Shared fixtures: seeded random mass vectors, grids, and plan checks."""

from __future__ import annotations

import random

from gridemd import GridHistogram, Move


def random_mass_vector(rng: random.Random, length: int, mass: int) -> tuple[int, ...]:
    """Uniform random split of ``mass`` units over ``length`` cells."""
    cuts = sorted(rng.randrange(mass + 1) for _ in range(length - 1))
    out = []
    prev = 0
    for c in cuts:
        out.append(c - prev)
        prev = c
    out.append(mass - prev)
    return tuple(out)


def random_grid(rng: random.Random, m: int, n: int, mass: int) -> GridHistogram:
    return GridHistogram(m, n, random_mass_vector(rng, m * n, mass))


def random_pair(
    rng: random.Random, m: int, n: int, mass: int
) -> tuple[GridHistogram, GridHistogram]:
    """Two independent random grids of the same shape and total mass."""
    return random_grid(rng, m, n, mass), random_grid(rng, m, n, mass)


def plan_marginals(
    plan: tuple[Move, ...], rows: int, cols: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Row-major (source totals, destination totals) of a transport plan."""
    src = [0] * (rows * cols)
    dst = [0] * (rows * cols)
    for mv in plan:
        src[mv.src[0] * cols + mv.src[1]] += mv.amount
        dst[mv.dst[0] * cols + mv.dst[1]] += mv.amount
    return tuple(src), tuple(dst)
