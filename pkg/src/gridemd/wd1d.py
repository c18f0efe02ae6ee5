"""Exact 1D Wasserstein distance between equal-mass integer vectors.

The supports are the vector indices 0..len-1 with unit spacing, so the
optimal-transport cost has the closed form

    sum over i < len-1 of |prefix_a(i) - prefix_b(i)|

which is computed in one pass with exact integer arithmetic. A brute-force
oracle (unit expansion plus sorted pairing, optimal for convex 1D costs)
is provided for cross-checking on small instances.
"""

from __future__ import annotations

from typing import Sequence

from .errors import LengthMismatchError, MassMismatchError, MassTooLargeError, NegativeEntryError

ORACLE_MASS_LIMIT = 64


def _check_pair(a: Sequence[int], b: Sequence[int]) -> int:
    if len(a) != len(b):
        raise LengthMismatchError(f"vector lengths differ: {len(a)} vs {len(b)}")
    ta = tb = 0
    for v in a:
        if v < 0:
            raise NegativeEntryError(f"negative mass {v!r}")
        ta += v
    for v in b:
        if v < 0:
            raise NegativeEntryError(f"negative mass {v!r}")
        tb += v
    if ta != tb:
        raise MassMismatchError(f"total masses differ: {ta} vs {tb}")
    return ta


def wd_1d(a: Sequence[int], b: Sequence[int]) -> int:
    """Exact 1D Wasserstein distance (unit ground cost between neighbors).

    Total work in index-steps times mass units; always a nonnegative int,
    at most total_mass * (len - 1).
    """
    _check_pair(a, b)
    ca = cb = 0
    work = 0
    for i in range(len(a) - 1):
        ca += a[i]
        cb += b[i]
        work += abs(ca - cb)
    return work


def wd_1d_oracle(a: Sequence[int], b: Sequence[int]) -> int:
    """Brute-force reference: expand masses to unit points, pair in sorted
    order, sum the absolute position differences.

    Feasible only up to total mass ORACLE_MASS_LIMIT.
    """
    mass = _check_pair(a, b)
    if mass > ORACLE_MASS_LIMIT:
        raise MassTooLargeError(f"oracle limited to mass {ORACLE_MASS_LIMIT}, got {mass}")
    pos_a = [i for i, v in enumerate(a) for _ in range(v)]
    pos_b = [i for i, v in enumerate(b) for _ in range(v)]
    return sum(abs(x - y) for x, y in zip(pos_a, pos_b))
