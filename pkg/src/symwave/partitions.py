"""Partitions as S-tris board states.

A partition is stored as a tuple of positive, weakly decreasing column
heights; the empty tuple is the empty board.  The board has ``n`` columns,
so a legal state has at most ``n`` parts.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .errors import InvalidInputError

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int], n: int | None = None) -> Partition:
    """Validate ``parts`` and return it in canonical form.

    Trailing zeros are dropped.  Raises InvalidInputError if the sequence is
    not weakly decreasing, has negative entries, or is longer than ``n``.
    """
    lam = tuple(int(p) for p in parts)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    if any(p < 1 for p in lam):
        raise InvalidInputError(f"partition {lam} has non-positive parts")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise InvalidInputError(f"partition {lam} is not weakly decreasing")
    if n is not None and len(lam) > n:
        raise InvalidInputError(f"partition {lam} has more than {n} parts")
    return lam


def weight(lam: Partition) -> int:
    return sum(lam)


def stris_moves(mu: Iterable[int], n: int) -> set[Partition]:
    """All boards reachable from ``mu`` by dropping or raising one block.

    Complete rows are never cleared.
    """
    mu = as_partition(mu, n)
    heights = list(mu) + [0] * (n - len(mu))
    out = set()
    for col in range(n):
        for delta in (1, -1):
            h = heights[:]
            h[col] += delta
            if h[col] < 0:
                continue
            if all(a >= b for a, b in zip(h, h[1:])):
                out.add(as_partition(h))
    return out


def multiplicity(lam: Iterable[int], m: int, n: int) -> int:
    """Number of S-tris histories of length ``m`` that end at board ``lam``.

    Equivalently the multiplicity of the irreducible indexed by ``lam`` in the
    m-th tensor power of the defining representation of Sp(2n).
    """
    lam = as_partition(lam, n)
    if m < 0:
        raise InvalidInputError(f"length must be nonnegative, got {m}")
    if n < 1:
        raise InvalidInputError(f"board width must be positive, got {n}")
    return _histories(lam, m, n)


@lru_cache(maxsize=None)
def _histories(lam: Partition, m: int, n: int) -> int:
    w = weight(lam)
    if w > m or (m - w) % 2:
        return 0
    if m == 0:
        return 1
    # moves are reversible, so predecessors of lam are its own neighbours
    return sum(_histories(mu, m - 1, n) for mu in stris_moves(lam, n))


def invariant_dimension(m: int, n: int) -> int:
    """Dimension of the Sp(2n)-invariants in the m-th tensor power of V."""
    return multiplicity((), m, n)
