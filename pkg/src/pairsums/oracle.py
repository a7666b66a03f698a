"""Exhaustive reference ranking, used as ground truth in tests.

Enumerates all 2^N sums with vectorized from-scratch arithmetic (fully
independent of the incremental best-first path in ``core``), sorts them,
and returns the first k. Deliberately naive: capped at N <= 24, where the
full table still fits in memory and desk-scale time.
"""

from __future__ import annotations

import numpy as np

from .core import Combination, Direction, InvalidK, RankedChoice
from .core import PairList  # noqa: F401  (referenced in docstrings/annotations)


class TooLarge(ValueError):
    """Exhaustive enumeration refused: 2^N table would be excessive."""


MAX_N = 24


def _all_sums(arr: np.ndarray) -> np.ndarray:
    """sums[mask] over every selection mask; bit j-1 picks pair j's second element."""
    sums = np.zeros(1)
    for j in range(arr.shape[0]):
        sums = np.concatenate([sums + arr[j, 0], sums + arr[j, 1]])
    return sums


def _lex_rank_keys(n: int) -> np.ndarray:
    """Bit-reversed masks: integer order of these = selection-lex order."""
    masks = np.arange(1 << n, dtype=np.uint32)
    rev = np.zeros_like(masks)
    for j in range(n):
        rev |= ((masks >> j) & 1) << (n - 1 - j)
    return rev


def brute_force_top_k(
    pairs, k: int, direction: Direction = Direction.MIN
) -> list[RankedChoice]:
    """The k best selections by exhaustive enumeration and sorting.

    Ties in the sum are ordered by lexicographic selection bits (position 1
    read first) so the output is deterministic. Raises TooLarge for N > 24.
    """
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise InvalidK(f"k must be a positive integer, got {k!r}")
    arr = np.asarray(pairs, dtype=float)
    if arr.size == 0:
        raise ValueError("need at least one pair")
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"expected shape (N, 2), got {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValueError("pairs must be finite")
    n = arr.shape[0]
    if n > MAX_N:
        raise TooLarge(f"N={n} exceeds the exhaustive cap of {MAX_N}")

    sums = _all_sums(arr)
    keyed = -sums if direction is Direction.MAX else sums
    order = np.lexsort((_lex_rank_keys(n), keyed))
    k = min(k, 1 << n)
    out = []
    for rank, mask in enumerate(order[:k], start=1):
        mask = int(mask)
        out.append(
            RankedChoice(rank, float(sums[mask]), selection=Combination(n, mask))
        )
    return out
