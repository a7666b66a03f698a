"""Best-first enumeration of pair-choice sums.

Given N pairs of reals, one number must be chosen from each pair; the 2^N
possible choice combinations are ranked by the sum of the chosen numbers.
This module emits combinations in non-decreasing sum order without touching
all 2^N of them.

Setup: for each pair, the smaller element goes into v0 and the larger into
v1, and the gaps delta = v1 - v0 (all >= 0) are sorted ascending by a
recorded permutation. In this sorted "hat" domain the all-zeros bit vector
(always pick the smaller element) is the global minimum, and the sum of any
combination c is s1 + sum of delta[i] over set bits i, with s1 = sum(v0).

Successor moves: a single shift either sets bit 1 (position of the smallest
gap) or moves a set bit from position i-1 to position i. Because delta is
ascending, shifts never decrease the sum, so best-first search over the
shift graph, seeded with the all-zeros vector, emits combinations in sum
order. The frontier ("pending set") is kept as a sequence ordered by
(sum, lexicographic bits); each step extracts the head and merges the
freshly generated successors back in.

Bit packing convention, used everywhere in this package: position j
(1-based) of a combination lives at integer bit j-1, so the all-zeros
vector is mask 0 and masks stay small while only low positions are
touched. Lexicographic comparisons read position 1 first.
"""

from __future__ import annotations

import enum
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Sequence

import numpy as np

PairList = Sequence[Sequence[float]]


class Direction(enum.Enum):
    """Whether the smallest or the largest sums come first."""

    MIN = "min"
    MAX = "max"


class NonFiniteInput(ValueError):
    """Input contains NaN or an infinity."""


class EmptyInput(ValueError):
    """No pairs supplied."""


class LengthMismatch(ValueError):
    """Combination length does not match the instance size."""


class InvalidK(ValueError):
    """k must be a positive integer."""


class IndexOutOfRange(IndexError):
    """Shift index outside 1..N."""


class Combination:
    """Immutable N-bit choice vector.

    Equality and hashing are over bit content (and length) only. ``ones``
    caches the popcount.
    """

    __slots__ = ("n", "mask", "ones")

    def __init__(self, n: int, mask: int = 0):
        if n < 1:
            raise ValueError("combination length must be >= 1")
        if mask < 0 or mask.bit_length() > n:
            raise ValueError("mask does not fit in %d bits" % n)
        self.n = n
        self.mask = mask
        self.ones = mask.bit_count()

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "Combination":
        """Build from a sequence of 0/1 values, position 1 first."""
        mask = 0
        for j, b in enumerate(bits):
            if b not in (0, 1):
                raise ValueError("bits must be 0 or 1")
            mask |= b << j
        return cls(len(bits), mask)

    def bit(self, i: int) -> int:
        """Value at 1-based position i."""
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"position {i} outside 1..{self.n}")
        return (self.mask >> (i - 1)) & 1

    def to_bits(self) -> list[int]:
        m = self.mask
        return [(m >> j) & 1 for j in range(self.n)]

    def to01(self) -> str:
        m = self.mask
        return "".join("1" if (m >> j) & 1 else "0" for j in range(self.n))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Combination)
            and self.n == other.n
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"Combination({self.to01()!r})"


class _LexKey:
    """Orders bit masks as words read from position 1 (position 1 first).

    The first differing position decides; the mask holding a 0 there is
    smaller. Used as a tie-breaker beside equal sums, so the comparison
    only runs on exact float ties.
    """

    __slots__ = ("mask",)

    def __init__(self, mask: int):
        self.mask = mask

    def __eq__(self, other) -> bool:
        return self.mask == other.mask

    def __lt__(self, other) -> bool:
        d = self.mask ^ other.mask
        if not d:
            return False
        return not self.mask & (d & -d)

    def __repr__(self) -> str:
        return f"_LexKey({self.mask:#x})"


def lex_less(a: Combination, b: Combination) -> bool:
    """True if a precedes b lexicographically (position 1 most significant)."""
    return _LexKey(a.mask) < _LexKey(b.mask)


@dataclass(frozen=True)
class ProblemInstance:
    """Normalized problem, immutable after construction.

    Arrays are read-only numpy views. ``perm[i]`` is the 0-based original
    pair index stored at sorted position i; ``inv_perm`` is its inverse.
    ``flip_mask`` packs, per original pair j at bit j-1, whether the pair
    arrived with its larger element first (after the direction transform).
    For direction MAX all values were negated up front, so sums computed
    here are negated sums of the original data.
    """

    v0: np.ndarray
    v1: np.ndarray
    delta: np.ndarray
    perm: np.ndarray
    inv_perm: np.ndarray
    flip_mask: int
    s1: float
    direction: Direction

    @property
    def n(self) -> int:
        return len(self.delta)


class ScoredCombination(NamedTuple):
    combo: Combination
    sum: float


def normalize(pairs: PairList, direction: Direction = Direction.MIN) -> ProblemInstance:
    """Turn raw pairs into a sorted-gap problem instance.

    Applies the direction transform first (MAX negates every value), then
    orders each pair componentwise (recording flips), then stable-sorts the
    gaps ascending (recording the permutation).

    Raises NonFiniteInput on NaN/infinity and EmptyInput on zero pairs.
    """
    arr = np.asarray(pairs, dtype=float)
    if arr.size == 0:
        raise EmptyInput("need at least one pair")
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"expected shape (N, 2), got {arr.shape}")
    if not np.isfinite(arr).all():
        raise NonFiniteInput("pairs must be finite (no NaN, no infinities)")
    if direction is Direction.MAX:
        arr = -arr

    flipped = arr[:, 0] > arr[:, 1]
    v0 = np.where(flipped, arr[:, 1], arr[:, 0])
    v1 = np.where(flipped, arr[:, 0], arr[:, 1])
    gaps = v1 - v0
    perm = np.argsort(gaps, kind="stable")
    inv_perm = np.empty_like(perm)
    inv_perm[perm] = np.arange(len(perm))
    delta = gaps[perm]
    flip_mask = int.from_bytes(
        np.packbits(flipped, bitorder="little").tobytes(), "little"
    )
    for a in (v0, v1, delta, perm, inv_perm):
        a.setflags(write=False)
    return ProblemInstance(
        v0=v0,
        v1=v1,
        delta=delta,
        perm=perm,
        inv_perm=inv_perm,
        flip_mask=flip_mask,
        s1=float(v0.sum()),
        direction=direction,
    )


def score(instance: ProblemInstance, combo: Combination) -> float:
    """Sum of combo from scratch: s1 plus delta over set bits."""
    if combo.n != instance.n:
        raise LengthMismatch(f"combination has {combo.n} bits, instance has {instance.n}")
    total = instance.s1
    delta = instance.delta
    m = combo.mask
    while m:
        low = m & -m
        m ^= low
        total += delta[low.bit_length() - 1]
    return float(total)


def shift(combo: Combination, i: int) -> Combination:
    """Apply the single-shift move at position i.

    i = 1 sets position 1; i > 1 moves a one from position i-1 to i when
    position i-1 holds a one and position i a zero; otherwise the input is
    returned unchanged. Never mutates.
    """
    n = combo.n
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"shift index {i} outside 1..{n}")
    m = combo.mask
    if i == 1:
        new = m | 1
    else:
        lo = 1 << (i - 2)
        hi = lo << 1
        if m & lo and not m & hi:
            new = m ^ (lo | hi)
        else:
            new = m
    return combo if new == m else Combination(n, new)


def _child_moves(mask: int, n: int) -> Iterator[tuple[int, int]]:
    """Yield (child_mask, k) for every single shift that alters ``mask``.

    k is the 0-based landing bit: k = 0 means position 1 was set (apply
    delta[0]); k >= 1 means a one moved from bit k-1 to bit k (apply
    delta[k] - delta[k-1]). Children are pairwise distinct by construction:
    each consumes a different landing bit.
    """
    if not mask & 1:
        yield mask | 1, 0
    pattern = (mask << 1) & ~mask
    while pattern:
        low = pattern & -pattern
        pattern ^= low
        k = low.bit_length() - 1
        if k >= n:
            break
        yield mask ^ (low | (low >> 1)), k


def successors(combo: Combination) -> list[Combination]:
    """All combinations one shift away from combo, excluding combo itself.

    Pairwise distinct; at most ceil(N/2) of them.
    """
    n = combo.n
    return [Combination(n, m) for m, _ in _child_moves(combo.mask, n)]


class PendingSet:
    """Frontier of scored candidates, ordered by (sum, lexicographic bits).

    Entries live in an ascending sorted sequence with a cursor at the head,
    so extract-min is O(1) and a batch insert costs one linear merge over
    the live suffix. A mask index rejects duplicate insertions.
    """

    __slots__ = ("_entries", "_head", "_members")

    def __init__(self):
        self._entries: list[tuple[float, _LexKey, int]] = []
        self._head = 0
        self._members: set[int] = set()

    def __len__(self) -> int:
        return len(self._entries) - self._head

    def __contains__(self, mask: int) -> bool:
        return mask in self._members

    def extract_min(self) -> Optional[tuple[float, _LexKey, int]]:
        """Pop the entry with the smallest sum, ties to the lex-smallest mask."""
        head = self._head
        entries = self._entries
        if head >= len(entries):
            return None
        entry = entries[head]
        self._head = head + 1
        self._members.discard(entry[2])
        # Compact dead prefix when batches keep coming back empty.
        if self._head > 1024 and self._head * 2 > len(entries):
            del entries[: self._head]
            self._head = 0
        return entry

    def insert_batch(self, batch: list[tuple[float, _LexKey, int]]) -> None:
        """Merge new entries in, skipping masks already pending.

        Rebuilds the live suffix in one pass, mirroring the sort-then-
        integrate step of the iteration: cost O(len(pending) + b log b).
        """
        members = self._members
        batch = [e for e in batch if e[2] not in members]
        if not batch:
            return
        batch.sort()
        members.update(e[2] for e in batch)
        old = self._entries
        lo = self._head
        if lo >= len(old):
            self._entries = batch
            self._head = 0
            return
        merged: list[tuple[float, _LexKey, int]] = []
        for entry in batch:
            pos = bisect_left(old, entry, lo)
            merged += old[lo:pos]
            merged.append(entry)
            lo = pos
        merged += old[lo:]
        self._entries = merged
        self._head = 0


class EnumerationState:
    """Mutable iterator state: pending frontier, seen masks, emit counter.

    ``seen`` spans everything ever generated (emitted plus pending), which
    keeps already-ranked combinations out of the frontier even when sums
    tie or two parents generate the same child. Single-owner: do not call
    advance concurrently on one state.
    """

    __slots__ = (
        "instance",
        "pending",
        "seen",
        "emitted_count",
        "last_emitted",
        "_delta0",
        "_steps",
    )

    def __init__(self, instance: ProblemInstance):
        self.instance = instance
        self.pending = PendingSet()
        self.seen: set[int] = {0}
        self.emitted_count = 0
        self.last_emitted: Optional[Combination] = None
        delta = instance.delta
        self._delta0 = float(delta[0])
        # _steps[k-1] = delta[k] - delta[k-1]: sum increment for landing bit k.
        self._steps = np.diff(delta).tolist()
        self.pending.insert_batch([(instance.s1, _LexKey(0), 0)])

    def advance(self) -> Optional[ScoredCombination]:
        """Emit the next combination in sum order, or None when exhausted.

        Extract-min, then generate all unseen successors with incrementally
        computed sums and merge them into the frontier.
        """
        entry = self.pending.extract_min()
        if entry is None:
            return None
        total, _, mask = entry
        n = self.instance.n
        seen = self.seen
        batch = []
        if not mask & 1:
            child = mask | 1
            if child not in seen:
                seen.add(child)
                batch.append((total + self._delta0, _LexKey(child), child))
        steps = self._steps
        pattern = (mask << 1) & ~mask
        while pattern:
            low = pattern & -pattern
            pattern ^= low
            k = low.bit_length() - 1
            if k >= n:
                break
            child = mask ^ (low | (low >> 1))
            if child not in seen:
                seen.add(child)
                batch.append((total + steps[k - 1], _LexKey(child), child))
        if batch:
            self.pending.insert_batch(batch)
        self.emitted_count += 1
        combo = Combination(n, mask)
        self.last_emitted = combo
        return ScoredCombination(combo, total)

    def pending_size(self) -> int:
        return len(self.pending)

    def __iter__(self) -> Iterator[ScoredCombination]:
        while True:
            out = self.advance()
            if out is None:
                return
            yield out


def init(instance: ProblemInstance) -> EnumerationState:
    """Fresh enumeration state: pending holds only the all-zeros vector."""
    return EnumerationState(instance)


def denormalize(instance: ProblemInstance, combo: Combination) -> Combination:
    """Map a hat-domain combination to user-facing selection bits.

    Selection bit j = 1 means the second element of input pair j is chosen.
    Undoes the gap-sort permutation, then XORs the flip mask to convert
    the smaller/larger indicator into first/second indexing. Direction
    needs no step here: negation affects sums only.
    """
    if combo.n != instance.n:
        raise LengthMismatch(f"combination has {combo.n} bits, instance has {instance.n}")
    n = instance.n
    perm = instance.perm
    buf = bytearray((n + 7) // 8)
    m = combo.mask
    while m:
        low = m & -m
        m ^= low
        j = int(perm[low.bit_length() - 1])
        buf[j >> 3] |= 1 << (j & 7)
    indicator = int.from_bytes(bytes(buf), "little")
    return Combination(n, indicator ^ instance.flip_mask)


class RankedChoice:
    """One emitted result: 1-based rank, sum, and selection bits.

    Sums are reported on the original scale (un-negated for MAX). The
    selection vector is materialized lazily when it was produced by the
    enumerator, so ranking at very large N does not pay for untouched
    selections.
    """

    __slots__ = ("rank", "sum", "_selection", "_instance", "_hat_mask")

    def __init__(
        self,
        rank: int,
        sum: float,
        selection: Optional[Combination] = None,
        instance: Optional[ProblemInstance] = None,
        hat_mask: Optional[int] = None,
    ):
        if selection is None and (instance is None or hat_mask is None):
            raise ValueError("need either selection or (instance, hat_mask)")
        self.rank = rank
        self.sum = sum
        self._selection = selection
        self._instance = instance
        self._hat_mask = hat_mask

    @property
    def selection(self) -> Combination:
        if self._selection is None:
            inst = self._instance
            self._selection = denormalize(inst, Combination(inst.n, self._hat_mask))
        return self._selection

    def selection_bits(self) -> list[int]:
        return self.selection.to_bits()

    def selection_str(self) -> str:
        return self.selection.to01()

    def __repr__(self) -> str:
        return f"RankedChoice(rank={self.rank}, sum={self.sum!r})"


def iter_top(
    pairs: PairList, direction: Direction = Direction.MIN
) -> Iterator[RankedChoice]:
    """Stream RankedChoice results in best-first order until exhaustion."""
    instance = normalize(pairs, direction)
    sign = -1.0 if direction is Direction.MAX else 1.0
    for rank, emitted in enumerate(iter(init(instance)), start=1):
        yield RankedChoice(
            rank,
            sign * emitted.sum,
            instance=instance,
            hat_mask=emitted.combo.mask,
        )


def top_k(
    pairs: PairList, k: int, direction: Direction = Direction.MIN
) -> list[RankedChoice]:
    """The k best choice combinations, rank 1 first.

    Sums come out non-decreasing for MIN and non-increasing for MAX. If k
    exceeds 2^N the full enumeration (all 2^N results) is returned.
    """
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise InvalidK(f"k must be a positive integer, got {k!r}")
    out = []
    for choice in iter_top(pairs, direction):
        out.append(choice)
        if len(out) >= k:
            break
    return out


def pending_size(state: EnumerationState) -> int:
    """Current frontier size |P| of a running enumeration."""
    return state.pending_size()
