"""Integer partitions as plain tuples of weakly decreasing positive parts.

The empty tuple is the unique partition of 0.  Strict partitions (used by the
type C ring) have strictly decreasing parts.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator

Partition = tuple[int, ...]


def check_partition(seq) -> Partition:
    """Canonicalize `seq` into a partition tuple (trailing zeros stripped)."""
    parts = tuple(int(a) for a in seq)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(a <= 0 for a in parts):
        raise ValueError(f"partition parts must be positive: {seq!r}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts must decrease weakly: {seq!r}")
    return parts


def is_partition(seq) -> bool:
    try:
        check_partition(seq)
    except (ValueError, TypeError):
        return False
    return True


def is_strict(lam: Partition) -> bool:
    return all(lam[i] > lam[i + 1] for i in range(len(lam) - 1))


def weight(lam: Partition) -> int:
    return sum(lam)


def part(lam: Partition, i: int) -> int:
    """lam_i with 1-based index, zero beyond the last row."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


@lru_cache(maxsize=None)
def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    cols = [0] * lam[0]
    for a in lam:
        for j in range(a):
            cols[j] += 1
    return tuple(cols)


def contains(lam: Partition, mu: Partition) -> bool:
    """mu is contained in lam (as Young diagrams)."""
    if len(mu) > len(lam):
        return False
    return all(mu[i] <= lam[i] for i in range(len(mu)))


def cells(lam: Partition, mu: Partition = ()) -> list[tuple[int, int]]:
    """Cells of the skew shape lam/mu, as (row, col) pairs, 1-based."""
    out = []
    for i, a in enumerate(lam, start=1):
        b = part(mu, i)
        out.extend((i, j) for j in range(b + 1, a + 1))
    return out


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def partitions_upto(n: int) -> Iterator[Partition]:
    for d in range(n + 1):
        yield from partitions_of(d)


def strict_partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in strict_partitions_of(n - first, first - 1):
            yield (first,) + rest


def subpartitions(lam: Partition) -> Iterator[Partition]:
    """All mu contained in lam."""
    if not lam:
        yield ()
        return

    def rec(i: int, prev: int) -> Iterator[tuple[int, ...]]:
        if i == len(lam):
            yield ()
            return
        for a in range(min(lam[i], prev), -1, -1):
            for rest in rec(i + 1, a):
                yield (a,) + rest

    for mu in rec(0, lam[0]):
        out = tuple(a for a in mu if a > 0)
        yield out


@lru_cache(maxsize=None)
def horizontal_strips(lam: Partition, k: int) -> tuple[Partition, ...]:
    """All nu obtained from lam by adding a horizontal strip of k boxes.

    nu/lam is a horizontal strip iff nu_1 >= lam_1 >= nu_2 >= lam_2 >= ...
    """
    if k < 0:
        return ()
    if k == 0:
        return (lam,)
    results: list[Partition] = []
    n = len(lam)

    def rec(i: int, remaining: int, acc: list[int]):
        if i == n:
            # optional new bottom row, bounded by lam_n (or unconstrained if lam empty... bounded by previous row)
            cap = lam[n - 1] if n else remaining
            if remaining == 0:
                results.append(tuple(acc))
            elif remaining <= cap:
                results.append(tuple(acc + [remaining]))
            return
        lo = lam[i]
        hi = lam[i - 1] if i else lam[0] + remaining
        for v in range(lo, min(hi, lo + remaining) + 1):
            acc.append(v)
            rec(i + 1, remaining - (v - lo), acc)
            acc.pop()

    rec(0, k, [])
    return tuple(results)


@lru_cache(maxsize=None)
def ribbon_removals(lam: Partition) -> tuple[tuple[Partition, int, int, int], ...]:
    """All ways to strip a (possibly disconnected) ribbon from lam.

    Returns tuples (mu, v, h, k): mu < lam with lam/mu containing no 2x2
    block; v counts horizontally adjacent cell pairs, h vertically adjacent
    pairs, k connected components of lam/mu.
    """
    out: list[tuple[Partition, int, int, int]] = []
    for mu in subpartitions(lam):
        if mu == lam:
            continue
        cs = set(cells(lam, mu))
        if any((i + 1, j) in cs and (i, j + 1) in cs and (i + 1, j + 1) in cs
               for (i, j) in cs):
            continue
        v = sum(1 for (i, j) in cs if (i, j + 1) in cs)
        h = sum(1 for (i, j) in cs if (i + 1, j) in cs)
        # connected components under edge-adjacency
        seen: set[tuple[int, int]] = set()
        k = 0
        for c in cs:
            if c in seen:
                continue
            k += 1
            stack = [c]
            while stack:
                (i, j) = stack.pop()
                if (i, j) in seen:
                    continue
                seen.add((i, j))
                for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                    if nb in cs and nb not in seen:
                        stack.append(nb)
        out.append((mu, v, h, k))
    return tuple(out)
