"""Brute-force enumeration oracles, independent of the fast paths."""

from __future__ import annotations

_PARTITION_COUNTS: dict[int, tuple[int, ...]] = {}


def partition_block_counts(n: int) -> tuple[int, ...]:
    """counts[k] = number of partitions of an n-set into exactly k blocks.

    Enumerates every set partition as a restricted-growth string: each
    element either joins an existing block or opens a new one. Shares
    nothing with the Stirling triangle it is used to check. Results are
    cached per n; the n = 12 run walks ~4.2 million partitions.
    """
    if n < 0:
        raise ValueError("set size must be non-negative")
    cached = _PARTITION_COUNTS.get(n)
    if cached is not None:
        return cached
    counts = [0] * (n + 1)
    if n == 0:
        counts[0] = 1  # the empty partition
    else:

        def descend(i: int, blocks: int) -> None:
            if i == n:
                counts[blocks] += 1
                return
            for _ in range(blocks):  # element i joins one of the open blocks
                descend(i + 1, blocks)
            descend(i + 1, blocks + 1)  # element i opens a new block

        descend(1, 1)
    result = tuple(counts)
    _PARTITION_COUNTS[n] = result
    return result
