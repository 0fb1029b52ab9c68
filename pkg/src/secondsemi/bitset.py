"""Subsets of ``0..n-1`` encoded as Python ints (bit i set <=> i is a member).

Everything that returns a list of subsets sorts it by ascending int value.
"""

from typing import Iterable, Iterator

import numpy as np


def from_iter(items: Iterable[int]) -> int:
    mask = 0
    for i in items:
        if i < 0:
            raise ValueError(f"negative element index {i}")
        mask |= 1 << i
    return mask


def members(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in ascending order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def to_list(mask: int) -> list[int]:
    return list(members(mask))


def count(mask: int) -> int:
    return bin(mask).count("1")


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def full(n: int) -> int:
    return (1 << n) - 1


def to_array(mask: int, n: int) -> np.ndarray:
    """Boolean membership vector of length ``n``."""
    nbytes = (n + 7) // 8 or 1
    raw = np.frombuffer(mask.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].astype(bool)


def from_array(arr: np.ndarray) -> int:
    packed = np.packbits(np.asarray(arr, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def index_array(mask: int) -> np.ndarray:
    return np.fromiter(members(mask), dtype=np.intp)
