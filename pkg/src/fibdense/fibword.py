"""Finite Fibonacci words and an index-addressable infinite Fibonacci word.

Word indexing: FW(0) = "0", FW(1) = "1", FW(2) = "10" and
FW(k) = FW(k-1) FW(k-2), so ``len(FW(k)) == fib(k+1)`` and, for k >= 2, FW(k)
holds fib(k-1) zeros and fib(k) ones.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import WordTooLong
from .sequences import fib

DEFAULT_MAX_LEN = 1 << 26

_BASES = {
    0: np.array([0], dtype=np.uint8),
    1: np.array([1], dtype=np.uint8),
    2: np.array([1, 0], dtype=np.uint8),
}


def word_length(k: int) -> int:
    return fib(k + 1)


def _word_bits(k: int) -> np.ndarray:
    if k in _BASES:
        return _BASES[k].copy()
    older, newer = _BASES[1], _BASES[2]
    for _ in range(3, k + 1):
        older, newer = newer, np.concatenate((newer, older))
    return newer


@dataclass(frozen=True)
class FibWord:
    """A materialized FW(k), stored one bit per symbol."""

    k: int
    length: int
    packed: bytes = field(repr=False)
    m: int
    n: int

    @classmethod
    def from_bits(cls, k: int, bits: np.ndarray) -> FibWord:
        ones = int(np.count_nonzero(bits))
        return cls(k=k, length=int(bits.size), packed=np.packbits(bits).tobytes(),
                   m=int(bits.size) - ones, n=ones)

    @property
    def bits(self) -> np.ndarray:
        """Unpacked symbols as a ``uint8`` array of 0/1."""
        raw = np.frombuffer(self.packed, dtype=np.uint8)
        return np.unpackbits(raw, count=self.length)

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, j: int) -> int:
        if j < 0:
            j += self.length
        if not 0 <= j < self.length:
            raise IndexError(j)
        return (self.packed[j >> 3] >> (7 - (j & 7))) & 1

    def __str__(self) -> str:
        return to_ascii(self.bits)

    def to_ascii(self) -> str:
        """Export form: '0'/'1' characters followed by a newline."""
        return str(self) + "\n"


def to_ascii(bits: np.ndarray) -> str:
    return (np.asarray(bits, dtype=np.uint8) + ord("0")).tobytes().decode("ascii")


def build(k: int, max_len: int = DEFAULT_MAX_LEN) -> FibWord:
    """Materialize FW(k) by iterative concatenation."""
    if k < 0:
        raise ValueError("k must be non-negative")
    size = word_length(k)
    if size > max_len:
        raise WordTooLong(f"FW({k}) has {size} symbols, cap is {max_len}")
    return FibWord.from_bits(k, _word_bits(k))


def counts(k: int) -> tuple[int, int]:
    """Zeros and ones of FW(k) from the count recurrences alone."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return 1, 0
    if k == 1:
        return 0, 1
    # (m, n) for FW(1) and FW(2)
    prev, cur = (0, 1), (1, 1)
    for _ in range(3, k + 1):
        prev, cur = cur, (cur[0] + prev[0], cur[1] + prev[1])
    return cur


def symbol_at(j: int) -> int:
    """Symbol ``j`` (0-based) of the infinite Fibonacci word 1011010110110...

    Descends the concatenation tree FW(k) = FW(k-1) FW(k-2): if ``j`` lies in the
    left part keep it, otherwise subtract ``len(FW(k-1))`` and move to FW(k-2).
    """
    if j < 0:
        raise ValueError("j must be non-negative")
    # lengths[i] == len(FW(i)) for i >= 1
    lengths = [1, 1, 2]
    while lengths[-1] <= j:
        lengths.append(lengths[-1] + lengths[-2])
    k = len(lengths) - 1
    while k > 2:
        left = lengths[k - 1]
        if j < left:
            k -= 1
        else:
            j -= left
            k -= 2
    if k == 2:
        return 1 if j == 0 else 0
    return 1 if k == 1 else 0


def prefix(length: int, max_len: int = DEFAULT_MAX_LEN) -> np.ndarray:
    """First ``length`` symbols of the infinite word as a ``uint8`` array."""
    if length < 0:
        raise ValueError("length must be non-negative")
    if length > max_len:
        raise WordTooLong(f"prefix of {length} symbols exceeds cap {max_len}")
    if length <= 2:
        return _BASES[2][:length].copy()
    older, newer = _BASES[1], _BASES[2]
    while newer.size < length:
        older, newer = newer, np.concatenate((newer, older))
    return newer[:length].copy()


class InfiniteFibWord:
    """Read-only view of the infinite Fibonacci word.

    Indices below ``cached`` are served from an explicit prefix built once at
    construction; everything else goes through :func:`symbol_at`.
    """

    def __init__(self, cached: int = 0):
        self._cache = prefix(cached)
        self._cache.setflags(write=False)

    def symbol_at(self, j: int) -> int:
        if 0 <= j < self._cache.size:
            return int(self._cache[j])
        return symbol_at(j)

    __getitem__ = symbol_at

    def prefix(self, length: int, max_len: int = DEFAULT_MAX_LEN) -> np.ndarray:
        if length <= self._cache.size:
            return self._cache[:length].copy()
        return prefix(length, max_len)
