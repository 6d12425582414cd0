"""Factor and palindromic complexity of finite words, plus Sturmian index formulas.

Distinct factors are counted with a suffix automaton: each non-root state
stands for the lengths ``(len(link), len]``, so a difference array over those
intervals gives the number of distinct factors of every length in one pass.
Memory is about five Python ints per automaton state (at most ``2L`` states
for a word of length ``L``), roughly 80 bytes per input symbol.

Distinct palindromes are counted with a palindromic tree (eertree); every
node is one distinct palindrome.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from .density import BoundReport
from .errors import InsufficientDepth, WindowTooLarge
from .fibword import prefix as fib_prefix
from .sequences import mp_context

__all__ = [
    "ComplexityProfile",
    "ContinuedFraction",
    "SturmianIndex",
    "factor_counts",
    "palindrome_counts",
    "factor_complexity",
    "palindromic_complexity",
    "palindrome_bound_check",
    "complexity_profile",
    "fibonacci_profile",
    "convergent_denominators",
    "sturmian_index",
    "index_history",
]


def _symbols(word) -> list[int]:
    if isinstance(word, np.ndarray):
        return word.astype(np.int64).tolist()
    if isinstance(word, (bytes, bytearray)):
        return list(word)
    return [ord(c) if isinstance(c, str) else int(c) for c in word]


def factor_counts(word) -> list[int]:
    """``out[n]`` = number of distinct length-``n`` factors, for ``0 <= n <= len``."""
    seq = _symbols(word)
    alphabet = {s: i for i, s in enumerate(sorted(set(seq)))}
    nxt: list[list[int]] = [[-1] for _ in alphabet]
    link = [-1]
    length = [0]
    last = 0
    for sym in seq:
        c = alphabet[sym]
        cur = len(length)
        length.append(length[last] + 1)
        link.append(0)
        for row in nxt:
            row.append(-1)
        row_c = nxt[c]
        p = last
        while p != -1 and row_c[p] == -1:
            row_c[p] = cur
            p = link[p]
        if p != -1:
            q = row_c[p]
            if length[p] + 1 == length[q]:
                link[cur] = q
            else:
                clone = len(length)
                length.append(length[p] + 1)
                link.append(link[q])
                for row in nxt:
                    row.append(row[q])
                while p != -1 and row_c[p] == q:
                    row_c[p] = clone
                    p = link[p]
                link[q] = clone
                link[cur] = clone
        last = cur

    size = len(seq)
    diff = [0] * (size + 2)
    for v in range(1, len(length)):
        diff[length[link[v]] + 1] += 1
        diff[length[v] + 1] -= 1
    out = [1] * (size + 1)
    running = 0
    for n in range(1, size + 1):
        running += diff[n]
        out[n] = running
    return out


def palindrome_counts(word) -> list[int]:
    """``out[n]`` = number of distinct palindromic factors of length ``n``."""
    seq = _symbols(word)
    size = len(seq)
    # node 0: imaginary root of length -1, node 1: empty palindrome
    length = [-1, 0]
    link = [0, 0]
    edges: list[dict[int, int]] = [{}, {}]
    last = 1
    for i, c in enumerate(seq):
        cur = last
        while True:
            j = i - length[cur] - 1
            if j >= 0 and seq[j] == c:
                break
            cur = link[cur]
        if c in edges[cur]:
            last = edges[cur][c]
            continue
        node = len(length)
        length.append(length[cur] + 2)
        edges.append({})
        edges[cur][c] = node
        if length[node] == 1:
            link.append(1)
        else:
            w = link[cur]
            while True:
                j = i - length[w] - 1
                if j >= 0 and seq[j] == c:
                    break
                w = link[w]
            link.append(edges[w][c])
        last = node

    out = [0] * (size + 1)
    out[0] = 1
    for v in range(2, len(length)):
        out[length[v]] += 1
    return out


def factor_complexity(word, n: int) -> int:
    size = len(word)
    if n < 0 or n > size:
        raise WindowTooLarge(f"window {n} does not fit a word of length {size}")
    return factor_counts(word)[n]


def palindromic_complexity(word, n: int) -> int:
    size = len(word)
    if n < 0 or n > size:
        raise WindowTooLarge(f"window {n} does not fit a word of length {size}")
    return palindrome_counts(word)[n]


@dataclass(frozen=True)
class ComplexityProfile:
    """Factor and palindrome counts of one prefix for lengths ``0..max_n``.

    ``stabilized[n]`` is true when a prefix twice as long gives the same
    ``fac(n)`` and ``pal(n)``; ``None`` when no longer word was supplied.
    """

    prefix_len: int
    fac: list[int]
    pal: list[int]
    stabilized: list[bool] | None = field(default=None)

    @property
    def max_n(self) -> int:
        return len(self.fac) - 1

    def palindrome_bound(self, k: int) -> BoundReport:
        if k < 1:
            raise ValueError("k must be >= 1")
        wide = k + k // 4
        if wide > self.max_n:
            raise WindowTooLarge(f"k + k//4 = {wide} exceeds profile depth {self.max_n}")
        return BoundReport(k, Fraction(self.pal[k]), Fraction(16, k) * self.fac[wide])


def complexity_profile(word, max_n: int, extended=None) -> ComplexityProfile:
    size = len(word)
    if max_n > size:
        raise WindowTooLarge(f"max_n={max_n} exceeds word length {size}")
    fac = factor_counts(word)[: max_n + 1]
    pal = palindrome_counts(word)[: max_n + 1]
    stabilized = None
    if extended is not None:
        fac2 = factor_counts(extended)[: max_n + 1]
        pal2 = palindrome_counts(extended)[: max_n + 1]
        stabilized = [a == b and c == d for a, b, c, d in zip(fac, fac2, pal, pal2)]
    return ComplexityProfile(size, fac, pal, stabilized)


def fibonacci_profile(length: int, max_n: int) -> ComplexityProfile:
    """Profile of the Fibonacci prefix of ``length``, checked against ``2*length``."""
    longer = fib_prefix(2 * length)
    return complexity_profile(longer[:length], max_n, extended=longer)


def palindrome_bound_check(word, k: int) -> BoundReport:
    """``pal(k) < (16/k) fac(k + k//4)`` on the given word."""
    if k < 1:
        raise ValueError("k must be >= 1")
    wide = k + k // 4
    if wide > len(word):
        raise WindowTooLarge(f"k + k//4 = {wide} exceeds word length {len(word)}")
    return complexity_profile(word, wide).palindrome_bound(k)


@dataclass(frozen=True)
class ContinuedFraction:
    partial_quotients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "partial_quotients", tuple(int(a) for a in self.partial_quotients))
        if not self.partial_quotients:
            raise ValueError("a continued fraction needs at least a_0")
        if any(a < 1 for a in self.partial_quotients[1:]):
            raise ValueError("partial quotients after a_0 must be >= 1")

    @classmethod
    def constant(cls, a: int, count: int, a0: int | None = None) -> ContinuedFraction:
        head = a if a0 is None else a0
        return cls((head,) + (a,) * (count - 1))

    def __len__(self) -> int:
        return len(self.partial_quotients)

    def __getitem__(self, i: int) -> int:
        return self.partial_quotients[i]


def convergent_denominators(cf: ContinuedFraction | Sequence[int]) -> list[int]:
    """``q_0..q_N`` from ``q_{-1} = 0``, ``q_0 = 1``, ``q_{n+1} = a_{n+1} q_n + q_{n-1}``."""
    a = cf.partial_quotients if isinstance(cf, ContinuedFraction) else tuple(cf)
    prev, cur = 0, 1
    out = [cur]
    for a_next in a[1:]:
        prev, cur = cur, a_next * cur + prev
        out.append(cur)
    return out


class SturmianIndex(NamedTuple):
    ind_partial: object
    ind_star_partial: object


def index_history(cf: ContinuedFraction | Sequence[int], depth: int = 30) -> list[Fraction]:
    """Exact values ``2 + a_{n+1} + (q_{n-1} - 2)/q_n`` for ``n = 0..depth``."""
    a = cf.partial_quotients if isinstance(cf, ContinuedFraction) else tuple(cf)
    if len(a) < depth + 2:
        raise InsufficientDepth(f"need {depth + 2} partial quotients, have {len(a)}")
    q = convergent_denominators(a)
    out = []
    for n in range(depth + 1):
        q_prev = 0 if n == 0 else q[n - 1]
        out.append(2 + a[n + 1] + Fraction(q_prev - 2, q[n]))
    return out


def sturmian_index(cf: ContinuedFraction | Sequence[int], depth: int = 30,
                   prec: int = 128) -> SturmianIndex:
    """Truncated ``ind`` and ``ind*`` of a Sturmian word with slope ``cf``.

    ``ind`` is the running maximum of :func:`index_history` up to ``depth``.
    ``ind*`` is twice the largest reversed fraction ``[a_n; a_{n-1}, ..., a_1]``
    over the upper half ``ceil((depth+1)/2) <= n <= depth+1`` of the available
    range, which stands in for the lim sup.
    """
    a = cf.partial_quotients if isinstance(cf, ContinuedFraction) else tuple(cf)
    history = index_history(a, depth)
    ctx = mp_context(prec)
    best = max(history)
    ind = ctx.mpf(best.numerator) / best.denominator

    top = depth + 1
    lo = max(1, -(-top // 2))
    tail = None
    for n in range(lo, top + 1):
        x = ctx.mpf(a[1])
        for i in range(2, n + 1):
            x = a[i] + 1 / x
        tail = x if tail is None or x > tail else tail
    return SturmianIndex(ind, 2 * tail)
