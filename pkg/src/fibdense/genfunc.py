"""Rational generating functions with exact coefficient extraction."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import ZeroLeadingDenominator
from .sequences import fib

__all__ = [
    "RationalGF",
    "series_coeffs",
    "lemma22_gf",
    "kfib_gf",
    "product_fib_gf",
    "verify_gf",
    "convolve",
]


def _trim(coeffs: Sequence) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out) if out else (Fraction(0),)


@dataclass(frozen=True)
class RationalGF:
    """``num(x) / den(x)`` with coefficients in ascending powers, ``den[0] == 1``."""

    num: tuple[Fraction, ...]
    den: tuple[Fraction, ...]

    def __init__(self, num: Sequence, den: Sequence):
        num, den = _trim(num), _trim(den)
        if den[0] == 0:
            raise ZeroLeadingDenominator("den[0] must be non-zero")
        lead = den[0]
        object.__setattr__(self, "num", tuple(c / lead for c in num))
        object.__setattr__(self, "den", tuple(c / lead for c in den))

    def series(self, n_terms: int) -> list[Fraction]:
        return series_coeffs(self, n_terms)


def series_coeffs(gf: RationalGF, n_terms: int) -> list[Fraction]:
    """First ``n_terms`` power-series coefficients.

    Solves ``sum_i den[i] c[j-i] = num[j]`` for ``c[j]`` term by term.
    """
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    num, den = gf.num, gf.den
    if den[0] == 0:
        raise ZeroLeadingDenominator("den[0] must be non-zero")
    c: list[Fraction] = []
    for j in range(n_terms):
        acc = num[j] if j < len(num) else Fraction(0)
        for i in range(1, min(j, len(den) - 1) + 1):
            acc -= den[i] * c[j - i]
        c.append(acc / den[0])
    return c


def convolve(a: Sequence, b: Sequence, n_terms: int) -> list[Fraction]:
    """Product of two power series truncated to ``n_terms``."""
    return [
        sum((Fraction(a[i]) * b[j - i] for i in range(j + 1) if i < len(a) and j - i < len(b)),
            Fraction(0))
        for j in range(n_terms)
    ]


def lemma22_gf(t: int, k: int) -> RationalGF:
    """``x**(k-1) / (1 - t x - x**2 - ... - x**k)``."""
    if t < 1 or k < 1:
        raise ValueError("t and k must be >= 1")
    num = [0] * (k - 1) + [1]
    den = [1, -t] + [-1] * (k - 1)
    return RationalGF(num, den)


def kfib_gf(k: int) -> RationalGF:
    """``x / (1 - k x - x**2)``."""
    return RationalGF([0, 1], [1, -k, -1])


def product_fib_gf(lam: int) -> RationalGF:
    """Generating function of ``F(j) F(j+lam)`` over ``1 - 2x - 2x**2 + x**3``.

    The quadratic numerator is fixed by the first three products.
    """
    if lam < 0:
        raise ValueError("lam must be >= 0")
    den = (1, -2, -2, 1)
    head = [fib(j) * fib(j + lam) for j in range(3)]
    num = convolve(head, den, 3)
    return RationalGF(num, den)


def verify_gf(gf: RationalGF, seq: Callable[[int], object] | Sequence, n_terms: int) -> bool:
    """True iff the first ``n_terms`` coefficients equal ``seq(j)`` exactly."""
    got = series_coeffs(gf, n_terms)
    if callable(seq):
        want = [seq(j) for j in range(n_terms)]
    else:
        want = list(seq)[:n_terms]
        if len(want) < n_terms:
            return False
    return all(Fraction(w) == g for w, g in zip(want, got))
