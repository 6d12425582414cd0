"""Symbol densities of Fibonacci words and the ratios built from them.

Every quantity is computed exactly (``int``/``Fraction``); comparisons against
the golden ratio use mpmath at an explicit precision.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateDenominator, PrecisionTooLow
from .fibword import counts
from .sequences import fib, golden, mp_context

__all__ = [
    "BoundReport",
    "DensityRecord",
    "RatioRow",
    "density_record",
    "density_table",
    "prop31_deviation",
    "prop32_eval",
    "lemma34_ratio",
    "lemma35_bound",
    "ratio_row",
    "ratio_table",
    "lambda_ratio",
    "natural_density_fib",
    "product_norm",
    "product_norm_exact",
    "product_recurrence_check",
    "to_mpf",
]


def to_mpf(ctx, q: Fraction):
    return ctx.mpf(q.numerator) / q.denominator


@dataclass(frozen=True)
class DensityRecord:
    k: int
    m: int
    n: int
    df_m: Fraction
    df_n: Fraction


@dataclass(frozen=True)
class BoundReport:
    k: int
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs < self.rhs


@dataclass(frozen=True)
class RatioRow:
    """One row of ratios between Fibonacci lengths.

    l1 = F(k+1)/F(k), l2 = F(k)/F(k+1), l3 = F(k+2)/F(k), l4 = l1 - l2,
    l5 = l3 - l2, l6 = l3 - l1 and l7 = |FW(k+3)|/|FW(k)| = F(k+4)/F(k+1).
    """

    k: int
    l1: Fraction
    l2: Fraction
    l3: Fraction
    l4: Fraction
    l5: Fraction
    l6: Fraction
    l7: Fraction

    def values(self) -> tuple[Fraction, ...]:
        return (self.l1, self.l2, self.l3, self.l4, self.l5, self.l6, self.l7)


def density_record(k: int) -> DensityRecord:
    m, n = counts(k)
    return DensityRecord(k, m, n, Fraction(m, m + n), Fraction(n, m + n))


def density_table(k_max: int) -> list[DensityRecord]:
    return [density_record(k) for k in range(k_max + 1)]


def prop31_deviation(k: int, prec: int = 256):
    """``(|DF_n - (phi - 1)|, phi - DF_m)`` for FW(k)."""
    if k < 2:
        raise ValueError("k must be >= 2")
    rec = density_record(k)
    ctx = mp_context(prec)
    phi, _ = golden(ctx)
    dev_n = abs(to_mpf(ctx, rec.df_n) - (phi - 1))
    kappa = phi - to_mpf(ctx, rec.df_m)
    return dev_n, kappa


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def prop32_eval(k: int) -> tuple[Fraction, Fraction, bool]:
    """Evaluate ``DF_m*floor(2m/n) + DF_n*ceil(2n/m)`` and the companion ratio.

    Returns ``(lhs, mid, lhs < 1)`` where
    ``mid = 2m(floor(2m/n) + ceil(2n/m)) / (m+n)**2``. Nothing is asserted.
    """
    if k < 4:
        raise ValueError("k must be >= 4")
    rec = density_record(k)
    m, n = rec.m, rec.n
    fl = (2 * m) // n
    ce = _ceil_div(2 * n, m)
    lhs = rec.df_m * fl + rec.df_n * ce
    mid = Fraction(2 * m * (fl + ce), (m + n) ** 2)
    return lhs, mid, lhs < 1


def lemma34_ratio(k: int, prec: int = 256):
    """``F(k+1)(F(k+1)-1) / (F(k-1)(F(k)-1))`` and its signed offset from phi**3."""
    if k < 4:
        raise ValueError("k must be >= 4")
    f_prev, f_k, f_next = fib(k - 1), fib(k), fib(k + 1)
    ratio = Fraction(f_next * (f_next - 1), f_prev * (f_k - 1))
    ctx = mp_context(prec)
    phi, _ = golden(ctx)
    return ratio, to_mpf(ctx, ratio) - phi ** 3


def lemma35_bound(k: int) -> BoundReport:
    """Compare the zero density ``m/(m+n)`` with ``m(m+1) / (n(2m-n+1))``."""
    m, n = counts(k)
    den = n * (2 * m - n + 1)
    if den == 0:
        raise DegenerateDenominator(f"n(2m-n+1) vanishes at k={k} (m={m}, n={n})")
    return BoundReport(k, Fraction(m, m + n), Fraction(m * (m + 1), den))


def ratio_row(k: int) -> RatioRow:
    if k < 1:
        raise ValueError("k must be >= 1")
    f0, f1, f2 = fib(k), fib(k + 1), fib(k + 2)
    l1 = Fraction(f1, f0)
    l2 = Fraction(f0, f1)
    l3 = Fraction(f2, f0)
    l7 = Fraction(fib(k + 4), f1)
    return RatioRow(k, l1, l2, l3, l1 - l2, l3 - l2, l3 - l1, l7)


def ratio_table(k_max: int) -> list[RatioRow]:
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    return [ratio_row(k) for k in range(1, k_max + 1)]


def lambda_ratio(k: int, lam: int) -> Fraction:
    if k < 1 or lam < 0:
        raise ValueError("need k >= 1 and lam >= 0")
    return Fraction(fib(k + lam), fib(k))


def natural_density_fib(x: int) -> Fraction:
    """Share of integers in [1, x] that are Fibonacci numbers (1 counted once)."""
    if x < 1:
        raise ValueError("x must be >= 1")
    hits = 0
    a, b = 1, 2
    while a <= x:
        hits += 1
        a, b = b, a + b
    return Fraction(hits, x)


def product_norm_exact(k: int, lam: int) -> Fraction:
    return Fraction(2 * fib(k + 1) * fib(k + lam), k * (k + 1))


def product_norm(k: int, lam: int, prec: int = 128):
    """``2 B(k+1) B(k+lam) / (k(k+1))`` with B the Binet expression at ``prec`` bits.

    The floating result is checked against the exact integer product and
    :class:`PrecisionTooLow` is raised past a relative error of ``2**(-prec/2)``.
    """
    if k < 1 or lam < 1:
        raise ValueError("need k >= 1 and lam >= 1")
    if prec < 64:
        raise PrecisionTooLow(f"prec={prec} is below the 64-bit floor")
    ctx = mp_context(prec)
    phi, psi = golden(ctx)
    s5 = ctx.sqrt(5)

    def binet(j):
        return (ctx.power(phi, j) - ctx.power(psi, j)) / s5

    value = 2 * binet(k + 1) * binet(k + lam) / (k * (k + 1))
    exact = to_mpf(ctx, product_norm_exact(k, lam))
    if abs(value - exact) > abs(exact) * ctx.ldexp(1, -(prec // 2)):
        raise PrecisionTooLow(f"product_norm({k}, {lam}) lost accuracy at {prec} bits")
    return value


def product_recurrence_check(lam: int, n_terms: int = 64) -> bool:
    """Does ``c_j = F(j) F(j+lam)`` obey ``c_j = 2c_{j-1} + 2c_{j-2} - c_{j-3}``?"""
    if n_terms < 4:
        raise ValueError("n_terms must be >= 4")
    c = [fib(j) * fib(j + lam) for j in range(n_terms)]
    return all(c[j] == 2 * c[j - 1] + 2 * c[j - 2] - c[j - 3] for j in range(3, n_terms))
