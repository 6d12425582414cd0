"""Exact integer sequences of the Fibonacci family and their closed forms.

Integers are plain Python ``int`` and rationals are ``fractions.Fraction``.
Floating evaluations go through a private :class:`mpmath.MPContext` per call,
so nothing here touches global precision state.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import ImaginaryResidue, InvalidSpec, NonIntegralResult, PrecisionTooLow

__all__ = [
    "SeqSpec",
    "fib",
    "fib_list",
    "fib_binet",
    "k_fib",
    "comb_formula1",
    "comb_formula2",
    "gen_tk_fib",
    "fib_poly",
    "fib_poly_sum",
    "prop44_check",
    "prop44_recurrence_reading",
    "zeta_terms",
    "zeta_partial",
    "mp_context",
    "golden",
]


def mp_context(prec: int) -> mpmath.MPContext:
    """Fresh mpmath context at ``prec`` bits (round-to-nearest-even)."""
    ctx = mpmath.MPContext()
    ctx.prec = prec
    return ctx


def golden(ctx: mpmath.MPContext):
    """Return ``(phi, psi)`` in the given context."""
    s5 = ctx.sqrt(5)
    return (1 + s5) / 2, (1 - s5) / 2


def fib(n: int) -> int:
    if n < 0:
        raise ValueError("fib index must be non-negative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def fib_list(count: int) -> list[int]:
    """``[fib(0), ..., fib(count - 1)]``."""
    out = []
    a, b = 0, 1
    for _ in range(count):
        out.append(a)
        a, b = b, a + b
    return out


def fib_binet(n: int, prec: int = 128) -> int:
    """Fibonacci number from Binet's closed form evaluated at ``prec`` bits.

    Raises :class:`PrecisionTooLow` when the floating value is not within 1/4
    of an integer, which is the signal that ``prec`` is too small for ``n``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if prec < 64:
        raise PrecisionTooLow(f"prec={prec} is below the 64-bit floor")
    ctx = mp_context(prec)
    phi, psi = golden(ctx)
    value = (ctx.power(phi, n) - ctx.power(psi, n)) / ctx.sqrt(5)
    nearest = ctx.nint(value)
    # past 2**(prec-3) the spacing of representable values exceeds 1/4
    if ctx.mag(value) > prec - 3 or abs(value - nearest) > ctx.mpf(1) / 4:
        raise PrecisionTooLow(f"Binet value for n={n} at {prec} bits is not near an integer")
    return int(nearest)


def k_fib(k: int, n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, k * b + a
    return a


def comb_formula1(k: int, n: int) -> int:
    """First combinatorial formula for the k-Fibonacci numbers.

    ``2**(1-n) * sum C(n, 2i+1) k**(n-1-2i) (k**2+4)**i``, summed over
    ``0 <= i <= (n-1)//2``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    total = sum(
        math.comb(n, 2 * i + 1) * k ** (n - 1 - 2 * i) * (k * k + 4) ** i
        for i in range((n - 1) // 2 + 1)
    )
    value = Fraction(total, 2 ** (n - 1))
    if value.denominator != 1:
        raise NonIntegralResult(f"comb_formula1({k}, {n}) = {value}")
    return value.numerator


def comb_formula2(k: int, n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum(math.comb(n - 1 - i, i) * k ** (n - 1 - 2 * i) for i in range((n - 1) // 2 + 1))


@dataclass(frozen=True)
class SeqSpec:
    """Parameters ``(t, k, p)`` of a generalized (t,k)-Fibonacci p-sequence."""

    t: int
    k: int
    p: int = 1

    def __post_init__(self):
        if self.t < 1 or self.k < 1 or self.p < 1:
            raise InvalidSpec(f"t, k, p must all be >= 1, got {self}")
        if self.p > self.k:
            raise InvalidSpec(f"p={self.p} exceeds k={self.k}")

    @property
    def seed_index(self) -> int:
        return self.k - self.p


def gen_tk_fib(spec: SeqSpec, n: int) -> int:
    """Term ``n`` of the generalized (t,k)-Fibonacci p-sequence.

    The single seed 1 sits at index ``k - p`` with zeros before it; every later
    term is ``t*F[n-1] + F[n-p-1] + ... + F[n-p-k+1]`` (negative indices read
    as 0). For ``p = 1`` the coefficients are those of
    ``x**(k-1) / (1 - t x - x**2 - ... - x**k)``.
    """
    if not isinstance(spec, SeqSpec):
        spec = SeqSpec(*spec)
    if n < 0:
        raise ValueError("n must be non-negative")
    return _gen_tk_terms(spec, n + 1)[n]


def _gen_tk_terms(spec: SeqSpec, count: int) -> list[int]:
    t, k, p = spec.t, spec.k, spec.p
    seed = spec.seed_index
    terms = [0] * count
    for j in range(count):
        if j < seed:
            continue
        if j == seed:
            terms[j] = 1
            continue
        acc = t * terms[j - 1]
        for lag in range(p + 1, p + k):
            if j - lag >= 0:
                acc += terms[j - lag]
        terms[j] = acc
    return terms


def fib_poly(n: int, x) -> Fraction:
    """Fibonacci polynomial ``F_n(x)`` by ``F_n = x F_{n-1} + F_{n-2}``, F_0=0, F_1=1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    x = Fraction(x)
    a, b = Fraction(0), Fraction(1)
    for _ in range(n):
        a, b = b, x * b + a
    return a


def fib_poly_sum(m: int, y) -> Fraction:
    """``sum_i C(m-i, i) y**i`` evaluated through its own recurrence.

    ``P_m = P_{m-1} + y P_{m-2}`` with ``P_{-1} = 0`` and ``P_0 = 1``. This is
    the polynomial the closed form ``k**(n-1) P_{n-1}(1/k**2)`` actually needs.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    y = Fraction(y)
    prev, cur = Fraction(0), Fraction(1)
    for _ in range(m):
        prev, cur = cur, cur + y * prev
    return cur


def prop44_check(k: int, n: int) -> bool:
    """Exact test of ``comb_formula2(k, n) == k**(n-1) * P_{n-1}(1/k**2)``."""
    rhs = Fraction(k) ** (n - 1) * fib_poly_sum(n - 1, Fraction(1, k * k))
    return rhs == comb_formula2(k, n)


def prop44_recurrence_reading(k: int, n: int) -> tuple[int, Fraction, bool]:
    """Same identity with ``fib_poly`` in place of the sum polynomial.

    Returned as ``(lhs, rhs, equal)``; this reading does not hold in general.
    """
    lhs = comb_formula2(k, n)
    rhs = Fraction(k) ** (n - 1) * fib_poly(n - 1, Fraction(1, k * k))
    return lhs, rhs, lhs == rhs


def zeta_terms(n: int) -> int:
    """Default series length for :func:`zeta_partial`.

    The summand is dominated by ``|n Log(psi)|**v / v!`` where the principal log
    of the negative conjugate carries an ``i*pi`` part, so the length scales
    with ``|n Log(psi)|`` rather than ``n log(phi)``.
    """
    radius = n * math.hypot(math.log((math.sqrt(5) - 1) / 2), math.pi)
    return math.ceil(2 * math.e * radius) + 60


def zeta_partial(n: int, terms: int | None = None, prec: int = 256):
    """Partial sum of the log-series whose limit is ``(phi**n - psi**n)/sqrt(5)``.

    Summand ``n**v (Log(phi)**v - Log(psi)**v) / ((phi - psi) v!)`` for
    ``v < terms`` with principal complex logarithms. Summation runs with guard
    bits sized to the largest summand; the real part is returned at ``prec``.
    """
    if prec < 128:
        raise PrecisionTooLow(f"prec={prec} is below the 128-bit floor")
    if terms is None:
        terms = zeta_terms(n)
    if terms < 1:
        raise ValueError("terms must be >= 1")
    radius = n * math.hypot(math.log((math.sqrt(5) - 1) / 2), math.pi)
    guard = math.ceil(radius * math.log2(math.e)) + 32
    ctx = mp_context(prec + guard)
    phi, psi = golden(ctx)
    z1 = n * ctx.log(ctx.mpc(phi))
    z2 = n * ctx.log(ctx.mpc(psi))
    p1 = p2 = ctx.mpc(1)
    total = ctx.mpc(0)
    for v in range(terms):
        if v:
            p1 = p1 * z1 / v
            p2 = p2 * z2 / v
        total += p1 - p2
    total /= phi - psi

    out = mp_context(prec)
    bound = out.ldexp(1, -(prec // 2))
    if abs(total.imag) >= bound:
        raise ImaginaryResidue(f"imaginary part {out.nstr(total.imag, 5)} exceeds 2**-{prec // 2}")
    return out.mpf(total.real)
