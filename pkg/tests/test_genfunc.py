from fractions import Fraction

import pytest

from fibdense.errors import ZeroLeadingDenominator
from fibdense.genfunc import (
    RationalGF,
    convolve,
    kfib_gf,
    lemma22_gf,
    product_fib_gf,
    series_coeffs,
    verify_gf,
)
from fibdense.sequences import SeqSpec, fib, gen_tk_fib, k_fib


def test_series_examples():
    assert series_coeffs(RationalGF([0, 1], [1, -1, -1]), 10) == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]
    assert series_coeffs(RationalGF([1], [1, -1]), 4) == [1, 1, 1, 1]
    assert series_coeffs(RationalGF([0, 1], [1, -2, -1]), 6) == [0, 1, 2, 5, 12, 29]


def test_normalization_and_trim():
    gf = RationalGF([0, 2, 0, 0], [2, -2, -2, 0])
    assert gf.den == (1, -1, -1)
    assert gf.num == (0, 1)
    assert gf.series(5) == [0, 1, 1, 2, 3]


def test_zero_leading_denominator():
    with pytest.raises(ZeroLeadingDenominator):
        RationalGF([1], [0, 1])
    with pytest.raises(ValueError):
        series_coeffs(kfib_gf(1), 0)


def test_generalized_gf_examples():
    assert lemma22_gf(1, 1).series(6) == [1] * 6
    assert verify_gf(lemma22_gf(1, 2), fib, 64)
    assert verify_gf(lemma22_gf(2, 3), lambda j: gen_tk_fib(SeqSpec(2, 3, 1), j), 64)


@pytest.mark.parametrize("t", range(1, 5))
@pytest.mark.parametrize("k", range(1, 5))
def test_generalized_gf_matches_recurrence(t, k):
    spec = SeqSpec(t, k, 1)
    assert verify_gf(lemma22_gf(t, k), [gen_tk_fib(spec, j) for j in range(64)], 64)


def test_kfib_gf():
    assert verify_gf(kfib_gf(1), fib, 30)
    assert kfib_gf(2).series(5) == [0, 1, 2, 5, 12]
    for k in range(1, 5):
        assert verify_gf(kfib_gf(k), lambda j, k=k: k_fib(k, j), 64)


def test_product_gf_examples():
    assert product_fib_gf(0).series(7) == [0, 1, 1, 4, 9, 25, 64]
    assert product_fib_gf(1).series(6) == [0, 1, 2, 6, 15, 40]
    assert product_fib_gf(2).series(1) == [0]
    assert product_fib_gf(3).den == (1, -2, -2, 1)


@pytest.mark.parametrize("lam", range(9))
def test_product_gf_matches_products(lam):
    assert verify_gf(product_fib_gf(lam), lambda j: fib(j) * fib(j + lam), 64)


def test_verify_gf_rejects():
    assert verify_gf(RationalGF([1], [1, -1]), lambda j: 1, 8)
    assert not verify_gf(kfib_gf(2), fib, 10)
    assert not verify_gf(kfib_gf(1), [0, 1, 1], 10)


@pytest.mark.parametrize("gf", [lemma22_gf(3, 4), kfib_gf(3), product_fib_gf(5),
                                RationalGF([Fraction(1, 3), 2], [1, Fraction(-1, 2), 4])])
def test_convolution_identity(gf):
    n = 64
    back = convolve(series_coeffs(gf, n), gf.den, n)
    want = list(gf.num) + [Fraction(0)] * (n - len(gf.num))
    assert back == want[:n]
