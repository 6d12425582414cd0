import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fibdense.errors import WordTooLong
from fibdense.fibword import InfiniteFibWord, build, counts, prefix, symbol_at, to_ascii
from fibdense.sequences import fib


def words_by_strings(k):
    """Oracle: plain string concatenation."""
    w = ["0", "1", "10"]
    while len(w) <= k:
        w.append(w[-1] + w[-2])
    return w[k]


def test_build_examples():
    w = build(5)
    assert str(w) == "10110101"
    assert (w.m, w.n) == (3, 5)
    w0 = build(0)
    assert str(w0) == "0" and (w0.m, w0.n) == (1, 0)
    w9 = build(9)
    assert (w9.m, w9.n, len(w9)) == (21, 34, 55)


@pytest.mark.parametrize("k", range(0, 21))
def test_build_matches_string_oracle(k):
    w = build(k)
    s = words_by_strings(k)
    assert str(w) == s
    assert len(w) == fib(k + 1)
    assert (w.m, w.n) == (s.count("0"), s.count("1"))


def test_build_cap():
    with pytest.raises(WordTooLong):
        build(20, max_len=100)
    assert len(build(10, max_len=89)) == 89


def test_word_indexing_and_export():
    w = build(6)
    assert [w[j] for j in range(len(w))] == [int(c) for c in words_by_strings(6)]
    assert w[-1] == int(words_by_strings(6)[-1])
    assert w.to_ascii() == words_by_strings(6) + "\n"
    with pytest.raises(IndexError):
        w[len(w)]


def test_counts_examples():
    assert counts(13) == (144, 233)
    assert counts(1) == (0, 1)
    m_prev, m = 1, 1
    n_prev, n = 1, 2
    for _ in range(4, 41):
        m_prev, m = m, m + m_prev
        n_prev, n = n, n + n_prev
    assert counts(40) == (m, n) == (fib(39), fib(40))


def test_counts_agree_with_build():
    for k in range(0, 26):
        w = build(k)
        assert counts(k) == (w.m, w.n)
        if k >= 2:
            assert counts(k) == (fib(k - 1), fib(k))
        assert sum(counts(k)) == fib(k + 1)


def test_prefix_property():
    for k in range(3, 26):
        prev, cur = build(k - 1).bits, build(k).bits
        assert np.array_equal(cur[: prev.size], prev)


def test_symbol_at_examples():
    assert [symbol_at(j) for j in range(8)] == [1, 0, 1, 1, 0, 1, 0, 1]


def test_symbol_at_against_explicit_build():
    bits = build(25).bits
    limit = 100_000
    assert all(symbol_at(j) == bits[j] for j in range(limit))


def test_symbol_at_last_symbols():
    for k in range(2, 25):
        assert symbol_at(fib(k + 1) - 1) == build(k)[-1]


def test_prefix_examples():
    assert to_ascii(prefix(5)) == "10110"
    assert prefix(0).size == 0
    p = prefix(10_000)
    assert all(int(p[j]) == symbol_at(j) for j in range(0, 10_000, 7))
    with pytest.raises(WordTooLong):
        prefix(50, max_len=10)


def test_infinite_word_cache_and_fallback():
    word = InfiniteFibWord(cached=1000)
    assert [word[j] for j in range(990, 1010)] == [symbol_at(j) for j in range(990, 1010)]
    assert np.array_equal(word.prefix(500), prefix(500))
    assert np.array_equal(word.prefix(5000), prefix(5000))


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=2, max_value=10 ** 30))
def test_symbol_at_self_similarity(j):
    # FW(k) = FW(k-1) FW(k-2): a position past len(FW(k-1)) repeats the start
    # (FW(0) = "0" is the one base word that is not a prefix, hence j >= 2)
    k = 2
    while fib(k + 1) <= j:
        k += 1
    left = fib(k)
    if j >= left:
        assert symbol_at(j) == symbol_at(j - left)
