"""Acceptance criteria, one test each.

Run with ``pytest tests/test_acceptance.py``; a PASS/FAIL line per criterion
is printed in the terminal summary.
"""

import itertools
import math
import time

import pytest

from colored_excedance import (
    ColoredPermutation,
    ExcedanceWord,
    PatternWord,
    Signature,
    bk_table,
    closed_form_bk,
    compose,
    count,
    decompose,
    enumerate_group,
    excedance_matrix,
    expansion_terms,
    flatten,
    inflate,
    inverse,
    is_log_concave,
    is_palindromic,
    is_unimodal,
    oracle_count,
    parse_pattern,
    parse_window,
    parse_word,
    psi,
    realizable_columns,
    signed_sum,
    wildcard_product,
)
from colored_excedance.counting import oracle_histogram
from colored_excedance.excedance import all_words
from colored_excedance.group import ColoredLetter, apply

import oracles

CRITERION4_GROUPS = [(2, 3), (3, 2), (4, 2), (3, 3)]


def best_time(fn, repeat=50):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


@pytest.mark.criterion(1, "worked example ab*aa*ba, n=9 -> 1776 with terms 5400 -3456 -384 +216, < 1 ms")
def test_worked_example():
    p = parse_pattern("a b * a a * b a", 9)
    assert signed_sum(p) == 1776
    assert sorted(t.value for t in expansion_terms(p)) == [-3456, -384, 216, 5400]
    assert best_time(lambda: signed_sum(p)) < 1e-3


@pytest.mark.criterion(2, "psi of abbb|abab|aba (r=3, n=4) is (a, b, *)")
def test_psi_example():
    m = inflate(parse_word("abbb|abab|aba", Signature(3, 4)))
    assert tuple(psi(m).letters) == ("a", "b", "*")


@pytest.mark.criterion(3, "window 3^0 1^1 2^2 in G(3,3) -> matrix bbb/bab/baa, word bbb|bab|ba")
def test_matrix_example():
    pi = parse_window("3^0 1^1 2^2", Signature(3, 3))
    m = excedance_matrix(pi)
    assert m.rows == ("bbb", "bab", "baa")
    assert str(flatten(m)) == "bbb|bab|ba"


@pytest.mark.criterion(4, "oracle_count == count(auto) on every word of G(2,3), G(3,2), G(4,2), G(3,3), < 10 s")
def test_oracle_equals_inclusion_exclusion():
    t0 = time.perf_counter()
    for r, n in CRITERION4_GROUPS:
        sig = Signature(r, n)
        for w in all_words(sig):
            report = count(w, method="auto")
            expected = oracle_count(w)
            assert report.count == expected, (sig, str(w))
            if not report.realizable:
                assert expected == 0
    assert time.perf_counter() - t0 < 10


@pytest.mark.criterion(5, "closed_form_bk == oracle for all k on G(2,3), G(2,4), G(3,3), G(3,2), G(4,2), < 5 s")
def test_closed_form_equals_oracle():
    t0 = time.perf_counter()
    for r, n in [(2, 3), (2, 4), (3, 3), (3, 2), (4, 2)]:
        sig = Signature(r, n)
        L = sig.word_length
        for k in range(L + 1):
            assert closed_form_bk(k, sig) == oracle_count(ExcedanceWord(sig, "b" * k + "a" * (L - k)))
    assert [closed_form_bk(k, Signature(2, 3)) for k in range(6)] == [1, 4, 6, 6, 4, 1]
    assert time.perf_counter() - t0 < 5


@pytest.mark.criterion(6, "realizable words sum to r^n n! and number r(r+1)^(n-1)")
def test_partition():
    for r, n in CRITERION4_GROUPS:
        sig = Signature(r, n)
        realizable = [w for w in all_words(sig) if realizable_columns(inflate(w)) is not None]
        assert sum(count(w).count for w in realizable) == r**n * math.factorial(n)
        assert len(realizable) == r * (r + 1) ** (n - 1)


@pytest.mark.criterion(7, "oracle_count(a^k b^(rn-1-k)) == oracle_count(b^k a^(rn-1-k)) for all k")
def test_symmetry_as_stated():
    failures = []
    for r, n in CRITERION4_GROUPS:
        sig = Signature(r, n)
        L = sig.word_length
        for k in range(L + 1):
            left = oracle_count(ExcedanceWord(sig, "a" * k + "b" * (L - k)))
            right = oracle_count(ExcedanceWord(sig, "b" * k + "a" * (L - k)))
            if left != right:
                failures.append((r, n, k, left, right))
    assert not failures, f"identity fails at (r, n, k, [a^k b^..], [b^k a^..]) = {failures}"


@pytest.mark.criterion(8, "columns of M(pi) follow the color data on all of G(2,3) and G(3,3)")
def test_observations():
    for r, n in [(2, 3), (3, 3)]:
        for pi in enumerate_group(Signature(r, n)):
            m = excedance_matrix(pi)
            for i, c in enumerate(pi.colors, start=1):
                col = m.column(i)
                constant = len(set(col)) == 1
                assert constant == (c == 0)
                if c == 0:
                    assert (col[0] == "a") == (pi.digits[i - 1] <= i)
                else:
                    assert col == "b" * c + "a" * (r - c)


@pytest.mark.criterion(9, "wildcard_product == S_n brute force == signed_sum for all a/* patterns, n <= 5, < 5 s")
def test_wildcard_lemma():
    t0 = time.perf_counter()
    for n in range(1, 6):
        for letters in itertools.product("a*", repeat=n - 1):
            pattern = "".join(letters)
            p = PatternWord(n, pattern)
            product = wildcard_product(decompose(p).gaps)
            assert product == oracles.count_matching(pattern, n) == signed_sum(p)
    assert time.perf_counter() - t0 < 5


@pytest.mark.criterion(10, "bk_table log-concave, unimodal, palindromic, positive for 2<=r<=5, 1<=n<=6, < 1 s")
def test_sequence_verdicts():
    t0 = time.perf_counter()
    for r in range(2, 6):
        for n in range(1, 7):
            values = bk_table(Signature(r, n)).values
            assert all(v > 0 for v in values)
            assert is_log_concave(values) and is_unimodal(values) and is_palindromic(values)
    assert time.perf_counter() - t0 < 1


@pytest.mark.criterion(11, "group axioms, inverses, color-shift law, order r^n n! on G(2,2), G(2,3), G(3,3)")
def test_group_layer():
    for r, n in [(2, 2), (2, 3), (3, 3)]:
        sig = Signature(r, n)
        group = list(enumerate_group(sig))
        assert len(group) == len(set(group)) == r**n * math.factorial(n)
        index = {g: i for i, g in enumerate(group)}
        table = [[index[compose(a, b)] for b in group] for a in group]  # closure via KeyError
        e = index[ColoredPermutation.identity(sig)]
        size = len(group)
        for a in range(size):
            row_a = table[a]
            assert row_a[e] == a and table[e][a] == a
            inv = index[inverse(group[a])]
            assert row_a[inv] == e and table[inv][a] == e
            assert inverse(group[inv]) == group[a]
            for b in range(size):
                ab = row_a[b]
                row_b = table[b]
                row_ab = table[ab]
                for c in range(size):
                    assert row_ab[c] == row_a[row_b[c]]
        for pi in group:
            for i in range(1, n + 1):
                for j in range(r):
                    y = apply(pi, ColoredLetter(i, j))
                    z = apply(pi, ColoredLetter(i, (j + 1) % r))
                    assert z == ColoredLetter(y.digit, (y.color + 1) % r)


@pytest.mark.criterion(12, "every realizable word: G(r,n) count == S_n brute-force count of psi(w)")
def test_phi_bijection():
    for r, n in CRITERION4_GROUPS:
        sig = Signature(r, n)
        hist = oracle_histogram(sig)
        for w in all_words(sig):
            if realizable_columns(inflate(w)) is None:
                continue
            assert hist.get(w.letters, 0) == oracles.count_matching(psi(inflate(w)).letters, n)
