import pytest
from hypothesis import given
from hypothesis import strategies as st

from colored_excedance import PatternWord, Signature, bk_table, is_log_concave, is_palindromic, is_unimodal
from colored_excedance.sequences import log_concavity_violation

import oracles


def test_bk_table_values():
    assert bk_table(Signature(2, 3)).values == (1, 4, 6, 6, 4, 1)
    assert bk_table(Signature(2, 1)).values == (1, 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_bk_table_symmetric_group(n):
    # r = 1 goes through inclusion-exclusion; compare with S_n brute force
    expected = tuple(oracles.count_matching("b" * k + "a" * (n - 1 - k), n) for k in range(n))
    assert bk_table(Signature(1, n)).values == expected
    if n == 4:
        assert expected == (1, 7, 7, 1)


def test_log_concave_examples():
    assert is_log_concave((1, 4, 6, 6, 4, 1))
    assert not is_log_concave((1, 1, 3))
    assert log_concavity_violation((1, 1, 3)) == 1
    assert is_log_concave((5,))
    assert is_log_concave(())


def test_unimodal_examples():
    assert is_unimodal((1, 4, 6, 6, 4, 1))
    assert not is_unimodal((1, 2, 1, 2))
    assert is_unimodal((3, 3, 3))
    assert is_unimodal((3, 2, 1))
    assert not is_unimodal((2, 1, 2))


def test_palindromic_examples():
    assert is_palindromic((1, 4, 6, 6, 4, 1))
    assert not is_palindromic((1, 2, 3))
    assert is_palindromic((9,))


@pytest.mark.parametrize("r", range(2, 6))
@pytest.mark.parametrize("n", range(1, 7))
def test_table_shape(r, n):
    values = bk_table(Signature(r, n)).values
    assert len(values) == r * n
    assert all(v > 0 for v in values)
    assert is_log_concave(values) and is_unimodal(values) and is_palindromic(values)
    assert all(values[k] <= values[k + 1] for k in range(n))


@given(st.lists(st.integers(1, 10**6), max_size=12))
def test_log_concave_positive_implies_unimodal(values):
    if is_log_concave(values):
        assert is_unimodal(values)
