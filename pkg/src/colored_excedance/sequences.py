"""The sequence [b^k a^(rn-1-k)], k = 0..rn-1, and shape tests on integer sequences."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .counting import DEFAULT_MAX_FREE_STEPS, PatternWord, closed_form_bk, signed_sum
from .group import Signature


@dataclass(frozen=True)
class CountSequence:
    sig: Signature
    values: tuple[int, ...]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, k):
        return self.values[k]


def bk_table(sig: Signature, max_free: int = DEFAULT_MAX_FREE_STEPS) -> CountSequence:
    """[b^k a^(rn-1-k)] for k = 0..rn-1.

    Uses the closed form when r >= 2 and inclusion-exclusion on S_n when r = 1.
    """
    if sig.r >= 2:
        values = tuple(closed_form_bk(k, sig) for k in range(sig.r * sig.n))
    else:
        n = sig.n
        values = tuple(
            signed_sum(PatternWord(n, "b" * k + "a" * (n - 1 - k)), max_free) for k in range(n)
        )
    return CountSequence(sig, values)


def log_concavity_violation(values: Sequence[int]) -> Optional[int]:
    """Smallest interior k with a[k-1]*a[k+1] > a[k]**2, or None."""
    values = list(values)
    for k in range(1, len(values) - 1):
        if values[k - 1] * values[k + 1] > values[k] ** 2:
            return k
    return None


def is_log_concave(values: Sequence[int]) -> bool:
    return log_concavity_violation(values) is None


def is_unimodal(values: Sequence[int]) -> bool:
    """True if the sequence weakly rises and then weakly falls."""
    values = list(values)
    i = 1
    while i < len(values) and values[i - 1] <= values[i]:
        i += 1
    while i < len(values) and values[i - 1] >= values[i]:
        i += 1
    return i >= len(values)


def is_palindromic(values: Sequence[int]) -> bool:
    values = list(values)
    return values == values[::-1]
