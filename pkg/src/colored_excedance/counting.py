"""Counting colored permutations with a prescribed excedance word.

Three routes are provided:

* ``oracle_count`` / ``oracle_histogram`` enumerate the whole group;
* ``closed_form_bk`` evaluates the piecewise formula for the words
  ``b^k a^(rn-1-k)``;
* ``count`` collapses the matrix column by column to a pattern over
  {a, b, *} for the symmetric group (``psi``) and evaluates an
  inclusion-exclusion sum over lattice walks (``signed_sum``).

Patterns describe ordinary permutations tau of 1..n: position i marked
``b`` must be an excedance (tau(i) > i), ``a`` must not be, ``*`` is free.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import CrossCheckError, DomainError, GuardError, ParseError
from .excedance import ExcedanceMatrix, ExcedanceWord, excedance_word, inflate
from .group import DEFAULT_MAX_ENUMERATION, Signature, enumerate_group

log = logging.getLogger(__name__)

DEFAULT_MAX_FREE_STEPS = 30

WILDCARD = "*"


@dataclass(frozen=True)
class PatternWord:
    """A word of length n-1 over ``a``, ``b`` and the wildcard ``*``."""

    n: int
    letters: str

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"n must be positive, got {self.n}")
        if len(self.letters) != self.n - 1:
            raise DomainError(f"pattern length {len(self.letters)} != n-1 = {self.n - 1}")
        if any(ch not in "ab*" for ch in self.letters):
            raise DomainError("pattern letters must be 'a', 'b' or '*'")

    def __str__(self):
        return self.letters

    def matches(self, tau: Sequence[int]) -> bool:
        """Whether the permutation ``tau`` (images of 1..n) fits the pattern."""
        for i, ch in enumerate(self.letters, start=1):
            if ch == "b" and not tau[i - 1] > i:
                return False
            if ch == "a" and tau[i - 1] > i:
                return False
        return True


def parse_pattern(text: str, n: int) -> PatternWord:
    letters = []
    for pos, ch in enumerate(text, start=1):
        if ch in "ab*":
            letters.append(ch)
        elif ch == "|" or ch.isspace():
            continue
        else:
            raise ParseError(f"illegal character {ch!r} at position {pos}", pos, ch)
    if len(letters) != n - 1:
        raise ParseError(f"pattern has {len(letters)} letters, expected n-1 = {n - 1}")
    return PatternWord(n, "".join(letters))


@dataclass(frozen=True)
class PatternDecomposition:
    """A pattern split as ``a^g1 x1 a^g2 x2 ... xk a^g(k+1)``.

    ``forced`` holds the 1-based indices i for which x_i is a wildcard; they
    count non-``a`` letters, not word positions.
    """

    k: int
    gaps: tuple[int, ...]
    forced: frozenset[int]


def decompose(p: PatternWord) -> PatternDecomposition:
    gaps = [0]
    forced = set()
    k = 0
    for ch in p.letters:
        if ch == "a":
            gaps[-1] += 1
        else:
            k += 1
            if ch == WILDCARD:
                forced.add(k)
            gaps.append(0)
    return PatternDecomposition(k, tuple(gaps), frozenset(forced))


@dataclass(frozen=True)
class WalkVector:
    """Entries (r_1, ..., r_(k+1)) of a walk starting at 1 with steps 0 or 1."""

    entries: tuple[int, ...]

    @property
    def flat_steps(self) -> int:
        """Number of step-0 positions; its parity is the sign of the term."""
        e = self.entries
        return sum(1 for a, b in zip(e, e[1:]) if a == b)


def walks(k: int, forced=frozenset(), max_free: int = DEFAULT_MAX_FREE_STEPS) -> list[WalkVector]:
    """All walks of k steps whose steps at indices in ``forced`` are 1.

    Free steps are enumerated like a binary counter, leftmost free step most
    significant and 0 before 1.
    """
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    forced = frozenset(forced)
    if not forced <= set(range(1, k + 1)):
        raise DomainError(f"forced indices {sorted(forced)} outside 1..{k}")
    free = [i for i in range(1, k + 1) if i not in forced]
    _check_expansion_guard(len(free), max_free)
    result = []
    for choice in itertools.product((0, 1), repeat=len(free)):
        steps = dict(zip(free, choice))
        entries = [1]
        for i in range(1, k + 1):
            entries.append(entries[-1] + steps.get(i, 1))
        result.append(WalkVector(tuple(entries)))
    return result


def _check_expansion_guard(free: int, max_free: int) -> None:
    if free > max_free:
        raise GuardError(
            f"expansion needs 2^{free} = {2**free} terms, above the cap of 2^{max_free}"
        )


@dataclass(frozen=True)
class ExpansionTerm:
    walk: WalkVector
    sign: int
    magnitude: int

    @property
    def value(self) -> int:
        return self.sign * self.magnitude


def expansion_terms(p: PatternWord, max_free: int = DEFAULT_MAX_FREE_STEPS) -> Iterator[ExpansionTerm]:
    """The signed terms of the inclusion-exclusion expansion of ``p``."""
    dec = decompose(p)
    for walk in walks(dec.k, dec.forced, max_free):
        magnitude = math.prod(ri ** (gi + 1) for ri, gi in zip(walk.entries, dec.gaps))
        yield ExpansionTerm(walk, -1 if walk.flat_steps % 2 else 1, magnitude)


def signed_sum(p: PatternWord, max_free: int = DEFAULT_MAX_FREE_STEPS) -> int:
    """Number of permutations of 1..n matching ``p``, by inclusion-exclusion."""
    total = 0
    for term in expansion_terms(p, max_free):
        log.debug("walk %s: %+d", term.walk.entries, term.value)
        total += term.value
    if total < 0:
        raise ArithmeticError(f"negative inclusion-exclusion total {total} for {p}")
    return total


def wildcard_product(gaps: Sequence[int]) -> int:
    """Count for a pattern whose non-``a`` letters are all wildcards."""
    if any(g < 0 for g in gaps):
        raise DomainError("gaps must be nonnegative")
    return math.prod(i ** (g + 1) for i, g in enumerate(gaps, start=1))


def brute_pattern_count(p: PatternWord) -> int:
    """Count permutations matching ``p`` by listing all of S_n."""
    return sum(1 for tau in itertools.permutations(range(1, p.n + 1)) if p.matches(tau))


def closed_form_bk(k: int, sig: Signature) -> int:
    """Number of elements of G(r, n) with excedance word b^k a^(rn-1-k).

    Only valid for r >= 2; for r = 1 use ``signed_sum``.
    """
    r, n = sig.r, sig.n
    if r == 1:
        raise DomainError("closed form needs r >= 2; use signed_sum for the symmetric group")
    if not 0 <= k <= r * n - 1:
        raise DomainError(f"k must lie in 0..{r * n - 1}, got {k}")
    if k <= n:
        return (k + 1) ** (n - k) * math.factorial(k)
    if k <= n * (r - 1):
        return math.factorial(n)
    m = n * r - k
    return m ** (k - n * r + n) * math.factorial(m)


def realizable_columns(m: ExcedanceMatrix) -> Optional[tuple[int, ...]]:
    """Column b-heights if every column reads b^u a^(r-u) top-down, else None.

    The last column must also end in ``a``.
    """
    r, n = m.sig.r, m.sig.n
    heights = []
    for i in range(1, n + 1):
        col = m.column(i)
        u = len(col) - len(col.lstrip("b"))
        if "b" in col[u:]:
            return None
        heights.append(u)
    if heights[-1] == r:
        return None
    return tuple(heights)


def psi(m: ExcedanceMatrix) -> PatternWord:
    """Collapse each of the first n-1 columns to ``a``, ``b`` or ``*``."""
    heights = realizable_columns(m)
    if heights is None:
        raise DomainError("matrix is not realizable by any colored permutation")
    r = m.sig.r
    letters = "".join(
        "a" if u == 0 else "b" if u == r else WILDCARD for u in heights[:-1]
    )
    return PatternWord(m.sig.n, letters)


def oracle_histogram(
    sig: Signature, max_elements: int = DEFAULT_MAX_ENUMERATION
) -> dict[str, int]:
    """Map each excedance word (plain letters) to its number of elements."""
    hist = Counter(excedance_word(pi).letters for pi in enumerate_group(sig, max_elements))
    return dict(hist)


def oracle_count(
    w: ExcedanceWord, sig: Signature = None, max_elements: int = DEFAULT_MAX_ENUMERATION
) -> int:
    sig = sig or w.sig
    if sig != w.sig:
        raise DomainError(f"word belongs to {w.sig}, not {sig}")
    return sum(
        1 for pi in enumerate_group(sig, max_elements) if excedance_word(pi).letters == w.letters
    )


METHODS = ("auto", "oracle", "inclusion-exclusion")


@dataclass(frozen=True)
class CountReport:
    word: ExcedanceWord
    sig: Signature
    realizable: bool
    count: int
    method: str
    cross_checked: Optional[bool] = None

    def as_dict(self) -> dict:
        """JSON-ready form; the count is a decimal string."""
        d = {
            "r": self.sig.r,
            "n": self.sig.n,
            "word": str(self.word),
            "realizable": self.realizable,
            "count": str(self.count),
            "method": self.method,
        }
        if self.cross_checked is not None:
            d["cross_checked"] = self.cross_checked
        return d


def count(
    w: ExcedanceWord,
    sig: Signature = None,
    method: str = "auto",
    cross_check: bool = False,
    max_elements: int = DEFAULT_MAX_ENUMERATION,
    max_free: int = DEFAULT_MAX_FREE_STEPS,
) -> CountReport:
    """Count the elements of G(r, n) whose excedance word is ``w``.

    ``auto`` and ``inclusion-exclusion`` both go through the realizability
    test, ``psi`` and ``signed_sum``; ``oracle`` enumerates the group.  With
    ``cross_check`` the other route is run too and a mismatch raises
    CrossCheckError.
    """
    sig = sig or w.sig
    if sig != w.sig:
        raise DomainError(f"word belongs to {w.sig}, not {sig}")
    if method == "ie":
        method = "inclusion-exclusion"
    if method not in METHODS:
        raise DomainError(f"unknown method {method!r}")

    realizable = realizable_columns(inflate(w)) is not None
    if method == "oracle":
        value = oracle_count(w, sig, max_elements)
        used = "oracle"
    else:
        value = signed_sum(psi(inflate(w)), max_free) if realizable else 0
        used = "inclusion-exclusion"

    checked = None
    if cross_check:
        if used == "oracle":
            other = signed_sum(psi(inflate(w)), max_free) if realizable else 0
        else:
            other = oracle_count(w, sig, max_elements)
        if other != value:
            raise CrossCheckError(f"{used} gives {value} but the other route gives {other} for {w}")
        checked = True
    return CountReport(w, sig, realizable, value, used, checked)


def realizable_census(sig: Signature) -> int:
    """Number of realizable words, r * (r+1)^(n-1)."""
    return sig.r * (sig.r + 1) ** (sig.n - 1)
