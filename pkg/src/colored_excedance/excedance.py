"""Excedance sets, excedance matrices and excedance words.

The matrix has one row per color, ordered from color r-1 at the top down to
color 0, and one column per digit.  Cell (j, i) is ``b`` when ``i^[j]`` is an
excedance and ``a`` otherwise.  Reading the rows top to bottom and dropping
the last cell (always ``a``) gives the excedance word of length r*n - 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import DomainError, ParseError
from .group import ColoredLetter, ColoredPermutation, Signature, apply


@dataclass(frozen=True)
class ExcedanceMatrix:
    """An r x n grid over {a, b}.

    ``rows[0]`` is the row of color r-1 and ``rows[-1]`` the row of color 0.
    Matrices need not come from a permutation.
    """

    sig: Signature
    rows: tuple[str, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.sig.r or any(len(row) != self.sig.n for row in rows):
            raise DomainError(f"matrix must be {self.sig.r} x {self.sig.n}")
        if any(ch not in "ab" for row in rows for ch in row):
            raise DomainError("matrix cells must be 'a' or 'b'")

    def cell(self, color: int, digit: int) -> str:
        return self.rows[self.sig.r - 1 - color][digit - 1]

    def column(self, digit: int) -> str:
        """Column ``digit`` read top-down (color r-1 first)."""
        return "".join(row[digit - 1] for row in self.rows)

    def __str__(self):
        return "\n".join(" ".join(row) for row in self.rows)


@dataclass(frozen=True)
class ExcedanceWord:
    """A word of length r*n - 1 over {a, b}; ``str()`` groups it by rows."""

    sig: Signature
    letters: str

    def __post_init__(self):
        if len(self.letters) != self.sig.word_length:
            raise DomainError(
                f"word length {len(self.letters)} != {self.sig.word_length} for "
                f"G({self.sig.r},{self.sig.n})"
            )
        if any(ch not in "ab" for ch in self.letters):
            raise DomainError("word letters must be 'a' or 'b'")

    def __str__(self):
        n = self.sig.n
        return "|".join(self.letters[i : i + n] for i in range(0, len(self.letters), n))

    def __len__(self):
        return len(self.letters)


def excedance_set(pi: ColoredPermutation) -> frozenset[ColoredLetter]:
    """All letters ``x`` with ``pi(x) > x`` in the color order."""
    return frozenset(x for x in pi.sig.letters() if apply(pi, x) > x)


def excedance_matrix(pi: ColoredPermutation) -> ExcedanceMatrix:
    r, n = pi.sig.r, pi.sig.n
    rows = []
    for j in range(r - 1, -1, -1):
        rows.append(
            "".join(
                "b" if apply(pi, x) > x else "a"
                for x in (ColoredLetter(i, j) for i in range(1, n + 1))
            )
        )
    return ExcedanceMatrix(pi.sig, tuple(rows))


def flatten(m: ExcedanceMatrix) -> ExcedanceWord:
    """Row-major reading of ``m`` without its bottom-right cell.

    Raises DomainError when that cell is ``b``: no permutation has an
    excedance at n^[0].
    """
    if m.rows[-1][-1] != "a":
        raise DomainError("bottom-right cell is 'b'; no colored permutation realizes it")
    return ExcedanceWord(m.sig, "".join(m.rows)[:-1])


def inflate(w: ExcedanceWord) -> ExcedanceMatrix:
    text = w.letters + "a"
    n = w.sig.n
    return ExcedanceMatrix(w.sig, tuple(text[i : i + n] for i in range(0, len(text), n)))


def excedance_word(pi: ColoredPermutation) -> ExcedanceWord:
    return flatten(excedance_matrix(pi))


def parse_word(text: str, sig: Signature) -> ExcedanceWord:
    """Parse an a/b word; ``|`` and whitespace are ignored."""
    letters = []
    for pos, ch in enumerate(text, start=1):
        if ch in "ab":
            letters.append(ch)
        elif ch == "|" or ch.isspace():
            continue
        else:
            raise ParseError(f"illegal character {ch!r} at position {pos}", pos, ch)
    if len(letters) != sig.word_length:
        raise ParseError(
            f"word has {len(letters)} letters, expected r*n-1 = {sig.word_length}"
        )
    return ExcedanceWord(sig, "".join(letters))


def all_words(sig: Signature):
    """Every a/b word of length r*n - 1, in lexicographic order."""
    for letters in itertools.product("ab", repeat=sig.word_length):
        yield ExcedanceWord(sig, "".join(letters))


def reverse_complement(w: ExcedanceWord) -> ExcedanceWord:
    """Reverse ``w`` and swap ``a`` with ``b``; counts are invariant under this."""
    return ExcedanceWord(w.sig, w.letters[::-1].translate(_SWAP))


_SWAP = str.maketrans("ab", "ba")
