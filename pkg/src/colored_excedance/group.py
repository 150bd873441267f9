"""Colored permutations: the groups G(r, n) = Z_r wr S_n.

An element is stored in window form: position ``i`` (1-based) carries the
image ``sigma_i^[gamma_i]`` of the uncolored letter ``i``.  The action on
the whole alphabet follows from the color-shift law::

    i^[j]  ->  sigma_i^[(gamma_i + j) mod r]

Letters are totally ordered by the color order, in which a higher color
is smaller and equal colors are ordered by digit::

    1^[r-1] < ... < n^[r-1] < 1^[r-2] < ... < n^[r-2] < ... < 1 < ... < n
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DomainError, GuardError, ParseError

DEFAULT_MAX_ENUMERATION = 10**8


@dataclass(frozen=True)
class Signature:
    """The pair (r, n): ``r`` colors on ``n`` digits."""

    r: int
    n: int

    def __post_init__(self):
        for name in ("r", "n"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise DomainError(f"{name} must be a positive integer, got {value!r}")

    @property
    def order(self) -> int:
        """Number of elements of the group, r**n * n!."""
        return self.r**self.n * math.factorial(self.n)

    @property
    def word_length(self) -> int:
        return self.r * self.n - 1

    def letters(self) -> list[ColoredLetter]:
        """All r*n letters of the alphabet, in ascending color order."""
        return [
            ColoredLetter(i, j)
            for j in range(self.r - 1, -1, -1)
            for i in range(1, self.n + 1)
        ]

    def check_letter(self, x: ColoredLetter) -> None:
        if not (1 <= x.digit <= self.n and 0 <= x.color < self.r):
            raise DomainError(f"letter {x} is not in the alphabet of G({self.r},{self.n})")


@dataclass(frozen=True)
class ColoredLetter:
    """The digit ``digit`` painted with color ``color``.

    Comparison operators implement the color order.
    """

    digit: int
    color: int

    @property
    def key(self) -> tuple[int, int]:
        return (-self.color, self.digit)

    def __lt__(self, other):
        if not isinstance(other, ColoredLetter):
            return NotImplemented
        return self.key < other.key

    def __le__(self, other):
        if not isinstance(other, ColoredLetter):
            return NotImplemented
        return self.key <= other.key

    def __gt__(self, other):
        if not isinstance(other, ColoredLetter):
            return NotImplemented
        return self.key > other.key

    def __ge__(self, other):
        if not isinstance(other, ColoredLetter):
            return NotImplemented
        return self.key >= other.key

    def __str__(self):
        return f"{self.digit}^{self.color}"


def compare_letters(x: ColoredLetter, y: ColoredLetter) -> int:
    """Three-way comparison in the color order: -1, 0 or 1."""
    kx, ky = x.key, y.key
    return (kx > ky) - (kx < ky)


@dataclass(frozen=True)
class ColoredPermutation:
    """An element of G(r, n) in window form.

    ``digits`` is the underlying permutation (sigma_1, ..., sigma_n) and
    ``colors`` the window colors (gamma_1, ..., gamma_n).
    """

    sig: Signature
    digits: tuple[int, ...]
    colors: tuple[int, ...]

    def __post_init__(self):
        digits = tuple(self.digits)
        colors = tuple(self.colors)
        object.__setattr__(self, "digits", digits)
        object.__setattr__(self, "colors", colors)
        r, n = self.sig.r, self.sig.n
        if len(digits) != n or len(colors) != n:
            raise DomainError(f"window form needs {n} digits and {n} colors")
        if sorted(digits) != list(range(1, n + 1)):
            raise DomainError(f"digits {digits} are not a permutation of 1..{n}")
        for c in colors:
            if not 0 <= c < r:
                raise DomainError(f"color {c} out of range 0..{r - 1}")

    @classmethod
    def identity(cls, sig: Signature) -> ColoredPermutation:
        return cls(sig, tuple(range(1, sig.n + 1)), (0,) * sig.n)

    @classmethod
    def from_targets(cls, sig: Signature, targets: Sequence[ColoredLetter]) -> ColoredPermutation:
        return cls(sig, tuple(t.digit for t in targets), tuple(t.color for t in targets))

    @property
    def targets(self) -> tuple[ColoredLetter, ...]:
        return tuple(ColoredLetter(d, c) for d, c in zip(self.digits, self.colors))

    @property
    def underlying(self) -> tuple[int, ...]:
        """The uncolored permutation |pi| as a tuple of images."""
        return self.digits

    def __call__(self, x: ColoredLetter) -> ColoredLetter:
        return apply(self, x)

    def __mul__(self, other):
        if not isinstance(other, ColoredPermutation):
            return NotImplemented
        return compose(self, other)

    def __invert__(self):
        return inverse(self)

    def __str__(self):
        return format_window(self)


def apply(pi: ColoredPermutation, x: ColoredLetter) -> ColoredLetter:
    """Evaluate ``pi`` at the letter ``x``."""
    pi.sig.check_letter(x)
    i = x.digit - 1
    return ColoredLetter(pi.digits[i], (pi.colors[i] + x.color) % pi.sig.r)


def compose(outer: ColoredPermutation, inner: ColoredPermutation) -> ColoredPermutation:
    """The product ``outer * inner``, i.e. apply ``inner`` first."""
    if outer.sig != inner.sig:
        raise DomainError(f"cannot compose elements of {outer.sig} and {inner.sig}")
    r = outer.sig.r
    digits = tuple(outer.digits[s - 1] for s in inner.digits)
    colors = tuple(
        (outer.colors[s - 1] + g) % r for s, g in zip(inner.digits, inner.colors)
    )
    return ColoredPermutation(outer.sig, digits, colors)


def inverse(pi: ColoredPermutation) -> ColoredPermutation:
    r, n = pi.sig.r, pi.sig.n
    digits = [0] * n
    colors = [0] * n
    for i, (s, g) in enumerate(zip(pi.digits, pi.colors), start=1):
        digits[s - 1] = i
        colors[s - 1] = (r - g) % r
    return ColoredPermutation(pi.sig, tuple(digits), tuple(colors))


def image_colors(pi: ColoredPermutation) -> tuple[int, ...]:
    """The color data (c_1, ..., c_n) read from the window.

    ``c_i`` is nonzero exactly when column ``i`` of the excedance matrix is
    mixed, and then equals its number of ``b`` cells.
    """
    return pi.colors


def enumerate_group(
    sig: Signature, max_elements: int = DEFAULT_MAX_ENUMERATION
) -> Iterator[ColoredPermutation]:
    """Yield every element of G(r, n) exactly once.

    Underlying permutations come in lexicographic order; for each of them the
    colors run through a big-endian base-r counter starting at all zeros.  The
    first element is the identity.

    Raises GuardError before yielding anything if the group has more than
    ``max_elements`` elements.
    """
    check_enumeration_guard(sig, max_elements)
    return _enumerate(sig)


def check_enumeration_guard(sig: Signature, max_elements: int = DEFAULT_MAX_ENUMERATION) -> None:
    if sig.order > max_elements:
        raise GuardError(
            f"G({sig.r},{sig.n}) has {sig.order} elements, "
            f"above the enumeration cap of {max_elements}"
        )


def _enumerate(sig: Signature) -> Iterator[ColoredPermutation]:
    color_words = list(itertools.product(range(sig.r), repeat=sig.n))
    for digits in itertools.permutations(range(1, sig.n + 1)):
        for colors in color_words:
            yield ColoredPermutation(sig, digits, colors)


_TOKEN = re.compile(r"^(\d+)\^(\d+)$")


def parse_window(text: str, sig: Signature) -> ColoredPermutation:
    """Parse whitespace-separated ``d^c`` tokens into an element of G(r, n)."""
    tokens = text.split()
    if len(tokens) != sig.n:
        raise ParseError(f"expected {sig.n} tokens, got {len(tokens)}")
    digits, colors = [], []
    seen = set()
    for pos, tok in enumerate(tokens, start=1):
        m = _TOKEN.match(tok)
        if m is None:
            raise ParseError(f"malformed token {tok!r} (expected d^c)", pos, tok)
        d, c = int(m.group(1)), int(m.group(2))
        if not 1 <= d <= sig.n:
            raise ParseError(f"digit out of range 1..{sig.n} in token {tok!r}", pos, tok)
        if c >= sig.r:
            raise ParseError(f"color out of range 0..{sig.r - 1} in token {tok!r}", pos, tok)
        if d in seen:
            raise ParseError(f"repeated digit in token {tok!r}", pos, tok)
        seen.add(d)
        digits.append(d)
        colors.append(c)
    return ColoredPermutation(sig, tuple(digits), tuple(colors))


def format_window(pi: ColoredPermutation) -> str:
    return " ".join(f"{d}^{c}" for d, c in zip(pi.digits, pi.colors))
