"""Excedance statistics on the colored permutation groups G(r, n) = Z_r wr S_n."""

from .counting import (
    CountReport,
    PatternDecomposition,
    PatternWord,
    WalkVector,
    brute_pattern_count,
    closed_form_bk,
    count,
    decompose,
    expansion_terms,
    oracle_count,
    oracle_histogram,
    parse_pattern,
    psi,
    realizable_columns,
    signed_sum,
    walks,
    wildcard_product,
)
from .errors import CrossCheckError, DomainError, GuardError, ParseError
from .excedance import (
    ExcedanceMatrix,
    ExcedanceWord,
    excedance_matrix,
    excedance_set,
    excedance_word,
    flatten,
    inflate,
    parse_word,
    reverse_complement,
)
from .group import (
    ColoredLetter,
    ColoredPermutation,
    Signature,
    apply,
    compare_letters,
    compose,
    enumerate_group,
    format_window,
    image_colors,
    inverse,
    parse_window,
)
from .sequences import CountSequence, bk_table, is_log_concave, is_palindromic, is_unimodal

__version__ = "0.1.0"
