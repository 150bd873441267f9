"""Counting by inclusion-exclusion.

Each column of an excedance matrix collapses to a letter of a pattern for
S_n: all a gives a, all b gives b, mixed gives the wildcard *.  The pattern
count is a signed sum over lattice walks, one term per choice of a or a+b
for every b of the pattern.

    python demos/02_inclusion_exclusion.py
"""

from colored_excedance import (
    Signature,
    count,
    decompose,
    expansion_terms,
    inflate,
    oracle_count,
    parse_pattern,
    parse_word,
    psi,
    signed_sum,
)

# %% Column collapse.
w = parse_word("abbb|abab|aba", Signature(3, 4))
print(inflate(w))
print("pattern:", psi(inflate(w)))

# %% The expansion of a longer pattern, term by term.
p = parse_pattern("ab*aa*ba", 9)
d = decompose(p)
print(f"k={d.k} gaps={d.gaps} wildcard indices={sorted(d.forced)}")
for term in expansion_terms(p):
    print(f"  walk {term.walk.entries}: {term.value:+d}")
print("total:", signed_sum(p))

# %% End to end in G(3,3), against brute-force enumeration.
sig = Signature(3, 3)
for text in ["bbb|bab|ba", "aaa|aaa|aa", "bbb|bbb|bb", "aaa|baa|aa"]:
    word = parse_word(text, sig)
    report = count(word)
    print(f"{text}: realizable={report.realizable} count={report.count} oracle={oracle_count(word)}")
