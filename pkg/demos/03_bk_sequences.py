"""The sequences [b^k a^(rn-1-k)].

Tabulates the sequence for a few groups and reports whether each one is
log-concave, unimodal and palindromic.  For r = 1 the closed form does not
apply and the values come from inclusion-exclusion.

    python demos/03_bk_sequences.py
"""

from colored_excedance import Signature, bk_table, is_log_concave, is_palindromic, is_unimodal

for r, n in [(1, 5), (2, 3), (2, 4), (3, 3), (4, 3), (5, 6)]:
    values = bk_table(Signature(r, n)).values
    flags = [name for name, ok in [("log-concave", is_log_concave(values)),
                                    ("unimodal", is_unimodal(values)),
                                    ("palindromic", is_palindromic(values))] if ok]
    print(f"G({r},{n}):", " ".join(map(str, values)))
    print("   ", ", ".join(flags))

# %% Outside 0..n and its mirror image the sequence is flat at n!.
values = bk_table(Signature(5, 4)).values
print("G(5,4):", values)
