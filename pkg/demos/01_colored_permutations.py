"""Colored permutations and their excedance words.

Walks through the window form of an element of G(3,3), its action on the
nine colored letters, the excedance matrix, and the flattened word.

    python demos/01_colored_permutations.py
"""

from colored_excedance import (
    Signature,
    apply,
    compose,
    excedance_matrix,
    excedance_set,
    excedance_word,
    inverse,
    parse_window,
)

sig = Signature(3, 3)
print("G(3,3) has", sig.order, "elements")

# %% The window form lists the images of 1, 2, 3 with their colors.
pi = parse_window("3^0 1^1 2^2", sig)
print("pi =", pi)

# %% The color-shift law extends the window to all letters. Letters are
# listed in the color order: the higher the color, the smaller the letter.
letters = sig.letters()
print("x     :", " ".join(str(x) for x in letters))
print("pi(x) :", " ".join(str(apply(pi, x)) for x in letters))

# %% Excedances are the letters moved upward in the color order.
print("Exc(pi) =", sorted(str(x) for x in excedance_set(pi)))

# %% One row per color, color 2 on top; b marks an excedance.
print(excedance_matrix(pi))
print("w_pi =", excedance_word(pi))

# %% Group operations.
print("pi^-1      =", inverse(pi))
print("pi * pi^-1 =", compose(pi, inverse(pi)))
