"""Counting, enumeration and a reproducible shuffle."""

# %%
from mdsl import combinatorics as C

print("20! =", C.factorial(20))
print("P(10,5) =", C.p(10, 5), " C(10,5) =", C.c(10, 5))

# %%
print(C.permutation([1, 2, 3]))
print(C.combination(2, [["Head"], ["Tails"]]))

# %%
# Same seed, same deck order.
deck = [r + s for s in "SH" for r in "AKQJ"]
print(C.shuffle(deck, seed=7))
print(C.shuffle(deck, seed=7))
print(C.shuffle(deck, seed=8))
