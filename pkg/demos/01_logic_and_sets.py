"""Propositional connectives, then finite sets built on top of them."""

# %%
from mdsl.logic import Connective, connective, fold_connective, negate_list

# Implication is only false when a true premise leads to a false conclusion.
for a in (True, False):
    for b in (True, False):
        print(a, "==>", b, "is", connective(Connective.IMPLIES, a, b))

# %%
# Folding XOR over a list gives its parity.
bits = [True, False, True, True, False]
print("xor fold:", fold_connective(Connective.XOR, bits))
print("negated:", negate_list(bits))

# %%
from mdsl import sets as S
from mdsl.sets import Set

odds, evens = Set(range(1, 11, 2)), Set(range(2, 11, 2))
print(odds, evens, "disjoint:", S.disjoint(odds, evens))

x, y = Set([1, 2, 3]), Set([2, 4, 6])
print("union", S.union(x, y))
print("intersection", S.intersection(x, y))
print("x times y has", S.cardinality(S.cart_product(x, y)), "pairs")

# %%
# Power sets come out ordered by size, then lexicographically.
for subset in S.power_set(Set("abc")):
    print(sorted(subset))
