"""Relations as sets of pairs: properties, algebra and closures."""

# %%
from mdsl import relation as R
from mdsl.relation import Relation

r = Relation([(1, 1), (1, 2), (2, 1)])
print("transitive?", R.is_transitive(r))
print("add (2,2):", R.is_transitive(Relation(list(r) + [(2, 2)])))

# %%
# A divisibility relation on 1..6 is a weak partial order but not a total one.
divides = Relation((a, b) for a in range(1, 7) for b in range(1, 7) if b % a == 0)
print("weak partial order:", R.is_weak_partial_order(divides))
print("weak total order:", R.is_weak_total_order(divides))

# %%
# Closures add the fewest pairs needed for the property.
step = Relation([(1, 2), (2, 3), (3, 4)])
print("symmetric:", R.symmetric_closure(Relation([(1, 1), (1, 3)])))
print("transitive:", R.transitive_closure(step))
print("reachability in two steps:", R.r_power(step, 2))
