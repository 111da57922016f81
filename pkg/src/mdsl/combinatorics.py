"""Factorials, counting functions, enumeration and seeded shuffling."""

import random
from itertools import permutations, product

ENUMERATION_LIMIT = 9


def _nonneg(x, name):
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"{name} must be an integer, got {x!r}")
    if x < 0:
        raise ValueError(f"{name} must be non-negative, got {x}")
    return x


def factorial(n: int) -> int:
    if isinstance(n, int) and not isinstance(n, bool) and n < 0:
        raise ValueError("Usage - factorial n, where 'n' is non-negative.")
    _nonneg(n, "n")
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def p(n: int, r: int) -> int:
    """Permutations of the smaller argument out of the larger one.

    The arguments are normalized with max/min, so ``p(10, 5) == p(5, 10)``.
    """
    _nonneg(n, "n")
    _nonneg(r, "r")
    a, b = max(n, r), min(n, r)
    return factorial(a) // factorial(a - b)


def c(n: int, r: int) -> int:
    _nonneg(n, "n")
    _nonneg(r, "r")
    a, b = max(n, r), min(n, r)
    return factorial(a) // (factorial(b) * factorial(a - b))


def permutation(xs, limit: int = ENUMERATION_LIMIT) -> list:
    xs = list(xs)
    if len(xs) > limit:
        raise ValueError(f"refusing to enumerate permutations of {len(xs)} items (limit {limit})")
    return [list(t) for t in permutations(xs)]


def combination(k: int, options) -> list:
    """Every way of concatenating k blocks, each block picked from ``options``."""
    _nonneg(k, "k")
    options = [list(o) for o in options]
    if len(options) ** k > factorial(ENUMERATION_LIMIT):
        raise ValueError("combination list too large to enumerate")
    return [[x for block in choice for x in block] for choice in product(options, repeat=k)]


def shuffle(xs, seed: int) -> list:
    """Fisher-Yates shuffle driven by a generator seeded with ``seed``."""
    out = list(xs)
    rng = random.Random(seed)
    for i in range(len(out) - 1, 0, -1):
        j = rng.randrange(i + 1)
        out[i], out[j] = out[j], out[i]
    return out
