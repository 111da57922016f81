"""Bases, modular arithmetic and primes."""

# %%
from mdsl import numtheory as N
from mdsl.numtheory import BaseOp

print("37 in octal:", N.to_base(8, 37))
print("1024 in base 60:", N.to_base(60, 1024), N.to_alpha(N.to_base(60, 1024)))
print("octal 45 * 2 =", N.base_arith(BaseOp.MUL, 8, [4, 5], [2]))

# %%
print("fib 1..10:", N.fib_series(10))
print("fib 200 =", N.fib(200))

# %%
print("112^34 mod 546 =", N.mod_exp(112, 34, 546))
# 3x = 6 (mod 9) has solutions 2, 5, 8; the least is returned
print("3x = 6 mod 9:", N.solve_congruence(3, 6, 9))
print("2x = 1 mod 4:", N.solve_congruence(2, 1, 4))

# %%
print(N.primes_to(50))
print("2^61 - 1 prime?", N.is_prime(2**61 - 1))
print("factors of 360:", N.prime_factors(360))
