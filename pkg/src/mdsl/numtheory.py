"""Radix conversion, Fibonacci numbers, modular arithmetic and primes.

All integers are Python ints, so everything here is exact at any size.
"""

import math
import random
from enum import Enum

TRIAL_DIVISION_LIMIT = 10**6
MILLER_RABIN_ROUNDS = 40
# deterministic Miller-Rabin witnesses, correct for every n < 3.3e24
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_WITNESS_BOUND = 3317044064679887385961981
_MR_SEED = 0x6D64736C


def _int(x, name="argument"):
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"{name} must be an integer, got {x!r}")
    return x


# -- bases -------------------------------------------------------------------

def _check_base(base):
    _int(base, "base")
    if base < 2:
        raise ValueError(f"base must be at least 2, got {base}")


def to_base(base: int, v: int) -> list:
    """Digits of v in the given base, most significant first; 0 gives []."""
    _check_base(base)
    _int(v, "value")
    if v < 0:
        raise ValueError("negative values have no digit expansion here")
    digits = []
    while v:
        v, r = divmod(v, base)
        digits.append(r)
    return digits[::-1]


def from_base(base: int, digits) -> int:
    _check_base(base)
    v = 0
    for d in digits:
        _int(d, "digit")
        if not 0 <= d < base:
            raise ValueError(f"digit {d} out of range for base {base}")
        v = v * base + d
    return v


_ALPHA = "0123456789abcdefghijklmnopqrstuvwxyz"


def to_alpha(digits) -> str:
    out = []
    for d in digits:
        _int(d, "digit")
        if not 0 <= d < len(_ALPHA):
            raise ValueError(f"digit {d} has no alphanumeric form")
        out.append(_ALPHA[d])
    return "".join(out)


def from_alpha(text: str) -> list:
    out = []
    for ch in text:
        i = _ALPHA.find(ch.lower())
        if i < 0:
            raise ValueError(f"invalid digit character {ch!r}")
        out.append(i)
    return out


class BaseOp(Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"
    EXP = "exp"


def base_arith(op: BaseOp, base: int, x, y) -> list:
    a, b = from_base(base, x), from_base(base, y)
    if op is BaseOp.ADD:
        r = a + b
    elif op is BaseOp.SUB:
        if a < b:
            raise ValueError("subtraction would give a negative result")
        r = a - b
    elif op is BaseOp.MUL:
        r = a * b
    elif op is BaseOp.DIV:
        if b == 0:
            raise ZeroDivisionError("division by zero")
        r = a // b
    else:
        r = a**b
    return to_base(base, r)


# -- Fibonacci -----------------------------------------------------------------

def fib_series(n: int) -> list:
    _int(n, "n")
    if n < 1:
        raise ValueError("Fibonacci index starts at 1")
    out = [1]
    a, b = 1, 1
    for _ in range(n - 1):
        out.append(b)
        a, b = b, a + b
    return out


def fib(n: int) -> int:
    _int(n, "n")
    if n < 1:
        raise ValueError("Fibonacci index starts at 1")
    a, b = 0, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return b


# -- modular arithmetic --------------------------------------------------------

def _check_modulus(m):
    _int(m, "modulus")
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")


def mod_add(a, b, m):
    _check_modulus(m)
    return (_int(a) + _int(b)) % m


def mod_sub(a, b, m):
    _check_modulus(m)
    return (_int(a) - _int(b)) % m


def mod_mult(a, b, m):
    _check_modulus(m)
    return (_int(a) * _int(b)) % m


def mod_exp(a, b, m):
    """a**b mod m by binary square-and-multiply."""
    _check_modulus(m)
    _int(a)
    _int(b, "exponent")
    if b < 0:
        raise ValueError("negative exponent")
    result = 1 % m
    base = a % m
    while b:
        if b & 1:
            result = result * base % m
        base = base * base % m
        b >>= 1
    return result


def is_congruent(a, b, m) -> bool:
    _check_modulus(m)
    return (_int(a) - _int(b)) % m == 0


def solve_congruence(a, b, m, least: int = 0):
    """Least x >= ``least`` with a*x = b (mod m), or None if there is none."""
    _check_modulus(m)
    a, b = _int(a) % m, _int(b) % m
    g = math.gcd(a, m)
    if b % g:
        return None
    m1 = m // g
    if m1 == 1:
        x = 0
    else:
        x = (b // g) * pow(a // g, -1, m1) % m1
    # solutions are x + k*m1; shift to the first one at or above the bound
    if x < least:
        x += -(-(least - x) // m1) * m1
    return x


def solve_congruence_pos(a, b, m):
    return solve_congruence(a, b, m, least=1)


# -- primes ------------------------------------------------------------------

def primes_to(m: int) -> list:
    """Sieve of Eratosthenes: all primes <= m."""
    _int(m)
    if m < 2:
        return []
    sieve = bytearray([1]) * (m + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(m) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, m + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def primes_between(lo: int, hi: int) -> list:
    return [p for p in primes_to(hi) if p >= lo]


def _trial_division(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _strong_probable_prime(n, a, d, s):
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def miller_rabin(n: int, rounds: int = MILLER_RABIN_ROUNDS) -> bool:
    """Deterministic below 3.3e24; above that, fixed-seed random bases."""
    if n < 2:
        return False
    for p in _WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if not all(_strong_probable_prime(n, a, d, s) for a in _WITNESSES):
        return False
    if n < _WITNESS_BOUND:
        return True
    rng = random.Random(_MR_SEED)
    return all(_strong_probable_prime(n, rng.randrange(2, n - 1), d, s) for _ in range(rounds))


def is_prime(n: int, threshold: int = TRIAL_DIVISION_LIMIT) -> bool:
    _int(n)
    if n < threshold:
        return _trial_division(n)
    return miller_rabin(n)


def next_prime(n: int) -> int:
    _int(n)
    c = max(n + 1, 2)
    while not is_prime(c):
        c += 1
    return c


def first_n_primes(n: int) -> list:
    _int(n)
    out = []
    p = 1
    while len(out) < n:
        p = next_prime(p)
        out.append(p)
    return out


def prime_factors(n: int) -> list:
    _int(n)
    if n < 2:
        raise ValueError("prime factorization needs n >= 2")
    out = []
    while n % 2 == 0:
        out.append(2)
        n //= 2
    f = 3
    while f * f <= n:
        while n % f == 0:
            out.append(f)
            n //= f
        f += 2
    if n > 1:
        out.append(n)
    return out


# -- random numbers ------------------------------------------------------------

def random_ints(count: int, lo: int, hi: int, seed: int) -> list:
    """``count`` integers drawn uniformly from [lo, hi]; fixed by the seed."""
    if lo > hi:
        raise ValueError("empty range")
    rng = random.Random(seed)
    return [rng.randint(lo, hi) for _ in range(count)]
