"""The demonstration programs: ciphers, RSA, Diffie-Hellman, linear systems
and Mersenne primes, each with a menu-driven console front end."""

import ast
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from . import linalg, numtheory
from .frontend.render import render_number


class Mode(Enum):
    ENC = "encipher"
    DEC = "decipher"


# -- Caesar ------------------------------------------------------------------

CAESAR_SHIFT = 3


def _printable(code):
    return 32 <= code <= 126


def caesar(mode: Mode, text: str) -> str:
    # shifts raw character codes, so a space becomes '#'
    shift = CAESAR_SHIFT if mode is Mode.ENC else -CAESAR_SHIFT
    source = text if mode is Mode.ENC else "".join(chr(ord(ch) + shift) for ch in text)
    for ch in source:
        if not _printable(ord(ch)):
            raise ValueError(f"character {ch!r} is outside printable ASCII")
    return "".join(chr(ord(ch) + shift) for ch in text)


# -- transposition -----------------------------------------------------------

TRANSPOSITION_KEY = (3, 2, 1, 4)


def _restricted(key, n):
    return tuple(k for k in key if k <= n)


def _inverse_key(key):
    inv = [0] * len(key)
    for i, k in enumerate(key, start=1):
        inv[k - 1] = i
    return tuple(inv)


def transposition(mode: Mode, text: str, key=TRANSPOSITION_KEY) -> str:
    """Blockwise transposition: output position i takes block character key[i].

    A short final block uses the key restricted to the positions it has.
    """
    size = len(key)
    out = []
    for start in range(0, len(text), size):
        block = text[start : start + size]
        k = _restricted(key, len(block))
        if mode is Mode.DEC:
            k = _inverse_key(k)
        out.append("".join(block[i - 1] for i in k))
    return "".join(out)


# -- RSA ---------------------------------------------------------------------

@dataclass(frozen=True)
class RsaKey:
    exponent: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2 or self.exponent < 1:
            raise ValueError("RSA key needs modulus >= 2 and exponent >= 1")


def rsa(key: RsaKey, blocks) -> list:
    """Encryption and decryption are the same map with different keys."""
    out = []
    for b in blocks:
        if not 0 <= b < key.modulus:
            raise ValueError(f"block {b} is not below the modulus {key.modulus}")
        out.append(numtheory.mod_exp(b, key.exponent, key.modulus))
    return out


# -- Diffie-Hellman ------------------------------------------------------------

@dataclass(frozen=True)
class DhParams:
    alpha: int
    q: int
    x_a: int
    x_b: int

    def __post_init__(self):
        if not numtheory.is_prime(self.q):
            raise ValueError(f"q = {self.q} is not prime")
        if not 1 < self.alpha < self.q:
            raise ValueError("primitive root must satisfy 1 < alpha < q")
        for x in (self.x_a, self.x_b):
            if not 1 <= x < self.q:
                raise ValueError("private keys must satisfy 1 <= x < q")


@dataclass(frozen=True)
class DhResult:
    y_a: int
    y_b: int
    shared_a: int
    shared_b: int


def diffie_hellman(p: DhParams) -> DhResult:
    y_a = numtheory.mod_exp(p.alpha, p.x_a, p.q)
    y_b = numtheory.mod_exp(p.alpha, p.x_b, p.q)
    return DhResult(
        y_a,
        y_b,
        numtheory.mod_exp(y_b, p.x_a, p.q),
        numtheory.mod_exp(y_a, p.x_b, p.q),
    )


# -- linear systems ------------------------------------------------------------

RESIDUAL_TOL = 1e-8


def solve_linear(coeff, consts):
    """Solve coeff . x = consts for an n-column coefficient matrix.

    With more equations than unknowns, the first n rows giving an invertible
    square system are solved and the remaining rows are checked against it.
    """
    coeff = coeff if isinstance(coeff, linalg.Matrix) else linalg.Matrix(coeff)
    consts = consts if isinstance(consts, linalg.Matrix) else linalg.Matrix(consts)
    m, n = coeff.shape
    if consts.shape != (m, 1):
        raise ValueError(f"constant matrix must be {m}x1")
    if m < n:
        raise ValueError("fewer equations than unknowns")
    for rows in combinations(range(m), n):
        sub = linalg.Matrix(coeff.rows[i] for i in rows)
        if linalg.is_invertible(sub):
            break
    else:
        raise ValueError("coefficient matrix is singular")
    rhs = linalg.Matrix(consts.rows[i] for i in rows)
    x = linalg.m_mult(linalg.inverse(sub), rhs)
    residual = linalg.m_sub(linalg.m_mult(coeff, x), consts)
    if any(abs(r[0]) > RESIDUAL_TOL * max(1.0, abs(b[0])) for r, b in zip(residual.rows, consts.rows)):
        raise ValueError("system is inconsistent")
    return x


# -- Mersenne primes -------------------------------------------------------------

class MersenneMode(Enum):
    POWERS = "powers"
    NUMBERS = "numbers"


def lucas_lehmer(q: int) -> bool:
    """Whether 2**q - 1 is prime, for prime q."""
    if q == 2:
        return True
    m = (1 << q) - 1
    s = 4
    for _ in range(q - 2):
        s = (s * s - 2) % m
    return s == 0


def mersenne(mode: MersenneMode, limit: int) -> list:
    if limit < 2:
        raise ValueError("limit must be at least 2")
    powers = [q for q in numtheory.primes_to(limit) if lucas_lehmer(q)]
    if mode is MersenneMode.POWERS:
        return powers
    return [(1 << q) - 1 for q in powers]


# -- console programs ------------------------------------------------------------

class Console:
    """Prompted input/output over a pair of text streams."""

    def __init__(self, stdin, stdout, echo=False):
        self.stdin = stdin
        self.stdout = stdout
        # batch input is not echoed by a terminal, so repeat it for the transcript
        self.echo = echo

    def say(self, text=""):
        self.stdout.write(text + "\n")

    def ask(self):
        line = self.stdin.readline()
        if not line:
            raise EOFError("input ended")
        line = line.rstrip("\r\n")
        if self.echo:
            self.say(line)
        return line

    def ask_int(self):
        return int(self.ask().strip())


def _show_list(xs):
    return "[" + ",".join(str(x) for x in xs) + "]"


def _read_list(text):
    value = ast.literal_eval(text.strip())
    if not isinstance(value, list):
        raise ValueError("expected a bracketed list")
    return value


def _menu(con, title, options, indent="      "):
    con.say(title)
    for i, opt in enumerate(options, start=1):
        con.say(f"{indent}[{i}]: {opt}")
    con.say(">>")
    return con.ask().strip()


def run_cipher(con: Console) -> int:
    choice = _menu(con, "Choose a cipher -", ["Caesar Cipher", "Transposition Cipher", "Exit"])
    if choice not in ("1", "2"):
        return 0
    cipher = caesar if choice == "1" else transposition
    op = _menu(con, "Choose an option -", ["Enciphering", "Deciphering", "Exit"])
    if op == "1":
        con.say("Enter plaintext:")
        text = con.ask()
        con.say()
        con.say("Enciphered text:")
        con.say(cipher(Mode.ENC, text))
    elif op == "2":
        con.say("Enter ciphertext:")
        text = con.ask()
        con.say()
        con.say("Deciphered text:")
        con.say(cipher(Mode.DEC, text))
    return 0


def run_rsa(con: Console) -> int:
    op = _menu(con, "Choose an operation -", ["Encryption", "Decryption", "Exit"], indent="  ")
    if op == "1":
        which, prompt, label = "Public", "Enter Message:", "Encrypted message:"
    elif op == "2":
        which, prompt, label = "Private", "Enter Cipher:", "Decrypted message:"
    else:
        return 0
    con.say(f"Enter first part of {which} Key:")
    e = con.ask_int()
    con.say(f"Enter second part of {which} Key:")
    n = con.ask_int()
    con.say(prompt)
    blocks = _read_list(con.ask())
    con.say()
    con.say(label)
    con.say(_show_list(rsa(RsaKey(e, n), blocks)))
    return 0


def run_dh(con: Console) -> int:
    con.say("Enter primitive root (alpha):")
    alpha = con.ask_int()
    con.say("Enter prime number (q):")
    q = con.ask_int()
    con.say()
    con.say("Enter A's private key (xA):")
    x_a = con.ask_int()
    con.say("Enter B's private key (xB):")
    x_b = con.ask_int()
    r = diffie_hellman(DhParams(alpha, q, x_a, x_b))
    con.say()
    con.say("Calculating Public Keys ...")
    con.say()
    con.say(f"A's public key (yA): {r.y_a}")
    con.say(f"B's public key (yB): {r.y_b}")
    con.say()
    con.say("Generating Shared Key ...")
    con.say(f"Shared Key by A: {r.shared_a}")
    con.say(f"Shared Key by B: {r.shared_b}")
    return 0


def run_lineq(con: Console) -> int:
    con.say("Enter the coefficient matrix -")
    coeff = _read_list(con.ask())
    con.say("Enter the constant matrix -")
    consts = _read_list(con.ask())
    x = solve_linear(coeff, consts)
    con.say()
    con.say("Solution matrix -")
    for row in x.rows:
        con.say("\t".join(render_number(v) for v in row))
    return 0


def run_mers(con: Console) -> int:
    con.say("Choose an option:")
    con.say("    [1] : Mersenne Prime Powers upto a power 'n'")
    con.say("    [2] : Mersenne Prime Numbers upto a power 'n'")
    con.say("    [3] : Exit")
    op = con.ask().strip()
    if op not in ("1", "2"):
        return 0
    con.say("Enter power")
    limit = con.ask_int()
    con.say()
    if op == "1":
        con.say("Powers -")
        con.say(_show_list(mersenne(MersenneMode.POWERS, limit)))
    else:
        con.say("Numbers -")
        con.say(_show_list(mersenne(MersenneMode.NUMBERS, limit)))
    return 0


PROGRAMS = {
    "cipher": run_cipher,
    "rsa": run_rsa,
    "dh": run_dh,
    "lineq": run_lineq,
    "mers": run_mers,
}
