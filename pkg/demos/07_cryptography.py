"""Classical ciphers, RSA, Diffie-Hellman and Mersenne primes."""

# %%
from mdsl import apps
from mdsl.apps import DhParams, MersenneMode, Mode, RsaKey

secret = apps.caesar(Mode.ENC, "Caesar cipher")
print(secret, "->", apps.caesar(Mode.DEC, secret))
print(apps.transposition(Mode.ENC, "programs"), "->", apps.transposition(Mode.DEC, "orpgmars"))

# %%
# n = 103 * 1087, e * d = 1 mod phi(n)
public, private = RsaKey(7, 111289), RsaKey(94423, 111289)
cipher = apps.rsa(public, [101, 203, 4321, 12])
print(cipher, "->", apps.rsa(private, cipher))

# %%
r = apps.diffie_hellman(DhParams(alpha=15, q=1009, x_a=101, x_b=149))
print("public keys", r.y_a, r.y_b, "shared", r.shared_a, r.shared_b)

# %%
print("Mersenne exponents below 1000:", apps.mersenne(MersenneMode.POWERS, 1000))
