import io
import random
import string

import pytest
from hypothesis import given, strategies as st

from mdsl import apps
from mdsl.apps import DhParams, MersenneMode, Mode, RsaKey

printable = st.text(alphabet=st.sampled_from([chr(c) for c in range(32, 124)]))


def test_caesar():
    assert apps.caesar(Mode.ENC, "Caesar cipher") == "Fdhvdu#flskhu"
    assert apps.caesar(Mode.DEC, "Fdhvdu#flskhu") == "Caesar cipher"
    with pytest.raises(ValueError):
        apps.caesar(Mode.ENC, "\x01")
    with pytest.raises(ValueError):
        apps.caesar(Mode.DEC, "!")


def test_transposition():
    assert apps.transposition(Mode.DEC, "orpgmars") == "programs"
    assert apps.transposition(Mode.ENC, "programs") == "orpgmars"
    assert apps.transposition(Mode.ENC, "abcdef") == "cbadfe"


@given(printable)
def test_caesar_roundtrip(text):
    assert apps.caesar(Mode.DEC, apps.caesar(Mode.ENC, text)) == text


@given(st.text())
def test_transposition_roundtrip(text):
    assert apps.transposition(Mode.DEC, apps.transposition(Mode.ENC, text)) == text


def test_rsa():
    msg = [101, 203, 4321, 12]
    enc = apps.rsa(RsaKey(7, 111289), msg)
    assert enc == [44807, 90666, 25476, 108039]
    assert apps.rsa(RsaKey(94423, 111289), enc) == msg
    with pytest.raises(ValueError):
        apps.rsa(RsaKey(7, 111289), [111289])


def test_rsa_random_roundtrip():
    rng = random.Random(0)
    e, d, n = 7, 94423, 111289
    blocks = [rng.randrange(n) for _ in range(200)]
    assert apps.rsa(RsaKey(d, n), apps.rsa(RsaKey(e, n), blocks)) == blocks


def test_diffie_hellman():
    r = apps.diffie_hellman(DhParams(15, 1009, 101, 149))
    assert (r.y_a, r.y_b, r.shared_a, r.shared_b) == (4, 685, 908, 908)
    with pytest.raises(ValueError):
        DhParams(15, 1000, 101, 149)
    with pytest.raises(ValueError):
        DhParams(15, 1009, 0, 149)


@given(st.integers(2, 1008), st.integers(1, 1008), st.integers(1, 1008))
def test_dh_keys_agree(alpha, xa, xb):
    r = apps.diffie_hellman(DhParams(alpha, 1009, xa, xb))
    assert r.shared_a == r.shared_b


def test_solve_linear():
    x = apps.solve_linear([[1, 2], [1, 1]], [[4], [1]])
    assert x.rows == ((-2.0,), (3.0,))
    # three equations, two unknowns, consistent
    x = apps.solve_linear([[0, 0], [1, 2], [1, 1]], [[0], [4], [1]])
    assert x.rows == ((-2.0,), (3.0,))
    with pytest.raises(ValueError, match="inconsistent"):
        apps.solve_linear([[1, 2], [1, 1], [1, 0]], [[4], [1], [5]])
    with pytest.raises(ValueError, match="singular"):
        apps.solve_linear([[1, 2], [2, 4]], [[1], [2]])
    with pytest.raises(ValueError):
        apps.solve_linear([[1, 2]], [[1]])


def test_mersenne():
    assert apps.mersenne(MersenneMode.POWERS, 1000) == [2, 3, 5, 7, 13, 17, 19, 31, 61, 89, 107, 127, 521, 607]
    nums = apps.mersenne(MersenneMode.NUMBERS, 100)
    assert nums[-1] == 618970019642690137449562111 and len(nums) == 10
    assert [q for q in range(2, 40) if apps.lucas_lehmer(q) and q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)] == [
        2, 3, 5, 7, 13, 17, 19, 31
    ]


def test_console_programs_exit_option():
    for name, answers in [("cipher", "3\n"), ("rsa", "3\n"), ("mers", "3\n")]:
        out = io.StringIO()
        assert apps.PROGRAMS[name](apps.Console(io.StringIO(answers), out)) == 0
        assert "Exit" in out.getvalue()


def test_console_eof():
    with pytest.raises(EOFError):
        apps.run_dh(apps.Console(io.StringIO("15\n"), io.StringIO()))
