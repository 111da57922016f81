import io
import subprocess
import sys

import pytest

from mdsl.cli import main


def call(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    rc = main(argv, stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return rc, out.getvalue(), err.getvalue()


def test_repl_prompt_and_output():
    rc, out, _ = call(["repl"], "factorial 5\n")
    assert rc == 0
    assert out == "mdsl> 120\nmdsl> \n"


def test_run_file(tmp_path):
    prog = tmp_path / "prog.mdsl"
    prog.write_text("let x = Set [3,2,1]\ncardinality x\nx\n", encoding="utf-8")
    rc, out, _ = call(["run", str(prog)])
    assert rc == 0 and out == "3\n{1,2,3}\n"
    rc, _, err = call(["run", str(tmp_path / "missing.mdsl")])
    assert rc == 2 and "cannot read" in err


def test_seed_option_changes_shuffle():
    a = call(["--seed", "1", "repl", "--prompt", ""], "shuffle [1..10]\n")[1]
    b = call(["--seed", "2", "repl", "--prompt", ""], "shuffle [1..10]\n")[1]
    assert a == call(["--seed", "1", "repl", "--prompt", ""], "shuffle [1..10]\n")[1]
    assert a != b


def test_pp(tmp_path):
    src = tmp_path / "in.mdsl"
    dst = tmp_path / "out.hs"
    src.write_text("True ==> False\n", encoding="utf-8")
    rc, _, _ = call(["pp", "orig.mdsl", str(src), str(dst)])
    assert rc == 0 and dst.read_text(encoding="utf-8") == "implies(True, False)\n"
    again = tmp_path / "again.hs"
    assert call(["pp", "orig.mdsl", str(dst), str(again)])[0] == 0
    assert again.read_bytes() == dst.read_bytes()


def test_pp_error_reports_position(tmp_path):
    src = tmp_path / "bad.mdsl"
    src.write_text("fib 3\nSet {1,,\n", encoding="utf-8")
    rc, _, err = call(["pp", "orig.mdsl", str(src), str(tmp_path / "o")])
    assert rc == 1
    assert err.startswith("orig.mdsl:2:")
    assert not (tmp_path / "o").exists()


def test_app_error_goes_to_stderr():
    rc, _, err = call(["app", "dh", "--batch"], "15\n1000\n101\n149\n")
    assert rc == 1 and "not prime" in err


def test_app_without_batch_does_not_echo():
    rc, out, _ = call(["app", "dh"], "15\n1009\n101\n149\n")
    assert rc == 0
    assert "\n15\n" not in out and "Shared Key by B: 908" in out


def test_bad_arguments_exit():
    with pytest.raises(SystemExit):
        call(["app", "nosuchapp"])


def test_console_script_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "mdsl.cli", "repl", "--prompt", ""],
        input="toBase 8 37\n",
        capture_output=True,
        text=True,
        check=True,
    )
    assert proc.stdout == "[4,5]\n"
