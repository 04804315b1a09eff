import io
import json
import subprocess
import sys

import pytest

from ffinterleave.cli import main

MONO13 = " 0  1  2  3  4  5  6  7  8  9 10 11 12\n 0 11 10  9  8  7  6  5  4  3  2  1 12\n"
DICK11 = " 0  1  2  3  4  5  6  7  8  9 10\n 0  1  2  3  9  5  6  7  8  4 10\n"
HOOK6 = " 1  2  3  4  5  6  7  8  9 10 11 12 13\n 3  7  1 10  6  5  2 11 13  4  8 12  9\n"
HOOK6_SEQ = "# kind=hooked n=6 j=2 k=12\n2 5 2 6 1 1 5 3 4 6 3 0 4\n"


def run(*argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


@pytest.mark.parametrize("ident,expected", [("monomial-13", MONO13), ("dickson-11", DICK11), ("skolem-hooked-6", HOOK6)])
def test_reproduce_byte_exact(ident, expected):
    assert run("reproduce", ident) == (0, expected)


def test_reproduce_unknown_id():
    with pytest.raises(SystemExit) as exc:
        main(["reproduce", "nope"], io.StringIO())
    assert exc.value.code == 2


def test_interleave_two_row_matches_reproduction():
    assert run("interleave", "monomial", "-p", "13", "-n", "11", "--two-row") == (0, MONO13)
    assert run("interleave", "dickson", "-p", "11", "-n", "19", "-a", "1", "--two-row") == (0, DICK11)


def test_interleave_table_has_provenance():
    code, text = run("interleave", "redei", "-p", "11", "-n", "5", "-a", "2")
    assert code == 0
    assert text.startswith("# field: 11 1 ") and '# params: {"n": 5, "a": 2}' in text


def test_field_reports():
    code, text = run("field", "-p", "13", "-m", "1")
    assert code == 0 and "alpha" in text and "q=13" in text.replace(" ", "")
    assert run("field", "-p", "2")[0] == 0
    assert run("field", "-p", "4")[0] == 2


def test_condition_violation_exit_3(capsys):
    assert run("interleave", "redei", "-p", "11", "-n", "3", "-a", "2")[0] == 3
    assert "gcd(3,12)≠1" in capsys.readouterr().err
    assert run("skolem", "plain", "-n", "6")[0] == 3
    assert "n≡2 (mod 4)" in capsys.readouterr().err


def test_bound_exceeded_exit_2(monkeypatch):
    monkeypatch.setenv("INTERLEAVER_QMAX", "100")
    assert run("interleave", "monomial", "-p", "101", "-n", "3")[0] == 2


def test_cycles_reports():
    assert run("cycles", "monomial", "-p", "13", "-n", "11") == (0, "{1:3, 2:5}\nfixed {0,6,12}\n")
    assert run("cycles", "identity", "--size", "5")[1].startswith("{1:5}")
    assert run("cycles", "redei", "-p", "11", "-n", "5", "-a", "2")[1].startswith("{1:3, 2:4}")


def test_json_round_trip_into_cycles(monkeypatch):
    for argv in (["mobius", "-p", "7", "-a", "1", "-b", "0", "-c", "1", "-d", "6"], ["redei", "-p", "11", "-n", "5", "-a", "2"]):
        _, js = run("interleave", *argv, "--format", "json")
        piped = run("cycles", "--file", "-", stdin=js, monkeypatch=monkeypatch)
        assert piped == run("cycles", *argv)


def test_malformed_permutation_exit_4(monkeypatch, tmp_path):
    assert run("cycles", "--file", "-", stdin='{"size": 2, "image": [0, 0]}', monkeypatch=monkeypatch)[0] == 4
    assert run("cycles", "--file", "-", stdin="not json", monkeypatch=monkeypatch)[0] == 4
    assert run("cycles", "--file", str(tmp_path / "missing.json"))[0] == 4


def test_skolem_outputs(monkeypatch):
    assert run("skolem", "plain", "-n", "1") == (0, "# kind=plain n=1 j=2 k=-\n1 1\n")
    code, text = run("skolem", "hooked", "--file", "-", "--modify", "--interleave", stdin=HOOK6_SEQ, monkeypatch=monkeypatch)
    assert code == 0
    assert text == HOOK6_SEQ + "2 5 -2 6 1 -1 -5 3 4 -6 -3 0 -4\n" + HOOK6
    bad = HOOK6_SEQ.replace("3 0 4", "3 4 0")
    assert run("skolem", "hooked", "--file", "-", stdin=bad, monkeypatch=monkeypatch)[0] == 4
    assert run("skolem", "k_extended", "-n", "4")[0] == 2


def test_skolem_generated_interleaver_json():
    code, text = run("skolem", "hooked", "-n", "7", "--interleave", "--format", "json")
    data = json.loads(text)
    image = [v - 1 for v in data["interleaver"]]
    assert code == 0 and all(image[image[i]] == i for i in range(len(image)))


def test_skolem_prescribed():
    code, text = run("skolem", "prescribed", "--spec", "1:2,3:3")
    assert code == 0 and "# census {1:2, 3:3}" in text
    assert run("skolem", "prescribed", "--spec", "2:3", "--strict")[0] == 3


def test_verify_exit_status(capsys):
    code, text = run("verify", "skolem-selfinv", "--n-max", "8")
    assert code == 0 and all(json.loads(line)["oracle_agrees"] for line in text.splitlines())
    assert capsys.readouterr().err.startswith("PASS skolem-selfinv")
    # (3,2) satisfies the congruence but has no sequence
    assert run("verify", "skolem-generalized", "--j-max", "3", "--jn-max", "12", "--quiet")[0] == 5
    assert capsys.readouterr().err.startswith("FAIL skolem-generalized")


def test_verify_mobius_small():
    assert run("verify", "mobius-census", "--q-max", "7", "--quiet")[0] == 0


def test_deterministic_bytes():
    argv = ("interleave", "monomial", "-p", "3", "-m", "3", "-n", "5", "--format", "csv")
    assert run(*argv) == run(*argv)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "ffinterleave", "reproduce", "monomial-13"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == MONO13
