import json

import pytest

from privword import checker, cli


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_plain(capsys):
    code, out, _ = run(capsys, "check", "010", "01")
    assert code == 0
    assert out.splitlines() == ["010 privileged", "01 not privileged"]


def test_check_empty_word(capsys):
    assert run(capsys, "check", "")[1] == "privileged\n"


@pytest.mark.parametrize("word, code", [("01", 1), ("010", 0), ("", 0)])
def test_check_quiet_exit(capsys, word, code):
    got, out, _ = run(capsys, "check", word, "--quiet")
    assert got == code and out == ""


def test_check_bad_symbol(capsys):
    code, _, err = run(capsys, "check", "012")
    assert code == 2 and "not in alphabet" in err


def test_check_alphabet(capsys):
    code, out, _ = run(capsys, "check", "--alphabet", "ab", "aba", "ab")
    assert out.splitlines() == ["aba privileged", "ab not privileged"]
    assert run(capsys, "check", "-k", "3", "0120", "--quiet")[0] == 0


def test_check_json_roundtrip(capsys):
    code, out, _ = run(capsys, "check", "--json", "0010", "010010")
    recs = [json.loads(line) for line in out.splitlines()]
    assert recs[0] == {"word": "0010", "privileged": False, "engine": "linear", "p": 2,
                       "while_iterations": 4}
    assert recs[1]["privileged"] is True and recs[1]["p"] == 6


def test_check_naive_json_matches_linear(capsys):
    words = ["0010", "010010", "0110", "00101100", "1"]
    lin = [json.loads(l) for l in run(capsys, "check", "--json", *words)[1].splitlines()]
    nai = [json.loads(l) for l in run(capsys, "check", "--json", "--naive", *words)[1].splitlines()]
    assert [(r["privileged"], r["p"]) for r in lin] == [(r["privileged"], r["p"]) for r in nai]
    assert all(r["engine"] == "naive" for r in nai)


def test_check_stdin_and_file(capsys, monkeypatch, tmp_path):
    code, out, _ = run(capsys, "check", stdin="010\n01\n\n", monkeypatch=monkeypatch)
    assert out.splitlines() == ["010 privileged", "01 not privileged", "privileged"]
    f = tmp_path / "words.txt"
    f.write_text("0110\n0111\n")
    assert run(capsys, "check", "--file", str(f))[1].splitlines() == [
        "0110 privileged", "0111 not privileged"]
    assert run(capsys, "check", "--file", str(tmp_path / "missing"))[0] == 2


def test_enum(capsys):
    assert run(capsys, "enum", "--length", "4")[1].split() == ["0000", "0110", "1001", "1111"]
    assert run(capsys, "enum", "--length", "9", "--count-only")[1] == "40\n"
    code, out, _ = run(capsys, "enum", "--length", "0")
    assert out == "\n"
    assert run(capsys, "enum", "--length", "0", "--count-only")[1] == "1\n"


@pytest.mark.parametrize("n, k", [(n, 2) for n in range(0, 14)] + [(n, 3) for n in range(0, 8)])
def test_enum_count_equals_line_count(capsys, n, k):
    listed = run(capsys, "enum", "-n", str(n), "-k", str(k))[1]
    count = int(run(capsys, "enum", "-n", str(n), "-k", str(k), "--count-only")[1])
    assert listed.count("\n") == count


def test_enum_threads_deterministic(capsys):
    a = run(capsys, "enum", "-n", "12", "--threads", "1")[1]
    b = run(capsys, "enum", "-n", "12", "--threads", "4")[1]
    assert a == b


def test_enum_cap(capsys):
    code, _, err = run(capsys, "enum", "-n", "25", "--count-only")
    assert code == 2 and "cap" in err
    assert run(capsys, "enum", "-n", "12", "--count-only", "--max-candidates", "100")[0] == 2
    assert run(capsys, "enum", "-n", "12", "--count-only", "--max-candidates", "100", "--force")[1] == "176\n"
    assert run(capsys, "enum", "-n", "-1")[0] == 2


def test_table(capsys):
    out = run(capsys, "table", "--max", "12")[1]
    assert out.splitlines()[-1] == "12 176"
    assert run(capsys, "table", "--max", "0")[1] == "0 1\n"


def test_table_bfile_mismatch(capsys, tmp_path):
    ref = tmp_path / "b.txt"
    ref.write_text("7 16\n8 21\n")
    code, out, err = run(capsys, "table", "--max", "9", "--bfile", str(ref))
    assert code == 1
    assert "mismatch n=8: computed 20, reference 21" in err
    ref.write_text("7 16\n8 20\n")
    assert run(capsys, "table", "--max", "9", "--bfile", str(ref))[0] == 0


def test_table_bad_bfile(capsys, tmp_path):
    ref = tmp_path / "b.txt"
    ref.write_text("7 sixteen\n")
    assert run(capsys, "table", "--max", "3", "--bfile", str(ref))[0] == 2
    assert run(capsys, "table", "--max", "3", "--bfile", str(tmp_path / "nope"))[0] == 2


def test_table_paper_report(capsys):
    code, out, err = run(capsys, "table", "--max", "21", "--paper")
    assert code == 0
    assert "discrepancy n=18: computed 6132, published 38576 (published value equals computed B(21))" in err
    assert "repeats n=23..25 verbatim at n=26..28" in err
    assert "MISMATCH" not in err


def test_gfib(capsys):
    assert run(capsys, "gfib", "-t", "3", "-n", "4")[1] == "13\n"
    assert run(capsys, "gfib", "-t", "2", "-n", "5")[1] == "13\n"
    assert run(capsys, "gfib", "-t", "0", "-n", "5")[0] == 2


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "-n", "10")
    assert code == 0
    assert out.splitlines() == ["lower_bound 8/25", "B(10) 60", "holds true"]
    code, out, err = run(capsys, "bound", "-n", "40")
    assert code == 0 and out.splitlines() == ["lower_bound 536870912/25"]
    assert "not computed" in err


def test_usage_errors(capsys):
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "enum")[0] == 2


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "bounds", "--max-t", "16")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "verify", "--suite", "theorems", "--max-n", "12")
    assert code == 0 and "FAIL" not in out


def _check_without_p_update(w):
    n = len(w)
    if n <= 1:
        return True, n, 0
    T = [0] * n
    p = 1
    for i in range(1, n):
        j = T[i - 1]
        while True:
            if w[j] == w[i]:
                T[i] = j + 1
                break
            elif j == 0:
                T[i] = 0
                break
            j = T[j - 1]
    return p == n, p, 0


def test_verify_catches_corrupted_checker(capsys, monkeypatch):
    monkeypatch.setattr(checker, "_check", _check_without_p_update)
    code, out, _ = run(capsys, "verify", "--suite", "theorems", "--max-n", "6")
    assert code == 1
    assert "FAIL oracle equivalence k=2" in out
    assert "counterexample '00': linear=False naive=True" in out
