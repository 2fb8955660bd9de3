import pytest

from frickelab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_quintic(capsys):
    code, out, _ = run(capsys, "quintic")
    assert code == 0
    assert out == "poly: -4 4 3 -4 -2 1\n"


def test_trace_symbolic(capsys):
    assert run(capsys, "trace", "aa") == (0, "X^2 - 2\n", "")
    assert run(capsys, "trace", "aab") == (0, "X*Z - Y\n", "")
    assert run(capsys, "trace", "1") == (0, "2\n", "")


def test_trace_at_point(capsys):
    code, out, _ = run(capsys, "trace", "a", "--point", "3,3,3")
    assert code == 0
    assert out.strip() == "3"
    code, out, _ = run(capsys, "trace", "a", "--point", "2.5,7/2,4")
    assert code == 0
    assert out.strip() == "5/2"
    code, out, _ = run(capsys, "trace", "a", "--point", "paper")
    assert code == 0
    assert out.startswith("2.9133011931")


def test_trace_words_file(capsys, tmp_path):
    f = tmp_path / "words.txt"
    f.write_text("# two words\naa\naab\n")
    code, out, _ = run(capsys, "trace", "--words-file", str(f))
    assert code == 0
    assert out.splitlines() == ["X^2 - 2", "X*Z - Y"]


def test_salem_transform(capsys):
    code, out, _ = run(capsys, "salem-transform", "poly:", "-3", "-1", "1")
    assert code == 0
    assert out == "poly: 1 -1 -1 -1 1\n"


def test_geosalem(capsys):
    code, out, _ = run(capsys, "geosalem", "poly:", "-4", "4", "3", "-4", "-2", "1")
    assert code == 0
    assert out.strip().endswith("verdict: NotSalem")
    code, out, _ = run(capsys, "geosalem", "poly:", "-3", "-1", "1")
    assert out.strip().endswith("verdict: GeometricSalem")


def test_salem(capsys):
    code, out, _ = run(capsys, "salem", "poly:", "1", "-1", "-1", "-1", "1")
    assert code == 0
    assert out.strip().endswith("verdict: Salem")


def test_galois(capsys):
    code, out, _ = run(capsys, "galois", "poly:", "-4", "4", "3", "-4", "-2", "1")
    assert code == 0
    assert out.strip().endswith("verdict: FullSymmetric(5)")


def test_nonarith(capsys):
    code, out, _ = run(capsys, "nonarith", "poly:", "-4", "4", "3", "-4", "-2", "1")
    assert code == 0
    assert "non-arithmetic: certified" in out
    assert out.strip().endswith("verdict: NonArithmeticCertified")


def test_solve(capsys):
    code, out, _ = run(capsys, "solve")
    assert code == 0
    assert "x = 2.9133011931" in out
    assert "z = 3.2267947636" in out
    assert "verdict: Member" in out


def test_length(capsys):
    code, out, _ = run(capsys, "length", "a", "--point", "paper")
    assert code == 0
    assert out.startswith("1.8451942615")


def test_raw_interval_output(capsys):
    code, out, _ = run(capsys, "length", "a", "--point", "paper", "--raw")
    assert code == 0
    assert out.startswith("[") and "," in out


def test_variety_check(capsys):
    code, out, _ = run(capsys, "variety", "check", "--poly", "X1-X2", "--words", "a,b", "--point", "paper")
    assert (code, out.strip()) == (0, "verdict: In")
    code, out, _ = run(capsys, "variety", "check", "--poly", "X1-X2", "--words", "a,b", "--point", "3,4,5")
    assert (code, out.strip()) == (0, "verdict: Out")
    code, out, _ = run(
        capsys, "variety", "check", "--poly", "X1*X2 - X3 - X4", "--words", "a,b,ab,aB", "--point", "3,4,5"
    )
    assert (code, out.strip()) == (0, "verdict: In")


def test_variety_identity_suite(capsys):
    code, out, _ = run(capsys, "variety", "identity-suite", "--n", "25", "--maxlen", "8", "--seed", "42")
    assert code == 0
    assert "verdict: Pass" in out
    code, out, _ = run(
        capsys, "variety", "identity-suite", "--n", "10", "--maxlen", "8", "--seed", "42",
        "--poly", "X1*X2 - X3",
    )
    assert code == 1
    assert "verdict: Fail" in out


def test_variety_thma(capsys):
    code, out, _ = run(
        capsys, "variety", "thmA", "--gens", "a", "--minpoly", "{1}:poly: -3 1", "--point", "3,3,3"
    )
    assert code == 0
    assert "verdict: Satisfied" in out
    # missing subset polynomial: usage error naming the subset
    code, out, err = run(capsys, "variety", "thmA", "--gens", "a,b", "--minpoly", "{1}:poly: -3 1", "--point", "3,3,3")
    assert code == 2
    assert "{2}" in err


def test_verify_paper_machine_mode_and_stability(capsys):
    code1, out1, _ = run(capsys, "verify-paper", "--machine", "--seed", "11")
    code2, out2, _ = run(capsys, "verify-paper", "--machine", "--seed", "11")
    assert code1 == code2 == 0
    assert out1 == out2
    lines = out1.splitlines()
    assert len(lines) == 9
    assert all(line.endswith(": pass") for line in lines)
    assert lines[0] == "elimination: pass"


def test_verify_paper_starved_prime_bound(capsys):
    code, out, _ = run(capsys, "verify-paper", "--machine", "--prime-bound", "2")
    assert code == 1
    assert "galois: fail" in out
    assert "nonarithmeticity: fail" in out


def test_usage_errors_exit_2(capsys):
    code, _, err = run(capsys, "trace", "axb")
    assert code == 2
    assert "position 1" in err
    code, _, err = run(capsys, "trace", "a", "--point", "1,2")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_config_validation(capsys):
    code, _, err = run(capsys, "quintic", "--precision-bits", "8")
    assert code == 2
    code, _, err = run(capsys, "quintic", "--prime-bound", "1")
    assert code == 2


def test_seed_env_default(capsys, monkeypatch):
    monkeypatch.setenv("FRICKE_LAB_SEED", "99")
    code, out1, _ = run(capsys, "verify-paper", "--machine")
    monkeypatch.delenv("FRICKE_LAB_SEED")
    code2, out2, _ = run(capsys, "verify-paper", "--machine", "--seed", "99")
    assert code == code2 == 0
    assert out1 == out2
