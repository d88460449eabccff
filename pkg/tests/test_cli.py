import io
import json
import subprocess
import sys

import pytest

from cbs.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_seq_b_plain():
    assert run("seq", "b", "--max-n", "2", "--format", "plain") == (0, "0 1\n1 2\n2 4\n")


def test_seq_zeta_json():
    code, text = run("seq", "zeta", "--max-n", "1", "--format", "json")
    assert code == 0
    recs = [json.loads(line) for line in text.splitlines()]
    assert [r["rational_part"] for r in recs] == ["1/3", "2/3"]
    assert [r["pi_sqrt3_part"] for r in recs] == ["2/9", "2/9"]
    assert all(r["kind"] == "zeta" for r in recs)


def test_seq_a_csv():
    assert run("seq", "a", "--max-n", "0", "--format", "csv") == (0, "0,1\n")


def test_seq_polybernoulli():
    code, text = run("seq", "polybernoulli", "--max-n", "2")
    assert code == 0
    assert text.splitlines() == ["0 0 1", "1 0 1", "0 -1 1", "2 0 1", "1 -1 2", "0 -2 1"]


def test_seq_negative_max_n():
    assert run("seq", "b", "--max-n", "-1")[0] == 2


def test_poly_q():
    assert run("poly", "q", "2") == (0, "2 [1, 10, 4]\n")


def test_poly_p_minus_one_is_empty():
    assert run("poly", "p", "-1") == (0, "-1 []\n")


def test_poly_F_monomials():
    code, text = run("poly", "F", "3", "--format", "json")
    assert code == 0
    terms = {(r["x_exp"], r["y_exp"]): r["coeff"] for r in map(json.loads, text.splitlines())}
    assert terms == {(0, 3): "1", (1, 2): "3", (2, 1): "1", (1, 1): "1"}


def test_poly_F_brute_matches():
    assert run("poly", "F", "4", "--brute") == run("poly", "F", "4")


def test_poly_F_with_y():
    code, text = run("poly", "F", "2", "--y", "1/2", "--format", "json")
    assert json.loads(text)["coeffs"] == ["1/4", "1/2"]


def test_poly_F_bad_y():
    assert run("poly", "F", "2", "--y", "one-half")[0] == 2


def test_poly_seulerian():
    assert run("poly", "sEulerian", "--bounds", "1,2,3") == (0, "3 [1, 4, 1]\n")


def test_poly_guards_exit_3():
    assert run("poly", "sEulerian", "--bounds", "100,100,100,100")[0] == 3
    assert run("poly", "F", "10", "--brute")[0] == 3


def test_poly_usage_errors():
    assert run("poly", "q", "-2")[0] == 2
    assert run("poly", "q")[0] == 2
    assert run("poly", "sEulerian")[0] == 2


def test_verify_stephan():
    code, text = run("verify", "--suite", "stephan", "--max-n", "25")
    assert code == 0
    assert all(json.loads(line)["passed"] for line in text.splitlines())


def test_verify_all():
    code, text = run("verify", "--suite", "all", "--max-n", "15", "--seed", "5", "--tolerance", "1e-10")
    assert code == 0
    assert {json.loads(line)["suite"] for line in text.splitlines()} >= {"stephan", "keyeq", "numeric_egf"}


def test_verify_failure_exit_1():
    assert run("verify", "--suite", "numeric_zeta", "--max-n", "3", "--tolerance", "0")[0] == 1


def test_verify_unknown_suite():
    assert run("verify", "--suite", "nosuch")[0] == 2


def test_verify_is_byte_identical():
    a = run("verify", "--suite", "all", "--max-n", "8")
    b = run("verify", "--suite", "all", "--max-n", "8")
    assert a == b


def test_eval_lehmer():
    code, text = run("eval", "lehmer", "--k", "-1", "--x", "0.3", "--terms", "60", "--format", "json")
    assert code == 0
    rec = json.loads(text)
    assert float(rec["abs_diff"]) < 1e-12


def test_eval_Q_at_zero():
    assert run("eval", "Q", "--x", "0.2", "--t", "0") == (0, "closed_form=1.0 series=1.0 abs_diff=0.0\n")


def test_eval_dirichlet():
    from cbs.lehmer import zeta_cb_neg

    code, text = run("eval", "dirichlet", "--k", "2", "--terms", "60", "--format", "json")
    rec = json.loads(text)
    assert abs(float(rec["series"]) - float(zeta_cb_neg(2))) < 1e-9


@pytest.mark.parametrize(
    "argv",
    [
        ("eval", "lehmer", "--k", "1", "--x", "1.5"),
        ("eval", "aegf", "--t", "2"),
        ("eval", "P", "--x", "0", "--t", "0.1"),
        ("eval", "dirichlet", "--k", "-1"),
        ("eval", "lehmer", "--k", "1"),
        ("eval", "Q", "--x", "0.2", "--t", "0.1", "--terms", "0"),
    ],
)
def test_eval_domain_errors(argv, capsys):
    assert run(*argv)[0] == 2
    assert "cbs: error" in capsys.readouterr().err


def test_formats_carry_identical_values():
    plain = run("seq", "zeta", "--max-n", "4", "--format", "plain")[1].splitlines()
    csv = run("seq", "zeta", "--max-n", "4", "--format", "csv")[1].splitlines()
    js = [json.loads(line) for line in run("seq", "zeta", "--max-n", "4", "--format", "json")[1].splitlines()]
    for p, c, j in zip(plain, csv, js):
        values = [str(j["index"]), j["rational_part"], j["pi_sqrt3_part"]]
        assert p.split() == c.split(",") == values


def test_eval_formats_agree():
    plain = run("eval", "aegf", "--t", "0.2")[1]
    js = json.loads(run("eval", "aegf", "--t", "0.2", "--format", "json")[1])
    parsed = dict(kv.split("=") for kv in plain.split())
    assert parsed == {k: js[k] for k in ("closed_form", "series", "abs_diff")}


def test_bad_subcommand_exit_2():
    assert run("frobnicate")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cbs", "seq", "b", "--max-n", "3"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout == "0 1\n1 2\n2 4\n3 10\n"
