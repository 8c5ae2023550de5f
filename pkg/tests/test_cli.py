"""Command-line behaviour: exit codes, JSON schema, determinism."""

import io
import json

from ffmzv.cli import parse_poly, parse_ratfunc, run
from ffmzv import RatFunc, field


def run_cli(argv):
    out = io.StringIO()
    code = run(argv, out=out)
    return code, out.getvalue()


def test_eval_ok_and_parse_error():
    code, text = run_cli(["eval", "--q", "2", "--family", "li",
                          "--index", "(1,1)", "--prec", "20"])
    assert code == 0
    assert "T^-2" in text
    code, _ = run_cli(["eval", "--q", "2", "--family", "li", "--index", "(bad"])
    assert code == 2
    code, _ = run_cli(["eval", "--q", "2", "--family", "li", "--index", "(0)"])
    assert code == 2


def test_bad_flags_exit_2(capsys):
    code, _ = run_cli(["eval", "--q", "2", "--family", "nosuch", "--index", "()"])
    assert code == 2
    code, _ = run_cli(["nosuchcommand"])
    assert code == 2


def test_verify_fundamental_exit_zero():
    code, text = run_cli(["verify", "--suite", "fundamental", "--q", "2", "--max-d", "4"])
    assert code == 0
    assert text.count("[pass") == 5


def test_internal_error_exit_3():
    code, text = run_cli(["eval", "--q", "2", "--family", "zeta", "--index", "(3)",
                          "--prec", "200", "--budget", "64"])
    assert code == 3
    assert "PrecisionTooExpensive" in text


def test_reduction_cap_exit_3():
    code, text = run_cli(["reduce", "--q", "2", "--family", "li",
                          "--index", "(5,5)", "--cap", "1"])
    assert code == 3
    assert "ReductionDiverged" in text


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("FFMZV_BUDGET", "64")
    code, _ = run_cli(["eval", "--q", "2", "--family", "zeta", "--index", "(3)",
                       "--prec", "200", "--budget", str(1 << 30)])
    assert code == 3
    monkeypatch.delenv("FFMZV_BUDGET")


def test_conjecture_observation_never_fails():
    code, text = run_cli(["conjecture", "--q", "2", "--index", "(1,2)"])
    assert code == 0
    assert "observation" in text


def test_conjecture_weight_sweep():
    code, text = run_cli(["conjecture", "--q", "2", "--max-weight", "3"])
    assert code == 0
    assert text.count("[observation]") == 1 + 1 + 2 + 4


def test_iota_command():
    code, text = run_cli(["iota", "--q", "2", "--weight", "6",
                          "--check", "involution,nontrivial"])
    assert code == 0
    assert "quotient dimension 3" in text


def test_depend_command(tmp_path):
    path = tmp_path / "dep.json"
    code, _ = run_cli(["depend", "--q", "2", "--values", "li:(2);li:(1,1)",
                       "--deg-bound", "2", "--prec", "30", "--json", str(path)])
    assert code == 0
    data = json.loads(path.read_text())
    assert data["check"] == "depend"
    assert any("T^2+T" in c["detail"] for c in data["cases"])


def test_depend_with_literal_value():
    code, text = run_cli(["depend", "--q", "2", "--prec", "30", "--deg-bound", "1",
                          "--values", "li:(2);(T^2+T)/(1)"])
    assert code == 0


def test_json_schema_and_determinism(tmp_path):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["verify", "--suite", "theorem", "--q", "2", "--max-weight", "3", "--json"]
    assert run_cli(argv + [str(p1)])[0] == 0
    assert run_cli(argv + [str(p2)])[0] == 0
    d1, d2 = json.loads(p1.read_text()), json.loads(p2.read_text())
    for d in (d1, d2):
        assert set(d) == {"check", "params", "cases", "summary", "version", "elapsed_ms"}
        assert d["summary"]["fail"] == 0
        assert d["summary"]["pass"] == len([c for c in d["cases"] if c["status"] == "pass"])
        for c in d["cases"]:
            assert set(c) == {"input", "status", "detail"}
    d1.pop("elapsed_ms")
    d2.pop("elapsed_ms")
    assert d1 == d2


def test_product_and_reduce_commands():
    code, text = run_cli(["product", "--q", "3", "--kind", "qshuffle",
                          "--left", "(1)", "--right", "(1)"])
    assert code == 0 and "2*(1,1) + (2)" in text
    code, text = run_cli(["reduce", "--q", "2", "--family", "li", "--index", "(2)"])
    assert code == 0 and "(T^2+T)*(1,1)" in text


def test_charzero_commands():
    code, text = run_cli(["charzero", "--check", "duality", "--index", "(2,4)",
                          "--terms", "50000"])
    assert code == 0
    code, text = run_cli(["charzero", "--check", "prodsum", "--index", "(2,3)",
                          "--terms", "50000"])
    assert code == 0
    code, text = run_cli(["charzero", "--check", "example45", "--terms", "50000"])
    assert code == 0 and "zeta(3)^2" in text


def test_extension_field_flags():
    code, text = run_cli(["eval", "--q", "4", "--family", "li", "--index", "(1)",
                          "--prec", "12"])
    assert code == 0
    code, text = run_cli(["eval", "--p", "5", "--e", "2", "--modulus", "2,0,1",
                          "--family", "li", "--index", "(1)", "--prec", "8"])
    assert code == 0


def test_poly_literal_parser():
    F4 = field(4)
    p = parse_poly(F4, "T^2+u*T+1")
    assert str(p) == "T^2+u*T+1"
    p = parse_poly(F4, "(u+1)*T^3+u^2")
    assert p.coeff(3) == F4.gen + F4.one
    F3 = field(3)
    assert parse_poly(F3, "T^2-T") == F3.poly([0, -1, 1])
    r = parse_ratfunc(F3, "(T+1)/(T^2)")
    assert r == RatFunc(F3.poly([1, 1]), F3.poly([0, 0, 1]))
    assert parse_ratfunc(F3, "2") == RatFunc.of(F3.poly([2]), F3)
