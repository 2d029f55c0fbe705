from fractions import Fraction

import pytest

import mrba


def test_eval_text_and_json():
    e = mrba.Engine()
    assert e.eval("P(a)*P(b)") == "P(P(a)*b) + P(a*P(b)) - 1 ab"
    assert e.eval_json("P(a)") == {"terms": [{"coeff": "1/1", "word": [{"bracket": [{"letter": "a"}]}]}]}


def test_coalgebra_operations():
    e = mrba.Engine(lam="2")
    assert e.counit("P(1)") == Fraction(-2)
    assert e.antipode("P(1)") == "-4 - 1 P(1)"
    assert e.coproduct("a") == "1 (x) a + a (x) 1"
    assert e.degree("P(a)*b") == 3
    assert e.lam == 2 and e.kappa == -4 and e.is_hopf


def test_algebra_only_weight():
    e = mrba.Engine(kappa="3")
    assert not e.is_hopf
    assert e.eval("P(a)*P(b)") == "P(P(a)*b) + P(a*P(b)) + 3 ab"
    assert e.mrb_residual("P(a)*b", "a + 1/2") == "0"
    with pytest.raises(ValueError, match="kappa"):
        e.counit("P(1)")


def test_errors():
    e = mrba.Engine()
    with pytest.raises(mrba.ParseError, match="offset 3"):
        e.eval("P(a")
    with pytest.raises(ValueError):
        mrba.Engine(alphabet="aa")


def test_check_suites():
    results = mrba.Engine(lam="1/2").check("all", seed=3, cases=10)
    assert [r["name"] for r in results][:3] == ["assoc", "mrb", "oracle"]
    assert all(r["passed"] for r in results)


def test_run_cli():
    code, out, err = mrba.run_cli(["counit", "P(1)", "--lambda", "2"])
    assert (code, out, err) == (0, "-2\n", "")
    code, _, err = mrba.run_cli(["eval", "P(a"])
    assert code == 2 and "offset 3" in err
