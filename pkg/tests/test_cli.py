import json
import random
import subprocess
import sys

import pytest
from hypothesis import given, settings

from conftest import elements
from qaffine.cli import main
from qaffine.cli.parser import Bracket, Gen, Num, ParseError, Power, Product, QPow, Sum, parse, parse_element
from qaffine.cli.render import render
from qaffine.coproduct import delta_closed
from qaffine.pbw import Element, K, c_half, element_text, h, word_element, x, y
from qaffine.scalar import LaurentPoly, ScalarQ, q_int
from qaffine.tensor import TensorElement, tensor_of
from qaffine.verify import random_element


def test_parse_examples():
    assert parse("[h[1], x[0]]") == Bracket(Gen("h", 1), Gen("x", 0))
    node = parse("q^-1 * x[2]^2 + K")
    assert node == Sum(((1, Product((("*", QPow(-1)), ("*", Power(Gen("x", 2), 2))))), (1, Gen("K"))))


@pytest.mark.parametrize(
    "src,message,offset",
    [
        ("h[0]", "h-index must be nonzero", 2),
        ("psi[-1]", "psi index must be >= 0", 4),
        ("phi[2]", "phi index must be <= 0", 4),
        ("x[1] +", "unexpected end of input", 6),
        ("x[1] $ y[0]", "unexpected character '$'", 5),
        ("z[1]", "unknown symbol 'z'", 0),
        ("[x[0] y[0]]", "expected ','", 10),
        ("x[0]^-1", "exponent must be a nonnegative integer", 5),
    ],
)
def test_parse_errors_carry_offsets(src, message, offset):
    with pytest.raises(ParseError) as info:
        parse(src)
    assert info.value.message.startswith(message)
    assert info.value.offset == offset


def test_eval_examples():
    assert parse_element("K*Kinv") == Element.one()
    assert parse_element("[h[1],x[0]]") == (c_half(-1) * x(1)).scale(q_int(2))
    assert parse_element("y[0]*x[1]") == x(1) * y(0) - c_half(1) * h(1) * K(1)
    assert parse_element("y[0] x[1]") == parse_element("y[0]*x[1]")
    assert parse_element("2 q^2 c2[3]") == c_half(3).scale(LaurentPoly.monomial(2, 2))


def test_division_only_by_scalars():
    assert parse_element("(q)/(q^2 - 1)*K") == K(1).scale(ScalarQ(LaurentPoly.monomial(1), LaurentPoly({2: 1, 0: -1})))
    with pytest.raises(ValueError):
        parse_element("x[0]/x[1]")
    with pytest.raises(ValueError):
        parse_element("x[0]/(q - q)")


def test_render_examples():
    t = tensor_of(x(0), K(1))
    assert render(t, "text") == "x[0] (x) K"
    assert render(Element.zero(), "text") == "0"
    assert render(Element.zero(), "latex") == "0"
    assert "\\otimes" in render(delta_closed("x", 1), "latex")
    assert render(parse_element("psi[1]"), "latex") == "\\left(q - q^{-1}\\right) h_{1} K"
    with pytest.raises(ValueError):
        render(t, "yaml")


def test_json_render_round_trips_through_schema():
    d = delta_closed("x", 1)
    assert TensorElement.from_json(json.loads(render(d, "json"))) == d


@settings(max_examples=150, deadline=None)
@given(elements)
def test_text_round_trip(a):
    assert parse_element(element_text(a)) == a


def test_text_round_trip_with_rational_coefficients():
    rng = random.Random(5)
    for _ in range(50):
        a = random_element(rng)
        den = ScalarQ(LaurentPoly({rng.randint(-2, 2): 1, rng.randint(3, 4): rng.choice([-3, 2])}))
        a = a.scale(ScalarQ(1) / den)
        assert parse_element(element_text(a)) == a


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_normalize(capsys):
    code, out, _ = run(["normalize", "--expr", "y[0]*x[1]"], capsys)
    assert code == 0 and out.strip() == "x[1]*y[0] - c2[1]*h[1]*K"
    code, out, _ = run(["--format", "json", "normalize", "--expr", "K"], capsys)
    assert Element.from_json(json.loads(out)) == K(1)


def test_cli_parse_error_exit_code(capsys):
    code, _, err = run(["normalize", "--expr", "h[0]"], capsys)
    assert code == 2 and "offset 2" in err and "h-index must be nonzero" in err


def test_cli_usage_errors(capsys):
    code, _, err = run(["frobnicate"], capsys)
    assert code == 2 and "usage" in err
    code, _, err = run(["verify", "--suite", "hopf", "--bogus"], capsys)
    assert code == 2 and "usage" in err
    code, _, _ = run(["coproduct", "--family", "psi", "--index", "-1"], capsys)
    assert code == 2


def test_cli_coproduct_methods_agree(capsys):
    _, closed, _ = run(["coproduct", "--family", "x", "--index", "-2", "--method", "closed", "--format", "json"], capsys)
    _, rec, _ = run(["coproduct", "--family", "x", "--index", "-2", "--method", "recursive", "--format", "json"], capsys)
    assert closed == rec


def test_cli_c_coeff(capsys):
    code, out, _ = run(["c-coeff", "--tuple", "1,1,2", "--method", "closed"], capsys)
    assert code == 0
    code, out2, _ = run(["c-coeff", "--tuple", "1,1,2", "--method", "recursive"], capsys)
    assert out == out2
    code, _, _ = run(["c-coeff", "--tuple", "2,1"], capsys)
    assert code == 2


def test_cli_power(capsys):
    code, out, _ = run(["power", "--kind", "X0plus", "--n", "2", "--order", "2"], capsys)
    assert code == 0 and "(q^2 + 1)*x[0]*x[2]" in out


def test_cli_verify_pass_and_json(capsys):
    code, out, _ = run(["verify", "--suite", "lemma9", "--max-index", "2", "--order", "2", "--format", "json"], capsys)
    assert code == 0 and json.loads(out)["passed"] is True


def test_cli_verify_failure_exit_code(capsys, monkeypatch):
    import qaffine.verify as V

    real = V.delta_closed
    monkeypatch.setattr(V, "delta_closed", lambda fam, n, reading="printed": real(fam, n, "printed"))
    code, out, _ = run(["verify", "--suite", "corollary7", "--max-index", "2"], capsys)
    assert code == 1 and "FAIL Delta(y_2)" in out


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "qaffine", "normalize", "--expr", "[x[0], y[0]]"], capture_output=True, text=True
    )
    assert res.returncode == 0
    assert res.stdout.strip() == "(-q)/(q^2 - 1)*Kinv + (q)/(q^2 - 1)*K"
