import json

import pytest

import qaffine.verify as V
from qaffine.pbw import x
from qaffine.scalar import LaurentPoly
from qaffine.series import gen_series


def test_every_suite_runs_and_passes_at_small_size():
    small = {
        "lemma4": dict(max_index=2, order=3),
        "drinrel": dict(order=2),
        "theorem5": dict(order=2),
        "theorem6": dict(max_index=2, order=3),
        "lemma7": dict(max_index=2, order=3),
        "lemma9": dict(max_index=3, order=3),
        "corollary7": dict(max_index=2),
        "hopf": dict(max_index=1),
        "morphisms": dict(max_index=1),
    }
    assert set(small) == set(V.SUITES)
    for name, kw in small.items():
        rep = V.run_suite(name, **kw)
        assert rep.passed, rep.summary()
        assert rep.cases > 0


def test_unknown_suite():
    with pytest.raises(ValueError):
        V.run_suite("nonsense")


def test_lemma4_single_identity_examples():
    assert V.verify_lemma4(3, n_max=1, D=3).passed
    assert V.verify_lemma4(10, D=3).passed
    lhs, rhs = V._lemma4_case(1, 0, 3)
    assert lhs.coeffs == {} and rhs.coeffs == {}


def test_drinrel_trivial_window():
    assert V.verify_drinrel(0).passed


def test_theorem5_lowest_coefficient_is_seed():
    lhs, _ = V._theorem5_sides(1, 1)
    assert lhs.coefficient(0) == V.delta_seed("x0")


def test_check_series_reports_first_differing_exponent():
    rep = V.VerificationReport("t")
    a = gen_series("X0plus", 3)
    b = a + V._const(x(7)).shift_z(-2)
    assert not rep.check_series("shifted", a, b)
    assert rep.failures[0].case == "shifted [z^-2]"
    assert "x[7]" in rep.failures[0].first_difference


def test_report_json_is_serializable():
    rep = V.verify_lemma9(2, 2)
    data = json.loads(json.dumps(rep.to_json()))
    assert data["suite"] == "lemma9" and data["passed"] is True
    assert set(data) == {"suite", "params", "passed", "cases", "failures", "notes"}


def test_mutated_closed_coefficient_is_caught(monkeypatch):
    real = V.c_coeff_closed
    monkeypatch.setattr(V, "c_coeff_closed", lambda t: real(t) * LaurentPoly.monomial(len(t) - 1))
    rep = V.verify_lemma9(3, 3)
    assert not rep.passed
    assert rep.failures[0].first_difference


def test_printed_y_formula_is_caught(monkeypatch):
    real = V.delta_closed
    monkeypatch.setattr(V, "delta_closed", lambda fam, n, reading="printed": real(fam, n, "printed"))
    rep = V.verify_corollary7(2)
    assert not rep.passed
    assert [f.case for f in rep.failures] == ["Delta(y_2)"]


def test_mutated_power_is_caught(monkeypatch):
    real = V.power_closed
    monkeypatch.setattr(V, "power_closed", lambda kind, n, D: real(kind, n, D).scale(2) if n == 3 else real(kind, n, D))
    assert not V.verify_theorem6(3, 3).passed


def test_mutated_seed_is_caught(monkeypatch):
    real = V.delta_recursive

    def broken(fam, n):
        d = real(fam, n)
        return d.scale(LaurentPoly.monomial(1)) if (fam, n) == ("x", 1) else d

    monkeypatch.setattr(V, "delta_recursive", broken)
    assert not V.verify_corollary7(1).passed


def test_morphism_notes_record_commutation_of_alpha_and_beta():
    rep = V.verify_morphisms(seed=1, cases=5, max_index=1)
    assert rep.passed
    assert any("report only" in n for n in rep.notes)


def test_suites_are_deterministic():
    a = V.verify_morphisms(seed=4, cases=5, max_index=0).to_json()
    b = V.verify_morphisms(seed=4, cases=5, max_index=0).to_json()
    assert a == b
