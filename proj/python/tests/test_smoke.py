"""Smoke tests for the Python bindings: a quick pass over every exported
operation, with the heavier numerics left to the C++ suites."""

import math

import pytest

import groupopt as go


def test_family_registry_and_construction():
    names = go.family_names()
    for expected in ("yunus", "power", "logpow", "xlnx", "lnln", "combo", "exp"):
        assert expected in names

    fam = go.make_family("yunus", {"p": 0.5})
    assert fam.name == "yunus"
    assert fam.x_min == pytest.approx(2.0)
    assert fam.f(math.e**2) == pytest.approx(math.e + 4.0)

    with pytest.raises(ValueError):
        go.make_family("yunus", {"p": 1.5})
    with pytest.raises(ValueError):
        go.make_family("unknown", {})


def test_analysis_surface():
    fam = go.make_family("yunus", {"p": 0.5})
    assert go.default_prob(fam, 5.0) == pytest.approx(0.2071955547, abs=1e-9)
    assert go.bracket_fn(fam, math.e) == pytest.approx(-0.17563936, abs=1e-7)
    value, terms, bound = go.stationarity_series(0.3)
    assert value == pytest.approx(go.stationarity_series_closed(0.3), abs=1e-12)
    assert terms > 1
    assert bound <= 1e-13
    assert go.lambert_w(math.e) == pytest.approx(1.0)


def test_optimize_endpoints():
    opt = go.optimize(go.make_family("yunus", {"p": 0.5}))
    assert opt["x_star"] == pytest.approx(5.13, abs=0.01)
    assert opt["k_star"] == 5
    assert opt["method_agreement"] < 1e-6

    opt = go.optimize(go.make_family("yunus", {"p": 1.0}))
    assert opt["x_star"] == pytest.approx(4.62, abs=0.01)
    assert opt["k_star"] == 5


def test_certificates():
    cert = go.verify_conditions(go.make_family("power", {"r": 2.0}))
    assert cert["branch"] == "none"
    assert cert["a"] is None

    cert = go.verify_conditions(go.make_family("yunus", {"p": 0.5}))
    assert cert["branch"] == "concave"
    assert cert["a"] < cert["b"]

    with pytest.raises(ValueError):
        go.optimize(go.make_family("power", {"r": 2.0}))


def test_sweep_and_narrow():
    rows = go.sweep("yunus", "p", 0.5, 0.51, 0.005)
    assert len(rows) == 3
    assert all(r["certified"] for r in rows)
    assert all(r["k_star_rounded"] == 5 for r in rows)

    res = go.narrow_interval("yunus", "p", 0.5, 1.0, 0.001)
    assert res["x_lo"] == pytest.approx(3.4)
    assert res["x_hi"] == pytest.approx(5.2)


def test_simulation_and_brute_force():
    fam = go.make_family("yunus", {"p": 0.5})
    sim = go.simulate_group(fam, 5, trials=100_000, seed=11)
    again = go.simulate_group(fam, 5, trials=100_000, seed=11)
    assert sim == again
    assert abs(sim["z"]) < 5.0
    assert sim["analytic"] == pytest.approx(go.analytic_group_prob(fam, 5))

    k, p = go.brute_force_integer_argmax(fam, 2, 20)
    assert k == 5
    assert p == pytest.approx(0.3132062, abs=1e-6)


def test_appendix_checks():
    rep = go.appendix_b_checks(101)
    assert rep["all_ok"]
    assert rep["p_star_analytic"] == pytest.approx(0.772883, abs=1e-5)
