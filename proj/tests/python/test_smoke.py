"""Smoke tests for the python bindings."""

import math

import pytest

import holeburn as hb


def spec(family, engineering=hb.Engineering.NONE, **kwargs):
    return hb.StateSpec(family, engineering, **kwargs)


def test_even_coherent_state_basics():
    ecs = spec(hb.Family.EVEN_COHERENT, alpha=1.0)
    v = hb.build_state(ecs)
    assert abs(v.norm() - 1.0) < 1e-12
    assert v.tail_bound < 1e-12
    assert v.probability(0) == pytest.approx(1.0 / math.cosh(1.0), abs=1e-12)
    assert v.probability(1) == 0.0
    assert hb.mean_photon_number(v) == pytest.approx(math.tanh(1.0), abs=1e-12)
    assert hb.analytic_moment(ecs, 1, 1).real == pytest.approx(math.tanh(1.0), abs=1e-12)


def test_engineered_states_have_a_vacuum_hole():
    for family, kwargs in [
        (hb.Family.EVEN_COHERENT, dict(alpha=1.2)),
        (hb.Family.BINOMIAL, dict(p=0.4, m=10)),
        (hb.Family.KERR, dict(alpha=1.0, chi=0.02)),
    ]:
        for eng in (hb.Engineering.VACUUM_FILTERED, hb.Engineering.PHOTON_ADDED):
            v = hb.build_state(spec(family, eng, **kwargs))
            assert v.probability(0) == 0.0


def test_witness_reports():
    pabs = spec(hb.Family.BINOMIAL, hb.Engineering.PHOTON_ADDED, p=0.3, m=10)
    table = hb.analytic_moment_table(pabs, 4, 4)
    report = hb.higher_order_antibunching(table, 1)
    assert report.kind == "hoa"
    assert report.nonclassical
    assert report.formula_value == pytest.approx(report.oracle_value)

    state = hb.build_state(pabs, pad=12)
    squeeze = hb.hong_mandel_squeezing(hb.analytic_moment_table(pabs, 6, 6), state, 2)
    assert not squeeze.discrepancy
    assert "double-factorial" in squeeze.note


def test_linear_entropy_values():
    one = hb.photon_add(hb.build_state(spec(hb.Family.BINOMIAL, p=0.0, m=0)))
    assert hb.linear_entropy(one) == pytest.approx(0.5, abs=1e-12)
    coherent = hb.coherent_state(1.0)
    assert hb.linear_entropy(coherent) < 1e-10
    vfecs = spec(hb.Family.EVEN_COHERENT, hb.Engineering.VACUUM_FILTERED, alpha=1.0)
    closed = hb.linear_entropy_closed_form(vfecs)
    numeric = hb.linear_entropy(hb.build_state(vfecs))
    assert closed == pytest.approx(numeric, abs=1e-9)


def test_normalization_constants():
    vfecs = spec(hb.Family.EVEN_COHERENT, hb.Engineering.VACUUM_FILTERED, alpha=1.0)
    assert hb.summed_normalization(vfecs) == pytest.approx(
        hb.derived_normalization(vfecs), rel=1e-12
    )
    assert hb.published_normalization(vfecs) != pytest.approx(
        hb.derived_normalization(vfecs), rel=1e-3
    )
    pabs = spec(hb.Family.BINOMIAL, hb.Engineering.PHOTON_ADDED, p=0.3, m=10)
    assert hb.published_normalization(pabs) == pytest.approx((1 + 10 * 0.3) ** -0.5, rel=1e-12)


def test_invalid_parameters_raise():
    with pytest.raises(ValueError):
        hb.build_state(spec(hb.Family.BINOMIAL, p=1.5, m=10))
    with pytest.raises(ValueError):
        hb.build_state(spec(hb.Family.EVEN_COHERENT, hb.Engineering.VACUUM_FILTERED, alpha=0.0))


def test_sweep_csv_deterministic():
    pabs = spec(hb.Family.BINOMIAL, hb.Engineering.PHOTON_ADDED, p=0.3, m=10)
    first = hb.sweep_csv(pabs, "p", 0.05, 0.95, 13, "hoa", [1], threads=4)
    second = hb.sweep_csv(pabs, "p", 0.05, 0.95, 13, "hoa", [1], threads=1)
    assert first == second
    assert first.splitlines()[0] == "p,hoa1_formula,hoa1_oracle,hoa1_nonclassical,status"
    assert len(first.splitlines()) == 14


def test_reproduce_figure(tmp_path):
    csv_path = hb.reproduce("fig5d", tmp_path, curve_points=5)
    assert csv_path.exists()
    manifest = tmp_path / "fig5d_manifest.json"
    assert manifest.exists()
    assert "fig5d" in hb.known_figures()


def test_special_functions():
    assert hb.pochhammer(0.5, 2) == pytest.approx(0.75)
    assert hb.double_factorial(-1) == 1.0
    assert hb.stirling2(4, 2) == 7
