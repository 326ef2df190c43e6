import math

import numpy as np
import pytest

from helix3 import (
    HelixParams,
    Spectrum,
    angle_lift,
    classify_form,
    classify_ratio,
    construct_canonical,
    density_report,
    period_of,
    spectrum_of,
    torus_of,
)
from helix3.classify import report_dict
from helix3.errors import DegenerateTorus, NotPeriodic

TWO_PI = 2.0 * math.pi


def test_ratio_periodic_is_rational(periodic_params):
    rc = classify_ratio(spectrum_of(periodic_params))
    assert rc.is_rational
    assert (rc.m, rc.n) == (3, 20)


def test_ratio_dense_has_no_small_period(dense_params):
    rc = classify_ratio(spectrum_of(dense_params), rel_tol=1e-9, max_den=10 ** 6)
    assert rc.verdict == "no_small_period"
    assert rc.max_denominator == 10 ** 6


def test_ratio_circle_case():
    rc = classify_ratio(spectrum_of(HelixParams(1.0, 0.0)))
    assert rc.is_rational
    assert (rc.m, rc.n) == (0, 1)


def test_ratio_scale_consistency(periodic_params, dense_params):
    rng = np.random.default_rng(50)
    for params in (periodic_params, dense_params):
        base = classify_ratio(spectrum_of(params))
        s = spectrum_of(params)
        for _ in range(10):
            c = rng.uniform(0.1, 10.0)
            scaled = Spectrum(omega1=c * s.omega1, omega2=c * s.omega2,
                              omega_sq_sum=c * c * s.omega_sq_sum)
            rc = classify_ratio(scaled)
            assert rc.verdict == base.verdict
            assert (rc.m, rc.n) == (base.m, base.n)


def test_ratio_argument_validation(periodic_params):
    s = spectrum_of(periodic_params)
    with pytest.raises(ValueError):
        classify_ratio(s, rel_tol=0.5)
    with pytest.raises(ValueError):
        classify_ratio(s, max_den=1)


def test_period_periodic(periodic_params):
    s = spectrum_of(periodic_params)
    rc = classify_ratio(s)
    assert abs(period_of(s, rc) - 24.0 * math.pi) <= 1e-12


def test_period_great_circle():
    s = spectrum_of(HelixParams(0.0, 0.0))
    assert abs(period_of(s, classify_ratio(s)) - TWO_PI) <= 1e-12


def test_period_circle():
    s = spectrum_of(HelixParams(1.0, 0.0))
    assert abs(period_of(s, classify_ratio(s)) - TWO_PI / math.sqrt(2.0)) <= 1e-12


def test_period_refused_without_rational_verdict(dense_params):
    s = spectrum_of(dense_params)
    with pytest.raises(NotPeriodic):
        period_of(s, classify_ratio(s))


def test_period_closes_curve(periodic_form):
    rng = np.random.default_rng(51)
    ts = rng.uniform(-200.0, 200.0, size=100)
    period = 24.0 * math.pi
    a = periodic_form.evaluate(ts)
    b = periodic_form.evaluate(ts + period)
    assert np.max(np.linalg.norm(a - b, axis=1)) <= 1e-9


def test_period_is_minimal(periodic_form):
    # 24*pi comes from the lowest-terms pair (3, 20); no prime divisor of
    # the period closes the curve
    ts = np.linspace(0.0, 10.0, 23)
    period = 24.0 * math.pi
    for p in (2, 3, 5):
        cand = period / p
        gap = np.max(np.linalg.norm(
            periodic_form.evaluate(ts) - periodic_form.evaluate(ts + cand), axis=1))
        assert gap > 1e-3


def test_rational_spectra_round_trip():
    # build spectra with prescribed lowest-terms ratios by inverse Vieta:
    # w1 = m*s, w2 = n*s with the scale placing them on either side of 1,
    # then kappa^2 = (1 - w1^2)(w2^2 - 1) / ... recovered from the pair
    rng = np.random.default_rng(52)
    done = 0
    while done < 20:
        m = int(rng.integers(1, 12))
        n = int(rng.integers(m + 1, 25))
        if math.gcd(m, n) != 1:
            continue
        s = rng.uniform(1.0 / n, 1.0 / m)
        w1, w2 = m * s, n * s
        if not (w1 < 1.0 < w2):
            continue
        tau = w1 * w2
        kappa_sq = w1 * w1 + w2 * w2 - tau * tau - 1.0
        if kappa_sq <= 1e-8:
            continue
        params = HelixParams(math.sqrt(kappa_sq), tau)
        spec = spectrum_of(params)
        assert abs(spec.omega1 - w1) <= 1e-10
        assert abs(spec.omega2 - w2) <= 1e-10
        rc = classify_ratio(spec)
        assert rc.is_rational and (rc.m, rc.n) == (m, n)
        period = period_of(spec, rc)
        form = construct_canonical(params)
        ts = rng.uniform(0.0, 50.0, size=20)
        gap = np.max(np.linalg.norm(
            form.evaluate(ts) - form.evaluate(ts + period), axis=1))
        assert gap <= 1e-9
        done += 1


def test_torus_radii_dense(dense_form):
    torus = torus_of(dense_form)
    assert abs(torus.r1 - math.sqrt(25.0 / 28.0)) <= 1e-12
    assert abs(torus.r2 - math.sqrt(3.0 / 28.0)) <= 1e-12
    assert abs(torus.r1 ** 2 + torus.r2 ** 2 - 1.0) <= 1e-12


def test_torus_containment_sampled(dense_form):
    torus = torus_of(dense_form)
    ts = np.linspace(0.0, 100.0, 1000)
    pts = dense_form.evaluate(ts)
    in1 = np.sum((pts @ torus.plane1.T) ** 2, axis=1)
    in2 = np.sum((pts @ torus.plane2.T) ** 2, axis=1)
    assert np.max(np.abs(in1 - torus.r1 ** 2)) <= 1e-10
    assert np.max(np.abs(in2 - torus.r2 ** 2)) <= 1e-10


def test_torus_rejects_degenerate():
    form = construct_canonical(HelixParams(1.0, 0.0))
    with pytest.raises(DegenerateTorus):
        torus_of(form)


def test_angle_lift_origin(dense_form):
    theta1, theta2 = angle_lift(dense_form, 0.0)
    assert abs(theta1) <= 1e-12
    assert abs(theta2) <= 1e-12


def test_angle_lift_advances_linearly(dense_form):
    w1, w2 = dense_form.spectrum.omega1, dense_form.spectrum.omega2
    rng = np.random.default_rng(53)
    ts = rng.uniform(0.0, 200.0, size=50)
    theta1, theta2 = angle_lift(dense_form, ts)
    for theta, w in ((theta1, w1), (theta2, w2)):
        delta = np.mod(theta - w * ts, TWO_PI)
        dist = np.minimum(delta, TWO_PI - delta)
        assert np.max(dist) <= 1e-10


def test_angle_lift_linear_regression(dense_form):
    w1, w2 = dense_form.spectrum.omega1, dense_form.spectrum.omega2
    ts = np.linspace(0.0, 40.0, 4000)
    theta1, theta2 = angle_lift(dense_form, ts)
    for theta, w in ((np.unwrap(theta1), w1), (np.unwrap(theta2), w2)):
        slope, intercept = np.polyfit(ts, theta, 1)
        residual = np.max(np.abs(theta - (slope * ts + intercept)))
        assert abs(slope - w) <= 1e-9
        assert residual <= 1e-9


def test_angle_lift_closes_after_period(periodic_form):
    t = 24.0 * math.pi
    t0_angles = np.array(angle_lift(periodic_form, 0.0))
    t1_angles = np.array(angle_lift(periodic_form, t))
    delta = np.mod(t1_angles - t0_angles, TWO_PI)
    dist = np.minimum(delta, TWO_PI - delta)
    assert np.max(dist) <= 1e-9


def test_density_dense_full_occupancy(dense_form):
    # frozen from the oracle simulation run: t_max=5e3, bins=16 fills
    # every cell for these parameters (already full by t_max=1e3)
    rep = density_report(dense_form, t_max=5e3, bins=16)
    assert rep.occupancy == 1.0
    assert rep.largest_gap == 0.0


def test_density_single_bin(dense_form):
    rep = density_report(dense_form, t_max=10.0, bins=1)
    assert rep.occupancy == 1.0


def test_density_periodic_adds_no_new_territory(periodic_form):
    period = 24.0 * math.pi
    offsets = np.linspace(0.0, period, 400, endpoint=False)
    first = np.array(angle_lift(periodic_form, offsets))
    second = np.array(angle_lift(periodic_form, offsets + period))
    delta = np.mod(second - first, TWO_PI)
    dist = np.minimum(delta, TWO_PI - delta)
    assert np.max(dist) <= 1e-9


def test_density_rejects_degenerate():
    form = construct_canonical(HelixParams(2.0, 0.0))
    with pytest.raises(DegenerateTorus):
        density_report(form, t_max=10.0, bins=4)


def test_classification_report_schema(periodic_form, dense_form):
    rep = report_dict(classify_form(periodic_form, density_t_max=200.0))
    assert rep["verdict"] == "rational"
    assert (rep["m"], rep["n"]) == (3, 20)
    assert abs(rep["period"] - 24.0 * math.pi) <= 1e-12
    assert abs(rep["ratio_inverse"] - 20.0 / 3.0) <= 1e-12
    for key in ("verdict", "m", "n", "period", "r1", "r2", "occupancy", "largest_gap"):
        assert key in rep

    rep = report_dict(classify_form(dense_form, density_t_max=None))
    assert rep["verdict"] == "no_small_period"
    assert rep["period"] is None
    assert rep["occupancy"] is None


def test_classification_great_circle():
    gc = classify_form(construct_canonical(HelixParams(0.0, 0.0)))
    assert gc.ratio_class.is_rational
    assert abs(gc.period - TWO_PI) <= 1e-12
    assert gc.torus is None
    assert gc.density is None
