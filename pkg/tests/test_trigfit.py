import math

import numpy as np
import pytest

from helix3 import (
    HelixParams,
    TrigSum,
    averaging_bound,
    construct_canonical,
    extract_coefficient,
    fit_lissajous,
    reconstruction_residual,
    sample_closed_form,
    sample_frenet_frames,
    spectrum_of,
)
from helix3.errors import InsufficientSpan, SpectrumMismatch
from helix3.samples import CurveSamples

E = np.eye(4)


def _samples_of(fn, t_max, dt):
    ts = np.arange(0.0, t_max + dt / 2.0, dt)
    return CurveSamples(t0=0.0, dt=dt, points=fn(ts))


def test_trig_sum_rejects_unsorted_frequencies():
    with pytest.raises(ValueError):
        TrigSum(frequencies=(2.0, 1.0), cos_coeffs=np.zeros((2, 4)),
                sin_coeffs=np.zeros((2, 4)))


def test_trig_sum_zeroes_invisible_sin_coefficient():
    ts = TrigSum(frequencies=(0.0, 1.0),
                 cos_coeffs=np.ones((2, 4)), sin_coeffs=np.ones((2, 4)))
    assert np.array_equal(ts.sin_coeffs[0], np.zeros(4))


def test_extract_two_tone():
    # f(t) = 2 cos(0.5 t) e1 + 3 sin(2.5 t) e2; competing gaps for alpha=0.5
    # are 1.0 (to -0.5) and 2.0 (to 2.5), so the bound is 2*5/(1e4*1) = 1e-3
    def f(ts):
        return (np.multiply.outer(2.0 * np.cos(0.5 * ts), E[0])
                + np.multiply.outer(3.0 * np.sin(2.5 * ts), E[1]))

    samples = _samples_of(f, t_max=1e4, dt=0.25)
    cos_part, sin_part = extract_coefficient(samples, 0.5, min_gap=1.0)
    assert np.linalg.norm(cos_part - 2.0 * E[0]) <= 1e-2
    assert np.linalg.norm(sin_part) <= 1e-2


def test_extract_zero_signal():
    samples = _samples_of(lambda ts: np.zeros(ts.shape + (4,)), 200.0, 0.1)
    cos_part, sin_part = extract_coefficient(samples, 1.3)
    assert np.linalg.norm(cos_part) == 0.0
    assert np.linalg.norm(sin_part) == 0.0


def test_extract_dc_component():
    c = np.array([0.3, -0.2, 0.05, 0.7])
    samples = _samples_of(lambda ts: np.tile(c, (len(ts), 1)), 200.0, 0.1)
    cos_part, sin_part = extract_coefficient(samples, 0.0)
    assert np.allclose(cos_part, c, atol=1e-12)
    assert np.array_equal(sin_part, np.zeros(4))


def test_extract_linearity():
    def f(ts):
        return np.multiply.outer(np.cos(0.7 * ts), E[0])

    def g(ts):
        return np.multiply.outer(np.sin(0.7 * ts), E[2])

    dt, t_max = 0.2, 2000.0
    sf = _samples_of(f, t_max, dt)
    sg = _samples_of(g, t_max, dt)
    sfg = _samples_of(lambda ts: f(ts) + g(ts), t_max, dt)
    cf, sfp = extract_coefficient(sf, 0.7)
    cg, sgp = extract_coefficient(sg, 0.7)
    cfg, sfgp = extract_coefficient(sfg, 0.7)
    assert np.allclose(cfg, cf + cg, atol=1e-9)
    assert np.allclose(sfgp, sfp + sgp, atol=1e-9)


def test_extract_null_frequency_below_bound():
    # extracting a frequency absent from the sum returns only leakage,
    # bounded by 2*sum|coeffs|/(span*gap)
    rng = np.random.default_rng(40)
    sum_ = TrigSum(
        frequencies=(0.4, 1.1, 2.9),
        cos_coeffs=rng.standard_normal((3, 4)),
        sin_coeffs=rng.standard_normal((3, 4)),
    )
    t_max, dt = 4000.0, 0.2
    samples = _samples_of(sum_.evaluate, t_max, dt)
    alpha = 1.9
    gap = sum_.min_gap(alpha)
    bound = averaging_bound(sum_.coefficient_norm_sum(), t_max, gap)
    cos_part, sin_part = extract_coefficient(samples, alpha, min_gap=gap)
    assert np.linalg.norm(cos_part) <= bound
    assert np.linalg.norm(sin_part) <= bound


def test_round_trip_synthesized_sum():
    rng = np.random.default_rng(41)
    sum_ = TrigSum(
        frequencies=(0.0, 0.8, 2.1),
        cos_coeffs=rng.standard_normal((3, 4)),
        sin_coeffs=rng.standard_normal((3, 4)),
    )
    t_max, dt = 4000.0, 0.2
    samples = _samples_of(sum_.evaluate, t_max, dt)
    for k, alpha in enumerate(sum_.frequencies):
        gap = sum_.min_gap(alpha)
        bound = averaging_bound(sum_.coefficient_norm_sum(), t_max, gap)
        cos_part, sin_part = extract_coefficient(samples, alpha, min_gap=gap)
        assert np.linalg.norm(cos_part - sum_.cos_coeffs[k]) <= bound
        assert np.linalg.norm(sin_part - sum_.sin_coeffs[k]) <= bound


def test_extract_rejects_short_span(dense_form):
    samples = sample_closed_form(dense_form, t_max=10.0, dt=0.01)
    with pytest.raises(InsufficientSpan):
        extract_coefficient(samples, 0.5, min_gap=1.0)


def test_fit_recovers_canonical_dense(dense_form):
    spec = dense_form.spectrum
    dt = 2.0 * math.pi / (8.0 * spec.omega2)
    samples = sample_closed_form(dense_form, t_max=1e4, dt=dt)
    fit = fit_lissajous(samples, spec)
    # slow cos vector points along e1 with squared magnitude 25/28
    assert abs(np.linalg.norm(fit.a1) ** 2 - 25.0 / 28.0) <= 1e-3
    direction = fit.a1 / np.linalg.norm(fit.a1)
    assert abs(abs(direction[0]) - 1.0) <= 1e-3


def test_fit_from_flow_samples(periodic_params):
    spec = spectrum_of(periodic_params)
    dt = 2.0 * math.pi / (8.0 * spec.omega2)
    samples = sample_frenet_frames(periodic_params, t_max=1e4, dt=dt)
    flat = CurveSamples(t0=samples.t0, dt=samples.dt, points=samples.points)
    fit = fit_lissajous(flat, spec)
    coeff_sum = sum(np.linalg.norm(v) for v in (fit.a1, fit.b1, fit.a2, fit.b2))
    gap = min(spec.omega2 - spec.omega1, 2.0 * spec.omega1)
    bound = averaging_bound(coeff_sum, flat.span, gap)
    assert reconstruction_residual(fit, flat) <= 10.0 * bound
    # recovered vectors are orthogonal to averaging accuracy
    vs = [fit.a1, fit.b1, fit.a2, fit.b2]
    for i in range(4):
        for j in range(i + 1, 4):
            assert abs(np.dot(vs[i], vs[j])) <= 1e-3


def test_fit_great_circle():
    form = construct_canonical(HelixParams(0.0, 0.0))
    spec = form.spectrum
    samples = sample_closed_form(form, t_max=500.0, dt=0.1)
    fit = fit_lissajous(samples, spec)
    assert np.linalg.norm(fit.a1) <= 1e-2
    assert abs(np.linalg.norm(fit.a2) - 1.0) <= 1e-2
    assert abs(np.linalg.norm(fit.b2) - 1.0) <= 1e-2


def test_fit_detects_wrong_spectrum(dense_form):
    wrong = spectrum_of(HelixParams(1.0, 0.3))
    dt = 2.0 * math.pi / (8.0 * dense_form.spectrum.omega2)
    samples = sample_closed_form(dense_form, t_max=1e4, dt=dt)
    with pytest.raises(SpectrumMismatch):
        fit_lissajous(samples, wrong)
