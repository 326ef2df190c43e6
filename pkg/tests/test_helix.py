import math

import numpy as np
import pytest

from helix3 import HelixParams, construct_canonical, frame_at, spectrum_of
from helix3.errors import InvalidParams
from helix3.linalg import orthogonality_defect


def test_params_reject_negative():
    with pytest.raises(InvalidParams):
        HelixParams(kappa=-1.0, tau=0.0)
    with pytest.raises(InvalidParams):
        HelixParams(kappa=1.0, tau=-0.5)


def test_params_reject_nan():
    with pytest.raises(InvalidParams):
        HelixParams(kappa=float("nan"), tau=0.0)


def test_params_zero_curvature_forces_zero_torsion():
    with pytest.raises(InvalidParams, match="convention"):
        HelixParams(kappa=0.0, tau=0.5)


def test_spectrum_dense_reference_values(dense_params):
    s = spectrum_of(dense_params)
    assert abs(s.omega1 - 0.5) <= 1e-12
    assert abs(s.omega2 - math.sqrt(29.0) / 2.0) <= 1e-12


def test_spectrum_periodic_reference_values(periodic_params):
    s = spectrum_of(periodic_params)
    assert abs(s.omega1 - 0.25) <= 1e-12
    assert abs(s.omega2 - 5.0 / 3.0) <= 1e-12


def test_spectrum_great_circle():
    s = spectrum_of(HelixParams(0.0, 0.0))
    assert s.omega1 == 0.0
    assert abs(s.omega2 - 1.0) <= 1e-15


def test_spectrum_circle():
    s = spectrum_of(HelixParams(1.0, 0.0))
    assert s.omega1 == 0.0
    assert abs(s.omega2 - math.sqrt(2.0)) <= 1e-15


def test_spectrum_ordering_and_unit_separation():
    rng = np.random.default_rng(10)
    for _ in range(500):
        kappa, tau = rng.uniform(1e-6, 10.0, size=2)
        s = spectrum_of(HelixParams(kappa, tau))
        assert s.omega2 > 1.0 > s.omega1 > 0.0


def test_spectrum_vieta_identities():
    rng = np.random.default_rng(11)
    for _ in range(500):
        kappa, tau = rng.uniform(0.0, 10.0, size=2)
        if kappa == 0.0:
            tau = 0.0
        s = spectrum_of(HelixParams(kappa, tau))
        assert abs(s.omega1 ** 2 + s.omega2 ** 2 - s.omega_sq_sum) <= 1e-12
        assert abs(s.omega1 * s.omega2 - tau) <= 1e-12


def test_frequencies_solve_characteristic_polynomial():
    rng = np.random.default_rng(12)
    for _ in range(200):
        kappa, tau = rng.uniform(0.0, 10.0, size=2)
        if kappa == 0.0:
            tau = 0.0
        s = spectrum_of(HelixParams(kappa, tau))
        for w in (s.omega1, s.omega2):
            assert abs(w ** 4 - s.omega_sq_sum * w ** 2 + tau ** 2) <= 1e-10


def test_canonical_magnitudes_dense(dense_form):
    # with w1^2 = 1/4 and w2^2 = 29/4 the magnitude formulas give
    # |a1|^2 = (29/4 - 1)/(29/4 - 1/4) = 25/28 and |a2|^2 = 3/28
    assert abs(np.linalg.norm(dense_form.a1) ** 2 - 25.0 / 28.0) <= 1e-12
    assert abs(np.linalg.norm(dense_form.a2) ** 2 - 3.0 / 28.0) <= 1e-12


def test_canonical_great_circle_magnitudes():
    form = construct_canonical(HelixParams(0.0, 0.0))
    assert np.linalg.norm(form.a1) == 0.0
    assert abs(np.linalg.norm(form.a2) - 1.0) <= 1e-15
    assert abs(np.linalg.norm(form.b2) - 1.0) <= 1e-15


def test_canonical_circle_magnitudes():
    # w = sqrt(2): |a2| = |b2| = 1/sqrt(2), |a1| = sqrt(1 - 1/2)
    form = construct_canonical(HelixParams(1.0, 0.0))
    assert abs(np.linalg.norm(form.a2) - 1.0 / math.sqrt(2.0)) <= 1e-15
    assert abs(np.linalg.norm(form.a1) - 1.0 / math.sqrt(2.0)) <= 1e-15
    assert np.linalg.norm(form.b1) == 0.0


def test_canonical_invariants_random_params():
    rng = np.random.default_rng(13)
    for _ in range(200):
        kappa, tau = rng.uniform(1e-3, 10.0, size=2)
        form = construct_canonical(HelixParams(kappa, tau))
        form.validate(tol=1e-12)


def test_evaluate_at_zero(dense_form):
    assert np.allclose(dense_form.evaluate(0.0), dense_form.a1 + dense_form.a2,
                       atol=1e-15)


def test_evaluate_great_circle_quarter_turn():
    form = construct_canonical(HelixParams(0.0, 0.0))
    assert np.allclose(form.evaluate(math.pi / 2.0), form.b2, atol=1e-15)


@pytest.mark.parametrize("which", ["dense", "periodic"])
def test_on_sphere_and_unit_speed(which, dense_form, periodic_form):
    form = dense_form if which == "dense" else periodic_form
    ts = np.linspace(0.0, 100.0, 1000)
    pts = form.evaluate(ts)
    vel = form.derivative(ts, 1)
    assert np.max(np.abs(np.linalg.norm(pts, axis=1) - 1.0)) <= 1e-10
    assert np.max(np.abs(np.linalg.norm(vel, axis=1) - 1.0)) <= 1e-10


def test_derivative_great_circle():
    form = construct_canonical(HelixParams(0.0, 0.0))
    assert np.allclose(form.derivative(0.0, 1), form.b2, atol=1e-15)


def test_second_derivative_magnitude(dense_params, dense_form):
    # |gamma''|^2 = kappa^2 + 1 = 75/16 + 1 = 91/16
    acc = dense_form.derivative(0.0, 2)
    assert abs(np.dot(acc, acc) - 91.0 / 16.0) <= 1e-12


def test_derivative_rejects_bad_order(dense_form):
    with pytest.raises(ValueError):
        dense_form.derivative(0.0, 4)


def test_period_closure_periodic_form(periodic_form):
    t = np.linspace(0.0, 10.0, 50)
    a = periodic_form.evaluate(t)
    b = periodic_form.evaluate(t + 24.0 * math.pi)
    assert np.max(np.linalg.norm(a - b, axis=1)) <= 1e-9


@pytest.mark.parametrize("kappa,tau", [(0.0, 0.0), (1.0, 0.0), (2.0, 1.5)])
def test_frame_at_is_orthonormal(kappa, tau):
    form = construct_canonical(HelixParams(kappa, tau))
    for t in (0.0, 1.37, 10.0):
        frame = frame_at(form, t)
        assert orthogonality_defect(frame) <= 1e-12
        assert np.allclose(frame[0], form.evaluate(t), atol=1e-14)
        assert np.allclose(frame[1], form.derivative(t, 1), atol=1e-12)
