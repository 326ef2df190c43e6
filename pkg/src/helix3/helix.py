"""Closed-form curves of constant curvature and torsion on the unit 3-sphere.

A curve with constant curvature ``kappa`` and constant torsion ``tau``,
parametrized by arc length and lying on the unit sphere of R^4, is the
superposition of two circular motions in orthogonal planes:

    gamma(t) = cos(w1 t) a1 + sin(w1 t) b1 + cos(w2 t) a2 + sin(w2 t) b2

where the angular frequencies ``w1 < w2`` are the non-negative roots of

    w^4 - (kappa^2 + tau^2 + 1) w^2 + tau^2 = 0

and the coefficient vectors a1, b1, a2, b2 are pairwise orthogonal with

    |a1|^2 = |b1|^2 = (1 - w2^2) / (w1^2 - w2^2),
    |a2|^2 = |b2|^2 = (1 - w1^2) / (w2^2 - w1^2).

For ``tau = 0`` the curve degenerates to a circle: w1 = 0, b1 = 0,
w = w2 = sqrt(kappa^2 + 1), |a2| = |b2| = 1/w, |a1| = sqrt(1 - 1/w^2).

This module builds one canonical representative (coefficient vectors
aligned with the standard basis); every other representative is an
orthogonal image of it (see :mod:`helix3.congruence`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import InvalidParams

__all__ = [
    "HelixParams",
    "Spectrum",
    "LissajousForm",
    "spectrum_of",
    "construct_canonical",
    "frame_at",
    "initial_frame",
]

# Below this, a magnitude is treated as identically zero when picking
# frame vectors by convention rather than by normalization.
_DEGENERATE_TOL = 1e-8


@dataclass(frozen=True)
class HelixParams:
    """Admissible curvature/torsion pair.

    Both values are non-negative; zero curvature forces zero torsion
    (a curve with no curvature is a geodesic and has no normal direction
    to twist about).
    """

    kappa: float
    tau: float

    def __post_init__(self):
        if not (math.isfinite(self.kappa) and math.isfinite(self.tau)):
            raise InvalidParams("curvature and torsion must be finite")
        if self.kappa < 0 or self.tau < 0:
            raise InvalidParams(
                f"curvature and torsion must be non-negative, got "
                f"kappa={self.kappa}, tau={self.tau}"
            )
        if self.kappa == 0 and self.tau != 0:
            raise InvalidParams(
                "zero curvature forces zero torsion by convention "
                f"(geodesics carry no torsion); got tau={self.tau}"
            )

    @property
    def degenerate(self) -> bool:
        """True when the curve is a circle or great circle (tau = 0)."""
        return self.tau == 0


@dataclass(frozen=True)
class Spectrum:
    """The two angular frequencies of a helix, ``omega2 > omega1 >= 0``.

    ``omega_sq_sum`` is the invariant omega1^2 + omega2^2, which equals
    kappa^2 + tau^2 + 1; together with omega1 * omega2 = tau these are
    the Vieta identities of the frequency polynomial.
    """

    omega1: float
    omega2: float
    omega_sq_sum: float

    @property
    def ratio(self) -> float:
        """omega1 / omega2, always in [0, 1)."""
        return self.omega1 / self.omega2

    def close_to(self, other: "Spectrum", tol: float = 1e-10) -> bool:
        return (
            abs(self.omega1 - other.omega1) <= tol
            and abs(self.omega2 - other.omega2) <= tol
        )


def spectrum_of(params: HelixParams) -> Spectrum:
    """Angular frequencies for a curvature/torsion pair.

    The discriminant (k^2+t^2+1)^2 - 4 t^2 is evaluated in the factored
    form (k^2 + (t-1)^2)(k^2 + (t+1)^2), which involves no subtraction,
    and the slow frequency as tau / omega2, so neither suffers
    cancellation when tau is small or when tau is near 1 with small
    kappa.
    """
    k, t = params.kappa, params.tau
    chi_sq = k * k + t * t + 1.0
    sqrt_disc = math.sqrt((k * k + (t - 1.0) ** 2) * (k * k + (t + 1.0) ** 2))
    omega2 = math.sqrt(0.5 * (chi_sq + sqrt_disc))
    omega1 = t / omega2 if t > 0 else 0.0
    return Spectrum(omega1=omega1, omega2=omega2, omega_sq_sum=chi_sq)


@dataclass(frozen=True)
class LissajousForm:
    """Two-frequency closed form: spectrum plus four coefficient vectors.

    ``a1, b1`` are the cos/sin coefficient vectors of the slow frequency,
    ``a2, b2`` those of the fast frequency. For a degenerate helix
    (tau = 0) the slow frequency is 0 and ``b1`` is the zero vector, so a
    single evaluation code path covers every case.

    Construction does not validate the geometric invariants (fitted
    forms carry recovery error); call :meth:`validate` to enforce them.
    """

    spectrum: Spectrum
    a1: np.ndarray
    b1: np.ndarray
    a2: np.ndarray
    b2: np.ndarray

    def coefficient_vectors(self) -> np.ndarray:
        return np.array([self.a1, self.b1, self.a2, self.b2])

    def evaluate(self, t) -> np.ndarray:
        """Curve point(s) at arc length ``t`` (scalar or array).

        Returns shape (4,) for scalar input, (n, 4) for array input.
        """
        w1, w2 = self.spectrum.omega1, self.spectrum.omega2
        t = np.asarray(t, dtype=float)
        return (
            np.multiply.outer(np.cos(w1 * t), self.a1)
            + np.multiply.outer(np.sin(w1 * t), self.b1)
            + np.multiply.outer(np.cos(w2 * t), self.a2)
            + np.multiply.outer(np.sin(w2 * t), self.b2)
        )

    def derivative(self, t, order: int = 1) -> np.ndarray:
        """Exact term-by-term derivative of the closed form, order 1..3."""
        if order not in (1, 2, 3):
            raise ValueError(f"order must be 1, 2 or 3, got {order}")
        w1, w2 = self.spectrum.omega1, self.spectrum.omega2
        t = np.asarray(t, dtype=float)

        # Each differentiation scales by w and advances the phase by a
        # quarter turn: cos -> -sin -> -cos, sin -> cos -> -sin, ...
        def term(w, a, b):
            c, s = np.cos(w * t), np.sin(w * t)
            if order == 1:
                return w * (np.multiply.outer(-s, a) + np.multiply.outer(c, b))
            if order == 2:
                return w * w * (np.multiply.outer(-c, a) + np.multiply.outer(-s, b))
            return w ** 3 * (np.multiply.outer(s, a) + np.multiply.outer(-c, b))

        return term(w1, self.a1, self.b1) + term(w2, self.a2, self.b2)

    def validate(self, tol: float = linalg.ALGEBRAIC_TOL) -> None:
        """Enforce the coefficient-vector invariants of an exact helix.

        Raises InvalidParams when the vectors are not pairwise orthogonal
        (degenerate case: the sin vector of the zero frequency must be
        zero instead), when magnitudes within a frequency differ, or when
        the squared magnitudes do not sum to 1.
        """
        vs = self.coefficient_vectors()
        norms = np.linalg.norm(vs, axis=1)
        if self.spectrum.omega1 > 0:
            if abs(norms[0] - norms[1]) > tol or abs(norms[2] - norms[3]) > tol:
                raise InvalidParams("paired coefficient magnitudes differ")
            for i in range(4):
                for j in range(i + 1, 4):
                    if abs(np.dot(vs[i], vs[j])) > tol:
                        raise InvalidParams(
                            f"coefficient vectors {i},{j} not orthogonal"
                        )
        else:
            if norms[1] > tol:
                raise InvalidParams("zero frequency carries a sin coefficient")
            if abs(norms[2] - norms[3]) > tol:
                raise InvalidParams("paired coefficient magnitudes differ")
            for i, j in ((0, 2), (0, 3), (2, 3)):
                if abs(np.dot(vs[i], vs[j])) > tol:
                    raise InvalidParams(f"coefficient vectors {i},{j} not orthogonal")
        if abs(norms[0] ** 2 + norms[2] ** 2 - 1.0) > tol:
            raise InvalidParams("squared magnitudes do not sum to 1")


def construct_canonical(params: HelixParams) -> LissajousForm:
    """Canonical helix with coefficient vectors on the standard axes.

    a1 along e1, b1 along e2, a2 along e3, b2 along e4, with the
    magnitudes forced by the curvature and torsion. The degenerate case
    returns the circle form (b1 = 0). One representative suffices: all
    helices with the same parameters are orthogonal images of it.
    """
    spec = spectrum_of(params)
    w1_sq, w2_sq = spec.omega1 ** 2, spec.omega2 ** 2
    if params.tau > 0:
        mag1 = math.sqrt((w2_sq - 1.0) / (w2_sq - w1_sq))
        mag2 = math.sqrt((1.0 - w1_sq) / (w2_sq - w1_sq))
        return LissajousForm(
            spectrum=spec,
            a1=np.array([mag1, 0.0, 0.0, 0.0]),
            b1=np.array([0.0, mag1, 0.0, 0.0]),
            a2=np.array([0.0, 0.0, mag2, 0.0]),
            b2=np.array([0.0, 0.0, 0.0, mag2]),
        )
    w = spec.omega2  # sqrt(kappa^2 + 1)
    mag2 = 1.0 / w
    mag1 = math.sqrt(max(0.0, 1.0 - mag2 * mag2))
    return LissajousForm(
        spectrum=spec,
        a1=np.array([mag1, 0.0, 0.0, 0.0]),
        b1=np.zeros(4),
        a2=np.array([0.0, 0.0, mag2, 0.0]),
        b2=np.array([0.0, 0.0, 0.0, mag2]),
    )


def frame_at(form: LissajousForm, t: float) -> np.ndarray:
    """Orthonormal frame rows (point, tangent, normal, binormal) at ``t``.

    Tangent and normal come from the exact derivatives and the tangent
    projection; where curvature or torsion vanishes the missing frame
    vectors are completed deterministically from the standard basis
    (they are then parallel fields, as required).
    """
    gamma = form.evaluate(t)
    tangent = form.derivative(t, 1)
    acc = form.derivative(t, 2)
    d_tangent = linalg.project_tangent(gamma, acc)
    kappa_loc = linalg.norm(d_tangent)
    if kappa_loc <= _DEGENERATE_TOL:
        return linalg.complete_orthonormal_basis([gamma, tangent])
    normal = d_tangent / kappa_loc
    # N = (gamma'' + gamma)/kappa, so N' = (gamma''' + gamma')/kappa;
    # the radial component of N' vanishes identically for a helix.
    d_normal = linalg.project_tangent(
        gamma, (form.derivative(t, 3) + tangent) / kappa_loc
    )
    tors_vec = d_normal + kappa_loc * tangent
    tau_loc = linalg.norm(tors_vec)
    if tau_loc <= _DEGENERATE_TOL:
        return linalg.complete_orthonormal_basis([gamma, tangent, normal])
    return np.array([gamma, tangent, normal, tors_vec / tau_loc])


def initial_frame(form: LissajousForm) -> np.ndarray:
    """Frame rows at t = 0; maps the identity-frame solution onto ``form``."""
    return frame_at(form, 0.0)
