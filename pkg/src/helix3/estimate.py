"""Curvature and torsion estimated from raw samples, no closed form used.

The intrinsic definitions drive everything: with T the unit tangent,

    kappa = |D/dt T|,   N = (1/kappa) D/dt T,   tau = |D/dt N + kappa T|,

where D/dt is the ambient derivative followed by the tangent projection
v' - (p . v') p at the curve point p. Ambient derivatives come from
4th-order central differences on the uniform arc-length grid; boundary
points are dropped rather than estimated one-sided, and the per-sample
estimates are aggregated by the median (curvature and torsion are
constants here, so any robust location statistic is valid).

This closes the loop parameters -> curve -> parameters independently of
the construction that produced the samples.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import IndexOutOfStencil, MissingFrames
from .linalg import project_tangent
from .samples import CurveSamples

__all__ = [
    "FrenetEstimate",
    "FrameResiduals",
    "covariant_derivative",
    "estimate_kappa_tau",
    "frame_residuals",
]

# Per-sample curvature below this has no usable normal direction; the
# convention "zero curvature implies zero torsion" applies instead.
_KAPPA_FLOOR = 1e-8


def _fd4(field: np.ndarray, dt: float) -> np.ndarray:
    """4th-order central difference of all interior samples.

    Input (n, 4) -> output (n-4, 4), valid for original indices 2..n-3.
    """
    return (field[:-4] - 8.0 * field[1:-3] + 8.0 * field[3:-1] - field[4:]) / (12.0 * dt)


def _covariant_all(points: np.ndarray, field: np.ndarray, dt: float) -> np.ndarray:
    """Tangent-projected 4th-order derivative at every interior index."""
    deriv = _fd4(field, dt)
    base = points[2:-2]
    radial = np.sum(base * deriv, axis=1, keepdims=True)
    return deriv - radial * base


def covariant_derivative(samples: CurveSamples, field, i: int) -> np.ndarray:
    """Projected derivative of ``field`` along the curve at sample ``i``.

    Needs two samples of stencil room on each side; truncation error is
    O(dt^4).
    """
    field = np.asarray(field, dtype=float)
    n = len(field)
    if not 2 <= i <= n - 3:
        raise IndexOutOfStencil(
            f"index {i} needs 2 <= i <= {n - 3} for the 5-point stencil"
        )
    deriv = (
        field[i - 2] - 8.0 * field[i - 1] + 8.0 * field[i + 1] - field[i + 2]
    ) / (12.0 * samples.dt)
    return project_tangent(samples.points[i], deriv)


@dataclass(frozen=True)
class FrenetEstimate:
    """Median curvature/torsion estimates plus per-sample spread.

    ``tau_hat`` is None when the sample run is too short for the nested
    torsion stencil; ``tau_by_convention`` marks the degenerate case
    where curvature is numerically zero and torsion is reported as 0
    rather than evaluated as 0/0.
    """

    kappa_hat: float
    tau_hat: float | None
    kappa_spread_max: float
    kappa_spread_mean: float
    tau_spread_max: float
    tau_spread_mean: float
    tau_by_convention: bool = False


def estimate_kappa_tau(samples: CurveSamples) -> FrenetEstimate:
    """Estimate constant curvature and torsion from point samples.

    Requires at least 9 samples for curvature; torsion additionally
    needs the nested stencil (13 samples) and comes back None below
    that.
    """
    pts = samples.points
    n = len(pts)
    if n < 9:
        raise IndexOutOfStencil(f"need at least 9 samples, got {n}")
    dt = samples.dt

    tangent = _fd4(pts, dt)                       # valid indices 2..n-3
    d_tangent = _covariant_all(pts[2:-2], tangent, dt)  # valid 4..n-5
    kappa_per = np.linalg.norm(d_tangent, axis=1)
    kappa_hat = float(np.median(kappa_per))
    kappa_dev = np.abs(kappa_per - kappa_hat)

    if kappa_hat <= _KAPPA_FLOOR:
        return FrenetEstimate(
            kappa_hat=kappa_hat,
            tau_hat=0.0,
            kappa_spread_max=float(np.max(kappa_dev)),
            kappa_spread_mean=float(np.mean(kappa_dev)),
            tau_spread_max=0.0,
            tau_spread_mean=0.0,
            tau_by_convention=True,
        )

    if n < 13:
        return FrenetEstimate(
            kappa_hat=kappa_hat,
            tau_hat=None,
            kappa_spread_max=float(np.max(kappa_dev)),
            kappa_spread_mean=float(np.mean(kappa_dev)),
            tau_spread_max=float("nan"),
            tau_spread_mean=float("nan"),
        )

    # Guard isolated near-zero curvature samples before dividing.
    safe = np.maximum(kappa_per, _KAPPA_FLOOR)
    normal = d_tangent / safe[:, None]            # valid 4..n-5
    d_normal = _covariant_all(pts[4:-4], normal, dt)  # valid 6..n-7
    tors_vec = d_normal + kappa_per[2:-2, None] * tangent[4:-4]
    tau_per = np.linalg.norm(tors_vec, axis=1)
    tau_hat = float(np.median(tau_per))
    tau_dev = np.abs(tau_per - tau_hat)

    return FrenetEstimate(
        kappa_hat=kappa_hat,
        tau_hat=tau_hat,
        kappa_spread_max=float(np.max(kappa_dev)),
        kappa_spread_mean=float(np.mean(kappa_dev)),
        tau_spread_max=float(np.max(tau_dev)),
        tau_spread_mean=float(np.mean(tau_dev)),
    )


@dataclass(frozen=True)
class FrameResiduals:
    """Max-norm residuals of the three frame equations over the samples.

    tangent_eq:  D/dt T - kappa N
    normal_eq:   D/dt N + kappa T - tau B
    binormal_eq: D/dt B + tau N

    The curvature/torsion used are estimated from the frames themselves,
    so a frame with swapped or corrupted rows shows residuals of order 1.
    """

    tangent_eq: float
    normal_eq: float
    binormal_eq: float
    kappa_used: float
    tau_used: float

    @property
    def max_residual(self) -> float:
        return max(self.tangent_eq, self.normal_eq, self.binormal_eq)


def frame_residuals(samples: CurveSamples) -> FrameResiduals:
    """Check attached frames against the frame equations."""
    if samples.frames is None:
        raise MissingFrames("samples carry no frames")
    n = len(samples)
    if n < 9:
        raise IndexOutOfStencil(f"need at least 9 samples, got {n}")
    pts = samples.points
    dt = samples.dt
    tangent = samples.frames[:, 1, :]
    normal = samples.frames[:, 2, :]
    binormal = samples.frames[:, 3, :]

    d_tangent = _covariant_all(pts, tangent, dt)
    d_normal = _covariant_all(pts, normal, dt)
    d_binormal = _covariant_all(pts, binormal, dt)

    kappa = float(np.median(np.linalg.norm(d_tangent, axis=1)))
    core = slice(2, -2)
    tau = float(
        np.median(np.linalg.norm(d_normal + kappa * tangent[core], axis=1))
    )

    r1 = d_tangent - kappa * normal[core]
    r2 = d_normal + kappa * tangent[core] - tau * binormal[core]
    r3 = d_binormal + tau * normal[core]
    return FrameResiduals(
        tangent_eq=float(np.max(np.linalg.norm(r1, axis=1))),
        normal_eq=float(np.max(np.linalg.norm(r2, axis=1))),
        binormal_eq=float(np.max(np.linalg.norm(r3, axis=1))),
        kappa_used=kappa,
        tau_used=tau,
    )
