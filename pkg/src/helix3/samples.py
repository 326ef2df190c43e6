"""Uniform arc-length samples of a curve, with optional attached frames."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import FormatError
from .frenet import FrameState, frame_trajectory
from .helix import HelixParams, LissajousForm

__all__ = ["CurveSamples", "sample_closed_form", "sample_frenet_frames"]


@dataclass(frozen=True)
class CurveSamples:
    """Points (and optionally frames) on a uniform arc-length grid.

    ``points`` has shape (n, 4); ``frames``, when present, shape
    (n, 4, 4) with rows (point, tangent, normal, binormal).
    """

    t0: float
    dt: float
    points: np.ndarray
    frames: np.ndarray | None = None

    def __post_init__(self):
        if self.dt <= 0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        if self.points.ndim != 2 or self.points.shape[1] != 4:
            raise ValueError(f"points must be (n, 4), got {self.points.shape}")
        if self.frames is not None and self.frames.shape != (len(self.points), 4, 4):
            raise ValueError("frames must be (n, 4, 4) matching points")

    def __len__(self) -> int:
        return len(self.points)

    @property
    def ts(self) -> np.ndarray:
        """Sample times t0 + i*dt, regenerated deterministically."""
        return self.t0 + self.dt * np.arange(len(self.points))

    @property
    def span(self) -> float:
        return self.dt * (len(self.points) - 1)

    def validate(self, sphere_tol: float = 1e-10, chord_rel_tol: float = 0.05) -> None:
        """Sanity checks: points on the unit sphere, chords consistent with dt.

        Chord lengths slightly undercut the arc length dt (the curve
        bends); deviations beyond ``chord_rel_tol`` signal a grid that is
        not an arc-length parametrization.
        """
        radii = np.linalg.norm(self.points, axis=1)
        worst = float(np.max(np.abs(radii - 1.0)))
        if worst > sphere_tol:
            raise FormatError(f"points off the unit sphere by {worst:.3e}")
        if len(self.points) >= 2:
            chords = np.linalg.norm(np.diff(self.points, axis=0), axis=1)
            rel = np.abs(chords - self.dt) / self.dt
            if float(np.max(rel)) > chord_rel_tol:
                raise FormatError(
                    f"chord/step mismatch up to {float(np.max(rel)):.1%}; "
                    "samples are not arc-length spaced"
                )


def _grid(t0: float, t_max: float, dt: float) -> np.ndarray:
    if dt <= 0:
        raise ValueError(f"dt must be positive, got {dt}")
    if t_max < t0:
        raise ValueError(f"t_max {t_max} below t0 {t0}")
    n = int(np.floor((t_max - t0) / dt + 1e-9)) + 1
    return t0 + dt * np.arange(n)


def sample_closed_form(
    form: LissajousForm, t0: float = 0.0, t_max: float = 100.0, dt: float = 1e-3
) -> CurveSamples:
    """Evaluate the closed form on a uniform grid covering [t0, t_max]."""
    ts = _grid(t0, t_max, dt)
    return CurveSamples(t0=t0, dt=dt, points=form.evaluate(ts))


def sample_frenet_frames(
    params: HelixParams,
    t0: float = 0.0,
    t_max: float = 100.0,
    dt: float = 1e-3,
    x0: FrameState | None = None,
) -> CurveSamples:
    """Evolve the frame flow across a uniform grid; keeps full frames."""
    ts = _grid(t0, t_max, dt)
    frames = frame_trajectory(params, ts - ts[0], x0=x0)
    return CurveSamples(t0=t0, dt=dt, points=frames[:, 0, :], frames=frames)
