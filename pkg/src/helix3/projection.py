"""Stereographic projection to R^3 and all sample/point file formats.

Projection convention with pole e4:

    sigma(x) = (x1, x2, x3) / (1 - x4),

a conformal map of the unit 3-sphere minus the pole. Any other pole is
handled by one deterministic pre-rotation (the reflection exchanging the
pole with e4) followed by the same formula. The fourth ambient
coordinate of each input point rides along as a color channel; rendering
is downstream, this module emits data.

File formats (UTF-8, LF line endings, '.' decimal separator):

  samples CSV:   header ``t,x1,x2,x3,x4`` plus optional frame columns
                 ``T1..T4,N1..N4,B1..B4``; floats written as shortest
                 round-trip decimals, so export/import is lossless.
  projected CSV: header ``t,y1,y2,y3,c``.
  projected PLY: ASCII point cloud, per-vertex ``x y z gray`` with gray
                 mapped linearly from the color channel in [-1, 1] to
                 0..255.
"""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass

import numpy as np

from .errors import FormatError, IoError, NearPole, NoPoleFound
from .samples import CurveSamples

__all__ = [
    "ProjectionSpec",
    "Projected3",
    "stereographic",
    "project_samples",
    "choose_pole",
    "export_samples",
    "import_samples",
    "export_projected",
]

_AXIS_POLES = tuple(
    s * np.eye(4)[i] for i in range(4) for s in (1.0, -1.0)
)

_SAMPLE_HEADER = ["t", "x1", "x2", "x3", "x4"]
_FRAME_HEADER = _SAMPLE_HEADER + [
    f"{row}{i}" for row in ("T", "N", "B") for i in range(1, 5)
]


@dataclass(frozen=True)
class ProjectionSpec:
    """Projection pole plus the minimum admissible distance to it."""

    pole: np.ndarray
    min_pole_distance: float = 1e-6

    def __post_init__(self):
        if self.min_pole_distance <= 0:
            raise ValueError("min_pole_distance must be positive")
        pole = np.asarray(self.pole, dtype=float)
        if abs(np.linalg.norm(pole) - 1.0) > 1e-12:
            raise ValueError("pole must be a unit vector")
        object.__setattr__(self, "pole", pole)


@dataclass(frozen=True)
class Projected3:
    """One projected point: parameter, R^3 position, color channel."""

    t: float
    y1: float
    y2: float
    y3: float
    x4_color: float


def _pole_rotation(pole: np.ndarray) -> np.ndarray:
    """Orthogonal map taking ``pole`` to e4: the reflection swapping them."""
    e4 = np.array([0.0, 0.0, 0.0, 1.0])
    w = pole - e4
    w_sq = float(np.dot(w, w))
    if w_sq < 1e-24:
        return np.eye(4)
    return np.eye(4) - 2.0 * np.outer(w, w) / w_sq


def stereographic(spec: ProjectionSpec, x, t: float = 0.0) -> Projected3:
    """Project one point; NearPole when it violates the distance floor."""
    x = np.asarray(x, dtype=float)
    dist = float(np.linalg.norm(x - spec.pole))
    if dist < spec.min_pole_distance:
        raise NearPole(
            f"point at distance {dist:.3e} from the pole "
            f"(floor {spec.min_pole_distance:.1e}); choose another pole"
        )
    rotated = _pole_rotation(spec.pole) @ x
    denom = 1.0 - rotated[3]
    y = rotated[:3] / denom
    return Projected3(t=t, y1=float(y[0]), y2=float(y[1]), y3=float(y[2]),
                      x4_color=float(x[3]))


def project_samples(spec: ProjectionSpec, samples: CurveSamples) -> list[Projected3]:
    """Project every sample, carrying its arc-length parameter."""
    return [
        stereographic(spec, p, t=float(t))
        for t, p in zip(samples.ts, samples.points)
    ]


def choose_pole(
    samples: CurveSamples,
    margin: float = 1e-2,
    rng: np.random.Generator | None = None,
    max_random: int = 1000,
) -> ProjectionSpec:
    """Pick a pole at least ``margin`` away from every sample.

    Tries the eight axis directions first, then random unit candidates.
    A one-dimensional curve misses almost every direction, so failure is
    practically impossible unless the margin exceeds the sphere diameter.
    """
    if len(samples) == 0:
        raise ValueError("cannot choose a pole for empty samples")

    def admissible(pole: np.ndarray) -> bool:
        d = np.linalg.norm(samples.points - pole, axis=1)
        return bool(np.min(d) >= margin)

    for pole in _AXIS_POLES:
        if admissible(pole):
            return ProjectionSpec(pole=pole, min_pole_distance=margin)
    if rng is None:
        rng = np.random.default_rng(int(os.environ.get("HELIX3_SEED", "0")))
    for _ in range(max_random):
        cand = rng.standard_normal(4)
        cand /= np.linalg.norm(cand)
        if admissible(cand):
            return ProjectionSpec(pole=cand, min_pole_distance=margin)
    raise NoPoleFound(
        f"no pole with margin {margin} after {max_random} random candidates"
    )


def _fmt(x: float) -> str:
    """Shortest decimal that round-trips to the same double."""
    return repr(float(x))


def export_samples(samples: CurveSamples, path) -> None:
    """Write samples (and frames, when attached) as CSV."""
    with_frames = samples.frames is not None
    header = _FRAME_HEADER if with_frames else _SAMPLE_HEADER
    try:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(header)
            for idx, (t, p) in enumerate(zip(samples.ts, samples.points)):
                row = [_fmt(t)] + [_fmt(c) for c in p]
                if with_frames:
                    for r in range(1, 4):
                        row.extend(_fmt(c) for c in samples.frames[idx, r])
                writer.writerow(row)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def import_samples(path) -> CurveSamples:
    """Read a samples CSV back; exact inverse of :func:`export_samples`."""
    try:
        with open(path, "r", newline="", encoding="utf-8") as fh:
            reader = csv.reader(fh)
            try:
                header = next(reader)
            except StopIteration:
                raise FormatError(f"{path}: missing header") from None
            if header == _SAMPLE_HEADER:
                with_frames = False
            elif header == _FRAME_HEADER:
                with_frames = True
            else:
                raise FormatError(
                    f"{path}: bad header {header!r}; expected "
                    f"{_SAMPLE_HEADER!r} (optionally with frame columns)"
                )
            width = len(header)
            rows = []
            for lineno, row in enumerate(reader, start=2):
                if not row:
                    continue
                if len(row) != width:
                    raise FormatError(
                        f"{path}:{lineno}: expected {width} cells, got {len(row)}"
                    )
                try:
                    rows.append([float(c) for c in row])
                except ValueError as exc:
                    raise FormatError(f"{path}:{lineno}: non-numeric cell ({exc})") from None
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc
    if not rows:
        raise FormatError(f"{path}: no data rows")
    data = np.array(rows)
    ts = data[:, 0]
    points = data[:, 1:5]
    if len(ts) > 1:
        diffs = np.diff(ts)
        dt = float(np.mean(diffs))
        if dt <= 0 or np.max(np.abs(diffs - dt)) > 1e-6 * max(1.0, abs(dt)):
            raise FormatError(f"{path}: sample times are not a uniform grid")
    else:
        dt = 1.0
    frames = None
    if with_frames:
        frames = np.empty((len(rows), 4, 4))
        frames[:, 0, :] = points
        for r in range(1, 4):
            frames[:, r, :] = data[:, 1 + 4 * r : 5 + 4 * r]
    return CurveSamples(t0=float(ts[0]), dt=dt, points=points, frames=frames)


def export_projected(points: list[Projected3], path, fmt: str = "csv") -> None:
    """Write projected points as CSV (``t,y1,y2,y3,c``) or ASCII PLY."""
    if fmt not in ("csv", "ply"):
        raise ValueError(f"format must be 'csv' or 'ply', got {fmt!r}")
    try:
        if fmt == "csv":
            with open(path, "w", newline="", encoding="utf-8") as fh:
                writer = csv.writer(fh, lineterminator="\n")
                writer.writerow(["t", "y1", "y2", "y3", "c"])
                for p in points:
                    writer.writerow(
                        [_fmt(p.t), _fmt(p.y1), _fmt(p.y2), _fmt(p.y3), _fmt(p.x4_color)]
                    )
        else:
            with open(path, "w", newline="", encoding="utf-8") as fh:
                fh.write("ply\n")
                fh.write("format ascii 1.0\n")
                fh.write(f"element vertex {len(points)}\n")
                fh.write("property float x\n")
                fh.write("property float y\n")
                fh.write("property float z\n")
                fh.write("property uchar gray\n")
                fh.write("end_header\n")
                for p in points:
                    gray = _gray_level(p.x4_color)
                    fh.write(f"{_fmt(p.y1)} {_fmt(p.y2)} {_fmt(p.y3)} {gray}\n")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def _gray_level(c: float) -> int:
    """Linear map of the color channel from [-1, 1] onto 0..255."""
    scaled = (max(-1.0, min(1.0, c)) + 1.0) / 2.0 * 255.0
    return int(round(scaled))
