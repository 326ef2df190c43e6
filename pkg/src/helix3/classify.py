"""Global behavior of a helix: periodic closure or torus-filling density.

The curve closes if and only if the frequency ratio w1/w2 is rational,
with minimal period 2*pi*n/w2 for the ratio m/n in lowest terms. A
floating-point ratio is always rational, so the dichotomy is restated
as a bounded search: either a rational m/n with n below a denominator
cap explains the ratio at its own resolution scale, or the search
reports that no small period exists. Irrationality is never claimed.

For positive curvature and torsion the curve lies on the flat torus

    { x : x1^2 + x2^2 = r1^2,  x3^2 + x4^2 = r2^2 },   r1^2 + r2^2 = 1,

written in the orthonormal basis of its coefficient directions, and the
angle coordinates advance linearly at the two frequencies. Occupancy of
a uniform angle grid under long sampling is the computable face of
density.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateTorus, NotPeriodic
from .helix import LissajousForm, Spectrum
from .linalg import normalize

__all__ = [
    "RatioClass",
    "TorusSpec",
    "DensityReport",
    "GlobalClass",
    "classify_ratio",
    "period_of",
    "torus_of",
    "angle_lift",
    "density_report",
    "classify_form",
    "report_dict",
    "report_json",
]

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class RatioClass:
    """Verdict of the bounded rationality search on w1/w2.

    ``verdict`` is "rational" (with m/n in lowest terms, 0 <= m < n) or
    "no_small_period" (no denominator up to ``max_denominator`` explains
    the ratio). ``ratio`` is w1/w2 in [0, 1).
    """

    ratio: float
    verdict: str
    m: int | None
    n: int | None
    max_denominator: int

    @property
    def is_rational(self) -> bool:
        return self.verdict == "rational"


def classify_ratio(
    spectrum: Spectrum, rel_tol: float = 1e-9, max_den: int = 10 ** 6
) -> RatioClass:
    """Scan continued-fraction convergents of w1/w2 for a small-denominator hit.

    A convergent m/n is accepted only when it matches the ratio at the
    resolution a denominator-n rational can claim:

        |ratio - m/n| <= rel_tol * ratio / n^2.

    A true rational sits at machine precision next to its convergent and
    passes immediately; an irrational with bounded partial quotients
    keeps |ratio - m/n| of order 1/n^2 and never passes, no matter how
    many convergents fall below a flat rel_tol * ratio threshold.
    Convergents are generated in increasing denominator order and are
    automatically in lowest terms.
    """
    if not 0 < rel_tol <= 1e-3:
        raise ValueError(f"rel_tol must be in (0, 1e-3], got {rel_tol}")
    if max_den < 2:
        raise ValueError(f"max_den must be >= 2, got {max_den}")
    if spectrum.omega2 <= 0:
        raise ValueError("fast frequency must be positive")
    ratio = spectrum.ratio
    if ratio == 0.0:
        return RatioClass(ratio=0.0, verdict="rational", m=0, n=1, max_denominator=max_den)

    p_prev, q_prev, p, q = 0, 1, 1, 0
    value = ratio
    while True:
        a = math.floor(value)
        p_prev, q_prev, p, q = p, q, a * p + p_prev, a * q + q_prev
        if q > max_den:
            break
        if q > 0 and abs(ratio - p / q) <= rel_tol * ratio / (q * q):
            return RatioClass(
                ratio=ratio, verdict="rational", m=p, n=q, max_denominator=max_den
            )
        frac = value - a
        if frac == 0.0:
            break
        value = 1.0 / frac
    return RatioClass(
        ratio=ratio, verdict="no_small_period", m=None, n=None, max_denominator=max_den
    )


def period_of(spectrum: Spectrum, rc: RatioClass) -> float:
    """Minimal period 2*pi*n/w2 (equivalently 2*pi*m/w1 when m > 0).

    Valid only for a rational verdict. Lowest terms make the period
    minimal: any smaller closure time would need a common divisor of m
    and n.
    """
    if not rc.is_rational:
        raise NotPeriodic(
            f"no period: no denominator up to {rc.max_denominator} explains "
            f"ratio {rc.ratio!r}"
        )
    return TWO_PI * rc.n / spectrum.omega2


@dataclass(frozen=True)
class TorusSpec:
    """Product-of-circles surface containing the curve.

    ``plane1`` and ``plane2`` are (2, 4) orthonormal bases of the slow
    and fast rotation planes; radii satisfy r1^2 + r2^2 = 1.
    """

    r1: float
    r2: float
    plane1: np.ndarray
    plane2: np.ndarray


def torus_of(form: LissajousForm) -> TorusSpec:
    """Torus carrying a non-degenerate helix (positive curvature and torsion)."""
    if form.spectrum.omega1 <= 0:
        raise DegenerateTorus("degenerate helix: slow frequency is zero")
    r1 = float(np.linalg.norm(form.a1))
    r2 = float(np.linalg.norm(form.a2))
    if r1 <= 0 or r2 <= 0:
        raise DegenerateTorus("coefficient vector of zero magnitude")
    return TorusSpec(
        r1=r1,
        r2=r2,
        plane1=np.array([normalize(form.a1), normalize(form.b1)]),
        plane2=np.array([normalize(form.a2), normalize(form.b2)]),
    )


def angle_lift(form: LissajousForm, t) -> tuple[np.ndarray, np.ndarray]:
    """Angle coordinates (theta1, theta2) in [0, 2*pi) of the curve point(s).

    Two-argument arctangent in each rotation plane; along the curve the
    angles advance linearly, theta_i(t) = w_i * t mod 2*pi for the
    canonical phase.
    """
    torus = torus_of(form)
    pts = form.evaluate(t)
    u1 = pts @ torus.plane1[0]
    v1 = pts @ torus.plane1[1]
    u2 = pts @ torus.plane2[0]
    v2 = pts @ torus.plane2[1]
    theta1 = np.mod(np.arctan2(v1, u1), TWO_PI)
    theta2 = np.mod(np.arctan2(v2, u2), TWO_PI)
    return theta1, theta2


@dataclass(frozen=True)
class DensityReport:
    """Occupancy of a uniform angle grid by the sampled curve.

    ``occupancy`` is the fraction of cells hit; ``largest_gap`` is the
    largest toroidal Chebyshev distance (radians) from any cell center
    to an occupied cell, a direct measure of the biggest hole.
    """

    bins: int
    t_max: float
    n_samples: int
    occupancy: float
    largest_gap: float
    occupied: np.ndarray


def density_report(form: LissajousForm, t_max: float, bins: int) -> DensityReport:
    """Sample the angle flow up to ``t_max`` and grid the visited angles.

    The sampling step resolves the fast frequency (at least 8 samples
    per fast period), so no cell is skipped by aliasing. The step is
    additionally scaled down by the golden ratio: a stride of exactly
    one eighth of the fast period would advance the fast angle by a
    rational fraction of a turn and lock the samples onto a few slowly
    precessing columns; the golden scaling keeps the stride far from
    every low-order resonance.
    """
    if bins < 1:
        raise ValueError(f"bins must be >= 1, got {bins}")
    golden = 0.5 * (1.0 + math.sqrt(5.0))
    step = TWO_PI / (8.0 * form.spectrum.omega2) / golden
    n = max(2, int(math.ceil(t_max / step)) + 1)
    ts = np.linspace(0.0, t_max, n)
    theta1, theta2 = angle_lift(form, ts)
    width = TWO_PI / bins
    i1 = np.minimum((theta1 / width).astype(int), bins - 1)
    i2 = np.minimum((theta2 / width).astype(int), bins - 1)
    occupied = np.zeros((bins, bins), dtype=bool)
    occupied[i1, i2] = True
    occupancy = float(np.count_nonzero(occupied)) / (bins * bins)
    return DensityReport(
        bins=bins,
        t_max=t_max,
        n_samples=n,
        occupancy=occupancy,
        largest_gap=_largest_gap_radians(occupied),
        occupied=occupied,
    )


def _largest_gap_radians(occupied: np.ndarray) -> float:
    """Max toroidal Chebyshev distance (radians) from any cell to a hit cell."""
    bins = occupied.shape[0]
    if occupied.all():
        return 0.0
    if not occupied.any():
        return math.inf
    # Multi-source BFS over the 8-neighborhood with wraparound.
    dist = np.full((bins, bins), -1, dtype=int)
    frontier = list(zip(*np.nonzero(occupied)))
    for cell in frontier:
        dist[cell] = 0
    d = 0
    while frontier:
        d += 1
        nxt = []
        for i, j in frontier:
            for di in (-1, 0, 1):
                for dj in (-1, 0, 1):
                    ni, nj = (i + di) % bins, (j + dj) % bins
                    if dist[ni, nj] < 0:
                        dist[ni, nj] = d
                        nxt.append((ni, nj))
        frontier = nxt
    return float(dist.max()) * (TWO_PI / bins)


@dataclass(frozen=True)
class GlobalClass:
    """Full classification: ratio verdict, period, torus, density evidence."""

    ratio_class: RatioClass
    period: float | None
    torus: TorusSpec | None
    density: DensityReport | None


def classify_form(
    form: LissajousForm,
    rel_tol: float = 1e-9,
    max_den: int = 10 ** 6,
    density_t_max: float | None = 5e3,
    bins: int = 16,
) -> GlobalClass:
    """Classify one helix; density evidence only for non-degenerate curves."""
    rc = classify_ratio(form.spectrum, rel_tol=rel_tol, max_den=max_den)
    period = period_of(form.spectrum, rc) if rc.is_rational else None
    torus = None
    density = None
    if form.spectrum.omega1 > 0:
        torus = torus_of(form)
        if density_t_max is not None:
            density = density_report(form, t_max=density_t_max, bins=bins)
    return GlobalClass(ratio_class=rc, period=period, torus=torus, density=density)


def report_dict(gc: GlobalClass) -> dict:
    """Flat JSON-ready report of a classification."""
    rc = gc.ratio_class
    return {
        "verdict": rc.verdict,
        "ratio": rc.ratio,
        "ratio_inverse": (1.0 / rc.ratio) if rc.ratio > 0 else None,
        "m": rc.m,
        "n": rc.n,
        "max_denominator": rc.max_denominator,
        "period": gc.period,
        "r1": gc.torus.r1 if gc.torus else None,
        "r2": gc.torus.r2 if gc.torus else None,
        "occupancy": gc.density.occupancy if gc.density else None,
        "largest_gap": gc.density.largest_gap if gc.density else None,
    }


def report_json(gc: GlobalClass) -> str:
    return json.dumps(report_dict(gc), sort_keys=True, indent=2)
