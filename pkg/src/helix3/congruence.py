"""Orthogonal maps carrying one helix onto another with equal parameters.

Two helices with the same curvature and torsion share their frequency
spectrum and their coefficient-vector magnitudes, so the orthonormal
directions of those vectors determine an orthogonal map of R^4 taking
one curve pointwise onto the other. Degenerate cases provide fewer than
four directions; the map is completed deterministically from the
standard basis.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import SpectrumMismatch
from .helix import LissajousForm

__all__ = [
    "CongruenceReport",
    "apply_orthogonal",
    "congruence_between",
    "verify_congruence",
    "default_seed",
]

_SPECTRUM_TOL = 1e-10
_ZERO_VEC_TOL = 1e-12


def default_seed() -> int:
    """Seed for sampling-based checks; override with env var HELIX3_SEED."""
    return int(os.environ.get("HELIX3_SEED", "0"))


def apply_orthogonal(g: np.ndarray, form: LissajousForm) -> LissajousForm:
    """Image of a helix under an orthogonal map of the ambient space."""
    return LissajousForm(
        spectrum=form.spectrum,
        a1=g @ form.a1,
        b1=g @ form.b1,
        a2=g @ form.a2,
        b2=g @ form.b2,
    )


def _direction_basis(form: LissajousForm) -> np.ndarray:
    """Orthonormal rows spanning R^4, led by the coefficient directions.

    Non-degenerate forms contribute all four directions; a circle
    contributes three (or two for a great circle) and the rest is
    completed from the standard basis. Phase convention: cos directions
    map to cos directions, so the map matches the curves at t = 0
    without any time shift.
    """
    vs = [form.a1, form.b1, form.a2, form.b2]
    kept = [v for v in vs if np.linalg.norm(v) > _ZERO_VEC_TOL]
    return linalg.complete_orthonormal_basis(kept)


def congruence_between(a: LissajousForm, b: LissajousForm) -> np.ndarray:
    """Orthogonal matrix G with G @ a(t) = b(t) for all t.

    Requires equal spectra (within 1e-10 per frequency); the returned
    matrix maps each coefficient direction of ``a`` to the corresponding
    one of ``b``. When stabilizer freedom exists (degenerate cases) one
    deterministic representative is produced.
    """
    if not a.spectrum.close_to(b.spectrum, tol=_SPECTRUM_TOL):
        raise SpectrumMismatch(
            f"frequency mismatch: ({a.spectrum.omega1}, {a.spectrum.omega2}) vs "
            f"({b.spectrum.omega1}, {b.spectrum.omega2})"
        )
    u = _direction_basis(a)
    v = _direction_basis(b)
    return v.T @ u


@dataclass(frozen=True)
class CongruenceReport:
    """Pointwise residual of a candidate congruence over random samples."""

    max_residual: float
    n_samples: int
    empty: bool


def verify_congruence(
    a: LissajousForm,
    b: LissajousForm,
    g: np.ndarray,
    n_samples: int = 100,
    rng: np.random.Generator | None = None,
) -> CongruenceReport:
    """Max over random arc lengths of |G a(t) - b(t)|.

    Zero samples yields residual 0 by convention, flagged empty.
    """
    if n_samples <= 0:
        return CongruenceReport(max_residual=0.0, n_samples=0, empty=True)
    if rng is None:
        rng = np.random.default_rng(default_seed())
    ts = rng.uniform(-100.0, 100.0, size=n_samples)
    mapped = a.evaluate(ts) @ g.T
    residual = float(np.max(np.linalg.norm(mapped - b.evaluate(ts), axis=1)))
    return CongruenceReport(max_residual=residual, n_samples=n_samples, empty=False)
