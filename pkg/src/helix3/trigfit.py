"""Coefficient recovery for finite trigonometric sums by long-time averaging.

For f(t) = sum_k (a_k sin(w_k t) + b_k cos(w_k t)) with known, distinct
frequencies, averaging f against cos(w t) and sin(w t) over a span T
isolates one component: every cross term integrates to something bounded
by 2/|frequency gap|, so after dividing by T it decays like 1/(T * gap).
The quantitative bound used throughout is

    |error| <= 2 * (sum of coefficient norms) / (T * gap)

plus quadrature error, which the composite trapezoid rule keeps far
below that for the sampling rates used here (at least 8 samples per
period of the fastest frequency).

Applied to curve samples this inverts the closed form: it recovers the
coefficient vectors of a helix from nothing but sampled points, e.g.
from the output of the frame integrator.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InsufficientSpan, SpectrumMismatch
from .helix import LissajousForm, Spectrum
from .samples import CurveSamples

__all__ = [
    "TrigSum",
    "extract_coefficient",
    "averaging_bound",
    "fit_lissajous",
    "reconstruction_residual",
]

# The averaging error scales like 1/(T * gap); below this product the
# recovered coefficients are not meaningfully better than noise.
_MIN_SPAN_GAP = 50.0


@dataclass(frozen=True)
class TrigSum:
    """Vector-valued trigonometric sum with fixed, distinct frequencies.

    ``frequencies`` must be strictly increasing and non-negative;
    ``cos_coeffs`` and ``sin_coeffs`` have one R^4 row per frequency.
    The sin coefficient of a zero frequency is identically invisible
    (sin(0) = 0) and is stored as the zero vector.
    """

    frequencies: tuple
    cos_coeffs: np.ndarray
    sin_coeffs: np.ndarray

    def __post_init__(self):
        freqs = np.asarray(self.frequencies, dtype=float)
        if np.any(freqs < 0):
            raise ValueError("frequencies must be non-negative")
        if np.any(np.diff(freqs) <= 0):
            raise ValueError("frequencies must be strictly increasing")
        cos_c = np.atleast_2d(np.asarray(self.cos_coeffs, dtype=float))
        sin_c = np.atleast_2d(np.asarray(self.sin_coeffs, dtype=float))
        if cos_c.shape != (len(freqs), 4) or sin_c.shape != (len(freqs), 4):
            raise ValueError("need one 4-vector coefficient per frequency")
        if len(freqs) and freqs[0] == 0.0:
            sin_c = sin_c.copy()
            sin_c[0] = 0.0
        object.__setattr__(self, "frequencies", tuple(freqs))
        object.__setattr__(self, "cos_coeffs", cos_c)
        object.__setattr__(self, "sin_coeffs", sin_c)

    def evaluate(self, ts) -> np.ndarray:
        ts = np.asarray(ts, dtype=float)
        out = np.zeros(ts.shape + (4,))
        for w, bc, ac in zip(self.frequencies, self.cos_coeffs, self.sin_coeffs):
            out += np.multiply.outer(np.cos(w * ts), bc)
            out += np.multiply.outer(np.sin(w * ts), ac)
        return out

    def coefficient_norm_sum(self) -> float:
        return float(
            np.sum(np.linalg.norm(self.cos_coeffs, axis=1))
            + np.sum(np.linalg.norm(self.sin_coeffs, axis=1))
        )

    def min_gap(self, alpha: float) -> float:
        """Smallest distance from alpha to the other exponential frequencies.

        In exponential form the sum has frequencies {+-w_k}; extracting
        alpha > 0 must separate it from -alpha as well, hence the 2*alpha
        term.
        """
        gaps = []
        for w in self.frequencies:
            if w != alpha:
                gaps.append(abs(alpha - w))
            if alpha + w > 0:
                gaps.append(alpha + w)
        return min(gaps) if gaps else np.inf


def averaging_bound(coeff_norm_sum: float, span: float, gap: float) -> float:
    """Truncation bound 2 * sum|coeffs| / (T * gap) of the averaging trick."""
    return 2.0 * coeff_norm_sum / (span * gap)


def extract_coefficient(
    samples: CurveSamples, alpha: float, min_gap: float | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """Recover the cos/sin coefficient vectors at frequency ``alpha``.

    Composite-trapezoid averaging of the samples against cos(alpha t)
    and sin(alpha t) over the full span. For alpha = 0 the cos part is
    the plain mean and the sin part is zero. When ``min_gap`` (the
    caller's knowledge of the closest competing frequency) is supplied,
    spans with span * gap < 50 are rejected as too short to resolve it.
    """
    if alpha < 0:
        raise ValueError(f"alpha must be non-negative, got {alpha}")
    span = samples.span
    if span <= 0:
        raise InsufficientSpan("need at least two samples")
    if min_gap is not None and span * min_gap < _MIN_SPAN_GAP:
        raise InsufficientSpan(
            f"span*gap = {span * min_gap:.1f} < {_MIN_SPAN_GAP}; "
            "averaging cannot separate the frequencies"
        )
    ts = samples.ts
    f = samples.points
    if alpha == 0.0:
        cos_part = np.trapezoid(f, ts, axis=0) / span
        return cos_part, np.zeros(4)
    cos_part = 2.0 / span * np.trapezoid(f * np.cos(alpha * ts)[:, None], ts, axis=0)
    sin_part = 2.0 / span * np.trapezoid(f * np.sin(alpha * ts)[:, None], ts, axis=0)
    return cos_part, sin_part


def _spectrum_gaps(spectrum: Spectrum) -> tuple[float, float]:
    """Competing-frequency gaps for the slow and fast extractions."""
    w1, w2 = spectrum.omega1, spectrum.omega2
    if w1 > 0:
        return min(w2 - w1, 2.0 * w1), min(w2 - w1, 2.0 * w2)
    return w2, w2


def fit_lissajous(samples: CurveSamples, spectrum: Spectrum) -> LissajousForm:
    """Recover the closed form of a sampled helix with known frequencies.

    Extracts all four coefficient vectors by averaging, rebuilds the
    form, and verifies it reproduces the samples to within 10x the
    averaging bound; a larger residual means the samples do not carry
    the claimed frequencies (SpectrumMismatch).
    """
    gap1, gap2 = _spectrum_gaps(spectrum)
    a1, b1 = extract_coefficient(samples, spectrum.omega1, min_gap=gap1)
    a2, b2 = extract_coefficient(samples, spectrum.omega2, min_gap=gap2)
    form = LissajousForm(spectrum=spectrum, a1=a1, b1=b1, a2=a2, b2=b2)

    coeff_sum = float(sum(np.linalg.norm(v) for v in (a1, b1, a2, b2)))
    bound = averaging_bound(coeff_sum, samples.span, min(gap1, gap2))
    residual = reconstruction_residual(form, samples)
    if residual > 10.0 * bound:
        raise SpectrumMismatch(
            f"reconstruction residual {residual:.3e} exceeds 10x averaging "
            f"bound {bound:.3e}; sample spectrum does not match"
        )
    return form


def reconstruction_residual(form: LissajousForm, samples: CurveSamples) -> float:
    """Max pointwise distance between the form and the samples."""
    recon = form.evaluate(samples.ts)
    return float(np.max(np.linalg.norm(recon - samples.points, axis=1)))
