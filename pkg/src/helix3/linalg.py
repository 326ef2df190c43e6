"""Dense 4-vector and 4x4-matrix helpers with explicit tolerance contracts.

Vectors are plain numpy arrays of shape (4,), matrices of shape (4, 4).
Frame matrices follow the row convention: each row is one frame vector,
so a frame evolves by left multiplication.
"""

from __future__ import annotations

import numpy as np

from .errors import DegenerateInput

# Absolute max-norm tolerances: tight for single algebraic identities,
# looser for quantities accumulated over many floating-point products.
ALGEBRAIC_TOL = 1e-12
ORTHO_TOL = 1e-10

# A Gram-Schmidt pivot below this is treated as rank deficiency.
_PIVOT_TOL = 1e-10

_EYE = np.eye(4)


def as_vec4(v) -> np.ndarray:
    """Coerce to a finite float vector of shape (4,)."""
    arr = np.asarray(v, dtype=float)
    if arr.shape != (4,):
        raise ValueError(f"expected shape (4,), got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("vector has non-finite entries")
    return arr


def dot(a, b) -> float:
    return float(np.dot(a, b))


def norm(v) -> float:
    return float(np.linalg.norm(v))


def normalize(v) -> np.ndarray:
    n = np.linalg.norm(v)
    if n < _PIVOT_TOL:
        raise DegenerateInput(f"cannot normalize vector of norm {n:.3e}")
    return np.asarray(v, dtype=float) / n


def is_unit(v, tol: float = ALGEBRAIC_TOL) -> bool:
    return abs(np.linalg.norm(v) - 1.0) <= tol


def project_tangent(p, w) -> np.ndarray:
    """Component of ``w`` orthogonal to the unit vector ``p``.

    This is the covariant-derivative projection for the unit sphere:
    differentiate in the ambient space, then remove the radial part,
    ``w - (p . w) p``.
    """
    p = np.asarray(p, dtype=float)
    w = np.asarray(w, dtype=float)
    return w - np.dot(p, w) * p


def orthogonality_defect(m) -> float:
    """Max-norm distance of ``m @ m.T`` from the identity."""
    m = np.asarray(m, dtype=float)
    return float(np.max(np.abs(m @ m.T - _EYE)))


def is_orthogonal(m, tol: float = ORTHO_TOL) -> bool:
    return orthogonality_defect(m) <= tol


def gram_schmidt4(vs) -> np.ndarray:
    """Orthonormalize four vectors; row i spans the same flag as input prefix i.

    Raises DegenerateInput when the inputs are not linearly independent
    (pivot norm below 1e-10).
    """
    vs = np.asarray(vs, dtype=float)
    if vs.shape != (4, 4):
        raise ValueError(f"expected four 4-vectors, got shape {vs.shape}")
    rows = []
    for i in range(4):
        r = vs[i].copy()
        for u in rows:
            r -= np.dot(u, r) * u
        pivot = np.linalg.norm(r)
        if pivot < _PIVOT_TOL:
            raise DegenerateInput(f"rank deficiency at row {i}: pivot {pivot:.3e}")
        rows.append(r / pivot)
    return np.array(rows)


def complete_orthonormal_basis(vs) -> np.ndarray:
    """Extend a short list of independent vectors to an orthonormal 4-basis.

    The given vectors are orthonormalized in order (rank deficiency among
    them raises DegenerateInput); remaining rows are filled from the
    standard basis, skipping directions already spanned.
    """
    rows: list[np.ndarray] = []
    for i, v in enumerate(vs):
        r = np.asarray(v, dtype=float).copy()
        for u in rows:
            r -= np.dot(u, r) * u
        pivot = np.linalg.norm(r)
        if pivot < _PIVOT_TOL:
            raise DegenerateInput(f"given vector {i} dependent on predecessors")
        rows.append(r / pivot)
    for k in range(4):
        if len(rows) == 4:
            break
        r = _EYE[k].copy()
        for u in rows:
            r -= np.dot(u, r) * u
        pivot = np.linalg.norm(r)
        if pivot >= _PIVOT_TOL:
            rows.append(r / pivot)
    if len(rows) != 4:
        raise DegenerateInput("could not complete basis")
    return np.array(rows)


def random_orthogonal(rng: np.random.Generator) -> np.ndarray:
    """Draw a 4x4 orthogonal matrix (both determinant signs occur)."""
    q, r = np.linalg.qr(rng.standard_normal((4, 4)))
    return q * np.sign(np.diag(r))
