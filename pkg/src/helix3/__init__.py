"""Curves of constant curvature and torsion on the unit 3-sphere.

Construction from the two-frequency closed form, exact frame evolution,
coefficient recovery by averaging, curvature/torsion estimation from raw
samples, periodicity/density classification, congruence construction,
and stereographic export.
"""

__version__ = "0.1.0"

from .classify import (
    DensityReport,
    GlobalClass,
    RatioClass,
    TorusSpec,
    angle_lift,
    classify_form,
    classify_ratio,
    density_report,
    period_of,
    torus_of,
)
from .congruence import apply_orthogonal, congruence_between, verify_congruence
from .errors import HelixError
from .estimate import (
    FrenetEstimate,
    covariant_derivative,
    estimate_kappa_tau,
    frame_residuals,
)
from .frenet import (
    FrameState,
    FrenetMatrix,
    evolve,
    exp_tC,
    frame_trajectory,
    frenet_matrix,
    identity_frame,
    reference_integrate,
)
from .helix import (
    HelixParams,
    LissajousForm,
    Spectrum,
    construct_canonical,
    frame_at,
    initial_frame,
    spectrum_of,
)
from .projection import (
    Projected3,
    ProjectionSpec,
    choose_pole,
    export_projected,
    export_samples,
    import_samples,
    project_samples,
    stereographic,
)
from .samples import CurveSamples, sample_closed_form, sample_frenet_frames
from .trigfit import (
    TrigSum,
    averaging_bound,
    extract_coefficient,
    fit_lissajous,
    reconstruction_residual,
)

__all__ = [
    "__version__",
    "HelixError",
    "HelixParams",
    "Spectrum",
    "LissajousForm",
    "spectrum_of",
    "construct_canonical",
    "frame_at",
    "initial_frame",
    "FrenetMatrix",
    "FrameState",
    "frenet_matrix",
    "exp_tC",
    "evolve",
    "frame_trajectory",
    "identity_frame",
    "reference_integrate",
    "CurveSamples",
    "sample_closed_form",
    "sample_frenet_frames",
    "FrenetEstimate",
    "covariant_derivative",
    "estimate_kappa_tau",
    "frame_residuals",
    "TrigSum",
    "extract_coefficient",
    "averaging_bound",
    "fit_lissajous",
    "reconstruction_residual",
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
    "apply_orthogonal",
    "congruence_between",
    "verify_congruence",
    "ProjectionSpec",
    "Projected3",
    "stereographic",
    "project_samples",
    "choose_pole",
    "export_samples",
    "import_samples",
    "export_projected",
]
