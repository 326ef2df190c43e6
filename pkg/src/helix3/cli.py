"""Command-line surface: construct, integrate, estimate, classify,
congruence, project, extract.

All outputs are deterministic for identical invocations: seeds come from
flags or the HELIX3_SEED environment variable, JSON keys are sorted, and
no output embeds timestamps.

Exit codes: 0 ok; 2 invalid parameters or mismatched inputs; 3 I/O or
format failure; 4 a numerical convention was applied (reported, not
fatal).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import __version__
from .classify import classify_form, report_dict
from .congruence import apply_orthogonal, congruence_between, verify_congruence
from .errors import (
    DegenerateTorus,
    FormatError,
    HelixError,
    InvalidParams,
    IoError,
    NearPole,
    NoPoleFound,
    SpectrumMismatch,
)
from .estimate import estimate_kappa_tau
from .expr import parse_number
from .frenet import identity_frame
from .helix import HelixParams, construct_canonical, spectrum_of
from .linalg import random_orthogonal
from .projection import (
    ProjectionSpec,
    choose_pole,
    export_projected,
    export_samples,
    import_samples,
    project_samples,
)
from .samples import sample_closed_form, sample_frenet_frames
from .trigfit import (
    averaging_bound,
    fit_lissajous,
    reconstruction_residual,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_IO = 3
EXIT_CONVENTION = 4

_POLE_CHOICES = ["auto", "e1", "-e1", "e2", "-e2", "e3", "-e3", "e4", "-e4"]


def _env_seed() -> int:
    return int(os.environ.get("HELIX3_SEED", "0"))


def _number(text: str) -> float:
    try:
        return parse_number(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _add_param_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--kappa", "--kappa-expr", type=_number, required=True, metavar="EXPR",
        help="curvature; accepts arithmetic such as 5*sqrt(3)/4",
    )
    parser.add_argument(
        "--tau", "--tau-expr", type=_number, required=True, metavar="EXPR",
        help="torsion; accepts arithmetic such as sqrt(29)/4",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="helix3",
        description="Constant-curvature/torsion curves on the unit 3-sphere.",
    )
    parser.add_argument("--version", action="version", version=f"helix3 {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="sample the canonical closed form to CSV")
    _add_param_args(p)
    p.add_argument("--t-max", type=_number, default=100.0)
    p.add_argument("--dt", type=_number, default=1e-3)
    p.add_argument("--out", required=True, help="samples CSV path")
    p.add_argument("--meta", default=None,
                   help="metadata JSON path (default: <out>.meta.json)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("integrate", help="evolve the frame flow, write samples+frames CSV")
    _add_param_args(p)
    p.add_argument("--t-max", type=_number, default=100.0)
    p.add_argument("--dt", type=_number, default=1e-3)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("estimate", help="estimate curvature/torsion from a samples CSV")
    p.add_argument("--in", dest="in_path", required=True)
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("classify", help="periodicity verdict, period, torus, density")
    _add_param_args(p)
    p.add_argument("--rel-tol", type=_number, default=1e-9)
    p.add_argument("--max-den", type=int, default=10 ** 6)
    p.add_argument("--bins", type=int, default=16)
    p.add_argument("--density-t-max", type=_number, default=5e3)
    p.add_argument("--no-density", action="store_true",
                   help="skip the density simulation")
    p.add_argument("--plot", default=None, metavar="PNG",
                   help="also render the density grid to this file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("congruence",
                       help="map a random orthogonal image back onto the canonical helix")
    _add_param_args(p)
    p.add_argument("--seed", type=int, default=None,
                   help="rotation seed (default: HELIX3_SEED or 0)")
    p.add_argument("--samples", type=int, default=100)
    p.set_defaults(func=cmd_congruence)

    p = sub.add_parser("project", help="stereographic projection of a samples CSV")
    p.add_argument("--in", dest="in_path", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=["csv", "ply"], default="csv")
    p.add_argument("--pole", choices=_POLE_CHOICES, default="auto")
    p.add_argument("--margin", type=_number, default=1e-2)
    p.add_argument("--plot", default=None, metavar="PNG",
                   help="also render the projected curve to this file")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("extract",
                       help="recover the closed form from samples by averaging")
    p.add_argument("--in", dest="in_path", required=True)
    _add_param_args(p)
    p.set_defaults(func=cmd_extract)

    return parser


def _meta_path(out_path: str) -> str:
    root, _ = os.path.splitext(out_path)
    return root + ".meta.json"


def cmd_construct(args) -> int:
    params = HelixParams(kappa=args.kappa, tau=args.tau)
    form = construct_canonical(params)
    samples = sample_closed_form(form, t_max=args.t_max, dt=args.dt)
    export_samples(samples, args.out)
    spec = form.spectrum
    mag1 = float(np.linalg.norm(form.a1))
    mag2 = float(np.linalg.norm(form.a2))
    nondegenerate = params.tau > 0
    meta = {
        "version": __version__,
        "kappa": params.kappa,
        "tau": params.tau,
        "omega1": spec.omega1,
        "omega2": spec.omega2,
        "mag_a1": mag1,
        "mag_a2": mag2,
        "r1": mag1 if nondegenerate else None,
        "r2": mag2 if nondegenerate else None,
        "t_max": args.t_max,
        "dt": args.dt,
        "n_samples": len(samples),
    }
    meta_path = args.meta or _meta_path(args.out)
    try:
        with open(meta_path, "w", encoding="utf-8") as fh:
            json.dump(meta, fh, sort_keys=True, indent=2)
            fh.write("\n")
    except OSError as exc:
        raise IoError(f"cannot write {meta_path}: {exc}") from exc
    _print_json(meta)
    return EXIT_OK


def cmd_integrate(args) -> int:
    params = HelixParams(kappa=args.kappa, tau=args.tau)
    samples = sample_frenet_frames(
        params, t_max=args.t_max, dt=args.dt, x0=identity_frame()
    )
    export_samples(samples, args.out)
    _print_json({
        "version": __version__,
        "kappa": params.kappa,
        "tau": params.tau,
        "n_samples": len(samples),
        "with_frames": True,
        "out": args.out,
    })
    return EXIT_OK


def cmd_estimate(args) -> int:
    samples = import_samples(args.in_path)
    est = estimate_kappa_tau(samples)
    payload = {
        "kappa_hat": est.kappa_hat,
        "tau_hat": est.tau_hat,
        "kappa_spread_max": est.kappa_spread_max,
        "kappa_spread_mean": est.kappa_spread_mean,
        "tau_spread_max": est.tau_spread_max,
        "tau_spread_mean": est.tau_spread_mean,
        "tau_by_convention": est.tau_by_convention,
    }
    if est.tau_by_convention:
        payload["note"] = (
            "curvature is numerically zero; torsion reported as 0 by the "
            "zero-curvature convention"
        )
    _print_json(payload)
    return EXIT_CONVENTION if est.tau_by_convention else EXIT_OK


def cmd_classify(args) -> int:
    params = HelixParams(kappa=args.kappa, tau=args.tau)
    form = construct_canonical(params)
    gc = classify_form(
        form,
        rel_tol=args.rel_tol,
        max_den=args.max_den,
        density_t_max=None if args.no_density else args.density_t_max,
        bins=args.bins,
    )
    _print_json(report_dict(gc))
    if args.plot and gc.density is not None:
        from .plotting import save_density_figure

        save_density_figure(gc.density, args.plot)
    return EXIT_OK


def cmd_congruence(args) -> int:
    params = HelixParams(kappa=args.kappa, tau=args.tau)
    form = construct_canonical(params)
    seed = args.seed if args.seed is not None else _env_seed()
    rng = np.random.default_rng(seed)
    rotation = random_orthogonal(rng)
    rotated = apply_orthogonal(rotation, form)
    g = congruence_between(form, rotated)
    report = verify_congruence(form, rotated, g, n_samples=args.samples, rng=rng)
    _print_json({
        "seed": seed,
        "n_samples": report.n_samples,
        "max_residual": report.max_residual,
        "ok": bool(report.max_residual <= 1e-9),
    })
    return EXIT_OK


def _pole_spec(name: str, margin: float, samples) -> ProjectionSpec:
    if name == "auto":
        return choose_pole(samples, margin=margin)
    sign = -1.0 if name.startswith("-") else 1.0
    axis = int(name[-1]) - 1
    pole = np.zeros(4)
    pole[axis] = sign
    return ProjectionSpec(pole=pole, min_pole_distance=margin)


def cmd_project(args) -> int:
    samples = import_samples(args.in_path)
    spec = _pole_spec(args.pole, args.margin, samples)
    points = project_samples(spec, samples)
    export_projected(points, args.out, fmt=args.format)
    _print_json({
        "pole": [float(c) for c in spec.pole],
        "margin": args.margin,
        "n_points": len(points),
        "format": args.format,
        "out": args.out,
    })
    if args.plot:
        from .plotting import save_projection_figure

        save_projection_figure(points, args.plot)
    return EXIT_OK


def cmd_extract(args) -> int:
    samples = import_samples(args.in_path)
    params = HelixParams(kappa=args.kappa, tau=args.tau)
    spectrum = spectrum_of(params)
    form = fit_lissajous(samples, spectrum)
    coeff_sum = float(sum(np.linalg.norm(v)
                          for v in (form.a1, form.b1, form.a2, form.b2)))
    w1, w2 = spectrum.omega1, spectrum.omega2
    gap = min(w2 - w1, 2 * w1) if w1 > 0 else w2
    _print_json({
        "omega1": w1,
        "omega2": w2,
        "mag_a1": float(np.linalg.norm(form.a1)),
        "mag_b1": float(np.linalg.norm(form.b1)),
        "mag_a2": float(np.linalg.norm(form.a2)),
        "mag_b2": float(np.linalg.norm(form.b2)),
        "residual": reconstruction_residual(form, samples),
        "bound": averaging_bound(coeff_sum, samples.span, gap),
    })
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidParams as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (SpectrumMismatch, NearPole, NoPoleFound, DegenerateTorus) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (IoError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except HelixError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
