"""Command-line interface: classify, spectrum, sweep, selftest."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import selfcheck
from .algebra import NCParams, build_omega, transform_omega_ppt
from .errors import DomainError, NcGaussError
from .presets import PRESET_NAMES, figure_preset
from .spectra import classify, nc_williamson_spectrum
from .states import GammaFamily, StateParams, build_covariance
from .sweep import SweepSpec, sweep_to_csv


def _add_point_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", type=int, choices=(1, 2), default=1, help="covariance family (default 1)")
    parser.add_argument("--theta", type=float, default=0.0, help="position-sector deformation")
    parser.add_argument("--eta", type=float, default=0.0, help="momentum-sector deformation")
    parser.add_argument("--m", type=float, default=0.0, help="correlation parameter m")
    parser.add_argument("--n", type=float, default=0.0, help="correlation parameter n")
    parser.add_argument("--json", action="store_true", help="emit a JSON object instead of a table")


def _parse_range(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise DomainError(f"range must look like MIN:MAX:STEPS, got {text!r}")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise DomainError(f"malformed range {text!r}: {exc}") from exc


def _print_report(pairs: list[tuple[str, object]], as_json: bool) -> None:
    if as_json:
        print(json.dumps(dict(pairs)))
        return
    width = max(len(key) for key, _ in pairs)
    for key, value in pairs:
        rendered = repr(value) if isinstance(value, float) else str(value)
        print(f"{key.ljust(width)}  {rendered}")


def _cmd_classify(args: argparse.Namespace) -> int:
    params = NCParams(args.theta, args.eta)
    state = StateParams(args.m, args.n)
    cov = build_covariance(GammaFamily(args.family), args.m, args.n)
    omega = build_omega(params)
    verdict = classify(cov, omega, transform_omega_ppt(omega))
    _print_report([
        ("family", args.family),
        ("theta", params.theta),
        ("eta", params.eta),
        ("m", state.m),
        ("n", state.n_corr),
        ("R", state.R),
        ("b", state.b),
        ("nu_minus", verdict.nu_minus),
        ("nu_minus_prime", verdict.nu_minus_prime),
        ("class", verdict.tag.value),
    ], args.json)
    return 0


def _cmd_spectrum(args: argparse.Namespace) -> int:
    params = NCParams(args.theta, args.eta)
    cov = build_covariance(GammaFamily(args.family), args.m, args.n)
    omega = build_omega(params)
    if args.transposed:
        omega = transform_omega_ppt(omega)
    spectrum = nc_williamson_spectrum(cov, omega)
    if args.json:
        print(json.dumps({
            "family": args.family, "theta": params.theta, "eta": params.eta,
            "m": args.m, "n": args.n, "transposed": bool(args.transposed),
            "spectrum": list(spectrum.values), "pairing_residual": spectrum.residual,
        }))
    else:
        print("spectrum          " + " ".join(repr(v) for v in spectrum.values))
        print(f"pairing_residual  {spectrum.residual!r}")
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    if args.preset:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        for preset in figure_preset(args.preset):
            path = out_dir / f"{preset.stem}.csv"
            sweep_to_csv(preset.spec, path, jobs=args.jobs)
            print(path)
        return 0
    if args.theta_range is None or args.eta_range is None:
        raise DomainError("either --preset or both --theta-range and --eta-range are required")
    t_min, t_max, t_steps = _parse_range(args.theta_range)
    e_min, e_max, e_steps = _parse_range(args.eta_range)
    spec = SweepSpec(GammaFamily(args.family), args.m, args.n,
                     t_min, t_max, t_steps, e_min, e_max, e_steps)
    sweep_to_csv(spec, args.out, jobs=args.jobs)
    print(args.out)
    return 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    return 0 if selfcheck.run_all() else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncgauss",
        description="Quantumness and separability of two-party Gaussian states on a deformed phase space.")
    commands = parser.add_subparsers(dest="command", required=True)

    p_classify = commands.add_parser("classify", help="classify one state as nonphysical, separable or entangled")
    _add_point_arguments(p_classify)
    p_classify.set_defaults(func=_cmd_classify)

    p_spectrum = commands.add_parser("spectrum", help="print the full invariant spectrum of one state")
    _add_point_arguments(p_spectrum)
    p_spectrum.add_argument("--transposed", action="store_true",
                            help="use the partially transposed structure matrix")
    p_spectrum.set_defaults(func=_cmd_spectrum)

    p_sweep = commands.add_parser("sweep", help="write a CSV grid sweep over the deformation plane")
    p_sweep.add_argument("--family", type=int, choices=(1, 2), default=1)
    p_sweep.add_argument("--m", type=float, default=0.0)
    p_sweep.add_argument("--n", type=float, default=0.0)
    p_sweep.add_argument("--theta-range", help="theta axis as MIN:MAX:STEPS")
    p_sweep.add_argument("--eta-range", help="eta axis as MIN:MAX:STEPS")
    p_sweep.add_argument("--preset", choices=PRESET_NAMES,
                         help="write every CSV behind one reference figure; --out names a directory")
    p_sweep.add_argument("--out", required=True, help="output CSV path (or directory with --preset)")
    p_sweep.add_argument("--jobs", type=int, default=1, help="worker threads for grid evaluation")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_selftest = commands.add_parser("selftest", help="run the bundled verification suite")
    p_selftest.set_defaults(func=_cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NcGaussError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        target = getattr(exc, "filename", None)
        print(f"i/o error{f' ({target})' if target else ''}: {exc.strerror or exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
