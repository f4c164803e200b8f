"""Command-line front end.

Usage:
    qproj catalog                          # list catalog measurement sets
    qproj catalog trine --out trine.json   # dump one as JSON
    qproj analyze --catalog square
    qproj classify --catalog tetrahedron --sigma 1 --bloch 0,0,-1
    qproj scan --catalog octahedron --sigma 0.5 --step 0.1 --out scan.csv
    qproj kd --pair computational_hadamard --bloch 1,0,0
    qproj reconstruct --catalog trine --p p.json --sigma 1

Exit status: 0 on success (a nonclassical verdict is a success), 1 on domain
errors, 2 on usage or input-format errors.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .catalog import BASIS_PAIRS, CATALOG_IDS, catalog, standard_basis_pair
from .classicality import region_scan, sigma_classical
from .errors import ParseError, QprojError, SchemaError
from .frame import classify_completeness, validate_povm
from .io import (
    dump_measurement_set,
    fmt_complex,
    fmt_real,
    parse_matrix,
    parse_measurement_set,
    parse_pvector,
    real_value,
)
from .linalg import nullspace_basis
from .quasiprob import kirkwood_dirac, reconstruct
from .states import bloch_to_density, validate_density


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _json(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _cmatrix(m):
    return [[fmt_complex(z) for z in row] for row in m]


def _load_set(args):
    if args.catalog is not None:
        return catalog(args.catalog)
    return parse_measurement_set(_read(args.set))


def _load_state(args, dim):
    if args.bloch is not None:
        try:
            coords = [float(c) for c in args.bloch.split(",")]
        except ValueError:
            raise UsageError(f"--bloch expects x,y,z, got {args.bloch!r}") from None
        if len(coords) != 3:
            raise UsageError(f"--bloch expects three comma-separated numbers, got {args.bloch!r}")
        return bloch_to_density(coords)
    if args.state is not None:
        return validate_density(parse_matrix(_read(args.state)), args.tol)
    if dim == 2:
        raise UsageError("give the state with --bloch x,y,z or --state FILE")
    raise UsageError("give the state with --state FILE")


def cmd_catalog(args):
    if args.name is None:
        _emit("".join(f"{name}\n" for name in CATALOG_IDS), args.out)
    else:
        _emit(dump_measurement_set(catalog(args.name)), args.out)


def cmd_analyze(args):
    mset = _load_set(args)
    spec = mset.spectrum(args.tol)
    cls = classify_completeness(mset, args.tol)
    report = validate_povm(mset)
    doc = {
        "dim": mset.dim,
        "outcomes": mset.size,
        "labels": list(mset.labels),
        "metric": _cmatrix(mset.metric),
        "eigenvalues": [real_value(v) for v in spec.eigenvalues],
        "rank": spec.rank,
        "complete": cls.is_complete,
        "incomplete": not cls.is_complete,
        "overcomplete": cls.is_overcomplete,
        "nullspace": [[fmt_complex(z) for z in v] for v in nullspace_basis(spec)],
        "povm": {
            "is_povm": report.is_povm,
            "hermiticity_defect": real_value(report.hermiticity_defect),
            "min_eigenvalue": real_value(report.min_eigenvalue),
            "completeness_defect": real_value(report.completeness_defect),
        },
    }
    _emit(_json(doc), args.out)


def cmd_classify(args):
    mset = _load_set(args)
    rho = _load_state(args, mset.dim)
    v = sigma_classical(mset, rho, args.sigma, args.tol)
    coeffs = np.asarray(v.nullspace_coefficients)
    doc = {
        "classical": v.classical,
        "boundary": v.boundary,
        "sigma": real_value(args.sigma),
        "maxmin": real_value(v.maxmin_value),
        "witness": [fmt_complex(z) for z in v.witness.entries],
        "labels": list(mset.labels),
        "nullspace_coefficients": (
            [real_value(c) for c in coeffs] if np.isrealobj(coeffs) else [fmt_complex(c) for c in coeffs]
        ),
        "imag_residual": real_value(v.imag_residual),
    }
    _emit(_json(doc), args.out)


def cmd_scan(args):
    if not 0 < args.step <= 0.5:
        raise UsageError(f"--step must lie in (0, 0.5], got {args.step}")
    mset = _load_set(args)
    scan = region_scan(mset, args.sigma, args.step, args.tol)
    lines = ["x,y,z,classical,maxmin"]
    for (x, y, z), flag, t in zip(scan.points, scan.classical, scan.maxmin):
        lines.append(f"{fmt_real(x)},{fmt_real(y)},{fmt_real(z)},{int(flag)},{fmt_real(t)}")
    summary = f"# classical_fraction={fmt_real(scan.classical_fraction)}"
    lines.append(summary)
    _emit("\n".join(lines) + "\n", args.out)
    if args.out not in (None, "-"):
        sys.stdout.write(summary + "\n")


def cmd_kd(args):
    a, b = standard_basis_pair(args.pair, args.dim)
    rho = _load_state(args, a.shape[0])
    p = kirkwood_dirac(a, b, rho)
    d = a.shape[0]
    lines = ["k,l,P"]
    for idx, z in enumerate(p.entries):
        lines.append(f"{idx // d},{idx % d},{fmt_complex(z)}")
    lines.append(f"# sum={fmt_complex(p.entries.sum())}")
    _emit("\n".join(lines) + "\n", args.out)


def cmd_reconstruct(args):
    mset = _load_set(args)
    entries, file_sigma = parse_pvector(_read(args.p))
    sigma = args.sigma if args.sigma is not None else (1.0 if file_sigma is None else file_sigma)
    m = reconstruct(mset, entries, sigma, args.tol)
    _emit(_json({"sigma": real_value(sigma), "matrix": _cmatrix(m)}), args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qproj", description="Measurement-based quasiprobabilities and sigma-classicality."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-9, help="rank / validation tolerance")
    common.add_argument("--out", default=None, help="output path (default: standard output)")

    source = argparse.ArgumentParser(add_help=False)
    group = source.add_mutually_exclusive_group(required=True)
    group.add_argument("--catalog", choices=CATALOG_IDS)
    group.add_argument("--set", metavar="FILE", help="measurement-set JSON file")

    state = argparse.ArgumentParser(add_help=False)
    sgroup = state.add_mutually_exclusive_group()
    sgroup.add_argument("--bloch", metavar="X,Y,Z")
    sgroup.add_argument("--state", metavar="FILE", help="density-matrix JSON file")

    p = sub.add_parser("catalog", parents=[common], help="list or dump catalog sets")
    p.add_argument("name", nargs="?", choices=CATALOG_IDS)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("analyze", parents=[common, source], help="metric, spectrum, completeness")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", parents=[common, source, state], help="classify one state")
    p.add_argument("--sigma", type=float, default=1.0)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("scan", parents=[common, source], help="classify a Bloch-ball grid to CSV")
    p.add_argument("--sigma", type=float, default=1.0)
    p.add_argument("--step", type=float, default=0.1)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("kd", parents=[common, state], help="Kirkwood-Dirac distribution")
    p.add_argument("--pair", choices=BASIS_PAIRS, default="computational_hadamard")
    p.add_argument("--dim", type=int, default=2, help="dimension for the fourier pair")
    p.set_defaults(func=cmd_kd)

    p = sub.add_parser("reconstruct", parents=[common, source], help="operator from a P vector")
    p.add_argument("--p", required=True, metavar="FILE", help="P-vector JSON file")
    p.add_argument("--sigma", type=float, default=None, help="defaults to the file's sigma, else 1")
    p.set_defaults(func=cmd_reconstruct)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "command", None) == "kd" and args.pair == "computational_hadamard":
        args.dim = 2
    try:
        args.func(args)
    except (UsageError, ParseError, SchemaError) as exc:
        print(f"qproj {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except QprojError as exc:
        print(f"qproj {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
