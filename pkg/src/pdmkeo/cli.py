"""Command-line interface with machine-readable JSON/CSV output.

Exit codes: 0 success, 1 domain error (single-line diagnostic on stderr,
no traceback), 2 usage error. Exact quantities cross the boundary as
rational strings like "-1/3"; grid and physical quantities as decimals.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .classify import (
    BOUNDARY_NAMES,
    REGIONS,
    classify,
    dual,
    from_duality,
    invert,
    region_samples,
    to_duality,
)
from .discretize import Grid, assemble_linear, assemble_terms, equivalence_defect, to_csv, to_json_dict
from .errors import KeoError
from .ordering import catalog, linear_params, validate
from .parser import parse, print_canonical
from .profiles import make_profile
from .spectra import dual_pair_report, hamiltonian, make_potential, solve
from .surds import Surd

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")

# let argparse accept values like -1/3 (its stock matcher only knows -1, -0.5)
_NEGATIVE_VALUE_RE = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


def rational_arg(text):
    if isinstance(text, Fraction):
        return text
    text = str(text).strip()
    if not _RATIONAL_RE.match(text):
        raise argparse.ArgumentTypeError(
            f"expected an exact rational like -1/3, got {text!r}"
        )
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError(f"zero denominator in {text!r}")


def _fmt(value, float_mode=False) -> str:
    if float_mode:
        return repr(float(value))
    return str(value)


def _emit(args, doc: dict, csv_rows=None) -> None:
    if args.format == "csv":
        if csv_rows is None:
            raise KeoError("this command has no CSV form; use --format json")
        text = "\n".join(",".join(str(c) for c in row) for row in csv_rows) + "\n"
    else:
        text = json.dumps(doc, indent=2) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _resolve_spec(args):
    if getattr(args, "name", None):
        spec = catalog(args.name)
    else:
        spec = parse(args.expr)
    for warning in validate(spec):
        print(f"warning: {warning}", file=sys.stderr)
    return spec


def _grid(args) -> Grid:
    return Grid(args.xmin, args.xmax, args.n)


def _sorted_labels(labels):
    return sorted(labels, key=lambda lab: REGIONS.index(lab.region))


def _label_doc(label) -> dict:
    bounds = sorted(label.boundaries, key=BOUNDARY_NAMES.index)
    return {"region": label.region, "boundaries": bounds}


def _bump_psi(grid: Grid):
    a, b = grid.x_min, grid.x_max
    scale = ((b - a) / 2.0) ** 4

    def psi(x):
        return ((x - a) * (b - x)) ** 2 / scale

    return psi


def cmd_params(args) -> dict:
    spec = _resolve_spec(args)
    lp = linear_params(spec)
    return {"xi": str(lp.xi), "zeta": str(lp.zeta), "eta": str(lp.eta)}


def cmd_classify(args) -> dict:
    labels = _sorted_labels(classify(args.xi, args.zeta))
    return {
        "xi": str(args.xi),
        "zeta": str(args.zeta),
        "labels": [_label_doc(lab) for lab in labels],
    }


def cmd_invert(args) -> dict:
    spec = invert(args.xi, args.zeta, args.cls, float_mode=args.float)
    doc = {
        "class": args.cls,
        "xi": str(args.xi),
        "zeta": str(args.zeta),
        "float_mode": args.float,
        "terms": [
            {
                "w": _fmt(t.w, args.float),
                "alpha": _fmt(t.alpha, args.float),
                "beta": _fmt(t.beta, args.float),
                "gamma": _fmt(t.gamma, args.float),
            }
            for t in spec.terms
        ],
    }
    if not args.float and all(
        not isinstance(v, Surd) or v.is_rational
        for t in spec.terms
        for v in (t.w, t.alpha, t.beta, t.gamma)
    ):
        doc["expression"] = print_canonical(spec)
    else:
        doc["expression"] = None
    return doc


def cmd_dual(args) -> dict:
    d = to_duality(args.xi, args.zeta)
    image = dual(d)
    _, dual_zeta = from_duality(image)
    return {
        "xi": str(args.xi),
        "zeta": str(args.zeta),
        "theta": str(d.theta),
        "dual_theta": str(image.theta),
        "dual_zeta": str(dual_zeta),
    }


TABLE_ENTRIES = (
    "vR(-1/4,-1/2)",
    "MB(-1/3)",
    "BDD",
    "ZK",
    "MM",
    "GW",
    "LKDA(-1/3)",
    "LK",
    "W",
    "DA(-1/2)",
    "Lal",
    "YY",
)


def table_rows() -> list[dict]:
    rows = []
    for name in TABLE_ENTRIES:
        spec = catalog(name)
        lp = linear_params(spec)
        rows.append(
            {
                "name": spec.name,
                "weights": [str(t.w) for t in spec.terms],
                "alpha": [str(t.alpha) for t in spec.terms],
                "beta": [str(t.beta) for t in spec.terms],
                "gamma": [str(t.gamma) for t in spec.terms],
                "xi": str(lp.xi),
                "zeta": str(lp.zeta),
                "eta": str(lp.eta),
            }
        )
    return rows


def cmd_table1(args):
    rows = table_rows()
    csv_rows = [["name", "weights", "alpha", "beta", "gamma", "xi", "zeta", "eta"]]
    for r in rows:
        csv_rows.append(
            [
                r["name"],
                "|".join(r["weights"]),
                "|".join(r["alpha"]),
                "|".join(r["beta"]),
                "|".join(r["gamma"]),
                r["xi"],
                r["zeta"],
                r["eta"],
            ]
        )
    return {"rows": rows}, csv_rows


def cmd_region(args):
    samples = region_samples(args.resolution)
    points = []
    csv_rows = [["xi", "zeta", "region", "boundaries"]]
    for xi, zeta, labels in samples:
        labs = _sorted_labels(labels)
        points.append(
            {"xi": str(xi), "zeta": str(zeta), "labels": [_label_doc(lab) for lab in labs]}
        )
        for lab in labs:
            csv_rows.append(
                [str(xi), str(zeta), lab.region,
                 "|".join(sorted(lab.boundaries, key=BOUNDARY_NAMES.index))]
            )
    return {"resolution": args.resolution, "points": points}, csv_rows


def cmd_assemble(args):
    spec = _resolve_spec(args)
    profile = make_profile(args.profile)
    grid = _grid(args)
    if args.pathway == "linear":
        op = assemble_linear(linear_params(spec), profile, grid, hbar=args.hbar, scheme=args.scheme)
    else:
        op = assemble_terms(spec, profile, grid, hbar=args.hbar, scheme=args.scheme)
    doc = to_json_dict(op)
    csv_rows = [line.split(",") for line in to_csv(op).strip().split("\n")]
    return doc, csv_rows


def cmd_defect(args) -> dict:
    spec = _resolve_spec(args)
    profile = make_profile(args.profile)
    grid = _grid(args)
    fine = grid.refined()
    d_coarse = equivalence_defect(spec, profile, grid, _bump_psi(grid), hbar=args.hbar)
    d_fine = equivalence_defect(spec, profile, fine, _bump_psi(fine), hbar=args.hbar)
    ratio = d_coarse / d_fine if d_fine > 0 else None
    return {
        "spec": spec.name or print_canonical(spec),
        "profile": profile.name,
        "xmin": args.xmin,
        "xmax": args.xmax,
        "hbar": args.hbar,
        "n": grid.n,
        "defect_n": d_coarse,
        "n_refined": fine.n,
        "defect_refined": d_fine,
        "ratio": ratio,
    }


def cmd_spectrum(args):
    spec = _resolve_spec(args)
    profile = make_profile(args.profile)
    potential = make_potential(args.potential)
    grid = _grid(args)
    keo = assemble_terms(spec, profile, grid, hbar=args.hbar, scheme=args.scheme)
    result = solve(hamiltonian(keo, potential), args.k)
    lp = linear_params(spec)
    doc = {
        "params": {
            "name": spec.name or print_canonical(spec),
            "xi": str(lp.xi),
            "zeta": str(lp.zeta),
            "eta": str(lp.eta),
            "profile": profile.name,
            "potential": potential.name,
            "scheme": args.scheme,
            "hbar": args.hbar,
        },
        "grid": {"x_min": grid.x_min, "x_max": grid.x_max, "n": grid.n, "h": grid.h},
        "eigenvalues": list(result.eigenvalues),
    }
    csv_rows = [["index", "eigenvalue"]]
    csv_rows += [[i, repr(e)] for i, e in enumerate(result.eigenvalues)]
    return doc, csv_rows


def cmd_dualpair(args):
    profile = make_profile(args.profile)
    potential = make_potential(args.potential)
    grid = _grid(args)
    report = dual_pair_report(args.xi, args.theta, profile, potential, grid, args.k, hbar=args.hbar)

    def side(point, alpha_gamma, spectrum):
        return {
            "xi": str(point[0]),
            "zeta": str(point[1]),
            "alpha_gamma": [str(v) for v in alpha_gamma],
            "eigenvalues": list(spectrum.eigenvalues),
        }

    doc = {
        "xi": str(report.xi),
        "theta": str(report.theta),
        "parameter_identity": report.parameter_identity,
        "vr": side(report.vr_point, report.vr_alpha_gamma, report.vr_spectrum),
        "class_i": side(report.class_i_point, report.class_i_alpha_gamma, report.class_i_spectrum),
    }
    csv_rows = [["index", "vr_eigenvalue", "class_i_eigenvalue"]]
    for i, (a, b) in enumerate(
        zip(report.vr_spectrum.eigenvalues, report.class_i_spectrum.eigenvalues)
    ):
        csv_rows.append([i, repr(a), repr(b)])
    return doc, csv_rows


def _add_common(p):
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", default=None, help="write to file instead of stdout")
    p.add_argument("--config", default=None, help="JSON config file; flags win")


def _add_spec_source(p):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--name", help="catalog ordering, e.g. ZK or MB(-1/2)")
    g.add_argument("--expr", help="ordering expression, e.g. '1/2 * p m^(-1) p'")


def _add_grid(p, default_n=200):
    p.add_argument("--n", type=int, default=default_n, help="interior grid points")
    p.add_argument("--xmin", type=float, default=-1.0)
    p.add_argument("--xmax", type=float, default=1.0)
    p.add_argument("--hbar", type=float, default=1.0)


def build_parser(config: dict | None = None) -> argparse.ArgumentParser:
    """Build the CLI parser; config values become per-subcommand defaults
    (explicit flags still win)."""
    parser = argparse.ArgumentParser(
        prog="pdmkeo",
        description="classification and numerical verification of position-dependent-mass kinetic operators",
    )
    parser._negative_number_matcher = _NEGATIVE_VALUE_RE
    sub = parser.add_subparsers(dest="command", required=True)
    subcommands = []

    def add_parser(*a, **kw):
        p = sub.add_parser(*a, **kw)
        p._negative_number_matcher = _NEGATIVE_VALUE_RE
        subcommands.append(p)
        return p

    p = add_parser("params", help="linear ambiguity parameters (xi, zeta, eta) of an ordering")
    _add_spec_source(p)
    _add_common(p)
    p.set_defaults(func=lambda a: (cmd_params(a), None))

    p = add_parser("classify", help="class membership of an exact (xi, zeta) point")
    p.add_argument("--xi", type=rational_arg, required=True)
    p.add_argument("--zeta", type=rational_arg, required=True)
    _add_common(p)
    p.set_defaults(func=lambda a: (cmd_classify(a), None))

    p = add_parser("invert", help="two-term ordering of a given class at (xi, zeta)")
    p.add_argument("--xi", type=rational_arg, required=True)
    p.add_argument("--zeta", type=rational_arg, required=True)
    p.add_argument("--class", dest="cls", choices=REGIONS, required=True)
    p.add_argument("--float", action="store_true", help="evaluate surds numerically")
    _add_common(p)
    p.set_defaults(func=lambda a: (cmd_invert(a), None))

    p = add_parser("dual", help="theta -> -theta dual of an allowed (xi, zeta) point")
    p.add_argument("--xi", type=rational_arg, required=True)
    p.add_argument("--zeta", type=rational_arg, required=True)
    _add_common(p)
    p.set_defaults(func=lambda a: (cmd_dual(a), None))

    p = add_parser("table1", help="catalog orderings with their exact (xi, zeta)")
    _add_common(p)
    p.set_defaults(func=lambda a: cmd_table1(a))

    p = add_parser("region", help="classified rational grid over the allowed region")
    p.add_argument("--resolution", type=int, default=51)
    _add_common(p)
    p.set_defaults(func=lambda a: cmd_region(a))

    p = add_parser("assemble", help="dense finite-difference kinetic matrix")
    _add_spec_source(p)
    p.add_argument("--profile", required=True, help="mass profile, e.g. lorentzian:m0=1,lam=1")
    p.add_argument("--pathway", choices=("terms", "linear"), default="terms")
    p.add_argument("--scheme", choices=("central", "staggered"), default="central")
    _add_grid(p)
    _add_common(p)
    p.set_defaults(func=lambda a: cmd_assemble(a))

    p = add_parser("defect", help="two-pathway equivalence defect at n and 2n")
    _add_spec_source(p)
    p.add_argument("--profile", required=True)
    _add_grid(p)
    _add_common(p)
    p.set_defaults(func=lambda a: (cmd_defect(a), None))

    p = add_parser("spectrum", help="lowest eigenvalues of T + V")
    _add_spec_source(p)
    p.add_argument("--profile", required=True)
    p.add_argument("--potential", default="zero", help="e.g. zero or harmonic:k=1")
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--scheme", choices=("central", "staggered"), default="staggered")
    _add_grid(p, default_n=500)
    _add_common(p)
    p.set_defaults(func=lambda a: cmd_spectrum(a))

    p = add_parser("dualpair", help="side-by-side spectra of a (xi, theta) dual pair")
    p.add_argument("--xi", type=rational_arg, required=True)
    p.add_argument("--theta", type=rational_arg, required=True)
    p.add_argument("--profile", required=True)
    p.add_argument("--potential", default="zero")
    p.add_argument("--k", type=int, default=5)
    _add_grid(p, default_n=500)
    _add_common(p)
    p.set_defaults(func=lambda a: cmd_dualpair(a))

    if config:
        for sp in subcommands:
            known = {a.dest for a in sp._actions}
            sp.set_defaults(**{k: v for k, v in config.items() if k in known})
            for a in sp._actions:
                if a.dest in config:
                    a.required = False
            for group in sp._mutually_exclusive_groups:
                if any(a.dest in config for a in group._group_actions):
                    group.required = False
    return parser


_CONFIG_TYPES = {
    "xi": rational_arg,
    "zeta": rational_arg,
    "theta": rational_arg,
    "n": int,
    "k": int,
    "resolution": int,
    "xmin": float,
    "xmax": float,
    "hbar": float,
}


def _config_defaults(argv) -> dict:
    path = None
    for i, token in enumerate(argv):
        if token == "--config" and i + 1 < len(argv):
            path = argv[i + 1]
        elif token.startswith("--config="):
            path = token.split("=", 1)[1]
    if not path:
        return {}
    with open(path) as fh:
        raw = json.load(fh)
    if not isinstance(raw, dict):
        raise KeoError("config file must hold a JSON object of flag values")
    return {
        key: _CONFIG_TYPES.get(key, lambda v: v)(value) for key, value in raw.items()
    }


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        parser = build_parser(_config_defaults(argv))
        args = parser.parse_args(argv)
        doc, csv_rows = args.func(args)
        _emit(args, doc, csv_rows)
        return 0
    except (KeoError, ValueError, OSError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
