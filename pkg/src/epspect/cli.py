"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 computation error (a JSON error
record is written to stderr).  `EPSPECT_TOL` overrides the default
tolerance when `--tol` is not given.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

import numpy as np

from . import __version__
from .eploc import jordan_chain, locate_eps
from .lattice import ModelParams, RobinData, build_hamiltonian, robin_to_z
from .metric import dyson_factor, metric_to_json, solve_dieudonne
from .secular import check_known_curve, secular_poly, sturmian_r2, sturmian_u
from .sweep import SweepSpec, run_sweep, sturmian_plotdata

DEFAULT_TOL = 1e-9


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; the CLI contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def _fmt_float(x: float, precision: int) -> str:
    return "%.*g" % (precision, x)


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _params_from_args(args) -> ModelParams:
    if args.z_re is not None or args.z_im is not None:
        return ModelParams(
            n=args.n,
            convention=args.convention,
            z=complex(args.z_re or 0.0, args.z_im or 0.0),
        )
    return ModelParams(n=args.n, convention=args.convention, u=args.u, r=args.r)


def _eigs_csv(eigs, n_real, precision):
    header = []
    cells = []
    for k, w in enumerate(eigs, 1):
        header += [f"re_e{k}", f"im_e{k}"]
        cells += [_fmt_float(w.real, precision), _fmt_float(w.imag, precision)]
    header.append("n_real")
    cells.append(str(n_real))
    return ",".join(header) + "\n" + ",".join(cells) + "\n"


def _cmd_spectrum(args) -> str:
    params = _params_from_args(args)
    h = build_hamiltonian(params)
    eigs = sorted(np.linalg.eigvals(h), key=lambda w: (w.real, w.imag))
    n_real = sum(1 for w in eigs if abs(w.imag) <= args.tol)
    if args.format == "json":
        return json.dumps(
            {
                "params": params.to_json(),
                "eigenvalues": [[w.real, w.imag] for w in eigs],
                "n_real": n_real,
            },
            indent=2,
        )
    return _eigs_csv(eigs, n_real, args.precision)


def _cmd_charpoly(args) -> str:
    u = Fraction(args.u_exact) if args.u_exact else Fraction(args.u).limit_denominator(10**12)
    r = Fraction(args.r_exact) if args.r_exact else Fraction(args.r).limit_denominator(10**12)
    sec = secular_poly(args.n, u=u, r2=r * r)
    record = {"n": args.n, "u": str(u), "r": str(r), "charpoly": sec.poly.to_json()}
    if args.format == "json":
        return json.dumps(record, indent=2)
    lines = ["power,num,den"]
    for k, c in enumerate(sec.poly.coeffs):
        lines.append(f"{k},{c.numerator},{c.denominator}")
    return "\n".join(lines) + "\n"


def _cmd_sturmian(args) -> str:
    if args.check_table:
        ok = check_known_curve(args.n)
        text = f"{'PASS' if ok else 'FAIL'}: n={args.n} coupling-curve golden table\n"
        if not ok:
            raise ComputationError("golden-table check failed", {"n": args.n})
        return text
    if args.grid:
        lo, hi, count = args.grid
        grid = [lo + k * (hi - lo) / (int(count) - 1) for k in range(int(count))]
        table = sturmian_plotdata(args.n, args.kind, grid)
        if args.format == "json":
            return json.dumps(table.to_json(), indent=2)
        return table.to_csv()
    if args.kind == "r2_of_E2":
        curve = sturmian_r2(args.n)
        record = {"n": args.n, "kind": args.kind, "curve": curve.to_json()}
    else:
        branch = "plus" if args.kind.endswith("plus") else "minus"
        curve = sturmian_u(args.n, branch)
        record = {
            "n": args.n,
            "kind": args.kind,
            "rational_part": curve.rational_part.to_json(),
            "radicand": curve.radicand.to_json(),
            "denominator": curve.denominator.to_json(),
            "branch": curve.branch,
        }
    return json.dumps(record, indent=2)


def _cmd_ep_locate(args) -> str:
    certs = locate_eps(args.n, tol=args.tol)
    if args.format == "json":
        return json.dumps([c.to_json() for c in certs], indent=2)
    lines = ["u_star,e_star,alg_mult,geo_mult,residual"]
    for c in certs:
        lines.append(
            "%s,%s,%d,%d,%s"
            % (
                _fmt_float(c.u_star, args.precision),
                _fmt_float(c.e_star, args.precision),
                c.algebraic_multiplicity,
                c.geometric_multiplicity,
                _fmt_float(c.residual, args.precision),
            )
        )
    return "\n".join(lines) + "\n"


def _cmd_ep_certify(args) -> str:
    params = ModelParams(n=args.n, convention="shifted", u=args.u, r=args.r)
    h = build_hamiltonian(params)
    q, j, geo, alg, cond = jordan_chain(h, complex(args.e), return_details=True)
    residual = float(
        np.linalg.norm(h @ q - q @ j) / max(np.linalg.norm(h), 1e-300)
    )
    record = {
        "n": args.n,
        "u": args.u,
        "r": args.r,
        "e_star": args.e,
        "algebraic_multiplicity": alg,
        "geometric_multiplicity": geo,
        "residual": residual,
        "q_condition": cond,
        "q": [[[z.real, z.imag] for z in row] for row in q.tolist()],
        "j": [[[z.real, z.imag] for z in row] for row in j.tolist()],
    }
    return json.dumps(record, indent=2)


def _cmd_metric(args) -> str:
    params = _params_from_args(args)
    h = build_hamiltonian(params)
    sol = solve_dieudonne(h, spectrum_tol=args.tol)
    omega = dyson_factor(sol.representative, kind=args.factor)
    record = {
        "params": params.to_json(),
        "kernel_dimension": len(sol.basis),
        "eigen_floor": sol.eigen_floor,
        "residual": sol.residual,
        "theta": metric_to_json(sol),
        "omega_kind": omega.kind,
        "omega": [[[z.real, z.imag] for z in row] for row in omega.omega.tolist()],
    }
    return json.dumps(record, indent=2)


def _cmd_robin(args) -> str:
    z = robin_to_z(RobinData(alpha=args.alpha, beta=args.beta, h=args.h))
    if args.format == "json":
        return json.dumps(
            {"alpha": args.alpha, "beta": args.beta, "h": args.h,
             "z_re": z.real, "z_im": z.imag},
            indent=2,
        )
    return "z_re,z_im\n%s,%s\n" % (
        _fmt_float(z.real, args.precision),
        _fmt_float(z.imag, args.precision),
    )


def _cmd_sweep(args) -> str:
    if args.spec:
        with open(args.spec, "r", encoding="utf-8") as fh:
            spec = SweepSpec.from_json(json.load(fh))
    else:
        lo, hi, count = args.grid
        spec = SweepSpec(
            n=args.n,
            swept=args.swept,
            fixed=args.fixed,
            lo=lo,
            hi=hi,
            count=int(count),
            curve_kind=args.kind,
        )
    if spec.swept == "E_on_sturmian":
        table = sturmian_plotdata(spec.n, spec.curve_kind, spec.grid())
    else:
        table = run_sweep(spec, im_tol=args.tol, jobs=args.jobs)
    if args.format == "json":
        return json.dumps(table.to_json(), indent=2)
    return table.to_csv()


class ComputationError(Exception):
    def __init__(self, message, detail=None):
        super().__init__(message)
        self.detail = detail or {}


def _build_parser() -> _Parser:
    parser = _Parser(prog="epspect", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--tol", type=float, default=None)
        p.add_argument("--precision", type=int, default=17)
        p.add_argument("--out", default=None)
        p.add_argument("--jobs", type=int, default=1)

    def model_flags(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--convention", choices=("shifted", "unshifted"),
                       default="shifted")
        p.add_argument("--u", type=float, default=0.0)
        p.add_argument("--r", type=float, default=0.0)
        p.add_argument("--z-re", type=float, default=None)
        p.add_argument("--z-im", type=float, default=None)

    p = sub.add_parser("spectrum", help="eigenvalues of one model")
    model_flags(p)
    common(p)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("charpoly", help="exact secular-polynomial coefficients")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--u", type=float, default=0.0)
    p.add_argument("--r", type=float, default=0.0)
    p.add_argument("--u-exact", default=None, help="u as an exact fraction, e.g. 1/3")
    p.add_argument("--r-exact", default=None, help="r as an exact fraction")
    common(p)
    p.set_defaults(func=_cmd_charpoly)

    p = sub.add_parser("sturmian", help="coupling curves and golden-table checks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", default="r2_of_E2",
                   choices=("r2_of_E2", "u_of_E_plus", "u_of_E_minus"))
    p.add_argument("--check-table", action="store_true")
    p.add_argument("--grid", nargs=3, type=float, metavar=("LO", "HI", "COUNT"),
                   default=None)
    common(p)
    p.set_defaults(func=_cmd_sturmian)

    p = sub.add_parser("ep", help="exceptional-point localization/certification")
    ep_sub = p.add_subparsers(dest="ep_command", required=True, parser_class=_Parser)

    q = ep_sub.add_parser("locate")
    q.add_argument("--n", type=int, required=True)
    common(q)
    q.set_defaults(func=_cmd_ep_locate)

    q = ep_sub.add_parser("certify")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--u", type=float, required=True)
    q.add_argument("--r", type=float, default=0.0)
    q.add_argument("--e", type=float, required=True)
    common(q)
    q.set_defaults(func=_cmd_ep_certify)

    p = sub.add_parser("metric", help="Dieudonné metric and Dyson factor")
    model_flags(p)
    p.add_argument("--factor", choices=("hermitian_sqrt", "triangular"),
                   default="hermitian_sqrt")
    common(p)
    p.set_defaults(func=_cmd_metric)

    p = sub.add_parser("robin", help="Robin boundary data to corner parameter z")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--h", type=float, required=True)
    common(p)
    p.set_defaults(func=_cmd_robin)

    p = sub.add_parser("sweep", help="parameter sweep to CSV/JSON")
    p.add_argument("--spec", default=None, help="SweepSpec JSON file")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--swept", choices=("r", "u", "E_on_sturmian"), default="r")
    p.add_argument("--fixed", type=float, default=0.0)
    p.add_argument("--grid", nargs=3, type=float, metavar=("LO", "HI", "COUNT"),
                   default=(-1.0, 1.0, 101))
    p.add_argument("--kind", default="r2_of_E2",
                   choices=("r2_of_E2", "u_of_E_plus", "u_of_E_minus"))
    common(p)
    p.set_defaults(func=_cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    if args.tol is None:
        args.tol = float(os.environ.get("EPSPECT_TOL", DEFAULT_TOL))
    if getattr(args, "command", None) == "sweep" and not args.spec and args.n is None:
        parser.print_usage(sys.stderr)
        sys.stderr.write("epspect: error: sweep requires --spec or --n\n")
        return 1
    try:
        text = args.func(args)
    except (ValueError, RuntimeError, ComputationError,
            ArithmeticError, OSError) as exc:
        record = {
            "error": type(exc).__name__,
            "message": str(exc),
            "command": args.command,
        }
        if isinstance(exc, ComputationError):
            record.update(exc.detail)
        sys.stderr.write(json.dumps(record) + "\n")
        return 2
    _emit(text, args.out)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
