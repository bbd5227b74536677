"""Command-line front-end.

Subcommands:

* ``eval``         evaluate a continued fraction by two independent methods
* ``convergents``  tabulate closed-form convergents
* ``density``      emit the spectral density over an x-grid as CSV or JSON
* ``orthogonality``print the Gram matrix of weighted inner products
* ``moments``      compare the q-integral and closed moment solutions
* ``verify``       run the acceptance suites

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
Numbers are printed with ``repr``, the shortest round-trip decimal form,
so output is byte-identical across runs with the same flags.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cfrac, convergents, measure, moments, recurrence, verify
from .errors import QFracError
from .recurrence import Params

__all__ = ["main", "entry"]


def _fmt(v) -> str:
    if isinstance(v, complex):
        return f"{v.real!r}{'+' if v.imag >= 0 else '-'}{abs(v.imag)!r}j"
    return repr(float(v))


def _read_params_file(path: str) -> dict:
    out = {}
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise QFracError(f"bad params-file line (want key=value): {line!r}")
            key, _, val = line.partition("=")
            key = key.strip()
            if key not in ("q", "a", "b", "lambda"):
                raise QFracError(f"unknown params-file key {key!r}")
            out["lam" if key == "lambda" else key] = float(val.strip())
    return out


def _params_from(args) -> Params:
    """Merge flags over params-file values; explicit flags win."""
    vals = {"q": args.q, "a": args.a, "b": args.b, "lam": args.lam}
    if getattr(args, "params_file", None):
        fromfile = _read_params_file(args.params_file)
        for key, val in fromfile.items():
            if vals[key] is None:
                vals[key] = val
    if not getattr(args, "_need_all_params", False):
        vals["a"] = 0.0 if vals["a"] is None else vals["a"]
        vals["b"] = 0.0 if vals["b"] is None else vals["b"]
    missing = [k for k, v in vals.items() if v is None]
    if missing:
        raise QFracError(f"missing parameter(s): {', '.join(missing)}")
    return Params(vals["q"], vals["a"], vals["b"], vals["lam"])


def _add_param_flags(sub, need_all: bool = False):
    sub.add_argument("--q", type=float, default=None)
    sub.add_argument("--a", type=float, default=None)
    sub.add_argument("--b", type=float, default=None)
    sub.add_argument("--lambda", dest="lam", type=float, default=None)
    sub.add_argument("--params-file", default=None, help="key=value lines for q, a, b, lambda")
    sub.set_defaults(_need_all_params=need_all)


def _cmd_eval(args) -> int:
    p = _params_from(args)
    depth = args.depth
    if args.family == "hirschhorn":
        backward = cfrac.hirschhorn_cf(p, depth)
        seq = recurrence.run_jfraction(recurrence.hirschhorn_family(p), args.x, depth)
        forward = seq.ratio(depth) / (1 - p.b)
        label = "base fraction (x = 1) / (1 - b)" if args.x == 1 else "H(x)/(1-b)"
    elif args.family == "b0":
        fam = recurrence.b0_family(Params(p.q, p.a, 0.0, p.lam))
        backward = cfrac.backward_convergent(fam, args.x, depth)
        forward = cfrac.convergent(fam, args.x, depth)
        label = "R(x)"
    else:  # entry16
        fam = recurrence.entry16_family(p.lam, p.q)
        backward = cfrac.backward_convergent(fam, args.x, depth)
        forward = cfrac.convergent(fam, args.x, depth)
        label = "Rogers-Ramanujan-type fraction"
    diff = abs(forward - backward)
    print(f"family   : {args.family} ({label})")
    print(f"depth    : {depth}")
    print(f"value    : {_fmt(forward)}")
    print(f"backward : {_fmt(backward)}")
    print(f"|diff|   : {_fmt(diff)}")
    return 0


def _cmd_convergents(args) -> int:
    n = args.n
    if n < 0:
        raise QFracError("--n must be >= 0")
    p = _params_from(args)
    rows = []
    if args.family == "entry16":
        for m in range(n + 1):
            N, D = convergents.entry16(m, p.lam, p.q)
            rows.append((m, N, D))
    elif args.family == "a0":
        for m in range(n + 1):
            N, D = convergents.a0_closed(m, p.b, p.lam, p.q)
            rows.append((m, N, D))
    elif args.family == "hirschhorn":
        for m in range(n + 1):
            N, D = convergents.hirschhorn_closed(m, p.q, p.a, p.b, p.lam)
            rows.append((m, N, D))
    else:  # entry15
        for m in range(1, n + 1):
            N, D = convergents.entry15(m, p.a, p.lam, p.q)
            rows.append((m, N, D))
    print("n,N,D,ratio")
    for m, N, D in rows:
        ratio = N / D if D != 0 else float("nan")
        print(f"{m},{_fmt(N)},{_fmt(D)},{_fmt(ratio)}")
    return 0


def _density_rows(p: Params, grid: int, xmin: float, xmax: float):
    rows = []
    for i in range(grid):
        x = xmin + (xmax - xmin) * i / (grid - 1) if grid > 1 else xmin
        dn = measure.density_nevai(x, p).density
        di = measure.density_inversion(x, p).density
        rows.append((x, dn, di))
    rows.sort(key=lambda r: r[0])
    return rows


def _cmd_density(args) -> int:
    p = _params_from(args)
    if args.grid < 2:
        raise QFracError("--grid must be >= 2")
    if not (-1 < args.xmin < args.xmax < 1):
        raise QFracError("need -1 < xmin < xmax < 1")
    rows = _density_rows(p, args.grid, args.xmin, args.xmax)
    if args.format == "csv":
        lines = ["x,density_nevai,density_inversion,abs_diff"]
        for x, dn, di in rows:
            lines.append(f"{x!r},{dn!r},{di!r},{abs(dn - di)!r}")
        text = "\n".join(lines) + "\n"
    else:
        if args.method == "both":
            raise QFracError("JSON output needs a single --method (nevai or inversion)")
        samples = [[x, dn if args.method == "nevai" else di] for x, dn, di in rows]
        text = json.dumps(
            {
                "params": {"q": p.q, "a": p.a, "b": p.b, "lambda": p.lam},
                "method": args.method,
                "samples": samples,
            },
            indent=2,
        ) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_orthogonality(args) -> int:
    p = _params_from(args)
    g = measure.gram_matrix(p, args.nmax, args.nodes)
    deficit = 1.0 - g[0, 0]
    print(f"Gram matrix, n,m <= {args.nmax} ({args.nodes} quadrature nodes):")
    for row in g:
        print(",".join(repr(float(v)) for v in row))
    print(f"mass_deficit: {deficit!r}")
    if abs(deficit) >= 1e-6:
        print(f"discrete mass suspected: deficit = {deficit!r}")
    else:
        print("norms:", ",".join(repr(measure.norm_squared(n, p)) for n in range(args.nmax + 1)))
    return 0


def _cmd_moments(args) -> int:
    p = _params_from(args)
    print("k,p_k_closed,p_k_qintegral,abs_diff")
    for k in range(args.kmax + 1):
        pc = moments.moment_pk_closed(k, args.x, p)
        pi_ = moments.moment_pk_integral(k, args.x, p)
        print(f"{k},{_fmt(pc)},{_fmt(pi_)},{abs(pc - pi_)!r}")
    return 0


def _cmd_verify(args) -> int:
    results = verify.run_suite(args.suite)
    failed = 0
    for res in results:
        tag = "PASS" if res.passed else "FAIL"
        if not res.passed:
            failed += 1
        print(f"{tag} {res.name}: {res.detail}")
    print(f"{len(results) - failed}/{len(results)} criteria passed")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qfraclab",
        description="q-series and continued-fraction numerical laboratory",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate a continued fraction two ways")
    pe.add_argument("--family", choices=("hirschhorn", "b0", "entry16"), required=True)
    _add_param_flags(pe)
    pe.add_argument("--x", type=float, default=1.0)
    pe.add_argument("--depth", type=int, default=200)
    pe.set_defaults(func=_cmd_eval)

    pc = sub.add_parser("convergents", help="tabulate closed-form convergents")
    pc.add_argument("--family", choices=("entry16", "hirschhorn", "a0", "entry15"), required=True)
    _add_param_flags(pc)
    pc.add_argument("--n", type=int, required=True)
    pc.set_defaults(func=_cmd_convergents)

    pd = sub.add_parser("density", help="spectral density over an x-grid")
    _add_param_flags(pd, need_all=True)
    pd.add_argument("--method", choices=("nevai", "inversion", "both"), default="both")
    pd.add_argument("--grid", type=int, default=101)
    pd.add_argument("--xmin", type=float, default=-0.99)
    pd.add_argument("--xmax", type=float, default=0.99)
    pd.add_argument("--format", choices=("csv", "json"), default="csv")
    pd.add_argument("--out", default=None, help="write to this file instead of stdout")
    pd.set_defaults(func=_cmd_density)

    po = sub.add_parser("orthogonality", help="Gram matrix of weighted inner products")
    _add_param_flags(po, need_all=True)
    po.add_argument("--nmax", type=int, default=5)
    po.add_argument("--nodes", type=int, default=512)
    po.set_defaults(func=_cmd_orthogonality)

    pm = sub.add_parser("moments", help="moment solutions, closed vs q-integral")
    _add_param_flags(pm, need_all=True)
    pm.add_argument("--x", type=float, default=0.3)
    pm.add_argument("--kmax", type=int, default=10)
    pm.set_defaults(func=_cmd_moments)

    pv = sub.add_parser("verify", help="run acceptance suites")
    pv.add_argument("--suite", choices=verify.SUITE_NAMES, default="all")
    pv.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except QFracError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
