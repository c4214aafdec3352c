"""Command-line front end.

Exit codes: 0 success, 1 a check or target failed, 2 usage or input error.
All numbers are printed as exact fractions.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog as cat
from .arrangement import (ArrangementError, GeometricArrangement, base_constant, epsilon_config, f_numbers,
                          format_tvector, hirzebruch_check, per_curve_check, prsz_check, theorem_hypotheses,
                          theorem_lower_bound, tvector_from_list, validate_combinatorics, verify_geometry)
from .field import FieldError, format_rational, parse_rational
from .geometry import GeometryError, polynomial_to_json
from .io import ArrangementFileError, arrangement_to_json, load_arrangement, save_arrangement
from .linsys import MultiplicityAssignment, interpolate
from .seshadri import (SeshadriError, compute_seshadri, naive_equality_probe, search_conics, search_lines,
                       verify_certificate)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def fr(q: Fraction) -> str:
    return format_rational(q)


def _emit(args, data: dict, text: str) -> None:
    if args.json:
        print(json.dumps(data, indent=1, sort_keys=True))
    else:
        print(text)


def _catalog_params(args) -> dict:
    params = {}
    for name in cat.PARAMS.get(args.catalog_name, ()):
        value = getattr(args, name, None)
        if value is None:
            raise UsageError(f"catalog entry {args.catalog_name!r} needs --{name}")
        params[name] = value
    return params


def load_input(args):
    if getattr(args, "file", None):
        return load_arrangement(args.file)
    if getattr(args, "catalog_name", None):
        params = _catalog_params(args)
        geometric = getattr(args, "geometric", False)
        if args.catalog_name == "simplicial" and geometric:
            return cat.simplicial(params["code"], geometric=True)
        return cat.catalog(args.catalog_name, **params)
    raise UsageError("an input is required: --file PATH or --catalog NAME")


# -- commands ---------------------------------------------------------------------

def cmd_check(args) -> int:
    A = load_input(args)
    reports = [validate_combinatorics(A)]
    if isinstance(A, GeometricArrangement):
        reports += [per_curve_check(A), verify_geometry(A)]
    reports += [hirzebruch_check(A), prsz_check(A)]
    ok = all(r.status != "fail" for r in reports)
    text = "\n".join(str(r) for r in reports) + f"\nresult: {'PASS' if ok else 'FAIL'}"
    _emit(args, {"name": A.name, "reports": [r.to_json() for r in reports], "passed": ok}, text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_epsilon_config(args) -> int:
    A = load_input(args)
    eps = epsilon_config(A)
    f0, f1 = f_numbers(A)
    _emit(args, {"name": A.name, "epsilon_config": fr(eps), "f0": f0, "f1": f1}, fr(eps))
    return EXIT_OK


def cmd_bounds(args) -> int:
    A = load_input(args)
    eps = epsilon_config(A)
    ok, reason = theorem_hypotheses(A)
    data = {"name": A.name, "epsilon_config": fr(eps), "hypotheses": ok, "reason": reason}
    lines = [f"epsilon_config: {fr(eps)}", f"hypotheses: {'met' if ok else 'not met'} ({reason})"]
    try:
        bound = theorem_lower_bound(A)
        holds = eps >= bound
        data.update(theorem_bound=fr(bound), holds=holds)
        lines.append(f"theorem bound: {fr(bound)}")
        lines.append(f"comparison: {fr(eps)} {'≥' if holds else '<'} {fr(bound)}")
    except ArrangementError as exc:
        data["theorem_bound"] = None
        lines.append(f"theorem bound: undefined ({exc})")
        holds = True
    _emit(args, data, "\n".join(lines))
    return EXIT_OK if holds or not ok else EXIT_FAIL


def _parse_mults(spec: str | None, G) -> list[int]:
    n = len(G.points)
    if spec is None:
        return [1] * n
    if spec == "arrangement":
        return [ip.multiplicity for ip in G.points]
    parts = [p for p in spec.split(",") if p]
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise UsageError(f"--mults must be an integer, a comma list or 'arrangement', got {spec!r}") from None
    if len(values) == 1:
        return values * n
    if len(values) != n:
        raise UsageError(f"--mults lists {len(values)} values for {n} points")
    return values


def cmd_interpolate(args) -> int:
    G = load_input(args)
    if not isinstance(G, GeometricArrangement):
        raise UsageError("interpolation needs an arrangement with points")
    mults = _parse_mults(args.mults, G)
    M = MultiplicityAssignment(tuple((ip.point, m) for ip, m in zip(G.points, mults)))
    res = interpolate(args.degree, M)
    text = [f"degree {res.degree}: ambient {res.ambient}, conditions {res.conditions}, rank {res.rank}",
            f"dimension (vector space of forms): {res.dimension}"]
    text += [f"  basis[{i}] = {b}" for i, b in enumerate(res.basis)]
    _emit(args, res.to_json(), "\n".join(text))
    return EXIT_OK


def cmd_search(args) -> int:
    G = load_input(args)
    if not isinstance(G, GeometricArrangement):
        raise UsageError("search needs an arrangement with points")
    Z = G.singular_points
    lines = search_lines(Z)
    data = {"mpl": lines.mpl, "best_line": lines.best.to_json()}
    text = [f"mpl: {lines.mpl}", f"best line: {lines.best.curve}  ratio {fr(lines.best.ratio)}"]
    if args.max_degree >= 2:
        conics = search_conics(Z, collinear=[r.incidence for r in lines.lines if r.mult_sum >= 3])
        data["best_conic"] = conics.best.to_json() if conics.best else None
        text.append(f"best smooth conic: {conics.best.curve}  ratio {fr(conics.best.ratio)}"
                    if conics.best else f"best smooth conic: none ({conics.message})")
    _emit(args, data, "\n".join(text))
    return EXIT_OK


def cmd_certify(args) -> int:
    if args.verify:
        try:
            with open(args.verify, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read certificate {args.verify}: {exc}") from None
        ok, msgs = verify_certificate(data)
        _emit(args, {"verified": ok, "messages": msgs}, "\n".join(msgs))
        return EXIT_OK if ok else EXIT_FAIL
    G = load_input(args)
    if not isinstance(G, GeometricArrangement):
        raise UsageError("certification needs an arrangement with geometry")
    res = compute_seshadri(G, max_search_degree=args.max_degree)
    data = res.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(data, fh, indent=1)
    lines = [f"upper: {fr(res.upper)}  witness {res.witness.curve}",
             f"lower: {fr(res.lower)}  ({res.certificate.kind})",
             f"exact: {fr(res.exact) if res.exact is not None else 'not determined'}"]
    if res.exact is not None:
        probe = naive_equality_probe(G, res)
        lines.append(f"1/bs = {fr(probe['inverse_bs'])} {'=' if probe['holds'] else '≠'} {fr(res.exact)}")
        data["probe"] = {k: (fr(v) if isinstance(v, Fraction) else v) for k, v in probe.items()}
    code = EXIT_OK
    if args.target:
        target = parse_rational(args.target)
        hit = res.exact == target
        lines.append(f"target {fr(target)}: {'met' if hit else 'MISSED'}")
        data["target_met"] = hit
        code = EXIT_OK if hit else EXIT_FAIL
    _emit(args, data, "\n".join(lines))
    return code


def cmd_catalog(args) -> int:
    if args.action == "list":
        rows = [{"name": n, "params": list(cat.PARAMS[n])} for n in cat.names()]
        _emit(args, {"entries": rows},
              "\n".join(f"{r['name']}" + (f"  ({', '.join('--' + p for p in r['params'])})" if r["params"] else "")
                        for r in rows))
        return EXIT_OK
    if not args.name:
        raise UsageError("catalog show needs an entry name")
    args.catalog_name = args.name
    A = load_input(args)
    if args.out:
        save_arrangement(A, args.out)
    data = arrangement_to_json(A)
    text = f"{A.name}: k={A.k}, d={A.d}, t={format_tvector(A.t)}"
    if isinstance(A, GeometricArrangement):
        text += f", {len(A.points)} singular points"
    _emit(args, data, text)
    return EXIT_OK


def table_rows() -> list[dict]:
    certified = compute_seshadri(cat.simplicial("A1(6)", geometric=True)).exact
    rows = []
    for name, t, eps_reported in cat.SIMPLICIAL_TABLE:
        A = cat.simplicial(name)
        row = {"name": name, "t": format_tvector(tvector_from_list(t)), "epsilon_config": epsilon_config(A),
               "epsilon": eps_reported, "epsilon_status": "paper-reported, not verified here"}
        if name == "A1(6)":
            row["epsilon"] = certified
            row["epsilon_status"] = "certified"
        rows.append(row)
    return rows


def cmd_table(args) -> int:
    rows = table_rows()
    out = [f"{'arrangement':<12}{'t':<16}{'eps_C':<8}eps"]
    for r in rows:
        out.append(f"{r['name']:<12}{r['t']:<16}{fr(r['epsilon_config']):<8}{fr(r['epsilon'])}  ({r['epsilon_status']})")
    _emit(args, {"rows": [{k: (fr(v) if isinstance(v, Fraction) else v) for k, v in r.items()} for r in rows]},
          "\n".join(out))
    return EXIT_OK


# -- parser -----------------------------------------------------------------------

def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--file", metavar="PATH", help="arrangement JSON file")
    src.add_argument("--catalog", dest="catalog_name", metavar="NAME", choices=cat.names(),
                     help="built-in arrangement")
    _add_params(p)


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, help="fermat parameter")
    p.add_argument("--d", type=int, help="star degree")
    p.add_argument("--k", type=int, help="number of curves")
    p.add_argument("--code", help="simplicial arrangement code, e.g. 'A1(7)'")
    p.add_argument("--geometric", action="store_true", help="simplicial A1(6) with coordinates")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    parser = argparse.ArgumentParser(prog="seshadri-config", parents=[common],
                                     description="Exact Seshadri constants of plane curve arrangements.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="combinatorial and geometric checks")
    _add_input(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("epsilon-config", parents=[common], help="configurational Seshadri constant")
    _add_input(p)
    p.set_defaults(func=cmd_epsilon_config)

    p = sub.add_parser("bounds", parents=[common], help="theorem lower bound against eps_C")
    _add_input(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("interpolate", parents=[common], help="forms through the singular points")
    _add_input(p)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--mults", help="one integer, a comma list, or 'arrangement' (default 1 at every point)")
    p.set_defaults(func=cmd_interpolate)

    p = sub.add_parser("search", parents=[common], help="best line and conic ratios")
    _add_input(p)
    p.add_argument("--max-degree", type=int, choices=(1, 2), default=2)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("certify", parents=[common], help="certified Seshadri constant")
    _add_input(p)
    p.add_argument("--target", metavar="P/Q", help="exit 1 unless the exact value equals this")
    p.add_argument("--verify", metavar="FILE", help="re-verify a stored certificate")
    p.add_argument("--out", metavar="FILE", help="write the certificate JSON")
    p.add_argument("--max-degree", type=int, choices=(1, 2), default=2)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("catalog", parents=[common], help="list or export built-in arrangements")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("name", nargs="?", choices=cat.names())
    _add_params(p)
    p.add_argument("--out", metavar="FILE", help="write the arrangement file")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("table", parents=[common], help="the simplicial arrangement table")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if not hasattr(args, "json"):
        args.json = False
    try:
        return args.func(args)
    except ArrangementFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ArrangementError, FieldError, GeometryError, SeshadriError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
