"""Command-line front end: generate, verify, certify, solve and tabulate.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 solver
timeout.  Data goes to stdout (or --out); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .graphs import (GraphError, all_pairs_distances, closed_form_diameter,
                     make_cycle)
from .radio import (Coloring, RadioError, minimality_certificate, order_by_color,
                    ordering_from_sequence, span, span_identity_residual,
                    verify_radio_k)
from .gp import (gp_ac_formula, gp_antipodal_coloring, gp_case, gp_ordering,
                 validate_gp_ordering)
from .torus import (LODD, TorusError, torus_ac_formula, torus_antipodal_coloring,
                    torus_case, torus_ordering, validate_torus_ordering)
from .solver import TIMED_OUT, exact_rc_k
from . import serialize

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_TIMEOUT = 3

TABLE_COLUMNS = ["family", "params", "n", "diameter", "k", "case_label",
                 "formula_value", "formula_status", "construction_span",
                 "certificate", "discrepancy"]


def _write(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _gen_payload(args) -> dict:
    if args.family == "gp":
        n = args.n
        coloring = gp_antipodal_coloring(n)
        formula = gp_ac_formula(n)
        meta = {
            "construction": f"gp/{gp_case(n).label}",
            "claimed_span": span(coloring),
            "formula_status": formula.status,
            "case_label": formula.case_label,
            "ordering": gp_ordering(n),
            "discrepancy": formula.discrepancy,
        }
        from .graphs import make_gp
        return serialize.coloring_to_dict(make_gp(n), coloring, meta)
    coloring = torus_antipodal_coloring(args.r, args.s)
    formula = torus_ac_formula(args.r, args.s)
    meta = {
        "construction": f"torus/{formula.case_label}",
        "claimed_span": span(coloring),
        "formula_status": formula.status,
        "case_label": formula.case_label,
        "ordering": torus_ordering(args.r, args.s),
        "discrepancy": formula.discrepancy,
    }
    from .graphs import make_torus
    return serialize.coloring_to_dict(make_torus(args.r, args.s), coloring, meta)


def cmd_gen(args) -> int:
    payload = _gen_payload(args)
    _write(serialize.dumps_canonical(payload), args.out)
    return EXIT_OK


def cmd_graph(args) -> int:
    if args.family == "gp":
        from .graphs import make_gp
        graph = make_gp(args.n)
    elif args.family == "torus":
        from .graphs import make_torus
        graph = make_torus(args.r, args.s)
    else:
        graph = make_cycle(args.n)
    _write(serialize.dumps_canonical(serialize.graph_to_dict(graph)), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    with open(args.file) as fh:
        data = json.load(fh)
    graph, coloring, meta = serialize.coloring_from_dict(data)
    dist = all_pairs_distances(graph)
    report = verify_radio_k(graph, dist, coloring)
    ordering = None
    if "ordering" in meta and meta["ordering"] is not None:
        try:
            ordering = ordering_from_sequence(coloring, dist, meta["ordering"])
        except RadioError:
            ordering = None  # stale ordering in a tampered file
    if ordering is None:
        ordering = order_by_color(coloring, dist)
    residual = span_identity_residual(ordering, dist)
    cert = None
    if coloring.k == dist.diameter - 1:
        cert = minimality_certificate(ordering, dist)
    lines = {
        "valid": report.valid,
        "span": span(coloring),
        "claimed_span": meta.get("claimed_span"),
        "span_identity_residual": residual,
        "certificate": None if cert is None else cert.status,
        "violations": [list(v) for v in report.violations],
    }
    _write(serialize.dumps_canonical(lines), args.out)
    ok = report.valid and residual == 0
    if meta.get("claimed_span") is not None:
        ok = ok and span(coloring) == meta["claimed_span"]
    return EXIT_OK if ok else EXIT_INVALID


def cmd_formula(args) -> int:
    if args.family == "gp":
        result = gp_ac_formula(args.n)
    else:
        result = torus_ac_formula(args.r, args.s)
    _write(serialize.dumps_canonical(serialize.formula_to_dict(result)), args.out)
    return EXIT_OK


def cmd_exact(args) -> int:
    if args.family == "gp":
        from .graphs import make_gp
        graph = make_gp(args.n)
    elif args.family == "torus":
        from .graphs import make_torus
        graph = make_torus(args.r, args.s)
    else:
        graph = make_cycle(args.n)
    dist = all_pairs_distances(graph)
    k = args.k if args.k is not None else dist.diameter - 1
    result = exact_rc_k(graph, dist, k, node_budget=args.budget_nodes,
                        time_budget=args.budget_seconds)
    _write(serialize.dumps_canonical(serialize.exact_to_dict(result)), args.out)
    return EXIT_TIMEOUT if result.status == TIMED_OUT else EXIT_OK


def cmd_validate_ordering(args) -> int:
    if args.family == "gp":
        report = validate_gp_ordering(args.n)
    else:
        report = validate_torus_ordering(args.r, args.s)
    _write(serialize.dumps_canonical(serialize.pattern_to_dict(report)), args.out)
    return EXIT_OK if report.ok else EXIT_INVALID


def _gp_row(n: int) -> dict:
    formula = gp_ac_formula(n)
    coloring = gp_antipodal_coloring(n)
    from .graphs import make_gp
    graph = make_gp(n)
    dist = all_pairs_distances(graph)
    ordering = ordering_from_sequence(coloring, dist, gp_ordering(n))
    cert = minimality_certificate(ordering, dist)
    return {
        "family": "gp",
        "params": f"n={n}",
        "n": graph.n,
        "diameter": dist.diameter,
        "k": coloring.k,
        "case_label": formula.case_label,
        "formula_value": formula.value,
        "formula_status": formula.status,
        "construction_span": span(coloring),
        "certificate": cert.status,
        "discrepancy": formula.discrepancy or "",
    }


def _torus_row(r: int, s: int) -> dict:
    case = torus_case(r, s)
    formula = torus_ac_formula(r, s)
    row = {
        "family": "torus",
        "params": f"r={case.r};s={case.s}",
        "n": r * s,
        "diameter": case.diameter,
        "k": case.diameter - 1,
        "case_label": formula.case_label,
        "formula_value": formula.value,
        "formula_status": formula.status,
        "construction_span": "",
        "certificate": "",
        "discrepancy": formula.discrepancy or "",
    }
    if case.label != LODD:
        coloring = torus_antipodal_coloring(r, s)
        from .graphs import make_torus
        graph = make_torus(r, s)
        dist = all_pairs_distances(graph)
        ordering = ordering_from_sequence(coloring, dist, torus_ordering(r, s))
        cert = minimality_certificate(ordering, dist)
        row["construction_span"] = span(coloring)
        row["certificate"] = cert.status
    return row


def cmd_table(args) -> int:
    rows = []
    if args.family == "gp":
        if args.n_from is None or args.n_to is None:
            raise UsageError("gp table needs --n-from and --n-to")
        for n in range(args.n_from, args.n_to + 1):
            rows.append(_gp_row(n))
    else:
        if args.r_max is None or args.s_max is None:
            raise UsageError("torus table needs --r-max and --s-max")
        seen = set()
        for r in range(3, args.r_max + 1):
            for s in range(3, args.s_max + 1):
                case = torus_case(r, s)
                key = (case.r, case.s)
                if key in seen:
                    continue
                seen.add(key)
                rows.append(_torus_row(r, s))
    if args.format == "json":
        _write(serialize.dumps_canonical(rows), args.out)
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=TABLE_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        _write(buf.getvalue(), args.out)
    return EXIT_OK


def cmd_export_dot(args) -> int:
    with open(args.file) as fh:
        data = json.load(fh)
    graph, coloring, _meta = serialize.coloring_from_dict(data)
    _write(serialize.coloring_to_dot(graph, coloring), args.out)
    return EXIT_OK


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antipodal",
        description="antipodal (radio) colorings of GP(n,1) and toroidal grids")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family(p, families=("gp", "torus")):
        p.add_argument("--family", choices=families, required=True)
        p.add_argument("--n", type=int, help="cycle length for gp/cycle")
        p.add_argument("--r", type=int)
        p.add_argument("--s", type=int)
        p.set_defaults(needs_params=True)

    p = sub.add_parser("gen", help="emit a construction coloring as JSON")
    add_family(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("graph", help="emit a graph as JSON (edges + labels)")
    add_family(p, families=("gp", "torus", "cycle"))
    p.add_argument("--out")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="verify a coloring JSON file")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("formula", help="print the closed-form span")
    add_family(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("exact", help="run the exact branch-and-bound solver")
    add_family(p, families=("gp", "torus", "cycle"))
    p.add_argument("--k", type=int, default=None,
                   help="radio parameter (default: diameter - 1)")
    p.add_argument("--budget-nodes", type=int, default=10 ** 8)
    p.add_argument("--budget-seconds", type=float, default=60.0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("validate-ordering", help="re-derive distance patterns")
    add_family(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_validate_ordering)

    p = sub.add_parser("table", help="batch formulas, spans and certificates")
    p.add_argument("--family", choices=("gp", "torus"), required=True)
    p.add_argument("--n-from", type=int)
    p.add_argument("--n-to", type=int)
    p.add_argument("--r-max", type=int)
    p.add_argument("--s-max", type=int)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("export-dot", help="DOT graph with colors as labels")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_dot)
    return parser


def _check_args(args) -> None:
    if not getattr(args, "needs_params", False):
        return
    fam = getattr(args, "family", None)
    if fam == "gp" or fam == "cycle":
        if getattr(args, "n", None) is None:
            raise UsageError(f"--family {fam} requires --n")
        if getattr(args, "r", None) is not None or getattr(args, "s", None) is not None:
            raise UsageError(f"--family {fam} conflicts with --r/--s")
    elif fam == "torus":
        if getattr(args, "r", None) is None or getattr(args, "s", None) is None:
            raise UsageError("--family torus requires --r and --s")
        if getattr(args, "n", None) is not None:
            raise UsageError("--family torus conflicts with --n")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        _check_args(args)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, RadioError, TorusError, FileNotFoundError,
            json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
