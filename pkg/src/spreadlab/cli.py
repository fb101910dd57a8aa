"""Command-line front end: analyze / verify / family / oracle.

Exit codes: 0 success, 1 bound violation or oracle deviation, 2 usage,
parse, or capacity error.  All numeric output uses 10 significant digits;
JSON payloads carry a ``schema_version`` field.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources

import numpy as np

from . import bounds as B
from .bounds import BoundReport, GraphFacts
from .graph import (
    CapacityError,
    Graph,
    ParseError,
    degree_profile,
    connectivity_profile,
    family,
    from_graph6,
    parse_edge_list,
    to_graph6,
)
from .harness import (
    _CHECKS,
    SweepConfig,
    load_quarantine,
    oracle_crosscheck,
    resolve_check_ids,
    run_sweep,
)
from .spectra import sym_eigenvalues, signless_line_shift_check, spectral_summary
from .transforms import line_graph, total_graph

SCHEMA_VERSION = "1"


def _f(x: float | None) -> str:
    return "-" if x is None else format(float(x), ".10g")


def _spectrum_text(values: np.ndarray, limit: int = 16) -> str:
    vals = [format(float(v), ".10g") for v in values]
    if len(vals) > limit:
        head = ", ".join(vals[: limit - 2])
        return f"[{head}, ... ({len(vals)} values) ..., {vals[-1]}]"
    return "[" + ", ".join(vals) + "]"


# -- input handling -----------------------------------------------------------


def _looks_like_edge_list(text: str) -> bool:
    # graph6 bytes are all in '?'..'~', so a digit or space in the payload
    # means edge-list format ('>>graph6<<' headers are stripped first).
    for line in text.splitlines():
        stripped = line.strip()
        if stripped.startswith(">>graph6<<"):
            stripped = stripped[len(">>graph6<<"):]
        if stripped and not stripped.startswith("#"):
            return any(c.isdigit() or c.isspace() for c in stripped)
    return False


def load_graph(spec: str) -> Graph:
    """Load a graph from a graph6 literal, a file path, or '-' (stdin)."""
    if spec == "-":
        text = sys.stdin.read()
        if _looks_like_edge_list(text):
            return parse_edge_list(text)
        return from_graph6(text.strip())
    if os.path.exists(spec):
        with open(spec, "r", encoding="utf-8") as fh:
            text = fh.read()
        if _looks_like_edge_list(text):
            return parse_edge_list(text)
        return from_graph6(text.strip())
    return from_graph6(spec)


# -- analyze ------------------------------------------------------------------


def _analysis_reports(g: Graph, check_ids: tuple[str, ...]) -> list[BoundReport]:
    """Evaluate the requested checks at the graph's own parameters.

    The connectivity bound is instantiated at the graph's own kappa /
    epsilon / delta rather than swept over every k, and edge addition is
    aggregated to the single worst margin.
    """
    facts = GraphFacts(g)
    reports: list[BoundReport] = []
    for cid in check_ids:
        if cid == "connectivity_spread_bound":
            cp = facts.connectivity
            if not cp.is_connected or g.n < 2:
                reports.append(
                    B._gated("connectivity_spread_bound", "graph must be connected")
                )
                continue
            for selector, k in (
                ("vertex", cp.vertex_connectivity),
                ("edge", cp.edge_connectivity),
                ("degree", facts.degree_profile.min_degree),
            ):
                if 1 <= k <= g.n - 1:
                    reports.append(
                        B.connectivity_spread_bound(g, k, selector, facts=facts)
                    )
        elif cid == "edge_addition_monotonicity":
            reports.append(_aggregated_edge_addition(facts))
        else:
            reports.extend(_CHECKS[cid](facts))
    return reports


def _aggregated_edge_addition(facts: GraphFacts) -> BoundReport:
    g = facts.graph
    if not facts.connectivity.is_connected:
        return B._gated("edge_addition_monotonicity", "graph must be connected")
    nonedges = [
        (i, j)
        for i in range(g.n)
        for j in range(i + 1, g.n)
        if not g.has_edge(i, j)
    ]
    if not nonedges:
        return B._gated("edge_addition_monotonicity", "graph is complete")
    if len(nonedges) > 300:
        return B._gated(
            "edge_addition_monotonicity",
            f"{len(nonedges)} candidate edges is too many for one analysis; "
            "check individual edges or run a sweep",
        )
    worst: BoundReport | None = None
    for e in nonedges:
        rep = B.edge_addition_monotonicity(g, e, facts=facts)
        if worst is None or (rep.slack or 0.0) < (worst.slack or 0.0):
            worst = rep
    assert worst is not None
    worst.notes = f"minimum over {len(nonedges)} candidate edges; " + worst.notes
    return worst


def _report_lines(reports: list[BoundReport]) -> list[str]:
    lines = []
    header = (
        f"{'bound':32} {'status':10} {'bound_val':>14} {'actual':>14} "
        f"{'slack':>13} flags"
    )
    lines.append(header)
    lines.append("-" * len(header))
    for rep in reports:
        if not rep.hypothesis_met:
            lines.append(f"{rep.bound_id:32} {'gated':10} {'-':>14} {'-':>14} "
                         f"{'-':>13} ({rep.notes})")
            continue
        flags = []
        if rep.tight:
            flags.append("tight")
        if rep.equality_predicted:
            flags.append("equality-predicted")
        if rep.advisory:
            flags.append("advisory")
        if rep.is_violation:
            flags.append("VIOLATION")
        status = "ok" if not rep.is_violation else "violated"
        lines.append(
            f"{rep.bound_id:32} {status:10} {_f(rep.bound_value):>14} "
            f"{_f(rep.actual_value):>14} {_f(rep.slack):>13} {' '.join(flags)}"
        )
        if rep.notes:
            lines.append(f"{'':32}   note: {rep.notes}")
        if rep.extras:
            extras = ", ".join(
                f"{k}={_f(v) if isinstance(v, float) else v}"
                for k, v in sorted(rep.extras.items())
            )
            lines.append(f"{'':32}   {extras}")
    return lines


def _graph_header_lines(g: Graph) -> list[str]:
    dp = degree_profile(g)
    cp = connectivity_profile(g)
    lines = [
        f"graph: n = {g.n}, m = {g.m}, graph6 = {to_graph6(g)}",
        (
            f"degrees: min {dp.min_degree}, max {dp.max_degree}, "
            f"zagreb {dp.zagreb}"
        ),
        (
            f"connectivity: {'connected' if cp.is_connected else 'disconnected'}"
            f", kappa = {cp.vertex_connectivity}, epsilon = {cp.edge_connectivity}"
            f", girth = {cp.girth}, diameter = {cp.diameter}"
            f", bipartite = {cp.is_bipartite}"
            + (f", regular (r = {cp.regular_degree})" if cp.is_regular else "")
        ),
    ]
    return lines


def cmd_analyze(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    check_ids = resolve_check_ids(args.bounds)
    summary = spectral_summary(g)
    shift = signless_line_shift_check(g)
    reports = _analysis_reports(g, check_ids)
    violations = [r for r in reports if r.is_violation]

    if args.json:
        theta = degree_profile(g).zagreb // 2 - g.m
        payload = {
            "schema_version": SCHEMA_VERSION,
            "graph": {"n": g.n, "m": g.m, "graph6": to_graph6(g)},
            "spectra": {
                "adjacency": [float(x) for x in summary.adjacency],
                "laplacian": [float(x) for x in summary.laplacian],
                "signless": [float(x) for x in summary.signless],
            },
            "spreads": {
                "spread": summary.spread,
                "laplacian_spread": summary.laplacian_spread,
                "q_spread": summary.q_spread,
                "line_spread": summary.line_spread,
            },
            "algebraic_connectivity": summary.algebraic_connectivity,
            "theta": theta,
            "shift_check": {
                "ok": shift.ok,
                "max_deviation": shift.max_deviation,
                "compared": shift.compared,
            },
            "reports": [r.to_dict() for r in reports],
            "ok": not violations,
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
        return 1 if violations else 0

    lines = _graph_header_lines(g)
    lines.append(f"adjacency spectrum: {_spectrum_text(summary.adjacency)}")
    lines.append(f"laplacian spectrum: {_spectrum_text(summary.laplacian)}")
    lines.append(f"signless spectrum:  {_spectrum_text(summary.signless)}")
    lines.append(
        "spreads: S = {}, S_L = {}, S_Q = {}, line = {}".format(
            _f(summary.spread),
            _f(summary.laplacian_spread),
            _f(summary.q_spread),
            _f(summary.line_spread),
        )
    )
    lines.append(
        f"algebraic connectivity: {_f(summary.algebraic_connectivity)}"
    )
    if g.m > 0:
        lg, _ = line_graph(g)
        tg = total_graph(g)
        theta = degree_profile(g).zagreb // 2 - g.m
        lines.append(
            f"line graph: {lg.n} vertices, {lg.m} edges (theta = {theta})"
        )
        tdeg = tg.degrees()
        lines.append(
            f"total graph: {tg.n} vertices, {tg.m} edges, "
            f"degrees {min(tdeg)}..{max(tdeg)}"
        )
    lines.append(
        f"shift identity (q_i vs line + 2): max deviation "
        f"{_f(shift.max_deviation)} over {shift.compared} positions"
    )
    lines.append("")
    lines.extend(_report_lines(reports))
    if violations:
        lines.append("")
        lines.append(f"VIOLATIONS: {len(violations)}")
    print("\n".join(lines))
    return 1 if violations else 0


# -- verify -------------------------------------------------------------------


def _default_quarantine_path() -> str | None:
    env = os.environ.get("SPREADLAB_QUARANTINE")
    if env:
        return env
    try:
        path = resources.files("spreadlab").joinpath("data/quarantine.tsv")
        if path.is_file():
            return str(path)
    except (ModuleNotFoundError, FileNotFoundError):
        pass
    return None


def cmd_verify(args: argparse.Namespace) -> int:
    quarantine: tuple = ()
    qpath = args.quarantine or _default_quarantine_path()
    if qpath:
        quarantine = load_quarantine(qpath)
    cfg = SweepConfig(
        n_min=args.n_min,
        n_max=args.n_max,
        connected_only=args.connected,
        checks=resolve_check_ids(args.bounds),
        dedup=args.dedup,
        jobs=args.jobs,
        quarantine=quarantine,
        slack_tol=args.slack_tol,
        collect_detail=bool(args.csv),
    )
    cfg.validate()
    result = run_sweep(cfg)
    ledger = result.ledger
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(ledger.to_json_text())
    if args.timings:
        with open(args.timings, "w", encoding="utf-8") as fh:
            json.dump(result.timings, fh, indent=2, sort_keys=True)
            fh.write("\n")
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(ledger.to_csv())
    if args.format == "json":
        sys.stdout.write(ledger.to_json_text())
    else:
        sys.stdout.write(ledger.to_text())
    return 0 if ledger.ok else 1


# -- family -------------------------------------------------------------------


def cmd_family(args: argparse.Namespace) -> int:
    g = family(args.name, *args.params)
    if args.emit == "graph6":
        if args.json:
            print(json.dumps({
                "schema_version": SCHEMA_VERSION,
                "family": args.name,
                "params": list(args.params),
                "graph6": to_graph6(g),
            }, indent=2, sort_keys=True))
        else:
            print(to_graph6(g))
        return 0

    closed = None
    if args.name == "join_family":
        n, k, i = args.params
        closed_spec = B.join_family_line_spectrum(n, k, i)
        closed = {
            "line_spectrum": [float(x) for x in closed_spec],
            "line_spread": B.join_family_line_spread(n, k, i),
        }
    if args.json:
        summary = spectral_summary(g)
        payload = {
            "schema_version": SCHEMA_VERSION,
            "family": args.name,
            "params": list(args.params),
            "graph": {"n": g.n, "m": g.m, "graph6": to_graph6(g)},
            "spreads": {
                "spread": summary.spread,
                "laplacian_spread": summary.laplacian_spread,
                "q_spread": summary.q_spread,
                "line_spread": summary.line_spread,
            },
        }
        if closed:
            payload["closed_form"] = closed
        print(json.dumps(payload, indent=2, sort_keys=True))
        return 0

    lines = [f"family: {args.name}({', '.join(str(p) for p in args.params)})"]
    lines.extend(_graph_header_lines(g))
    summary = spectral_summary(g)
    lines.append(
        "spreads: S = {}, S_L = {}, S_Q = {}, line = {}".format(
            _f(summary.spread),
            _f(summary.laplacian_spread),
            _f(summary.q_spread),
            _f(summary.line_spread),
        )
    )
    if closed:
        lg, _ = line_graph(g)
        brute = sym_eigenvalues(lg.adjacency_matrix())
        lines.append("")
        lines.append("closed-form line spectrum vs eigensolve:")
        lines.append(f"{'closed':>16} {'eigensolve':>16} {'diff':>12}")
        for c, b in zip(closed["line_spectrum"], brute):
            lines.append(f"{_f(c):>16} {_f(float(b)):>16} {_f(abs(c - float(b))):>12}")
        lines.append(
            f"closed-form line spread: {_f(closed['line_spread'])}"
            f" (eigensolve {_f(float(brute[0] - brute[-1]))})"
        )
    print("\n".join(lines))
    return 0


# -- oracle -------------------------------------------------------------------


def cmd_oracle(args: argparse.Namespace) -> int:
    report = oracle_crosscheck(args.suite, regular_n_max=args.regular_n_max)
    if args.json:
        payload = {"schema_version": SCHEMA_VERSION, **report.to_dict()}
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for e in report.entries:
            status = "ok" if e.ok else "FAIL"
            worst = f"  worst: {e.worst_case}" if e.worst_case else ""
            print(
                f"{status:4} {e.name:42} cases={e.cases:<7} "
                f"max_dev={_f(e.max_deviation)}{worst}"
            )
        print("RESULT: " + ("ok" if report.ok else "DEVIATIONS FOUND"))
    return 0 if report.ok else 1


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spreadlab",
        description="Spectral spread bounds for graphs, line graphs, and total graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser(
        "analyze", help="profile one graph and evaluate the bounds on it"
    )
    p_an.add_argument(
        "graph", help="graph6 literal, path to a graph6/edge-list file, or '-' for stdin"
    )
    p_an.add_argument(
        "--bounds",
        default="all",
        help="comma-separated bound ids to evaluate (default: all)",
    )
    p_an.add_argument("--json", action="store_true", help="emit JSON")
    p_an.set_defaults(fn=cmd_analyze)

    p_ver = sub.add_parser(
        "verify", help="exhaustive sweep over all labeled graphs in a size range"
    )
    p_ver.add_argument("--n-min", type=int, default=1)
    p_ver.add_argument("--n-max", type=int, default=5)
    p_ver.add_argument(
        "--connected",
        action="store_true",
        help="restrict the sweep to connected graphs",
    )
    p_ver.add_argument(
        "--bounds",
        default="all",
        help="comma-separated check ids (default: all)",
    )
    p_ver.add_argument("--dedup", action="store_true",
                       help="skip spectrally duplicate graphs (speed knob)")
    p_ver.add_argument("--jobs", type=int, default=1)
    p_ver.add_argument("--quarantine", help="path to a quarantine TSV")
    p_ver.add_argument("--out", help="write the JSON ledger to this path")
    p_ver.add_argument("--timings", help="write wall-clock timings to this path")
    p_ver.add_argument("--csv", help="write per-graph detail rows to this path")
    p_ver.add_argument("--slack-tol", type=float, default=B.SLACK_TOL)
    p_ver.add_argument(
        "--format", choices=("text", "json"), default="text",
        help="stdout format",
    )
    p_ver.set_defaults(fn=cmd_verify)

    p_fam = sub.add_parser("family", help="construct a named parametric graph")
    p_fam.add_argument(
        "name",
        help="complete | path | cycle | complete_bipartite | join_family",
    )
    p_fam.add_argument("params", nargs="*", type=int)
    p_fam.add_argument(
        "--emit", choices=("analysis", "graph6"), default="analysis"
    )
    p_fam.add_argument("--json", action="store_true")
    p_fam.set_defaults(fn=cmd_family)

    p_or = sub.add_parser(
        "oracle", help="cross-check closed-form spectra against eigensolves"
    )
    p_or.add_argument("--suite", choices=("join", "total", "all"), default="all")
    p_or.add_argument(
        "--regular-n-max", type=int, default=8,
        help="largest order for the regular-graph suite (<= 8)",
    )
    p_or.add_argument("--json", action="store_true")
    p_or.set_defaults(fn=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, CapacityError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
