"""Exhaustive verification harness: enumerate, check, aggregate, serialize.

A sweep enumerates every labeled graph in a size range, evaluates the
registered checks on each, and aggregates the outcomes into a
:class:`VerificationLedger`.  The ledger is deterministic: counts, witness
lists and violation details are independent of worker count and task
chunking (wall-clock timings are kept separate so ledger files can be
compared byte-for-byte).
"""

from __future__ import annotations

import csv
import io
import json
import multiprocessing
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator

import numpy as np

from . import bounds as B
from .bounds import BoundReport, GraphFacts, SLACK_TOL
from .graph import CapacityError, Graph, family, to_graph6
from .quotient import (
    edge_interlacing_check,
    interlacing_check,
    quotient_eigenvalues,
    quotient_matrix,
    total_vertex_edge_blocks,
)
from .spectra import (
    GROUP_TOL,
    adjacency_matrix,
    laplacian_matrix,
    signless_laplacian_matrix,
    signless_line_shift_check,
    sym_eigenvalues,
)
from .transforms import incidence_matrix, line_graph

__all__ = [
    "ALL_CHECK_IDS",
    "BOUND_CHECK_IDS",
    "IDENTITY_CHECK_IDS",
    "OracleReport",
    "SweepConfig",
    "SweepResult",
    "VerificationLedger",
    "enumerate_graphs",
    "enumerate_regular_graphs",
    "load_quarantine",
    "oracle_crosscheck",
    "run_sweep",
]

#: Cap on witness list lengths in serialized ledgers (full counts are kept).
WITNESS_CAP = 1000

#: Deviation tolerance for the oracle cross-checks.
ORACLE_TOL = 1e-7


# -- enumeration --------------------------------------------------------------


def enumerate_graphs(
    n: int, *, connected_only: bool = False, dedup: bool = False
) -> Iterator[Graph]:
    """Yield every labeled simple graph on ``n`` vertices (1 <= n <= 8).

    ``connected_only`` filters to connected graphs; ``dedup`` keeps one
    representative per (degree multiset, rounded adjacency spectrum) key --
    a cheap reduction knob, not an isomorphism test.
    """
    if not 1 <= n <= 8:
        raise CapacityError(f"exhaustive enumeration capped at n <= 8, got {n}")
    pairs = list(combinations(range(n), 2))
    seen_keys: set | None = set() if dedup else None
    for mask in range(1 << len(pairs)):
        g = _graph_from_mask(n, pairs, mask)
        if connected_only and not g.is_connected():
            continue
        if seen_keys is not None:
            key = _dedup_key(g)
            if key in seen_keys:
                continue
            seen_keys.add(key)
        yield g


def _graph_from_mask(n: int, pairs: list[tuple[int, int]], mask: int) -> Graph:
    nbr = [0] * n
    while mask:
        low = mask & -mask
        i, j = pairs[low.bit_length() - 1]
        nbr[i] |= 1 << j
        nbr[j] |= 1 << i
        mask ^= low
    return Graph._from_neighbor_masks(n, nbr)


def _dedup_key(g: Graph) -> tuple:
    spec = sym_eigenvalues(adjacency_matrix(g))
    return (
        tuple(sorted(g.degrees())),
        tuple(round(float(x), 6) for x in spec),
    )


def enumerate_regular_graphs(
    n: int, r: int, *, connected_only: bool = True
) -> Iterator[Graph]:
    """Yield every labeled r-regular graph on ``n`` vertices (n <= 8).

    Backtracking over edge slots with per-vertex feasibility pruning; much
    cheaper than filtering the full 2^C(n,2) enumeration at n = 7, 8.
    """
    if not 1 <= n <= 8:
        raise CapacityError(f"regular enumeration capped at n <= 8, got {n}")
    if not 0 <= r < max(n, 1):
        raise ValueError(f"degree must satisfy 0 <= r <= n-1, got r={r}")
    if (n * r) % 2 == 1:
        return
    pairs = list(combinations(range(n), 2))
    total = len(pairs)
    # suffix[t][v] = number of pairs at positions >= t that touch v
    suffix = [[0] * n for _ in range(total + 1)]
    for t in range(total - 1, -1, -1):
        row = suffix[t + 1][:]
        i, j = pairs[t]
        row[i] += 1
        row[j] += 1
        suffix[t] = row
    deg = [0] * n
    chosen: list[tuple[int, int]] = []

    def rec(t: int) -> Iterator[Graph]:
        for v in range(n):
            need = r - deg[v]
            if need < 0 or need > suffix[t][v]:
                return
        if t == total:
            g = Graph(n, list(chosen))
            if not connected_only or g.is_connected():
                yield g
            return
        i, j = pairs[t]
        if deg[i] < r and deg[j] < r:
            deg[i] += 1
            deg[j] += 1
            chosen.append(pairs[t])
            yield from rec(t + 1)
            deg[i] -= 1
            deg[j] -= 1
            chosen.pop()
        yield from rec(t + 1)

    yield from rec(0)


# -- check registry ------------------------------------------------------------


def _single(fn: Callable[..., BoundReport]) -> Callable[[GraphFacts], list[BoundReport]]:
    def adapter(facts: GraphFacts) -> list[BoundReport]:
        return [fn(facts.graph, facts=facts)]

    return adapter


def _identity_report(check_id: str, deviation: float, *, notes: str = "", extras=None) -> BoundReport:
    return BoundReport(
        bound_id=check_id,
        hypothesis_met=True,
        bound_value=0.0,
        actual_value=float(deviation),
        slack=-float(deviation),
        tight=abs(deviation) <= SLACK_TOL,
        equality_predicted=True,
        notes=notes,
        extras=extras or {},
    )


def _check_signless_line_shift(facts: GraphFacts) -> list[BoundReport]:
    res = signless_line_shift_check(facts.graph, backend=facts.backend)
    return [
        _identity_report(
            "signless_line_shift",
            res.max_deviation,
            extras={"compared": res.compared},
        )
    ]


def _check_theta_edge_count(facts: GraphFacts) -> list[BoundReport]:
    lg, _ = facts.line
    dev = abs(facts.theta - lg.m)
    return [
        _identity_report(
            "theta_edge_count",
            float(dev),
            notes="zagreb/2 - m must equal the line graph's edge count",
            extras={"theta": facts.theta, "line_edges": lg.m},
        )
    ]


def _check_incidence_identities(facts: GraphFacts) -> list[BoundReport]:
    g = facts.graph
    r = incidence_matrix(g)
    lg, _ = facts.line
    q = signless_laplacian_matrix(g)
    a_line = adjacency_matrix(lg)
    m = lg.n
    dev1 = int(np.abs(r @ r.T - q).max()) if g.n else 0
    dev2 = int(np.abs(r.T @ r - (2 * np.eye(m, dtype=np.int64) + a_line)).max()) if m else 0
    return [
        _identity_report(
            "incidence_identities",
            float(max(dev1, dev2)),
            notes="R R^t = Q and R^t R = 2I + A(line)",
        )
    ]


def _check_total_degree_formulas(facts: GraphFacts) -> list[BoundReport]:
    g = facts.graph
    t = facts.total
    _, index = facts.line
    dev = 0
    for v in range(g.n):
        dev = max(dev, abs(t.degree(v) - 2 * g.degree(v)))
    for k, (i, j) in enumerate(index):
        dev = max(dev, abs(t.degree(g.n + k) - (g.degree(i) + g.degree(j))))
    return [
        _identity_report(
            "total_degree_formulas",
            float(dev),
            notes="total degrees: 2 d(v) on vertices, d(i)+d(j) on edges",
        )
    ]


def _check_whitney_chain(facts: GraphFacts) -> list[BoundReport]:
    cp = facts.connectivity
    dp = facts.degree_profile
    kappa, eps, delta = cp.vertex_connectivity, cp.edge_connectivity, dp.min_degree
    slack = float(min(eps - kappa, delta - eps))
    return [
        BoundReport(
            bound_id="whitney_chain",
            hypothesis_met=True,
            bound_value=float(delta),
            actual_value=float(kappa),
            slack=slack,
            tight=abs(slack) <= SLACK_TOL,
            equality_predicted=False,
            notes="vertex connectivity <= edge connectivity <= min degree",
            extras={"kappa": kappa, "epsilon": eps, "delta": delta},
        )
    ]


def _check_q1_vs_2lambda1(facts: GraphFacts) -> list[BoundReport]:
    if not facts.connectivity.is_connected or facts.n < 2:
        return [
            B._gated("q1_vs_2lambda1", "needs a connected graph on >= 2 vertices")
        ]
    slack = facts.q1 - 2.0 * facts.lambda1
    return [
        BoundReport(
            bound_id="q1_vs_2lambda1",
            hypothesis_met=True,
            bound_value=facts.q1,
            actual_value=2.0 * facts.lambda1,
            slack=float(slack),
            tight=abs(slack) <= SLACK_TOL,
            equality_predicted=facts.connectivity.is_regular,
            iff_binding=True,
            notes="q1 >= 2 lambda1, equality iff regular",
        )
    ]


def _check_bipartite_lq(facts: GraphFacts) -> list[BoundReport]:
    if not facts.connectivity.is_bipartite:
        return [
            B._gated(
                "bipartite_lq_spectra",
                "graph not bipartite",
                q_min=float(facts.signless_spectrum[-1]) if facts.n else 0.0,
            )
        ]
    dev = (
        float(np.abs(facts.laplacian_spectrum - facts.signless_spectrum).max())
        if facts.n
        else 0.0
    )
    return [
        _identity_report(
            "bipartite_lq_spectra",
            dev,
            notes="bipartite: Laplacian and signless spectra coincide",
        )
    ]


def _check_laplacian_zero_multiplicity(facts: GraphFacts) -> list[BoundReport]:
    zeros = int(np.sum(np.abs(facts.laplacian_spectrum) <= GROUP_TOL))
    comps = len(facts.graph.components())
    return [
        _identity_report(
            "laplacian_zero_multiplicity",
            float(abs(zeros - comps)),
            notes="Laplacian kernel dimension = component count",
            extras={"zero_eigenvalues": zeros, "components": comps},
        )
    ]


def _check_trace_identities(facts: GraphFacts) -> list[BoundReport]:
    n, m, z = facts.n, facts.m, facts.zagreb
    a, l, q = facts.adjacency_spectrum, facts.laplacian_spectrum, facts.signless_spectrum
    dev = 0.0
    if n:
        dev = max(dev, abs(float(a.sum())))
        dev = max(dev, abs(float(l.sum()) - 2 * m))
        dev = max(dev, abs(float(q.sum()) - 2 * m))
        dev = max(dev, abs(float((a * a).sum()) - 2 * m))
        dev = max(dev, abs(float((q * q).sum()) - (z + 2 * m)))
    return [
        _identity_report(
            "trace_identities",
            dev,
            notes="traces of A, L, Q, A^2, Q^2 against n, m, zagreb",
        )
    ]


def _check_total_quotient_interlacing(facts: GraphFacts) -> list[BoundReport]:
    if facts.m < 1:
        return [B._gated("total_quotient_interlacing", "needs at least one edge")]
    g = facts.graph
    t = facts.total
    blocks = total_vertex_edge_blocks(g)
    n, m, z = facts.n, facts.m, facts.zagreb
    theta = facts.theta
    closed = {
        "adjacency": (
            adjacency_matrix(t),
            facts.total_adjacency_spectrum,
            np.array([[2 * m / n, 2 * m / n], [2.0, (z - 2 * m) / m]]),
        ),
        "laplacian": (
            laplacian_matrix(t),
            facts.total_laplacian_spectrum,
            np.array([[2 * m / n, -2 * m / n], [-2.0, 2.0]]),
        ),
        "signless": (
            signless_laplacian_matrix(t),
            facts.total_signless_spectrum,
            np.array([[6 * m / n, 2 * m / n], [2.0, 2.0 + 4.0 * theta / m]]),
        ),
    }
    reports = []
    for name, (matrix, full, expected) in closed.items():
        qm = quotient_matrix(matrix, blocks)
        entry_dev = float(np.abs(qm.entries - expected).max())
        quot = quotient_eigenvalues(qm, backend=facts.backend)
        ok = interlacing_check(quot, full)
        dev = entry_dev if ok else max(entry_dev, 1.0)
        reports.append(
            _identity_report(
                "total_quotient_interlacing",
                dev,
                notes=f"{name}: closed-form quotient entries + interlacing",
                extras={"matrix": name, "interlaces": ok},
            )
        )
    return reports


def _check_edge_deletion_q_interlacing(facts: GraphFacts) -> list[BoundReport]:
    g = facts.graph
    if g.m == 0:
        return [B._gated("edge_deletion_q_interlacing", "needs at least one edge")]
    bad = [e for e in g.edges() if not edge_interlacing_check(g, e, backend=facts.backend)]
    return [
        _identity_report(
            "edge_deletion_q_interlacing",
            0.0 if not bad else 1.0,
            notes="signless spectra weave under single-edge deletion",
            extras={"edges_checked": g.m, "failing_edges": len(bad)},
        )
    ]


def _sweep_edge_addition(facts: GraphFacts) -> list[BoundReport]:
    g = facts.graph
    if not facts.connectivity.is_connected:
        return [B._gated("edge_addition_monotonicity", "base graph must be connected")]
    reports = []
    nonedges = [
        (i, j)
        for i, j in combinations(range(g.n), 2)
        if not g.has_edge(i, j)
    ]
    if not nonedges:
        return [B._gated("edge_addition_monotonicity", "graph is complete")]
    for e in nonedges:
        reports.append(B.edge_addition_monotonicity(g, e, facts=facts))
    return reports


def _sweep_connectivity_bound(facts: GraphFacts) -> list[BoundReport]:
    n = facts.n
    if n < 2:
        return [B._gated("connectivity_spread_bound", "needs n >= 2")]
    reports = []
    for k in range(1, n):
        for selector in ("vertex", "edge", "degree"):
            reports.append(
                B.connectivity_spread_bound(facts.graph, k, selector, facts=facts)
            )
    return reports


#: Identity / structural checks (each produces equality-style reports).
IDENTITY_CHECK_IDS: tuple[str, ...] = (
    "signless_line_shift",
    "theta_edge_count",
    "incidence_identities",
    "total_degree_formulas",
    "whitney_chain",
    "q1_vs_2lambda1",
    "bipartite_lq_spectra",
    "laplacian_zero_multiplicity",
    "trace_identities",
    "total_quotient_interlacing",
    "edge_deletion_q_interlacing",
)

#: Theorem bounds producing slack reports.
BOUND_CHECK_IDS: tuple[str, ...] = (
    "gregory_upper",
    "line_spread_upper",
    "line_spread_trichotomy",
    "spread_vs_line_spread",
    "unicyclic_spread_bound",
    "grone_tree_bound",
    "edge_addition_monotonicity",
    "connectivity_spread_bound",
    "total_q_spread_lower",
    "total_spread_lower",
    "total_laplacian_spread_lower",
    "regular_total_spread",
)

_CHECKS: dict[str, Callable[[GraphFacts], list[BoundReport]]] = {
    "gregory_upper": _single(B.gregory_upper),
    "line_spread_upper": _single(B.line_spread_upper),
    "line_spread_trichotomy": _single(B.line_spread_trichotomy),
    "spread_vs_line_spread": _single(B.spread_vs_line_spread),
    "unicyclic_spread_bound": _single(B.unicyclic_spread_bound),
    "grone_tree_bound": _single(B.grone_tree_bound),
    "edge_addition_monotonicity": _sweep_edge_addition,
    "connectivity_spread_bound": _sweep_connectivity_bound,
    "total_q_spread_lower": _single(B.total_q_spread_lower),
    "total_spread_lower": _single(B.total_spread_lower),
    "total_laplacian_spread_lower": _single(B.total_laplacian_spread_lower),
    "regular_total_spread": _single(B.regular_total_spread),
    "signless_line_shift": _check_signless_line_shift,
    "theta_edge_count": _check_theta_edge_count,
    "incidence_identities": _check_incidence_identities,
    "total_degree_formulas": _check_total_degree_formulas,
    "whitney_chain": _check_whitney_chain,
    "q1_vs_2lambda1": _check_q1_vs_2lambda1,
    "bipartite_lq_spectra": _check_bipartite_lq,
    "laplacian_zero_multiplicity": _check_laplacian_zero_multiplicity,
    "trace_identities": _check_trace_identities,
    "total_quotient_interlacing": _check_total_quotient_interlacing,
    "edge_deletion_q_interlacing": _check_edge_deletion_q_interlacing,
}

ALL_CHECK_IDS: tuple[str, ...] = BOUND_CHECK_IDS + IDENTITY_CHECK_IDS

#: Checks that eigensolve total graphs or iterate edge variants: these blow
#: up the per-graph cost, so sweeps enabling them are capped at n <= 6.
HEAVY_CHECK_IDS: frozenset[str] = frozenset(
    {
        "total_q_spread_lower",
        "total_spread_lower",
        "total_laplacian_spread_lower",
        "regular_total_spread",
        "total_quotient_interlacing",
        "edge_deletion_q_interlacing",
        "edge_addition_monotonicity",
        "total_degree_formulas",
    }
)


def resolve_check_ids(spec: str | Iterable[str]) -> tuple[str, ...]:
    """Resolve a comma list (or iterable) of check ids; 'all' means all."""
    if isinstance(spec, str):
        items = [s.strip() for s in spec.split(",") if s.strip()]
    else:
        items = list(spec)
    if items in (["all"], []):
        return ALL_CHECK_IDS
    unknown = [s for s in items if s not in _CHECKS]
    if unknown:
        raise ValueError(
            f"unknown check id(s): {', '.join(unknown)}; "
            f"known: {', '.join(ALL_CHECK_IDS)}"
        )
    return tuple(dict.fromkeys(items))


# -- sweep configuration -------------------------------------------------------


@dataclass(frozen=True)
class SweepConfig:
    """Parameters of one exhaustive verification sweep."""

    n_min: int = 1
    n_max: int = 5
    connected_only: bool = True
    checks: tuple[str, ...] = ALL_CHECK_IDS
    dedup: bool = False
    jobs: int = 1
    quarantine: tuple[tuple[str, str, str], ...] = ()
    slack_tol: float = SLACK_TOL
    collect_detail: bool = False

    def validate(self) -> None:
        if not 1 <= self.n_min <= self.n_max:
            raise ValueError(
                f"need 1 <= n_min <= n_max, got {self.n_min}..{self.n_max}"
            )
        if self.n_max > 8:
            raise CapacityError(
                f"sweeps are capped at n_max = 8, got {self.n_max}"
            )
        heavy = sorted(set(self.checks) & HEAVY_CHECK_IDS)
        if heavy and self.n_max > 6:
            raise CapacityError(
                f"n_max = {self.n_max} exceeds the cap (6) for total-graph / "
                f"per-edge checks: {', '.join(heavy)}; restrict the check "
                "list or lower n_max"
            )
        unknown = [c for c in self.checks if c not in _CHECKS]
        if unknown:
            raise ValueError(f"unknown check id(s): {', '.join(unknown)}")
        if self.jobs < 1:
            raise ValueError(f"jobs must be >= 1, got {self.jobs}")
        if not 0.0 < self.slack_tol < 1.0:
            raise ValueError(f"slack_tol must be in (0, 1), got {self.slack_tol}")

    def config_echo(self) -> dict:
        # Deliberately excludes jobs: worker count must not change the ledger.
        return {
            "n_min": self.n_min,
            "n_max": self.n_max,
            "connected_only": self.connected_only,
            "checks": sorted(self.checks),
            "dedup": self.dedup,
            "quarantine_entries": len(self.quarantine),
            "slack_tol": self.slack_tol,
        }


# -- ledger ----------------------------------------------------------------------


_DETAIL_HEADER = (
    "check",
    "graph6",
    "variant",
    "hypothesis_met",
    "bound",
    "actual",
    "slack",
    "tight",
    "equality_predicted",
    "advisory",
    "violation",
    "notes",
)


def _fmt_float(x: float | None) -> str:
    return "" if x is None else format(x, ".10g")


def _detail_row(g6: str, report: BoundReport, tight: bool, violating: bool) -> tuple:
    bits = []
    for key in ("k", "selector", "edge", "matrix"):
        if key in report.extras:
            bits.append(f"{key}={report.extras[key]}")
    return (
        report.bound_id,
        g6,
        ";".join(bits),
        str(report.hypothesis_met),
        _fmt_float(report.bound_value),
        _fmt_float(report.actual_value),
        _fmt_float(report.slack),
        str(tight),
        str(report.equality_predicted),
        str(report.advisory),
        str(violating and not report.advisory and report.hypothesis_met),
        report.notes,
    )


def _trim_witnesses(witnesses: set) -> None:
    """Keep only the lexicographically smallest WITNESS_CAP entries.

    Trimming this way makes witness lists independent of task chunking: the
    globally smallest entries survive no matter how the stream was split.
    """
    if len(witnesses) > WITNESS_CAP:
        for extra in sorted(witnesses)[WITNESS_CAP:]:
            witnesses.discard(extra)


def _add_witness(witnesses: set, g6: str) -> None:
    witnesses.add(g6)
    if len(witnesses) > 2 * WITNESS_CAP:
        _trim_witnesses(witnesses)


@dataclass
class CheckStats:
    checked: int = 0
    hypothesis_met: int = 0
    tight: int = 0
    violations: int = 0
    iff_mismatches: int = 0
    quarantined: int = 0
    advisory_deviations: int = 0
    tight_witnesses: set = field(default_factory=set)
    violation_witnesses: set = field(default_factory=set)
    iff_witnesses: set = field(default_factory=set)

    def merge(self, other: "CheckStats") -> None:
        self.checked += other.checked
        self.hypothesis_met += other.hypothesis_met
        self.tight += other.tight
        self.violations += other.violations
        self.iff_mismatches += other.iff_mismatches
        self.quarantined += other.quarantined
        self.advisory_deviations += other.advisory_deviations
        self.tight_witnesses |= other.tight_witnesses
        self.violation_witnesses |= other.violation_witnesses
        self.iff_witnesses |= other.iff_witnesses
        _trim_witnesses(self.tight_witnesses)
        _trim_witnesses(self.violation_witnesses)
        _trim_witnesses(self.iff_witnesses)


class VerificationLedger:
    """Aggregated sweep outcome; serialization is worker-count independent."""

    SCHEMA_VERSION = "1"

    def __init__(self, config_echo: dict, *, slack_tol: float = SLACK_TOL,
                 collect_detail: bool = False):
        self.config = dict(config_echo)
        self.slack_tol = slack_tol
        self.collect_detail = collect_detail
        self.stats: dict[str, CheckStats] = {}
        self.per_order: dict[int, dict[str, int]] = {}
        self.violation_details: list[tuple[str, str, str]] = []
        self.quarantined_details: list[tuple[str, str, str]] = []
        self.detail_rows: list[tuple] = []

    # -- accumulation --

    def count_enumerated(self, n: int, enumerated: int, checked: int) -> None:
        row = self.per_order.setdefault(n, {"enumerated": 0, "checked": 0})
        row["enumerated"] += enumerated
        row["checked"] += checked

    def add_report(
        self,
        g6: str,
        report: BoundReport,
        quarantine_keys: frozenset[tuple[str, str]],
    ) -> None:
        st = self.stats.setdefault(report.bound_id, CheckStats())
        st.checked += 1
        # Classification re-derives tight/violation from slack so a config
        # tolerance override actually takes effect.
        tol = self.slack_tol
        if report.slack is None:
            tight, violating = report.tight, False
        else:
            tight = abs(report.slack) <= tol
            violating = report.hypothesis_met and report.slack < -tol
        if self.collect_detail:
            self.detail_rows.append(_detail_row(g6, report, tight, violating))
        if not report.hypothesis_met:
            return
        st.hypothesis_met += 1
        if tight:
            st.tight += 1
            _add_witness(st.tight_witnesses, g6)
        if report.advisory:
            if violating:
                st.advisory_deviations += 1
            return
        key = (report.bound_id, g6)
        if violating:
            note = f"slack {report.slack:.6g}: {report.notes}".strip().rstrip(":")
            if key in quarantine_keys:
                st.quarantined += 1
                self.quarantined_details.append((report.bound_id, g6, note))
            else:
                st.violations += 1
                _add_witness(st.violation_witnesses, g6)
                self.violation_details.append((report.bound_id, g6, note))
        if report.iff_binding and tight != report.equality_predicted:
            note = (
                f"tight={tight} but equality_predicted="
                f"{report.equality_predicted}: {report.notes}".strip().rstrip(":")
            )
            if key in quarantine_keys:
                st.quarantined += 1
                self.quarantined_details.append((report.bound_id, g6, note))
            else:
                st.iff_mismatches += 1
                _add_witness(st.iff_witnesses, g6)
                self.violation_details.append((report.bound_id, g6, note))

    def merge(self, other: "VerificationLedger") -> None:
        for n, row in other.per_order.items():
            self.count_enumerated(n, row["enumerated"], row["checked"])
        for cid, st in other.stats.items():
            self.stats.setdefault(cid, CheckStats()).merge(st)
        self.violation_details.extend(other.violation_details)
        self.quarantined_details.extend(other.quarantined_details)
        self.detail_rows.extend(other.detail_rows)

    # -- outcome --

    @property
    def total_violations(self) -> int:
        return sum(st.violations + st.iff_mismatches for st in self.stats.values())

    @property
    def ok(self) -> bool:
        return self.total_violations == 0

    # -- serialization --

    def to_json_dict(self) -> dict:
        checks = {}
        for cid in sorted(self.stats):
            st = self.stats[cid]
            checks[cid] = {
                "checked": st.checked,
                "hypothesis_met": st.hypothesis_met,
                "tight": st.tight,
                "violations": st.violations,
                "iff_mismatches": st.iff_mismatches,
                "quarantined": st.quarantined,
                "advisory_deviations": st.advisory_deviations,
                "tight_witnesses": sorted(st.tight_witnesses)[:WITNESS_CAP],
                "violation_witnesses": sorted(st.violation_witnesses)[:WITNESS_CAP],
                "iff_witnesses": sorted(st.iff_witnesses)[:WITNESS_CAP],
            }
        return {
            "schema_version": self.SCHEMA_VERSION,
            "config": self.config,
            "totals": {
                "graphs_enumerated": sum(
                    r["enumerated"] for r in self.per_order.values()
                ),
                "graphs_checked": sum(r["checked"] for r in self.per_order.values()),
                "per_order": {
                    str(n): dict(self.per_order[n]) for n in sorted(self.per_order)
                },
                "violations": self.total_violations,
            },
            "checks": checks,
            "violations": [
                {"check": c, "graph6": g, "note": note}
                for c, g, note in sorted(self.violation_details)
            ],
            "quarantined": [
                {"check": c, "graph6": g, "note": note}
                for c, g, note in sorted(self.quarantined_details)
            ],
            "ok": self.ok,
        }

    def to_json_text(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = []
        cfg = self.config
        lines.append(
            "sweep: n = {}..{}, {}, checks = {}".format(
                cfg.get("n_min"),
                cfg.get("n_max"),
                "connected only" if cfg.get("connected_only") else "all graphs",
                len(cfg.get("checks", [])),
            )
        )
        totals = sum(r["checked"] for r in self.per_order.values())
        lines.append(f"graphs checked: {totals}")
        header = (
            f"{'check':34} {'checked':>9} {'hyp_met':>9} {'tight':>7} "
            f"{'viol':>5} {'iff':>4} {'quar':>5}"
        )
        lines.append(header)
        lines.append("-" * len(header))
        for cid in sorted(self.stats):
            st = self.stats[cid]
            lines.append(
                f"{cid:34} {st.checked:>9} {st.hypothesis_met:>9} {st.tight:>7} "
                f"{st.violations:>5} {st.iff_mismatches:>4} {st.quarantined:>5}"
            )
        if self.violation_details:
            lines.append("")
            lines.append("violations:")
            for c, g, note in sorted(self.violation_details)[:200]:
                lines.append(f"  {c}\t{g}\t{note}")
        if self.quarantined_details:
            lines.append("")
            lines.append("quarantined:")
            for c, g, note in sorted(self.quarantined_details):
                lines.append(f"  {c}\t{g}\t{note}")
        lines.append("")
        lines.append("RESULT: " + ("ok" if self.ok else "VIOLATIONS FOUND"))
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        """Per-graph detail rows (requires ``collect_detail``)."""
        if not self.collect_detail:
            raise ValueError("detail rows were not collected for this sweep")
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(_DETAIL_HEADER)
        for row in sorted(self.detail_rows):
            writer.writerow(row)
        return out.getvalue()


@dataclass
class SweepResult:
    ledger: VerificationLedger
    timings: dict


# -- sweep execution -------------------------------------------------------------


def _make_ledger(cfg: SweepConfig) -> VerificationLedger:
    return VerificationLedger(
        cfg.config_echo(),
        slack_tol=cfg.slack_tol,
        collect_detail=cfg.collect_detail,
    )


def _run_chunk(args: tuple) -> tuple[VerificationLedger, dict]:
    n, lo, hi, cfg = args
    ledger = _make_ledger(cfg)
    timings: dict[str, float] = {}
    quarantine_keys = frozenset((c, g) for c, g, _ in cfg.quarantine)
    pairs = list(combinations(range(n), 2))
    seen_keys: set | None = set() if cfg.dedup else None
    enumerated = checked = 0
    for mask in range(lo, hi):
        enumerated += 1
        g = _graph_from_mask(n, pairs, mask)
        if cfg.connected_only and not g.is_connected():
            continue
        if seen_keys is not None:
            key = _dedup_key(g)
            if key in seen_keys:
                continue
            seen_keys.add(key)
        checked += 1
        g6 = to_graph6(g)
        facts = GraphFacts(g)
        for cid in cfg.checks:
            t0 = time.perf_counter()
            for report in _CHECKS[cid](facts):
                ledger.add_report(g6, report, quarantine_keys)
            timings[cid] = timings.get(cid, 0.0) + (time.perf_counter() - t0)
    ledger.count_enumerated(n, enumerated, checked)
    return ledger, timings


def _plan_tasks(cfg: SweepConfig) -> list[tuple]:
    tasks = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        space = 1 << (n * (n - 1) // 2)
        if cfg.dedup or cfg.jobs == 1 or space < 4096:
            tasks.append((n, 0, space, cfg))
            continue
        chunks = min(cfg.jobs * 4, max(1, space // 4096))
        step = (space + chunks - 1) // chunks
        for lo in range(0, space, step):
            tasks.append((n, lo, min(lo + step, space), cfg))
    return tasks


def run_sweep(cfg: SweepConfig) -> SweepResult:
    """Run an exhaustive sweep; ledger contents do not depend on ``jobs``."""
    cfg.validate()
    started = time.perf_counter()
    tasks = _plan_tasks(cfg)
    ledger = _make_ledger(cfg)
    timings: dict[str, float] = {}
    if cfg.jobs == 1 or len(tasks) <= 1:
        partials = map(_run_chunk, tasks)
        for part, part_times in partials:
            ledger.merge(part)
            for cid, dt in part_times.items():
                timings[cid] = timings.get(cid, 0.0) + dt
    else:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(processes=cfg.jobs) as pool:
            for part, part_times in pool.imap_unordered(_run_chunk, tasks):
                ledger.merge(part)
                for cid, dt in part_times.items():
                    timings[cid] = timings.get(cid, 0.0) + dt
    wall = time.perf_counter() - started
    timing_blob = {
        "wall_seconds": wall,
        "jobs": cfg.jobs,
        "per_check_seconds": {k: timings[k] for k in sorted(timings)},
    }
    return SweepResult(ledger=ledger, timings=timing_blob)


# -- quarantine -------------------------------------------------------------------


def load_quarantine(path: str) -> tuple[tuple[str, str, str], ...]:
    """Parse a quarantine file: tab-separated ``check_id  graph6  note`` rows.

    Blank lines and ``#`` comments are ignored.
    """
    entries = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) < 2:
                raise ValueError(
                    f"{path}:{lineno}: expected 'check<TAB>graph6<TAB>note'"
                )
            check, g6 = parts[0].strip(), parts[1].strip()
            note = parts[2].strip() if len(parts) > 2 else ""
            if check not in _CHECKS:
                raise ValueError(f"{path}:{lineno}: unknown check id {check!r}")
            entries.append((check, g6, note))
    return tuple(entries)


# -- oracle cross-checks ------------------------------------------------------------


@dataclass
class OracleEntry:
    name: str
    cases: int
    max_deviation: float
    worst_case: str

    @property
    def ok(self) -> bool:
        return self.max_deviation <= ORACLE_TOL


@dataclass
class OracleReport:
    entries: list[OracleEntry]

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "entries": [
                {
                    "name": e.name,
                    "cases": e.cases,
                    "max_deviation": e.max_deviation,
                    "worst_case": e.worst_case,
                    "ok": e.ok,
                }
                for e in self.entries
            ],
        }


def _oracle_join_suite() -> list[OracleEntry]:
    spec_dev = spread_dev = 0.0
    spec_worst = spread_worst = ""
    cases = 0
    for n in range(3, 17):
        for k in range(1, n - 1):
            for i in range(1, n - k):
                if n - k - i < 1:
                    continue
                m = B._join_family_edge_count(n, k, i)
                if n + m > 60:
                    continue
                cases += 1
                g = family("join_family", n, k, i)
                lg, _ = line_graph(g)
                brute = sym_eigenvalues(adjacency_matrix(lg))
                closed = B.join_family_line_spectrum(n, k, i)
                d = float(np.abs(brute - closed).max()) if len(brute) else 0.0
                if d > spec_dev:
                    spec_dev, spec_worst = d, f"(n={n}, k={k}, i={i})"
                s_closed = B.join_family_line_spread(n, k, i)
                s_brute = float(brute[0] - brute[-1]) if len(brute) else 0.0
                d2 = abs(s_closed - s_brute)
                if d2 > spread_dev:
                    spread_dev, spread_worst = d2, f"(n={n}, k={k}, i={i})"
    return [
        OracleEntry("join_family_spectrum_vs_eigensolve", cases, spec_dev, spec_worst),
        OracleEntry("join_family_spread_vs_eigensolve", cases, spread_dev, spread_worst),
    ]


def _oracle_total_suite(n_max: int = 8) -> list[OracleEntry]:
    # The exact spread formula and the bracket's upper side are only valid
    # for r >= 3 (they need the smallest total-graph eigenvalue to come from
    # lambda_n, which r = 2 graphs with an eigenvalue in (-2, -1) break --
    # smallest case: the 8-cycle).  For r = 2 only the always-true half is
    # checked: formula <= S(T) and lower bound <= S(T).
    spec_dev = min_dev = spread_dev = r2_dev = 0.0
    spec_worst = min_worst = spread_worst = r2_worst = ""
    spec_cases = min_cases = spread_cases = r2_cases = 0
    for n in range(3, n_max + 1):
        for r in range(2, n):
            for g in enumerate_regular_graphs(n, r, connected_only=True):
                facts = GraphFacts(g)
                closed = B.regular_total_spectrum(g, facts=facts)
                brute = facts.total_adjacency_spectrum
                spec_cases += 1
                d = float(np.abs(closed - brute).max())
                if d > spec_dev:
                    spec_dev, spec_worst = d, f"n={n}, r={r}, {to_graph6(g)}"
                if r >= 3:
                    min_cases += 1
                    value = B.regular_total_min_eig(g, facts=facts)
                    d = abs(value - float(brute[-1]))
                    if value > -2.0 + ORACLE_TOL:
                        d = max(d, value + 2.0)
                    if d > min_dev:
                        min_dev, min_worst = d, f"n={n}, r={r}, {to_graph6(g)}"
                rep = B.regular_total_spread(g, facts=facts)
                lower, upper = rep.extras["lower"], rep.extras["upper"]
                if r >= 3:
                    spread_cases += 1
                    d = abs(rep.bound_value - rep.actual_value)
                    if rep.actual_value < lower - ORACLE_TOL:
                        d = max(d, lower - rep.actual_value)
                    if rep.actual_value > upper + ORACLE_TOL:
                        d = max(d, rep.actual_value - upper)
                    if d > spread_dev:
                        spread_dev, spread_worst = d, f"n={n}, r={r}, {to_graph6(g)}"
                else:
                    r2_cases += 1
                    d = max(0.0, rep.bound_value - rep.actual_value,
                            lower - rep.actual_value)
                    if d > r2_dev:
                        r2_dev, r2_worst = d, f"n={n}, r={r}, {to_graph6(g)}"
    return [
        OracleEntry(
            "regular_total_spectrum_vs_eigensolve", spec_cases, spec_dev, spec_worst
        ),
        OracleEntry("regular_total_min_eig", min_cases, min_dev, min_worst),
        OracleEntry(
            "regular_total_spread_exact_and_bracket_r3",
            spread_cases,
            spread_dev,
            spread_worst,
        ),
        OracleEntry(
            "regular_total_spread_lower_side_r2", r2_cases, r2_dev, r2_worst
        ),
    ]


def oracle_crosscheck(suite: str = "all", *, regular_n_max: int = 8) -> OracleReport:
    """Cross-check the closed-form spectra/spreads against brute eigensolves.

    ``suite`` is ``join``, ``total``, or ``all``.
    """
    if suite not in ("join", "total", "all"):
        raise ValueError(f"unknown oracle suite {suite!r}")
    entries: list[OracleEntry] = []
    if suite in ("join", "all"):
        entries.extend(_oracle_join_suite())
    if suite in ("total", "all"):
        entries.extend(_oracle_total_suite(regular_n_max))
    return OracleReport(entries)
