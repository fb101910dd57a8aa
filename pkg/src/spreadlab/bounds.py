"""Spread bounds: one operation per theorem, each returning a BoundReport.

Every operation separates *hypothesis* from *inequality*: a graph outside a
theorem's stated domain gets ``hypothesis_met=False`` and a note instead of
a violation.  Slack is oriented so that nonnegative is good (``bound -
actual`` for upper bounds, ``actual - bound`` for lower bounds, minus the
absolute deviation for equalities), and ``tight`` means ``|slack| <= 1e-6``.
Where a theorem is an if-and-only-if, ``equality_predicted`` evaluates the
structural side and ``iff_binding`` is set so sweeps can assert that
tightness and prediction coincide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable

import numpy as np

from .graph import (
    ConnectivityProfile,
    DegreeProfile,
    Graph,
    connectivity_profile,
    cycle_pendant_tree_diameter,
    degree_profile,
)
from .spectra import (
    SpectralSummary,
    adjacency_matrix,
    signless_laplacian_matrix,
    laplacian_matrix,
    sym_eigenvalues,
)
from .transforms import EdgeIndex, line_graph, total_graph

__all__ = [
    "SLACK_TOL",
    "BoundReport",
    "GraphFacts",
    "connectivity_spread_bound",
    "edge_addition_monotonicity",
    "gregory_upper",
    "grone_tree_bound",
    "join_family_line_spectrum",
    "join_family_line_spread",
    "line_spread_trichotomy",
    "line_spread_upper",
    "regular_total_min_eig",
    "regular_total_spectrum",
    "regular_total_spread",
    "spread_vs_line_spread",
    "total_laplacian_spread_lower",
    "total_q_spread_lower",
    "total_spread_lower",
    "unicyclic_spread_bound",
]

#: |slack| at or below this counts as tight; slack below -SLACK_TOL on a met
#: hypothesis is a violation.
SLACK_TOL = 1e-6

#: Radicands this close to zero (from floating error) clamp to zero.
RADICAND_CLAMP = 1e-12


@dataclass
class BoundReport:
    """Outcome of evaluating one bound on one graph.

    ``slack`` is ``bound - actual`` for upper bounds and ``actual - bound``
    for lower bounds, so negative slack (beyond tolerance) always means the
    claimed inequality failed.  ``advisory`` marks bounds that are recorded
    for data collection but not counted as violations.
    """

    bound_id: str
    hypothesis_met: bool
    bound_value: float | None
    actual_value: float | None
    slack: float | None
    tight: bool
    equality_predicted: bool
    iff_binding: bool = False
    advisory: bool = False
    notes: str = ""
    extras: dict = field(default_factory=dict)

    @property
    def is_violation(self) -> bool:
        return (
            self.hypothesis_met
            and not self.advisory
            and self.slack is not None
            and self.slack < -SLACK_TOL
        )

    @property
    def iff_consistent(self) -> bool:
        if not (self.iff_binding and self.hypothesis_met):
            return True
        return self.tight == self.equality_predicted

    def to_dict(self) -> dict:
        return {
            "bound_id": self.bound_id,
            "hypothesis_met": self.hypothesis_met,
            "bound_value": self.bound_value,
            "actual_value": self.actual_value,
            "slack": self.slack,
            "tight": self.tight,
            "equality_predicted": self.equality_predicted,
            "iff_binding": self.iff_binding,
            "advisory": self.advisory,
            "is_violation": self.is_violation,
            "notes": self.notes,
            "extras": dict(self.extras),
        }


def _make_report(
    bound_id: str,
    bound: float,
    actual: float,
    slack: float,
    *,
    equality_predicted: bool = False,
    iff_binding: bool = False,
    advisory: bool = False,
    notes: str = "",
    extras: dict | None = None,
) -> BoundReport:
    return BoundReport(
        bound_id=bound_id,
        hypothesis_met=True,
        bound_value=float(bound),
        actual_value=float(actual),
        slack=float(slack),
        tight=abs(slack) <= SLACK_TOL,
        equality_predicted=equality_predicted,
        iff_binding=iff_binding,
        advisory=advisory,
        notes=notes,
        extras=extras or {},
    )


def _gated(bound_id: str, reason: str, **extras) -> BoundReport:
    return BoundReport(
        bound_id=bound_id,
        hypothesis_met=False,
        bound_value=None,
        actual_value=None,
        slack=None,
        tight=False,
        equality_predicted=False,
        notes=reason,
        extras=extras,
    )


def _sqrt_clamped(radicand: float) -> float | None:
    """Square root with a tiny-negative clamp; ``None`` for real negatives."""
    if radicand < 0.0:
        if radicand > -RADICAND_CLAMP:
            return 0.0
        return None
    return math.sqrt(radicand)


class GraphFacts:
    """Lazy per-graph cache shared by the bound evaluations of one sweep task."""

    def __init__(self, g: Graph, *, backend: str | None = None):
        self.graph = g
        self.backend = backend

    @cached_property
    def degree_profile(self) -> DegreeProfile:
        return degree_profile(self.graph)

    @cached_property
    def connectivity(self) -> ConnectivityProfile:
        return connectivity_profile(self.graph)

    @cached_property
    def adjacency_spectrum(self) -> np.ndarray:
        return sym_eigenvalues(adjacency_matrix(self.graph), backend=self.backend)

    @cached_property
    def laplacian_spectrum(self) -> np.ndarray:
        return sym_eigenvalues(laplacian_matrix(self.graph), backend=self.backend)

    @cached_property
    def signless_spectrum(self) -> np.ndarray:
        return sym_eigenvalues(
            signless_laplacian_matrix(self.graph), backend=self.backend
        )

    @cached_property
    def line(self) -> tuple[Graph, EdgeIndex]:
        return line_graph(self.graph)

    @cached_property
    def line_spectrum(self) -> np.ndarray:
        lg, _ = self.line
        return sym_eigenvalues(adjacency_matrix(lg), backend=self.backend)

    @cached_property
    def total(self) -> Graph:
        return total_graph(self.graph)

    @cached_property
    def total_adjacency_spectrum(self) -> np.ndarray:
        return sym_eigenvalues(adjacency_matrix(self.total), backend=self.backend)

    @cached_property
    def total_laplacian_spectrum(self) -> np.ndarray:
        return sym_eigenvalues(laplacian_matrix(self.total), backend=self.backend)

    @cached_property
    def total_signless_spectrum(self) -> np.ndarray:
        return sym_eigenvalues(
            signless_laplacian_matrix(self.total), backend=self.backend
        )

    # -- scalar shortcuts --------------------------------------------------

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def m(self) -> int:
        return self.graph.m

    @property
    def zagreb(self) -> int:
        return self.degree_profile.zagreb

    @property
    def theta(self) -> int:
        """Edge count of the line graph: sum of C(d_v, 2)."""
        return self.zagreb // 2 - self.m

    @property
    def spread(self) -> float:
        a = self.adjacency_spectrum
        return float(a[0] - a[-1]) if len(a) else 0.0

    @property
    def q_spread(self) -> float:
        q = self.signless_spectrum
        return float(q[0] - q[-1]) if len(q) else 0.0

    @property
    def line_spread(self) -> float | None:
        if self.m == 0:
            return None
        lam = self.line_spectrum
        return float(lam[0] - lam[-1])

    @property
    def lambda1(self) -> float:
        a = self.adjacency_spectrum
        return float(a[0]) if len(a) else 0.0

    @property
    def lambda_min(self) -> float:
        a = self.adjacency_spectrum
        return float(a[-1]) if len(a) else 0.0

    @property
    def q1(self) -> float:
        q = self.signless_spectrum
        return float(q[0]) if len(q) else 0.0


def _facts(g: Graph, facts: GraphFacts | None) -> GraphFacts:
    if facts is None:
        return GraphFacts(g)
    if facts.graph is not g and facts.graph != g:
        raise ValueError("facts cache belongs to a different graph")
    return facts


# -- structural recognizers --------------------------------------------------


def _nonisolated_complete_bipartite(g: Graph) -> bool:
    """True iff the vertices of positive degree induce a complete bipartite
    graph with both sides nonempty (isolated vertices are ignored)."""
    support = [v for v in range(g.n) if g.degree(v) > 0]
    if not support:
        return False
    sub = g.subgraph(support)
    color = [-1] * sub.n
    for s in range(sub.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for v in sub.neighbors(u):
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    stack.append(v)
                elif color[v] == color[u]:
                    return False
    side = [v for v in range(sub.n) if color[v] == 0]
    other = [v for v in range(sub.n) if color[v] == 1]
    if not side or not other:
        return False
    return all(sub.has_edge(u, v) for u in side for v in other)


def _has_bipartite_component(g: Graph) -> bool:
    for comp in g.components():
        sub = g.subgraph(comp)
        color = [-1] * sub.n
        ok = True
        color[0] = 0
        stack = [0]
        while stack and ok:
            u = stack.pop()
            for v in sub.neighbors(u):
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    stack.append(v)
                elif color[v] == color[u]:
                    ok = False
                    break
        if ok:
            return True
    return False


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def _is_connectivity_extremal(g: Graph, k: int) -> bool:
    """Recognize the clique-over-split extremal graph for parameter ``k``.

    For ``k = n-1`` the family degenerates to the complete graph.  Otherwise
    the graph must consist of ``k`` universal vertices whose removal leaves
    exactly two components that are cliques of sizes 1 and ``n - k - 1``.
    """
    n = g.n
    if k == n - 1:
        return _is_complete(g)
    universal = [v for v in range(g.n) if g.degree(v) == n - 1]
    if len(universal) != k:
        return False
    rest = [v for v in range(n) if v not in set(universal)]
    sub = g.subgraph(rest)
    comps = sub.components()
    if len(comps) != 2:
        return False
    sizes = sorted(len(c) for c in comps)
    if sizes != [1, n - k - 1]:
        return False
    return sub.m == sum(len(c) * (len(c) - 1) // 2 for c in comps)


# -- bound operations ---------------------------------------------------------


def gregory_upper(g: Graph, *, facts: GraphFacts | None = None) -> BoundReport:
    """Spread upper bound from the largest eigenvalue and the edge count.

    ``S(G) <= lambda_1 + sqrt(2m - lambda_1^2) <= 2 sqrt(m)``, with equality
    throughout iff the graph is edgeless or its non-isolated part is a
    complete bipartite graph.
    """
    f = _facts(g, facts)
    lam1 = f.lambda1
    root = _sqrt_clamped(2.0 * f.m - lam1 * lam1)
    if root is None:
        return _gated("gregory_upper", "radicand 2m - lambda1^2 negative")
    bound = lam1 + root
    outer = 2.0 * math.sqrt(f.m)
    predicted = f.m == 0 or _nonisolated_complete_bipartite(g)
    actual = f.spread
    return _make_report(
        "gregory_upper",
        bound,
        actual,
        bound - actual,
        equality_predicted=predicted,
        iff_binding=True,
        extras={"outer_bound": outer, "lambda1": lam1},
    )


def line_spread_upper(g: Graph, *, facts: GraphFacts | None = None) -> BoundReport:
    """Upper bound on the line graph's spread from q1 and the Zagreb index."""
    f = _facts(g, facts)
    if f.m < 1:
        return _gated("line_spread_upper", "needs at least one edge")
    q1 = f.q1
    radicand = (f.zagreb - 2.0 * f.m) - (q1 - 2.0) ** 2
    root = _sqrt_clamped(radicand)
    if root is None:
        return _gated(
            "line_spread_upper",
            f"negative radicand {radicand:.3e}",
            radicand=radicand,
        )
    bound = q1 - 2.0 + root
    outer = 2.0 * math.sqrt(f.theta)
    lg, _ = f.line
    predicted = f.theta == 0 or _nonisolated_complete_bipartite(lg)
    actual = f.line_spread
    return _make_report(
        "line_spread_upper",
        bound,
        actual,
        bound - actual,
        equality_predicted=predicted,
        extras={"outer_bound": outer, "q1": q1, "line_edges": f.theta},
    )


def line_spread_trichotomy(g: Graph, *, facts: GraphFacts | None = None) -> BoundReport:
    """Relate the line spread to the signless spread by the m-vs-n case.

    ``m = n``: the two spreads coincide.  ``m > n``: the line spread equals
    q1 and dominates the signless spread, with equality iff some component
    is bipartite.  ``m < n``: the line spread equals ``q1 - q_m`` and is at
    most the signless spread (no converse claimed).
    """
    f = _facts(g, facts)
    if f.m < 1:
        return _gated("line_spread_trichotomy", "needs at least one edge")
    n, m = f.n, f.m
    s_line = f.line_spread
    s_q = f.q_spread
    q = f.signless_spectrum
    if m == n:
        dev = abs(s_line - s_q)
        return _make_report(
            "line_spread_trichotomy",
            s_q,
            s_line,
            -dev,
            notes="case m = n: spreads must coincide",
            extras={"case": "m=n", "deviation": dev},
        )
    if m > n:
        dev = abs(s_line - float(q[0]))
        slack = s_line - s_q
        if dev > SLACK_TOL:
            slack = min(slack, -dev)
        return _make_report(
            "line_spread_trichotomy",
            s_q,
            s_line,
            slack,
            equality_predicted=_has_bipartite_component(g),
            iff_binding=True,
            notes="case m > n: line spread = q1 >= signless spread",
            extras={"case": "m>n", "q1_deviation": dev},
        )
    dev = abs(s_line - float(q[0] - q[m - 1]))
    slack = s_q - s_line
    if dev > SLACK_TOL:
        slack = min(slack, -dev)
    return _make_report(
        "line_spread_trichotomy",
        s_q,
        s_line,
        slack,
        notes="case m < n: line spread = q1 - q_m <= signless spread",
        extras={"case": "m<n", "tail_deviation": dev},
    )


def spread_vs_line_spread(g: Graph, *, facts: GraphFacts | None = None) -> BoundReport:
    """``S(G) <= S_line(G)`` for connected graphs with ``m > n >= 4``.

    Equality holds iff the graph is regular and bipartite.
    """
    f = _facts(g, facts)
    if not (f.n >= 4 and f.m > f.n and f.connectivity.is_connected):
        return _gated(
            "spread_vs_line_spread", "needs a connected graph with m > n >= 4"
        )
    cp = f.connectivity
    predicted = cp.is_regular and cp.is_bipartite
    bound = f.line_spread
    actual = f.spread
    return _make_report(
        "spread_vs_line_spread",
        bound,
        actual,
        bound - actual,
        equality_predicted=predicted,
        iff_binding=True,
    )


def unicyclic_spread_bound(g: Graph, *, facts: GraphFacts | None = None) -> BoundReport:
    """``S(G) <= S_Q(G)`` for odd-girth unicyclic graphs under an eigenvalue
    condition.

    With girth ``c`` and ``h`` the largest diameter of a tree hanging on the
    cycle, set ``D0 = (c+1)/2 + h``.  The hypothesis is
    ``lambda_n >= 1 - cos(pi/(D0+1)) - lambda_1``; when it holds the spread
    is at most the signless spread (which equals the line spread here, since
    ``m = n``).
    """
    f = _facts(g, facts)
    if f.m != f.n or not f.connectivity.is_connected:
        return _gated("unicyclic_spread_bound", "needs a connected unicyclic graph")
    girth = f.connectivity.girth
    if girth == math.inf or girth % 2 == 0:
        return _gated("unicyclic_spread_bound", f"girth {girth} is not odd")
    h = cycle_pendant_tree_diameter(g)
    d0 = (int(girth) + 1) // 2 + h
    threshold = 1.0 - math.cos(math.pi / (d0 + 1)) - f.lambda1
    lam_n = f.lambda_min
    extras = {
        "girth": int(girth),
        "pendant_tree_diameter": h,
        "d0": d0,
        "threshold": threshold,
        "lambda_min": lam_n,
    }
    if lam_n < threshold:
        return BoundReport(
            bound_id="unicyclic_spread_bound",
            hypothesis_met=False,
            bound_value=None,
            actual_value=None,
            slack=None,
            tight=False,
            equality_predicted=False,
            notes=f"eigenvalue condition fails: {lam_n:.6f} < {threshold:.6f}",
            extras=extras,
        )
    bound = f.q_spread
    actual = f.spread
    return _make_report(
        "unicyclic_spread_bound",
        bound,
        actual,
        bound - actual,
        equality_predicted=f.connectivity.is_regular,
        notes="signless spread equals line spread here (m = n)",
        extras=extras,
    )


def grone_tree_bound(t: Graph, *, facts: GraphFacts | None = None) -> BoundReport:
    """Record the classical tree bounds on algebraic connectivity, as stated.

    Advisory: both claims fail on small trees exactly as written (the path
    P4 already exceeds ``1 - cos(pi/(diam+1))``), so deviations are recorded
    for inspection rather than counted as violations.
    """
    f = _facts(t, facts)
    if not (f.connectivity.is_connected and f.m == f.n - 1):
        return _gated("grone_tree_bound", "needs a tree")
    diam = f.connectivity.diameter
    a = float(f.laplacian_spectrum[-2]) if f.n >= 2 else 0.0
    bound = 1.0 - math.cos(math.pi / (int(diam) + 1)) if f.n >= 2 else 0.0
    extras = {"diameter": int(diam) if diam != math.inf else -1, "alg_connectivity": a}
    if f.n >= 6:
        extras["small_alg_conn_claim_holds"] = bool(a <= 0.49 + SLACK_TOL)
    return _make_report(
        "grone_tree_bound",
        bound,
        a,
        bound - a,
        advisory=True,
        notes="advisory: recorded as stated, deviations expected on small trees",
        extras=extras,
    )


# -- join family closed forms -------------------------------------------------


def _join_family_edge_count(n: int, k: int, i: int) -> int:
    s = n - k - i
    return (
        k * (k - 1) // 2
        + i * (i - 1) // 2
        + s * (s - 1) // 2
        + k * (i + s)
    )


def _validate_join_family(n: int, k: int, i: int) -> None:
    if k < 1 or i < 1 or n - k - i < 1:
        raise ValueError(
            f"join family needs k >= 1, i >= 1, n-k-i >= 1; got n={n}, k={k}, i={i}"
        )


def join_family_line_spectrum(n: int, k: int, i: int) -> np.ndarray:
    """Closed-form adjacency spectrum of the line graph of the join family.

    The family is the clique ``K_k`` joined to ``K_i + K_{n-k-i}``.  The
    multiset consists of the pair ``n + k/2 - 4 +- (1/2) sqrt((2n-k)^2 +
    16 i (k-n+i))``, ``n-4`` with multiplicity ``k``, ``k+i-4`` with
    multiplicity ``i-1``, ``n-i-4`` with multiplicity ``n-k-i-1``, and
    ``-2`` with multiplicity ``m - n`` (removed from the multiset when
    ``m < n``).
    """
    _validate_join_family(n, k, i)
    s = n - k - i
    m = _join_family_edge_count(n, k, i)
    disc = (2 * n - k) ** 2 + 16 * i * (k - n + i)
    root = math.sqrt(disc)
    values = [n + k / 2.0 - 4.0 + root / 2.0, n + k / 2.0 - 4.0 - root / 2.0]
    values += [float(n - 4)] * k
    values += [float(k + i - 4)] * (i - 1)
    values += [float(n - i - 4)] * (s - 1)
    if m >= n:
        values += [-2.0] * (m - n)
    else:
        for _ in range(n - m):
            for pos, v in enumerate(values):
                if abs(v + 2.0) <= 1e-9:
                    values.pop(pos)
                    break
            else:
                raise ArithmeticError(
                    "closed form inconsistent: no -2 entry left to cancel"
                )
    if len(values) != m:
        raise ArithmeticError(
            f"closed form produced {len(values)} values for m={m} edges"
        )
    return np.array(sorted(values, reverse=True), dtype=np.float64)


def join_family_line_spread(n: int, k: int, i: int) -> float:
    """Spread of the join family's line graph.

    In the ``m > n`` regime this equals the closed form
    ``n - 2 + k/2 + (1/2) sqrt((2n-k)^2 + 16 i (k-n+i))``; in general it is
    the max-min of the closed-form spectrum (internally cross-checked).
    """
    _validate_join_family(n, k, i)
    spec = join_family_line_spectrum(n, k, i)
    spread = float(spec[0] - spec[-1])
    m = _join_family_edge_count(n, k, i)
    if m > n:
        disc = (2 * n - k) ** 2 + 16 * i * (k - n + i)
        closed = n - 2.0 + k / 2.0 + math.sqrt(disc) / 2.0
        if abs(closed - spread) > 1e-9:
            raise ArithmeticError(
                f"closed spread {closed!r} disagrees with spectrum spread {spread!r}"
            )
    return spread


def edge_addition_monotonicity(
    g: Graph, e: tuple[int, int], *, facts: GraphFacts | None = None
) -> BoundReport:
    """Strict growth of q1, the line index, and the line spread under adding
    one edge to a connected graph."""
    i, j = e
    f = _facts(g, facts)
    g2 = g.with_edge(i, j)  # raises if e is present or invalid
    if not f.connectivity.is_connected:
        return _gated("edge_addition_monotonicity", "base graph must be connected")
    f2 = GraphFacts(g2, backend=f.backend)
    margins = {
        "q1_margin": f2.q1 - f.q1,
        "line_index_margin": float(f2.line_spectrum[0])
        - (float(f.line_spectrum[0]) if f.m else 0.0),
        "line_spread_margin": (f2.line_spread or 0.0) - (f.line_spread or 0.0),
    }
    slack = min(margins.values())
    return BoundReport(
        bound_id="edge_addition_monotonicity",
        hypothesis_met=True,
        bound_value=None,
        actual_value=None,
        slack=float(slack),
        tight=abs(slack) <= SLACK_TOL,
        equality_predicted=False,
        notes=f"smallest growth margin over edge ({i}, {j}); strict growth expected",
        extras={"edge": f"({i}, {j})", **margins},
    )


def connectivity_spread_bound(
    g: Graph, k: int, selector: str = "vertex", *, facts: GraphFacts | None = None
) -> BoundReport:
    """Line-spread upper bound for graphs of bounded connectivity.

    ``selector`` chooses the class: vertex connectivity <= k, edge
    connectivity <= k, or minimum degree <= k.  The bound is
    ``n - 2 + k/2 + (1/2) sqrt((2n-k)^2 + 16(k-n+1))``; equality holds
    exactly for the clique-over-split extremal graph (which requires the
    ``m > n`` regime; the degenerate ``k = n-1`` case is the complete
    graph).
    """
    if selector not in ("vertex", "edge", "degree"):
        raise ValueError(f"unknown class selector {selector!r}")
    f = _facts(g, facts)
    n = f.n
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1; got k={k} for n={n}")
    cp = f.connectivity
    if not cp.is_connected:
        return _gated("connectivity_spread_bound", "graph must be connected")
    if selector == "vertex":
        member = cp.vertex_connectivity <= k
        clause = f"vertex connectivity {cp.vertex_connectivity} <= {k}"
    elif selector == "edge":
        member = cp.edge_connectivity <= k
        clause = f"edge connectivity {cp.edge_connectivity} <= {k}"
    else:
        member = f.degree_profile.min_degree <= k
        clause = f"minimum degree {f.degree_profile.min_degree} <= {k}"
    if not member:
        return _gated(
            "connectivity_spread_bound",
            f"not in class: {clause} fails",
            k=k,
            selector=selector,
        )
    disc = (2 * n - k) ** 2 + 16 * (k - n + 1)
    bound = n - 2.0 + k / 2.0 + math.sqrt(disc) / 2.0
    actual = f.line_spread if f.m else 0.0
    predicted = _is_connectivity_extremal(g, k) and f.m > n
    return _make_report(
        "connectivity_spread_bound",
        bound,
        actual,
        bound - actual,
        equality_predicted=predicted,
        iff_binding=True,
        notes=f"class: {clause}",
        extras={"k": k, "selector": selector},
    )


# -- total graph bounds -------------------------------------------------------


def total_q_spread_lower(g: Graph, *, facts: GraphFacts | None = None) -> BoundReport:
    """Lower bound on the signless spread of the total graph from the
    vertex/edge partition quotient."""
    f = _facts(g, facts)
    if f.m < 1 or not f.connectivity.is_connected:
        return _gated("total_q_spread_lower", "needs a connected graph with an edge")
    n, m, z = f.n, f.m, f.zagreb
    radicand = (3.0 * m / n - z / m) ** 2 + 10.0 * m / n - 2.0 * z / m + 1.0
    root = _sqrt_clamped(radicand)
    if root is None:
        return _gated(
            "total_q_spread_lower", f"negative radicand {radicand:.3e}"
        )
    bound = 2.0 * root
    tq = f.total_signless_spectrum
    actual = float(tq[0] - tq[-1])
    return _make_report(
        "total_q_spread_lower",
        bound,
        actual,
        actual - bound,
        notes="lower bound (slack = actual - bound)",
    )


def total_spread_lower(g: Graph, *, facts: GraphFacts | None = None) -> BoundReport:
    """Lower bound on the adjacency spread of the total graph."""
    f = _facts(g, facts)
    if f.m < 1 or not f.connectivity.is_connected:
        return _gated("total_spread_lower", "needs a connected graph with an edge")
    n, m, z = f.n, f.m, f.zagreb
    psi = (2.0 * m * m + n * (z - 2.0 * m)) / (m * n)
    radicand = psi * psi - 8.0 * (z - 4.0 * m) / n
    root = _sqrt_clamped(radicand)
    if root is None:
        return _gated(
            "total_spread_lower",
            f"negative radicand {radicand:.3e}",
            psi=psi,
            radicand=radicand,
        )
    bound = root
    ta = f.total_adjacency_spectrum
    actual = float(ta[0] - ta[-1])
    return _make_report(
        "total_spread_lower",
        bound,
        actual,
        actual - bound,
        notes="lower bound (slack = actual - bound)",
        extras={"psi": psi},
    )


def total_laplacian_spread_lower(
    g: Graph, *, facts: GraphFacts | None = None
) -> BoundReport:
    """Lower bound on the Laplacian spread of the total graph.

    Gated to connected graphs whose total graph is not complete (the total
    graph is complete exactly for K1 and K2).
    """
    f = _facts(g, facts)
    if not f.connectivity.is_connected or f.n < 3:
        return _gated(
            "total_laplacian_spread_lower",
            "needs a connected graph with at least 3 vertices "
            "(otherwise the total graph is complete)",
        )
    bound = abs((2.0 * f.m + 2.0 * f.n) / f.n - 2.0 * f.degree_profile.min_degree)
    tl = f.total_laplacian_spectrum
    actual = float(tl[0] - tl[-2])
    return _make_report(
        "total_laplacian_spread_lower",
        bound,
        actual,
        actual - bound,
        notes="lower bound (slack = actual - bound)",
    )


# -- regular total graph closed forms ----------------------------------------


def _require_connected_regular(f: GraphFacts, min_degree: int) -> int:
    cp = f.connectivity
    if not cp.is_connected or not cp.is_regular or cp.regular_degree is None:
        raise ValueError("needs a connected regular graph")
    r = cp.regular_degree
    if r < min_degree:
        raise ValueError(f"needs degree r >= {min_degree}, got r = {r}")
    return r


def regular_total_spectrum(g: Graph, *, facts: GraphFacts | None = None) -> np.ndarray:
    """Closed-form total-graph adjacency spectrum of a connected r-regular
    graph (r >= 2).

    For each adjacency eigenvalue lambda of the base graph the total graph
    picks up the pair ``(2 lambda + r - 2 +- sqrt(4 lambda + r^2 + 4))/2``,
    plus ``-2`` with multiplicity ``n(r-2)/2``.
    """
    f = _facts(g, facts)
    r = _require_connected_regular(f, 2)
    values: list[float] = []
    for lam in f.adjacency_spectrum:
        root = _sqrt_clamped(4.0 * float(lam) + r * r + 4.0)
        if root is None:
            raise ArithmeticError(
                f"negative discriminant for eigenvalue {float(lam)!r}"
            )
        base = 2.0 * float(lam) + r - 2.0
        values.append((base + root) / 2.0)
        values.append((base - root) / 2.0)
    values.extend([-2.0] * (f.n * (r - 2) // 2))
    return np.array(sorted(values, reverse=True), dtype=np.float64)


def regular_total_min_eig(g: Graph, *, facts: GraphFacts | None = None) -> float:
    """Smallest total-graph adjacency eigenvalue of a connected r-regular
    graph, in closed form.

    Returns ``(2 lambda_n + r - 2 - sqrt(4 lambda_n + r^2 + 4))/2``.  For
    r >= 3 this is the minimum of the closed-form spectrum and is <= -2;
    for r = 2 the value is still evaluable but those two properties are not
    guaranteed.
    """
    f = _facts(g, facts)
    r = _require_connected_regular(f, 2)
    lam_n = f.lambda_min
    root = _sqrt_clamped(4.0 * lam_n + r * r + 4.0)
    if root is None:
        raise ArithmeticError(f"negative discriminant for lambda_n = {lam_n!r}")
    return (2.0 * lam_n + r - 2.0 - root) / 2.0


def regular_total_spread(g: Graph, *, facts: GraphFacts | None = None) -> BoundReport:
    """Closed-form total-graph spread of a connected r-regular graph (r >= 2).

    ``S(T) = (2 S(G) + r + 2 + sqrt(4 lambda_n + r^2 + 4))/2`` — verified
    against the eigensolved total graph, together with the two-sided bracket
    ``(2S + lambda_n + 2 + sqrt(...))/2 <= S(T) <= S + sqrt(...) - lambda_n``.

    Exactness (and the bracket's upper side) is only guaranteed for r >= 3,
    where the smallest total-graph eigenvalue always comes from lambda_n.
    For r = 2 the map lambda -> (2 lambda + sqrt(4 lambda + 8))/2 is not
    monotone near lambda = -2: an adjacency eigenvalue in (-2, -1) produces
    a smaller total-graph eigenvalue than lambda_n = -2 does, so the formula
    can undershoot the true spread.  The smallest counterexample is the
    8-cycle (eigenvalue -sqrt(2)), where the true spread exceeds the formula
    by sqrt(2) + sqrt(2 - sqrt(2)) - 2 ~= 0.1796 and the report is a genuine
    violation.  The lower side of the bracket holds for every r >= 2.
    """
    f = _facts(g, facts)
    cp = f.connectivity
    if not (cp.is_connected and cp.is_regular and (cp.regular_degree or 0) >= 2):
        return _gated(
            "regular_total_spread", "needs a connected regular graph with r >= 2"
        )
    r = cp.regular_degree
    lam_n = f.lambda_min
    s = f.spread
    root = _sqrt_clamped(4.0 * lam_n + r * r + 4.0)
    if root is None:
        return _gated("regular_total_spread", "negative discriminant")
    exact = (2.0 * s + r + 2.0 + root) / 2.0
    lower = (2.0 * s + lam_n + 2.0 + root) / 2.0
    upper = s + root - lam_n
    ta = f.total_adjacency_spectrum
    actual = float(ta[0] - ta[-1])
    slack = -abs(exact - actual)
    if actual < lower - SLACK_TOL:
        slack = min(slack, actual - lower)
    if actual > upper + SLACK_TOL:
        slack = min(slack, upper - actual)
    return _make_report(
        "regular_total_spread",
        exact,
        actual,
        slack,
        notes="exact closed form (slack = -|deviation|); bracket also checked",
        extras={"lower": lower, "upper": upper, "r": r},
    )
