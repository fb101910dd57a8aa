"""Acceptance gate: one test per release criterion.

Run ``pytest tests/test_acceptance.py -v`` to get one pass/fail line per
criterion.  Everything here finishes in a few minutes on one core; the two
n = 7 sweeps are opt-in via ``SPREADLAB_RUN_SLOW=1`` because they take tens
of minutes.
"""

import os
import time
from importlib import resources

import pytest

import spreadlab.bounds as B
from spreadlab.cli import main
from spreadlab.graph import (
    connectivity_profile,
    family,
    from_graph6,
    max_induced_tree_diameter,
)
from spreadlab.harness import (
    SweepConfig,
    load_quarantine,
    oracle_crosscheck,
    run_sweep,
)
from spreadlab.spectra import spectral_summary

RUNNING_EXAMPLE = "HhcGGC@"   # 5-cycle with a pendant path of length 4

slow = pytest.mark.skipif(
    not os.environ.get("SPREADLAB_RUN_SLOW"),
    reason="n = 7 sweep takes tens of minutes; set SPREADLAB_RUN_SLOW=1",
)


@pytest.fixture(scope="module")
def oracle_report():
    # One full closed-form cross-check (about a minute); shared by the two
    # criteria that consume it.
    return oracle_crosscheck("all", regular_n_max=8)


def test_criterion_01_running_example_profile():
    started = time.perf_counter()
    g = from_graph6(RUNNING_EXAMPLE)
    s = spectral_summary(g)
    assert float(s.adjacency[0]) == pytest.approx(2.17, abs=0.01)
    assert float(s.adjacency[-1]) == pytest.approx(-2.00, abs=0.01)
    assert max_induced_tree_diameter(g) == 7
    assert s.spread == pytest.approx(4.17, abs=0.01)
    assert s.line_spread == pytest.approx(4.47, abs=0.01)
    assert s.q_spread == pytest.approx(4.47, abs=0.01)
    assert s.line_spread == pytest.approx(s.q_spread, abs=1e-9)

    rep = B.unicyclic_spread_bound(g)
    assert rep.hypothesis_met and not rep.is_violation
    assert rep.extras["d0"] == 7
    assert rep.extras["threshold"] == pytest.approx(-2.0939660191, abs=1e-6)
    assert rep.extras["lambda_min"] >= rep.extras["threshold"]
    assert time.perf_counter() - started < 1.0


def test_criterion_02_signless_shift_identity_connected_n6():
    started = time.perf_counter()
    cfg = SweepConfig(
        n_min=1, n_max=6, connected_only=True,
        checks=("signless_line_shift",), slack_tol=1e-7,
    )
    led = run_sweep(cfg).ledger
    st = led.stats["signless_line_shift"]
    assert st.checked == 27476
    assert st.violations == 0
    assert led.ok
    assert time.perf_counter() - started < 120


def test_criterion_03_line_graph_edge_count_full_corpus_n6():
    cfg = SweepConfig(
        n_min=1, n_max=6, connected_only=False, checks=("theta_edge_count",)
    )
    led = run_sweep(cfg).ledger
    st = led.stats["theta_edge_count"]
    assert st.checked == 33867
    assert st.violations == 0
    assert st.iff_mismatches == 0
    assert led.ok


#: The only order-6 graphs where spread equals line spread: the labeled
#: copies of the 3,3 complete bipartite graph.
TIGHT_N6_LABELINGS = sorted(
    ["EFz_", "EXvO", "E]NG", "E]ow", "Eimo",
     "ElUg", "ElhW", "ErYW", "Erdg", "Es\\o"]
)


def test_criterion_04_spread_le_line_spread_n6():
    started = time.perf_counter()
    cfg = SweepConfig(
        n_min=4, n_max=6, connected_only=True,
        checks=("spread_vs_line_spread",), slack_tol=1e-6,
    )
    led = run_sweep(cfg).ledger
    st = led.stats["spread_vs_line_spread"]
    assert st.hypothesis_met == 22136
    assert st.violations == 0
    assert st.iff_mismatches == 0    # tight <=> regular bipartite, graph by graph
    assert sorted(st.tight_witnesses) == TIGHT_N6_LABELINGS
    for w in st.tight_witnesses:
        g = from_graph6(w)
        cp = connectivity_profile(g)
        assert cp.is_regular and cp.is_bipartite and g.m > g.n
    assert time.perf_counter() - started < 120


@slow
def test_criterion_04_spread_le_line_spread_n7():
    started = time.perf_counter()
    cfg = SweepConfig(
        n_min=7, n_max=7, connected_only=True,
        checks=("spread_vs_line_spread",), slack_tol=1e-6,
    )
    led = run_sweep(cfg).ledger
    st = led.stats["spread_vs_line_spread"]
    assert st.violations == 0
    assert st.iff_mismatches == 0
    # no regular bipartite graph has odd order, so nothing can be tight here
    assert st.tight == 0
    assert time.perf_counter() - started < 1800


def _assert_extremal_family_is_tight(n: int, k: int) -> None:
    g = family("join_family", n, k, 1)
    for selector in ("vertex", "edge", "degree"):
        rep = B.connectivity_spread_bound(g, k, selector)
        assert rep.hypothesis_met
        assert rep.tight and rep.equality_predicted, (n, k, selector)


def test_criterion_05_connectivity_class_extremal_n56():
    cfg = SweepConfig(
        n_min=5, n_max=6, connected_only=True,
        checks=("connectivity_spread_bound",),
    )
    led = run_sweep(cfg).ledger
    st = led.stats["connectivity_spread_bound"]
    assert st.checked == 409296
    assert st.violations == 0
    assert st.iff_mismatches == 0    # equality exactly on the predicted class
    assert st.tight == 681
    # the canonical family is tight for every class parameter in the gate's
    # range, including n = 7 (cheap: one graph per (n, k), not a sweep)
    for n in (5, 6, 7):
        for k in range(1, n - 2):
            _assert_extremal_family_is_tight(n, k)


@slow
def test_criterion_05_connectivity_class_extremal_n7():
    cfg = SweepConfig(
        n_min=7, n_max=7, connected_only=True,
        checks=("connectivity_spread_bound",),
    )
    led = run_sweep(cfg).ledger
    st = led.stats["connectivity_spread_bound"]
    assert st.violations == 0
    assert st.iff_mismatches == 0


def test_criterion_06_closed_form_oracles(oracle_report):
    by_name = {e.name: e for e in oracle_report.entries}
    spec = by_name["join_family_spectrum_vs_eigensolve"]
    assert spec.cases == 177
    assert spec.max_deviation < 1e-7
    spread = by_name["join_family_spread_vs_eigensolve"]
    assert spread.cases == 177
    assert spread.max_deviation < 1e-7
    total = by_name["regular_total_spectrum_vs_eigensolve"]
    assert total.cases == 45798      # every connected regular graph, n <= 8
    assert total.max_deviation < 1e-7
    assert oracle_report.ok


def test_criterion_07_total_graph_lower_bounds_n36():
    qpath = resources.files("spreadlab").joinpath("data/quarantine.tsv")
    quarantine = load_quarantine(str(qpath))
    assert len(quarantine) <= 5, f"quarantine list too long: {quarantine}"
    check_ids = (
        "total_q_spread_lower",
        "total_spread_lower",
        "total_laplacian_spread_lower",
    )
    cfg = SweepConfig(
        n_min=3, n_max=6, connected_only=True,
        checks=check_ids, quarantine=quarantine, slack_tol=1e-6,
    )
    led = run_sweep(cfg).ledger
    for cid in check_ids:
        st = led.stats[cid]
        assert st.checked == 27474
        assert st.violations == 0, sorted(st.violation_witnesses)
    assert led.ok


def test_criterion_08_regular_total_spread_closed_form(oracle_report):
    by_name = {e.name: e for e in oracle_report.entries}
    exact = by_name["regular_total_spread_exact_and_bracket_r3"]
    assert exact.cases == 42842      # every connected regular graph, r >= 3, n <= 8
    assert exact.max_deviation < 1e-7
    lower = by_name["regular_total_spread_lower_side_r2"]
    assert lower.cases == 2956       # cycles: formula and bracket hold from below
    assert lower.max_deviation < 1e-7
    min_eig = by_name["regular_total_min_eig"]
    assert min_eig.cases == 42842
    assert min_eig.max_deviation < 1e-7


def test_criterion_08_two_regular_exact_through_n7():
    # connected 2-regular graphs are exactly the cycles
    for n in range(3, 8):
        rep = B.regular_total_spread(family("cycle", n))
        assert rep.hypothesis_met
        assert abs(rep.slack) <= 1e-7, n
        assert rep.extras["lower"] - 1e-7 <= rep.actual_value
        assert rep.actual_value <= rep.extras["upper"] + 1e-7


@pytest.mark.xfail(
    strict=True,
    reason="genuine counterexample: the 8-cycle's total-graph spread is "
    "4 + sqrt(2) + sqrt(2 - sqrt(2)) ~ 6.1796, which exceeds the closed "
    "form (exactly 6) by ~0.1796; exactness stops at 2-regular order 8",
)
def test_criterion_08_two_regular_exact_at_n8():
    rep = B.regular_total_spread(family("cycle", 8))
    assert abs(rep.slack) <= 1e-7


def test_criterion_09_total_quotient_interlacing_n6():
    cfg = SweepConfig(
        n_min=1, n_max=6, connected_only=True,
        checks=("total_quotient_interlacing",),
    )
    led = run_sweep(cfg).ledger
    st = led.stats["total_quotient_interlacing"]
    assert st.checked == 82426
    assert st.hypothesis_met == 82425   # every graph with an edge, A/L/Q each
    assert st.violations == 0
    assert st.iff_mismatches == 0


def test_criterion_09_edge_deletion_interlacing_n5():
    cfg = SweepConfig(
        n_min=1, n_max=5, connected_only=False,
        checks=("edge_deletion_q_interlacing",),
    )
    led = run_sweep(cfg).ledger
    st = led.stats["edge_deletion_q_interlacing"]
    assert st.checked == 1099
    assert st.hypothesis_met == 1094    # the five edgeless graphs are gated
    assert st.violations == 0


def test_criterion_10_parallel_ledger_determinism(tmp_path, capsys):
    args = [
        "verify", "--n-min", "1", "--n-max", "6", "--connected",
        "--bounds", "gregory_upper,theta_edge_count,signless_line_shift",
    ]
    out1 = tmp_path / "jobs1.json"
    out8 = tmp_path / "jobs8.json"
    assert main(args + ["--jobs", "1", "--out", str(out1)]) == 0
    assert main(args + ["--jobs", "8", "--out", str(out8)]) == 0
    capsys.readouterr()
    blob = out1.read_bytes()
    assert blob
    assert blob == out8.read_bytes()
