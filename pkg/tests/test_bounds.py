import math

import numpy as np
import pytest

from spreadlab.bounds import (
    SLACK_TOL,
    GraphFacts,
    _sqrt_clamped,
    connectivity_spread_bound,
    edge_addition_monotonicity,
    gregory_upper,
    grone_tree_bound,
    join_family_line_spectrum,
    join_family_line_spread,
    line_spread_trichotomy,
    line_spread_upper,
    regular_total_min_eig,
    regular_total_spectrum,
    regular_total_spread,
    spread_vs_line_spread,
    total_laplacian_spread_lower,
    total_q_spread_lower,
    total_spread_lower,
    unicyclic_spread_bound,
)
from spreadlab.graph import Graph, family
from spreadlab.spectra import spectral_summary

from conftest import pentagon_with_tail, petersen_graph

APX = lambda x: pytest.approx(x, abs=1e-9)


def test_sqrt_clamped():
    assert _sqrt_clamped(4.0) == 2.0
    assert _sqrt_clamped(0.0) == 0.0
    assert _sqrt_clamped(-1e-13) == 0.0
    assert _sqrt_clamped(-1e-6) is None


def test_graph_facts_cache_is_reusable():
    g = family("complete", 4)
    f = GraphFacts(g)
    r1 = gregory_upper(g, facts=f)
    r2 = line_spread_upper(g, facts=f)
    assert r1.hypothesis_met and r2.hypothesis_met
    assert f.graph is g


# -- spread upper bounds ------------------------------------------------------


def test_gregory_upper_k4():
    rep = gregory_upper(family("complete", 4))
    assert rep.hypothesis_met and rep.iff_binding
    assert rep.bound_value == APX(3 + math.sqrt(3))
    assert rep.actual_value == APX(4.0)
    assert rep.slack == APX(math.sqrt(3) - 1)
    assert not rep.tight and not rep.equality_predicted
    assert rep.extras["outer_bound"] == APX(2 * math.sqrt(6))
    assert not rep.is_violation and rep.iff_consistent


def test_gregory_upper_equality_cases():
    # complete bipartite graphs sit exactly on the bound
    for g in (family("complete_bipartite", 3, 3), family("complete_bipartite", 1, 3)):
        rep = gregory_upper(g)
        assert rep.tight and rep.equality_predicted and rep.iff_consistent
    rep = gregory_upper(family("complete_bipartite", 3, 3))
    assert rep.bound_value == APX(6.0) and rep.extras["outer_bound"] == APX(6.0)
    # edgeless: 0 <= 0, equality predicted via m = 0
    rep = gregory_upper(Graph(3))
    assert rep.tight and rep.equality_predicted
    # complete bipartite plus isolated vertices still counts as equality
    g = Graph(6, [(0, 3), (0, 4), (1, 3), (1, 4)])  # K_{2,2} + 2 isolated
    rep = gregory_upper(g)
    assert rep.tight and rep.equality_predicted
    # odd cycle: strict
    rep = gregory_upper(family("cycle", 5))
    assert not rep.tight and not rep.equality_predicted and rep.iff_consistent


def test_line_spread_upper_values():
    rep = line_spread_upper(petersen_graph())
    assert rep.bound_value == APX(4 + math.sqrt(44))
    assert rep.actual_value == APX(6.0)
    assert rep.extras["outer_bound"] == APX(2 * math.sqrt(30))
    assert rep.extras["line_edges"] == 30
    assert not rep.tight

    # K2: line graph is a single vertex, bound and spread both 0
    rep = line_spread_upper(Graph(2, [(0, 1)]))
    assert rep.bound_value == APX(0.0) and rep.actual_value == APX(0.0)
    assert rep.tight and rep.equality_predicted

    # P3: line graph K2, bound = 1 + 1 = 2 = spread, line graph complete bipartite
    rep = line_spread_upper(family("path", 3))
    assert rep.bound_value == APX(2.0) and rep.tight and rep.equality_predicted

    assert not line_spread_upper(Graph(3)).hypothesis_met


def test_line_spread_trichotomy_cases():
    # m = n: line spread equals signless spread
    rep = line_spread_trichotomy(family("cycle", 5))
    assert rep.extras["case"] == "m=n"
    assert rep.extras["deviation"] == APX(0.0)
    assert not rep.is_violation

    # m > n: line spread = q1 >= signless spread; bipartite component <=> equality
    rep = line_spread_trichotomy(family("complete", 4))
    assert rep.extras["case"] == "m>n"
    assert rep.extras["q1_deviation"] == APX(0.0)
    assert rep.slack > SLACK_TOL and not rep.equality_predicted and rep.iff_consistent

    rep = line_spread_trichotomy(family("complete_bipartite", 3, 3))
    assert rep.extras["case"] == "m>n"
    assert rep.tight and rep.equality_predicted and rep.iff_consistent

    # m < n: line spread = q1 - q_m <= signless spread
    rep = line_spread_trichotomy(family("path", 4))
    assert rep.extras["case"] == "m<n"
    assert rep.extras["tail_deviation"] == APX(0.0)
    assert rep.bound_value == APX(2 + math.sqrt(2))  # S_Q of P4
    assert rep.actual_value == APX(2 * math.sqrt(2))  # S of L(P4) = P3
    assert not rep.is_violation

    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    rep = line_spread_trichotomy(star)
    assert rep.actual_value == APX(3.0)  # L(K_{1,3}) = K3
    assert rep.slack == APX(1.0)  # S_Q = 4

    assert not line_spread_trichotomy(Graph(2)).hypothesis_met


def test_spread_vs_line_spread():
    rep = spread_vs_line_spread(family("complete_bipartite", 3, 3))
    assert rep.hypothesis_met and rep.tight and rep.equality_predicted
    assert rep.bound_value == APX(6.0) and rep.actual_value == APX(6.0)

    rep = spread_vs_line_spread(family("complete", 4))
    assert rep.hypothesis_met and not rep.tight and not rep.equality_predicted
    assert rep.bound_value == APX(6.0) and rep.actual_value == APX(4.0)

    # gates: m = n, too small, disconnected
    assert not spread_vs_line_spread(family("cycle", 5)).hypothesis_met
    assert not spread_vs_line_spread(family("complete", 3)).hypothesis_met
    two = Graph(8, [(0, 1), (1, 2), (0, 2), (0, 3), (4, 5), (5, 6), (4, 6), (4, 7)])
    assert not spread_vs_line_spread(two).hypothesis_met


# -- unicyclic and tree bounds -------------------------------------------------


def test_unicyclic_bound_running_example():
    rep = unicyclic_spread_bound(pentagon_with_tail())
    assert rep.hypothesis_met
    assert rep.extras["girth"] == 5
    assert rep.extras["pendant_tree_diameter"] == 4
    assert rep.extras["d0"] == 7
    assert rep.extras["threshold"] == APX(-2.0939660191)
    assert rep.extras["lambda_min"] == APX(-2.0)
    assert rep.bound_value == APX(4.4693679231)
    assert rep.actual_value == APX(4.1700864866)
    assert not rep.is_violation


def test_unicyclic_bound_triangle_tight():
    rep = unicyclic_spread_bound(family("cycle", 3))
    assert rep.hypothesis_met and rep.tight and rep.equality_predicted
    assert rep.bound_value == APX(3.0) and rep.actual_value == APX(3.0)


def test_unicyclic_bound_eigenvalue_gate():
    # triangle with a heavy pendant star: lambda_n drops below the threshold
    g = Graph(8, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 6), (1, 7), (6, 7)])
    rep = unicyclic_spread_bound(g)
    assert not rep.hypothesis_met
    assert "eigenvalue condition fails" in rep.notes
    assert rep.bound_value is None and rep.slack is None
    assert rep.extras["d0"] == 4
    assert rep.extras["lambda_min"] == APX(-2.3136434442)
    assert rep.extras["threshold"] == APX(-2.2950563973)


def test_unicyclic_bound_structure_gates():
    assert not unicyclic_spread_bound(family("path", 4)).hypothesis_met  # tree
    assert not unicyclic_spread_bound(family("cycle", 4)).hypothesis_met  # even girth
    two = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not unicyclic_spread_bound(two).hypothesis_met  # disconnected


def test_grone_tree_bound_is_advisory():
    rep = grone_tree_bound(family("path", 4))
    assert rep.hypothesis_met and rep.advisory
    assert rep.bound_value == APX(1 - math.cos(math.pi / 4))
    assert rep.actual_value == APX(2 - math.sqrt(2))
    assert rep.slack < -SLACK_TOL
    assert not rep.is_violation  # advisory reports never violate

    star6 = Graph(6, [(0, i) for i in range(1, 6)])
    rep = grone_tree_bound(star6)
    assert rep.actual_value == APX(1.0)
    assert rep.extras["small_alg_conn_claim_holds"] is False

    path6 = family("path", 6)
    rep = grone_tree_bound(path6)
    assert rep.extras["small_alg_conn_claim_holds"] is True
    assert rep.actual_value == APX(2 - math.sqrt(3))

    assert not grone_tree_bound(family("cycle", 4)).hypothesis_met
    assert not grone_tree_bound(Graph(3)).hypothesis_met


# -- join family closed forms --------------------------------------------------


def test_join_family_line_spectrum_frozen():
    spec = join_family_line_spectrum(5, 1, 1)
    root = math.sqrt(33) / 2
    np.testing.assert_allclose(
        spec, [1.5 + root, 1.0, 0.0, 0.0, 1.5 - root, -2.0, -2.0], atol=1e-12
    )
    # matches the eigensolved line graph
    s = spectral_summary(family("join_family", 5, 1, 1))
    assert join_family_line_spread(5, 1, 1) == APX(s.line_spread)
    assert join_family_line_spread(5, 1, 1) == APX(3.5 + root)


def test_join_family_m_less_than_n():
    # K1 v (K1 + K1) is the path P3; its line graph is a single edge
    spec = join_family_line_spectrum(3, 1, 1)
    np.testing.assert_allclose(spec, [1.0, -1.0], atol=1e-12)
    assert join_family_line_spread(3, 1, 1) == APX(2.0)


def test_join_family_parameter_errors():
    for bad in [(3, 0, 1), (3, 1, 0), (3, 2, 1), (2, 1, 1)]:
        with pytest.raises(ValueError):
            join_family_line_spectrum(*bad)
        with pytest.raises(ValueError):
            join_family_line_spread(*bad)


# -- perturbation and class bounds ----------------------------------------------


def test_edge_addition_monotonicity():
    rep = edge_addition_monotonicity(family("path", 3), (0, 2))
    assert rep.hypothesis_met
    assert rep.extras["q1_margin"] == APX(1.0)  # q1: 3 -> 4
    assert rep.extras["line_index_margin"] == APX(1.0)  # 1 -> 2
    assert rep.extras["line_spread_margin"] == APX(1.0)  # 2 -> 3
    assert rep.slack == APX(1.0)
    assert rep.extras["edge"] == "(0, 2)"

    with pytest.raises(ValueError):
        edge_addition_monotonicity(family("complete", 3), (0, 1))
    assert not edge_addition_monotonicity(Graph(3, [(0, 1)]), (1, 2)).hypothesis_met


def test_connectivity_spread_bound_extremal():
    g = family("join_family", 5, 1, 1)
    rep = connectivity_spread_bound(g, 1, "vertex")
    assert rep.hypothesis_met
    assert rep.bound_value == APX(3.5 + math.sqrt(33) / 2)
    assert rep.actual_value == APX(3.5 + math.sqrt(33) / 2)
    assert rep.tight and rep.equality_predicted and rep.iff_consistent
    # same graph under the edge and degree selectors
    for sel in ("edge", "degree"):
        rep = connectivity_spread_bound(g, 1, sel)
        assert rep.tight and rep.equality_predicted, sel


def test_connectivity_spread_bound_complete_graph_case():
    # k = n-1 degenerates to the complete graph
    rep = connectivity_spread_bound(family("complete", 5), 4, "vertex")
    assert rep.hypothesis_met
    assert rep.bound_value == APX(8.0)
    assert rep.actual_value == APX(8.0)  # L(K5) spectrum {6, 1^4, -2^5}
    assert rep.tight and rep.equality_predicted


def test_connectivity_spread_bound_gates_and_errors():
    # C5 has vertex connectivity 2: not in the k = 1 class
    rep = connectivity_spread_bound(family("cycle", 5), 1, "vertex")
    assert not rep.hypothesis_met and "not in class" in rep.notes
    assert not connectivity_spread_bound(Graph(3, [(0, 1)]), 1).hypothesis_met
    with pytest.raises(ValueError):
        connectivity_spread_bound(family("cycle", 5), 1, "girth")
    with pytest.raises(ValueError):
        connectivity_spread_bound(family("cycle", 5), 5)
    with pytest.raises(ValueError):
        connectivity_spread_bound(family("cycle", 5), 0)


def test_connectivity_bound_holds_but_not_tight_inside_class():
    rep = connectivity_spread_bound(family("path", 5), 1, "vertex")
    assert rep.hypothesis_met and rep.slack > SLACK_TOL
    assert not rep.equality_predicted  # m < n, not the extremal graph


# -- total graph bounds ----------------------------------------------------------


def test_total_lower_bounds_triangle():
    g = family("cycle", 3)
    rep = total_q_spread_lower(g)
    assert rep.bound_value == APX(4.0) and rep.actual_value == APX(6.0)
    assert rep.slack == APX(2.0) and not rep.is_violation

    rep = total_spread_lower(g)
    assert rep.bound_value == APX(4.0) and rep.actual_value == APX(6.0)
    assert rep.extras["psi"] == APX(4.0)

    rep = total_laplacian_spread_lower(g)
    assert rep.bound_value == APX(0.0) and rep.actual_value == APX(2.0)


def test_total_lower_bound_gates():
    for fn in (total_q_spread_lower, total_spread_lower):
        assert not fn(Graph(3)).hypothesis_met
        assert not fn(Graph(4, [(0, 1), (2, 3)])).hypothesis_met
    assert not total_laplacian_spread_lower(Graph(2, [(0, 1)])).hypothesis_met
    assert not total_laplacian_spread_lower(Graph(1)).hypothesis_met


# -- regular total graph closed forms ---------------------------------------------


def test_regular_total_spectrum_c4():
    spec = regular_total_spectrum(family("cycle", 4))
    r2 = math.sqrt(2)
    np.testing.assert_allclose(
        spec, [4, r2, r2, 0, -r2, -r2, -2, -2], atol=1e-12
    )


def test_regular_total_spectrum_k4():
    spec = regular_total_spectrum(family("complete", 4))
    np.testing.assert_allclose(spec, [6, 1, 1, 1, 1, -2, -2, -2, -2, -2], atol=1e-12)


def test_regular_total_spectrum_errors():
    with pytest.raises(ValueError):
        regular_total_spectrum(pentagon_with_tail())  # irregular
    with pytest.raises(ValueError):
        regular_total_spectrum(Graph(2, [(0, 1)]))  # r = 1
    with pytest.raises(ValueError):
        regular_total_spectrum(Graph(6, [(i, (i + 1) % 3) for i in range(3)]))


def test_regular_total_min_eig():
    assert regular_total_min_eig(family("complete", 4)) == APX(-2.0)
    assert regular_total_min_eig(petersen_graph()) == APX(-(3 + math.sqrt(5)) / 2)


def test_regular_total_spread_exact_r3():
    rep = regular_total_spread(family("complete", 4))
    assert rep.bound_value == APX(8.0) and rep.actual_value == APX(8.0)
    assert abs(rep.slack) <= 1e-9
    assert rep.extras["r"] == 3
    assert rep.extras["lower"] <= rep.actual_value <= rep.extras["upper"] + 1e-9

    rep = regular_total_spread(petersen_graph())
    assert rep.bound_value == APX((15 + math.sqrt(5)) / 2)
    assert abs(rep.slack) <= 1e-8


def test_regular_total_spread_r2_small_cycles_exact():
    for n in range(3, 8):
        rep = regular_total_spread(family("cycle", n))
        assert rep.hypothesis_met
        assert abs(rep.slack) <= 1e-7, n


def test_regular_total_spread_undershoots_on_c8():
    # The formula assumes the smallest total eigenvalue comes from lambda_n,
    # which fails for C8 (adjacency eigenvalue -sqrt(2) in (-2, -1)); the
    # report shows this as a genuine violation rather than hiding it.
    rep = regular_total_spread(family("cycle", 8))
    assert rep.hypothesis_met
    true_spread = 4 + math.sqrt(2) + math.sqrt(2 - math.sqrt(2))
    assert rep.actual_value == pytest.approx(true_spread, abs=1e-7)
    assert rep.bound_value == pytest.approx(6.0, abs=1e-7)
    assert rep.slack == pytest.approx(6.0 - true_spread, abs=1e-7)
    assert rep.is_violation
    # the upper side of the bracket breaks too; the lower side survives
    assert rep.extras["upper"] < rep.actual_value
    assert rep.extras["lower"] <= rep.actual_value + 1e-9


def test_regular_total_spread_gates():
    assert not regular_total_spread(pentagon_with_tail()).hypothesis_met
    assert not regular_total_spread(Graph(2, [(0, 1)])).hypothesis_met
