from fractions import Fraction

import pytest

from thintree.embedding import build_embedding
from thintree.errors import DisconnectedError
from thintree.flows import edge_connectivity
from thintree.genlab import amplify, cycle_graph, prism_graph, torus_grid
from thintree.oracle import (
    brute_force_edge_connectivity,
    brute_force_thinness,
)
from thintree.pipeline import (
    bounded_genus_thin_tree,
    genus_bound,
    weighted_thin_tree,
)
from thintree.prng import PCG32

from .conftest import add_edge


def test_edge_connectivity_examples(cube):
    assert edge_connectivity(amplify(cube, 2)) == 6
    assert edge_connectivity(cycle_graph(4)) == 2
    disconnected = build_embedding(4, [[0], [1], [2], [3]], [(0, 1), (2, 3)])
    assert edge_connectivity(disconnected) == 0
    with pytest.raises(ValueError):
        edge_connectivity(build_embedding(1, [[0, 1]], [(0, 1)]))


def test_edge_connectivity_matches_oracle(cube):
    for g in [cube, amplify(cube, 3), torus_grid(3, 3), cycle_graph(6),
              amplify(cycle_graph(5), 2), prism_graph(5)]:
        assert edge_connectivity(g) == brute_force_edge_connectivity(g)


def test_genus_bound_values():
    assert genus_bound(0) == 10
    assert genus_bound(1) == 42          # 7 * 1 * alpha(1) = 7 * 6
    assert genus_bound(4) == 14 * 8      # 7 * 2 * alpha(4) = 112
    # non-square: rational upper bound 7 * g * alpha / isqrt(g)
    assert genus_bound(2) == Fraction(7 * 2 * 7, 1)
    assert genus_bound(2) >= 7 * 2 ** 0.5 * 7


@pytest.mark.parametrize("q", [6, 12, 24])
def test_planar_branch_bound(cube, q):
    g = amplify(cube, q)
    result = bounded_genus_thin_tree(g)
    k = 3 * q
    assert result.thinness_bound == Fraction(10, k)
    report = brute_force_thinness(g, result.tree_edges)
    assert report.max_ratio <= Fraction(10, k)


@pytest.mark.parametrize("q", [2, 3, 12])
def test_torus_branch_bound(q):
    g = amplify(torus_grid(3, 3), q)
    k = 4 * q
    result = bounded_genus_thin_tree(g)
    assert result.thinness_bound == Fraction(42, k)
    assert len(result.tree_edges) == 8
    report = brute_force_thinness(g, result.tree_edges)
    assert report.max_ratio <= Fraction(42, k)


def test_genus_branch_with_real_surgery():
    g = add_edge(amplify(prism_graph(4), 4), 0, 2, 0, 0)
    assert g.genus() == 1
    result = bounded_genus_thin_tree(g)
    assert len(result.tree_edges) == 7
    k = edge_connectivity(g)
    report = brute_force_thinness(g, result.tree_edges)
    assert report.max_ratio <= Fraction(42, k)


def test_k1_vacuous_tree():
    g = cycle_graph(5)
    result = bounded_genus_thin_tree(g)
    assert len(result.tree_edges) == 4
    assert result.thinness_bound >= 1  # 10/k with k = 2: vacuous


def test_connector_edges_bounded():
    """Merged tree uses at most kappa(H) - 1 <= 2 sqrt(genus) connectors and
    each raises thinness by at most 1/k."""
    g = add_edge(amplify(prism_graph(4), 5), 0, 2, 0, 0)
    result = bounded_genus_thin_tree(g)
    assert len(result.tree_edges) == g.vertex_count - 1
    report = brute_force_thinness(g, result.tree_edges)
    assert report.max_ratio <= result.thinness_bound


def test_disconnected_rejected():
    g = build_embedding(4, [[0], [1], [2], [3]], [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedError):
        bounded_genus_thin_tree(g)


# --- weighted extraction ----------------------------------------------

def seeded_costs(seed):
    rng = PCG32(seed)
    return lambda new, old: rng.randint(1, 100)


def test_weighted_rounds_and_schedule(cube):
    g = amplify(cube, 20, costs=seeded_costs(7))
    k = edge_connectivity(g)
    assert k == 60
    w = weighted_thin_tree(g)
    assert w.rounds == 3  # floor(60 / 20)
    g_val = genus_bound(0)
    for i, k_i in enumerate(w.connectivity_trace):
        assert Fraction(k_i) >= k - i * g_val
    assert w.thinness == Fraction(2 * 10, 60)
    assert w.cost_ratio <= w.thinness
    assert w.c_tree * w.rounds <= w.c_graph
    report = brute_force_thinness(g, w.tree_edges)
    assert report.max_ratio <= w.thinness


def test_weighted_tree_avoids_expensive_edge(cube):
    g = amplify(cube, 12, costs=lambda new, old: 1000 if new == 0 else 1)
    w = weighted_thin_tree(g)
    assert 0 not in w.tree_edges
    assert w.cost_ratio <= w.thinness


def test_weighted_unit_costs_averaging(cube):
    g = amplify(cube, 12, costs=lambda new, old: 1)
    w = weighted_thin_tree(g)
    assert w.cost_ratio == Fraction(7, 144)
    assert w.c_tree * w.rounds <= w.c_graph


def test_weighted_single_round_degenerate():
    g = amplify(cycle_graph(4), 5, costs=seeded_costs(3))
    w = weighted_thin_tree(g)
    assert w.rounds == 1  # k = 10 < 4 g(k)
    assert w.cost_ratio <= 1
    assert not w.truncated


def test_weighted_torus_instance():
    g = amplify(torus_grid(3, 3), 3)
    g.edge_cost = {e: Fraction(1 + (e * 37) % 100) for e in g.edges()}
    w = weighted_thin_tree(g)
    assert w.rounds == 1  # k = 12 < 4 * 42
    report = brute_force_thinness(g, w.tree_edges)
    k = 12
    assert report.max_ratio <= 2 * genus_bound(1) / k
    assert w.cost_ratio <= 2 * genus_bound(1) / k


def test_weighted_requires_costs(cube):
    with pytest.raises(ValueError):
        weighted_thin_tree(amplify(cube, 2))


def test_weighted_trees_are_edge_disjoint(cube):
    g = amplify(cube, 20, costs=seeded_costs(11))
    residual = g
    seen = set()
    for _ in range(3):
        result = bounded_genus_thin_tree(residual)
        assert not (set(result.tree_edges) & seen)
        seen |= set(result.tree_edges)
        residual = residual.delete_edges(result.tree_edges)
