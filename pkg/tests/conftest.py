"""Shared builders for the test suite."""

from __future__ import annotations

import pytest

from thintree.embedding import EmbeddedGraph
from thintree.genlab import prism_graph


def add_edge(g: EmbeddedGraph, u: int, v: int, pos_u: int = 0, pos_v: int = 0):
    """New edge between u and v, darts spliced in after the rotation
    positions pos_u / pos_v.  Used to build handle instances by hand."""
    e = max(g.edges()) + 1
    owner = dict(g.dart_owner)
    owner[2 * e] = u
    owner[2 * e + 1] = v
    rot = dict(g.rotation_next)
    du = g.darts_at(u)[pos_u]
    dv = g.darts_at(v)[pos_v]
    rot[2 * e] = rot[du]
    rot[du] = 2 * e
    rot[2 * e + 1] = rot[dv]
    rot[dv] = 2 * e + 1
    cost = dict(g.edge_cost) if g.edge_cost else None
    if cost is not None:
        cost[e] = min(cost.values())
    return EmbeddedGraph(g.vertex_count, owner, rot, cost)


@pytest.fixture
def cube():
    return prism_graph(4)
