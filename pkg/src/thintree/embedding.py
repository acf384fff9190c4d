"""Combinatorial embeddings of multigraphs on orientable surfaces.

An embedding is stored as a rotation system.  Edge ``e`` owns the two darts
(half-edges) ``2e`` and ``2e+1``; the twin involution is therefore just
``d ^ 1`` and edge ids stay stable when other edges are deleted.  Each dart
belongs to one vertex, and ``rotation_next`` maps a dart to the next dart in
counterclockwise order around its vertex.  Faces are the cycles of the
permutation

    phi(d) = rotation_next[twin(d)]

i.e. advance to the twin, then rotate.  Either composition order is a valid
convention; this one is fixed so that face ids are reproducible.

Loops and parallel edges are first class: a loop contributes two darts at the
same vertex.  The total genus of a (possibly disconnected) embedding follows
from the Euler formula

    V - E + F = 2*kappa - 2*genus

where an isolated vertex counts one (empty) face.  Graphs are immutable after
construction; edge deletion returns a new graph.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    BadTwinError,
    DisconnectedError,
    MalformedRotationError,
    OddEulerDefectError,
)


class EmbeddedGraph:
    """A multigraph with a rotation system and optional edge costs.

    Attributes:
        vertex_count: number of vertices (ids 0..vertex_count-1).
        dart_owner: dict dart id -> vertex id.
        rotation_next: dict dart id -> successor dart at the same vertex.
        edge_cost: dict edge id -> Fraction, or None when unweighted.
    """

    def __init__(self, vertex_count, dart_owner, rotation_next, edge_cost=None):
        self.vertex_count = vertex_count
        self.dart_owner = dart_owner
        self.rotation_next = rotation_next
        self.edge_cost = edge_cost
        self._faces = None
        self._components = None

    # -- basic queries ------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.dart_owner) // 2

    def edges(self) -> list[int]:
        """Sorted ids of the surviving edges."""
        return sorted({d >> 1 for d in self.dart_owner})

    def has_edge(self, e: int) -> bool:
        return 2 * e in self.dart_owner

    def endpoints(self, e: int) -> tuple[int, int]:
        """Endpoints of edge e, in dart order (owner of 2e, owner of 2e+1)."""
        return self.dart_owner[2 * e], self.dart_owner[2 * e + 1]

    def darts_at(self, v: int) -> list[int]:
        """Darts at v in rotation order, starting from the smallest dart."""
        start = None
        for d, owner in self.dart_owner.items():
            if owner == v and (start is None or d < start):
                start = d
        if start is None:
            return []
        out = [start]
        d = self.rotation_next[start]
        while d != start:
            out.append(d)
            d = self.rotation_next[d]
        return out

    def degree(self, v: int) -> int:
        return sum(1 for owner in self.dart_owner.values() if owner == v)

    def cost(self, e: int) -> Fraction:
        if self.edge_cost is None:
            raise ValueError("graph has no costs")
        return self.edge_cost[e]

    def total_cost(self) -> Fraction:
        return sum((self.edge_cost[e] for e in self.edges()), Fraction(0))

    # -- faces, genus, components --------------------------------------

    def faces(self) -> list[tuple[int, ...]]:
        """Cycles of phi, each rotated to start at its smallest dart and
        sorted by that dart.  Isolated vertices contribute no cycle here but
        are accounted for in genus()."""
        if self._faces is None:
            self._faces = _trace(self.dart_owner, self.rotation_next)
        return self._faces

    def face_of_dart(self) -> dict[int, int]:
        """Map dart -> index of its face in faces()."""
        owner = {}
        for i, walk in enumerate(self.faces()):
            for d in walk:
                owner[d] = i
        return owner

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, sorted by minimum."""
        if self._components is not None:
            return self._components
        parent = list(range(self.vertex_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for d, v in self.dart_owner.items():
            a, b = find(v), find(self.dart_owner[d ^ 1])
            if a != b:
                parent[a] = b
        groups = {}
        for v in range(self.vertex_count):
            groups.setdefault(find(v), []).append(v)
        self._components = sorted(groups.values())
        return self._components

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def genus(self) -> int:
        """Total genus over components, via V - E + F = 2*kappa - 2*genus."""
        touched = set(self.dart_owner.values())
        isolated = self.vertex_count - len(touched)
        f = len(self.faces()) + isolated
        kappa = len(self.components())
        defect = 2 * kappa - (self.vertex_count - self.edge_count + f)
        if defect % 2:
            raise OddEulerDefectError(
                f"V-E+F-2k = {-defect} is odd: corrupted rotation system")
        g = defect // 2
        if g < 0:
            raise OddEulerDefectError(f"negative genus {g}: corrupted rotation system")
        return g

    # -- derived graphs -------------------------------------------------

    def delete_edges(self, edge_ids) -> "EmbeddedGraph":
        """New graph with the given edges removed (rotation splicing).

        Surviving edges keep their ids and darts.
        """
        doomed_darts = set()
        for e in edge_ids:
            if not self.has_edge(e):
                raise ValueError(f"edge {e} not present")
            doomed_darts.add(2 * e)
            doomed_darts.add(2 * e + 1)
        owner = {d: v for d, v in self.dart_owner.items() if d not in doomed_darts}
        rot = {}
        for d in owner:
            nxt = self.rotation_next[d]
            while nxt in doomed_darts:
                nxt = self.rotation_next[nxt]
            rot[d] = nxt
        cost = None
        if self.edge_cost is not None:
            cost = {e: c for e, c in self.edge_cost.items() if 2 * e in owner}
        return EmbeddedGraph(self.vertex_count, owner, rot, cost)

    def restrict_to_component(self, vertices) -> tuple["EmbeddedGraph", dict, dict]:
        """Standalone embedding of one component.

        ``vertices`` must be a full component.  Returns (subgraph, vertex_map,
        edge_map) where the maps send sub ids back to ids in self.
        """
        vset = set(vertices)
        vmap_back = sorted(vset)
        vmap_fwd = {v: i for i, v in enumerate(vmap_back)}
        edges = [e for e in self.edges() if self.dart_owner[2 * e] in vset]
        for e in edges:
            if self.dart_owner[2 * e + 1] not in vset:
                raise DisconnectedError("vertex set is not a full component")
        emap_back = {i: e for i, e in enumerate(edges)}
        emap_fwd = {e: i for i, e in enumerate(edges)}
        owner = {}
        rot = {}
        for e in edges:
            for d in (2 * e, 2 * e + 1):
                sub_d = 2 * emap_fwd[d >> 1] + (d & 1)
                owner[sub_d] = vmap_fwd[self.dart_owner[d]]
                nxt = self.rotation_next[d]
                rot[sub_d] = 2 * emap_fwd[nxt >> 1] + (nxt & 1)
        cost = None
        if self.edge_cost is not None:
            cost = {emap_fwd[e]: self.edge_cost[e] for e in edges}
        sub = EmbeddedGraph(len(vmap_back), owner, rot, cost)
        vmap = {i: v for i, v in enumerate(vmap_back)}
        return sub, vmap, emap_back


def expand_parallel(g: EmbeddedGraph, multiplicity, cost_of=None):
    """Replace each edge e by ``multiplicity[e]`` adjacent parallel copies.

    Copies are inserted in one order at the side of dart 2e and in reverse
    order at the side of dart 2e+1, so consecutive copies bound bigon faces
    and the genus is unchanged.  Edges with multiplicity 0 are deleted
    first.  Returns (expanded graph, map new edge id -> old edge id); new
    ids are contiguous, assigned in old-id order.

    ``cost_of`` optionally maps an old edge id to the cost carried by each
    of its copies.
    """
    zero = [e for e in g.edges() if multiplicity.get(e, 0) == 0]
    base = g.delete_edges(zero) if zero else g

    new_ids = {}
    origin = {}
    counter = 0
    for e in base.edges():
        count = multiplicity[e]
        new_ids[e] = list(range(counter, counter + count))
        for i in new_ids[e]:
            origin[i] = e
        counter += count

    owner = {}
    rot = {}
    for v in range(base.vertex_count):
        cycle = []
        for d in base.darts_at(v):
            ids = new_ids[d >> 1]
            ordered = ids if d % 2 == 0 else list(reversed(ids))
            cycle.extend(2 * i + (d & 1) for i in ordered)
        for i, d in enumerate(cycle):
            owner[d] = v
            rot[d] = cycle[(i + 1) % len(cycle)]

    costs = None
    if cost_of is not None:
        costs = {i: Fraction(cost_of(origin[i])) for i in origin}
    expanded = EmbeddedGraph(base.vertex_count, owner, rot, costs)
    if expanded.genus() != base.genus():
        raise OddEulerDefectError("parallel expansion changed the genus")
    return expanded, origin


def _trace(dart_owner, rotation_next):
    faces = []
    seen = set()
    for d0 in sorted(dart_owner):
        if d0 in seen:
            continue
        walk = []
        d = d0
        while True:
            walk.append(d)
            seen.add(d)
            d = rotation_next[d ^ 1]
            if d == d0:
                break
        faces.append(tuple(walk))
    return faces


def build_embedding(vertex_count, rotations, twin_pairs, costs=None) -> EmbeddedGraph:
    """Validate raw rotation data and construct an EmbeddedGraph.

    Parameters:
        vertex_count: number of vertices.
        rotations: one list of dart ids per vertex, in counterclockwise
            order.  Together they must list every dart exactly once.
        twin_pairs: iterable of (dart, dart) pairs covering all darts.  The
            canonical encoding pairs 2e with 2e+1; anything else is rejected.
        costs: optional dict edge id -> cost (int, str or Fraction).

    Raises:
        MalformedRotationError: a dart is repeated, missing, or rotations
            do not match vertex_count.
        BadTwinError: pairs are not the canonical involution.
    """
    if vertex_count < 0:
        raise MalformedRotationError("negative vertex count")
    if len(rotations) != vertex_count:
        raise MalformedRotationError(
            f"expected {vertex_count} rotation lists, got {len(rotations)}")
    dart_owner = {}
    for v, rotation in enumerate(rotations):
        for d in rotation:
            if d < 0:
                raise MalformedRotationError(f"negative dart id {d}")
            if d in dart_owner:
                raise MalformedRotationError(f"dart {d} listed twice")
            dart_owner[d] = v

    paired = {}
    for a, b in twin_pairs:
        if a == b:
            raise BadTwinError(f"dart {a} twinned with itself")
        for d in (a, b):
            if d in paired:
                raise BadTwinError(f"dart {d} appears in two twin pairs")
        lo, hi = min(a, b), max(a, b)
        if hi != lo + 1 or lo % 2:
            raise BadTwinError(
                f"pair ({a},{b}) violates the 2e/2e+1 dart encoding")
        paired[a] = b
        paired[b] = a
    if set(paired) != set(dart_owner):
        missing = set(dart_owner) ^ set(paired)
        raise BadTwinError(f"twin pairs and rotations disagree on darts {sorted(missing)}")
    if len(dart_owner) % 2:
        raise MalformedRotationError("odd number of darts")

    rot = {}
    for rotation in rotations:
        for i, d in enumerate(rotation):
            rot[d] = rotation[(i + 1) % len(rotation)]

    cost_map = None
    if costs is not None:
        cost_map = {}
        for e, c in costs.items():
            if 2 * e not in dart_owner:
                raise MalformedRotationError(f"cost given for absent edge {e}")
            frac = c if isinstance(c, Fraction) else Fraction(str(c))
            if frac < 0:
                raise MalformedRotationError(f"negative cost on edge {e}")
            cost_map[e] = frac

    g = EmbeddedGraph(vertex_count, dart_owner, rot, cost_map)
    g.genus()  # validates Euler parity
    return g


def trace_faces(g: EmbeddedGraph) -> list[tuple[int, ...]]:
    """Face walks of g (cycles of phi) in canonical order."""
    return g.faces()


def genus(g: EmbeddedGraph) -> int:
    """Total genus of the embedding."""
    return g.genus()
