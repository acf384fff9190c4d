"""Geometric duals, dual girth, edge distances, and cut/cycle translation.

The dual of an embedded graph has one vertex per face and one edge per primal
edge, under the same edge id.  ``left_face`` is the face containing dart
``2e`` and ``right_face`` the face containing dart ``2e+1``; a dual loop
(both sides the same face) is allowed and counts as a cycle of length 1.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .embedding import EmbeddedGraph
from .errors import EdgeAbsentError, NoCycleError, ParityViolationError


@dataclass(frozen=True)
class Cut:
    """One side of a vertex cut.  Must be a nonempty proper subset."""

    side: frozenset

    def validate(self, vertex_count: int) -> None:
        if not 0 < len(self.side) < vertex_count:
            raise ValueError(
                f"cut side of size {len(self.side)} invalid for {vertex_count} vertices")
        if any(not 0 <= v < vertex_count for v in self.side):
            raise ValueError("cut side contains unknown vertices")


class DualGraph:
    """Abstract dual: faces as vertices, primal edge ids reused.

    Attributes:
        face_count: number of dual vertices.
        dual_edges: sorted list of (edge_id, left_face, right_face).
        primal_handle: the EmbeddedGraph this dual was derived from.
    """

    def __init__(self, face_count, dual_edges, primal_handle=None):
        self.face_count = face_count
        self.dual_edges = sorted(dual_edges)
        self.primal_handle = primal_handle
        self._by_id = {e: (l, r) for e, l, r in self.dual_edges}
        self._adj = None

    def edge_ids(self) -> list[int]:
        return [e for e, _, _ in self.dual_edges]

    def has_edge(self, e: int) -> bool:
        return e in self._by_id

    def faces_of(self, e: int) -> tuple[int, int]:
        try:
            return self._by_id[e]
        except KeyError:
            raise EdgeAbsentError(f"dual edge {e} absent") from None

    def is_loop(self, e: int) -> bool:
        l, r = self.faces_of(e)
        return l == r

    def degree(self, f: int) -> int:
        deg = 0
        for _, l, r in self.dual_edges:
            if l == f:
                deg += 1
            if r == f:
                deg += 1
        return deg

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per-face sorted list of (edge_id, other_face); loops appear once."""
        if self._adj is None:
            adj = [[] for _ in range(self.face_count)]
            for e, l, r in self.dual_edges:
                adj[l].append((e, r))
                if r != l:
                    adj[r].append((e, l))
            for lst in adj:
                lst.sort()
            self._adj = adj
        return self._adj


def geometric_dual(g: EmbeddedGraph) -> DualGraph:
    """Construct the geometric dual of g."""
    face_of = g.face_of_dart()
    dual_edges = [(e, face_of[2 * e], face_of[2 * e + 1]) for e in g.edges()]
    return DualGraph(len(g.faces()), dual_edges, primal_handle=g)


def _bfs_dist(adj, sources, avoid_edge=None):
    """Hop distances from a set of faces; ``avoid_edge`` is never used."""
    dist = {}
    q = deque()
    for s in sources:
        if s not in dist:
            dist[s] = 0
            q.append(s)
    while q:
        u = q.popleft()
        for e, w in adj[u]:
            if e == avoid_edge or w in dist:
                continue
            dist[w] = dist[u] + 1
            q.append(w)
    return dist


def _bfs_path(adj, src, dst, avoid_edge):
    """Edge ids of one shortest src-dst path avoiding one edge, deterministic."""
    prev = {src: None}
    q = deque([src])
    while q:
        u = q.popleft()
        if u == dst:
            break
        for e, w in adj[u]:
            if e == avoid_edge or w in prev:
                continue
            prev[w] = (u, e)
            q.append(w)
    path = []
    u = dst
    while prev[u] is not None:
        u, e = prev[u]
        path.append(e)
    path.reverse()
    return path


def shortest_dual_cycle(d: DualGraph):
    """Shortest simple cycle as (length, edge id list), or None if acyclic.

    The shortest cycle through edge e = (a, b) is e plus a shortest a-b path
    avoiding e; minimizing over all edges is exact on multigraphs (loops give
    length 1, parallel pairs length 2).  Deterministic: the anchor is the
    smallest edge id on some shortest cycle.
    """
    for e, l, r in d.dual_edges:
        if l == r:
            return 1, [e]
    adj = d.adjacency()
    best_len = None
    best_cycle = None
    for e, l, r in d.dual_edges:
        if best_len is not None and best_len <= 2:
            break
        dist = _bfs_dist(adj, [l], avoid_edge=e)
        if r not in dist or (best_len is not None and dist[r] + 1 >= best_len):
            continue
        path = _bfs_path(adj, l, r, e)
        best_len = len(path) + 1
        best_cycle = path + [e]
    if best_cycle is None:
        return None
    return best_len, best_cycle


def dual_girth(d: DualGraph) -> int:
    """Length of the shortest cycle in the dual.

    A loop counts as 1 and a parallel pair as 2.  Raises NoCycleError when
    the dual is a forest.
    """
    found = shortest_dual_cycle(d)
    if found is None:
        raise NoCycleError("dual graph is a forest")
    return found[0]


def edge_distance(d: DualGraph, e: int, f: int) -> int:
    """Closest distance between endpoints of dual edges e and f.

    Adjacent edges (shared endpoint) are at distance 0, as is e == f.
    """
    le, re = d.faces_of(e)
    lf, rf = d.faces_of(f)
    if e == f:
        return 0
    dist = _bfs_dist(d.adjacency(), {le, re})
    hits = [dist[t] for t in {lf, rf} if t in dist]
    if not hits:
        raise ValueError(f"dual edges {e} and {f} lie in different components")
    return min(hits)


def cut_edges(g: EmbeddedGraph, cut: Cut) -> list[int]:
    """Edge ids crossing the cut (loops never cross)."""
    side = cut.side
    out = []
    for e in g.edges():
        u, v = g.endpoints(e)
        if (u in side) != (v in side):
            out.append(e)
    return out


def cut_to_dual_cycles(g: EmbeddedGraph, d: DualGraph, cut: Cut) -> list[list[int]]:
    """Decompose the dual of the cut (U, V-U) into edge-disjoint cycles.

    Returns a list of cycles, each a list of edge ids in walk order; their
    union is exactly the cut's dual edge set.  Every face must meet that set
    an even number of times (ParityViolationError otherwise).
    """
    cut.validate(g.vertex_count)
    s_star = cut_edges(g, cut)
    if not s_star:
        return []

    incident = {}
    for e in s_star:
        l, r = d.faces_of(e)
        incident.setdefault(l, []).append((e, r))
        if r != l:
            incident.setdefault(r, []).append((e, l))
    for f, lst in incident.items():
        deg = sum(2 if other == f else 1 for _, other in lst)
        if deg % 2:
            raise ParityViolationError(
                f"face {f} meets the cut's dual edges {deg} times")
        lst.sort()

    unused = set(s_star)
    cycles = []
    while unused:
        start = min(f for f, lst in incident.items()
                    if any(e in unused for e, _ in lst))
        # Walk greedily; every face has even remaining degree, so the walk
        # can always continue until it revisits a face, closing a cycle.
        walk_edges = []
        walk_faces = [start]
        index_of = {start: 0}
        cur = start
        while True:
            e, nxt = next((e, w) for e, w in incident[cur] if e in unused)
            unused.discard(e)
            walk_edges.append(e)
            if nxt in index_of:
                i = index_of[nxt]
                cycles.append(walk_edges[i:])
                unused.update(walk_edges[:i])  # unfinished prefix goes back
                break
            index_of[nxt] = len(walk_faces)
            walk_faces.append(nxt)
            cur = nxt
    return sorted(cycles, key=min)
