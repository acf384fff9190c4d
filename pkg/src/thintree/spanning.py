"""Thin spanning trees from far-apart dual edge sets.

The driver picks one "middle" edge out of a long thread of the dual graph,
deletes it, prunes dangling vertices, and repeats until the dual is empty.
The primal edges of the selected set hit every dual cycle, hence cross every
cut, hence span; and because the selected dual edges end up far apart, the
set crosses no cut too often.  The emitted certificate is the measured
minimum pairwise dual distance m (capped at the dual girth), which makes the
selected set 1/m-thin.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .dual import DualGraph, dual_girth, geometric_dual
from .embedding import EmbeddedGraph
from .errors import (
    DegreeOneVertexError,
    DisconnectedError,
    NoLongThreadError,
)


def alpha(genus: int) -> int:
    """Cycle-length constant for a given genus: 4 + floor(2*log2(genus + 3/2)).

    Computed exactly: floor(2*log2(g + 3/2)) = floor(log2((2g+3)^2 / 4)),
    and the largest power of two below an integer is its bit length minus
    one.  alpha(0) = 5, alpha(1) = 6, alpha(3) = 8.
    """
    if genus < 0:
        raise ValueError("genus must be non-negative")
    return ((2 * genus + 3) ** 2).bit_length() + 1


@dataclass(frozen=True)
class Thread(object):
    """Maximal chain of degree-2 dual vertices.

    ``vertices`` is the walk (one longer than ``edges`` for paths; first ==
    last for cycles).  A cycle thread is either a whole component in which
    every vertex has degree 2, or a closed chain attached to one branch
    vertex.
    """

    edges: tuple[int, ...]
    vertices: tuple[int, ...]
    kind: str  # "path" | "cycle"

    @property
    def length(self) -> int:
        return len(self.edges)


class DualView:
    """Mutable working copy of a dual graph for the selection loop."""

    def __init__(self, d: DualGraph):
        self.neighbors = {}  # face -> dict edge_id -> other face
        self.loops = {}      # face -> set of loop edge ids
        self.degree = {}
        for e, l, r in d.dual_edges:
            for f in (l, r):
                if f not in self.neighbors:
                    self.neighbors[f] = {}
                    self.loops[f] = set()
                    self.degree[f] = 0
            if l == r:
                self.loops[l].add(e)
                self.degree[l] += 2
            else:
                self.neighbors[l][e] = r
                self.neighbors[r][e] = l
                self.degree[l] += 1
                self.degree[r] += 1
        self.edge_count = len(d.dual_edges)

    def live_vertices(self) -> list[int]:
        return sorted(f for f, deg in self.degree.items() if deg > 0)

    def incident(self, f: int) -> list[tuple[int, int]]:
        """Sorted (edge, other) pairs at f; loops appear once."""
        out = [(e, f) for e in self.loops[f]]
        out.extend(self.neighbors[f].items())
        out.sort()
        return out

    def remove_edge(self, e: int, l: int, r: int) -> None:
        if l == r:
            self.loops[l].discard(e)
            self.degree[l] -= 2
        else:
            del self.neighbors[l][e]
            del self.neighbors[r][e]
            self.degree[l] -= 1
            self.degree[r] -= 1
        self.edge_count -= 1

    def prune_degree_one(self) -> None:
        """Iteratively delete degree-1 vertices with their incident edge."""
        stack = [f for f, deg in self.degree.items() if deg == 1]
        while stack:
            f = stack.pop()
            if self.degree[f] != 1:
                continue
            e, other = next(iter(self.neighbors[f].items()))
            self.remove_edge(e, f, other)
            if self.degree[other] == 1:
                stack.append(other)


def find_threads(view) -> list[Thread]:
    """Decompose a min-degree-2 dual view into maximal threads.

    Every live edge belongs to exactly one returned thread.  Raises
    DegreeOneVertexError when the precondition is violated.
    """
    if isinstance(view, DualGraph):
        view = DualView(view)
    for f in view.live_vertices():
        if view.degree[f] == 1:
            raise DegreeOneVertexError(f"vertex {f} has degree 1")

    threads = []
    used = set()

    def walk(start, first_edge, first_other):
        """Follow the chain from ``start`` through degree-2 vertices."""
        edges = [first_edge]
        verts = [start, first_other]
        used.add(first_edge)
        cur = first_other
        while cur != start and view.degree[cur] == 2 and not view.loops[cur]:
            e, nxt = next(
                (e, w) for e, w in view.incident(cur) if e not in used)
            used.add(e)
            edges.append(e)
            verts.append(nxt)
            cur = nxt
        return edges, verts

    branch_vertices = [f for f in view.live_vertices() if view.degree[f] != 2]
    for b in branch_vertices:
        for e, other in view.incident(b):
            if e in used:
                continue
            if other == b:  # loop at a branch vertex: cycle of length 1
                used.add(e)
                threads.append(Thread((e,), (b, b), "cycle"))
                continue
            edges, verts = walk(b, e, other)
            kind = "cycle" if verts[-1] == b else "path"
            threads.append(Thread(tuple(edges), tuple(verts), kind))

    # components where every vertex has degree 2 are single cycles
    for f in view.live_vertices():
        if view.degree[f] != 2:
            continue
        pending = [(e, w) for e, w in view.incident(f) if e not in used]
        if not pending:
            continue
        if view.loops[f]:
            e = min(view.loops[f])
            used.add(e)
            threads.append(Thread((e,), (f, f), "cycle"))
            continue
        e, other = pending[0]
        edges, verts = walk(f, e, other)
        threads.append(Thread(tuple(edges), tuple(verts), "cycle"))
    return threads


def _canonical(thread: Thread) -> Thread:
    """Fix a walk direction so the middle edge is reproducible.

    Paths run from the endpoint with the smaller vertex id.  Cycles start at
    the unique vertex of degree != 2 if there is one (else the smallest
    vertex, which is how find_threads already anchors them) and take the
    direction whose first edge id is smaller.
    """
    if thread.kind == "path":
        if thread.vertices[0] > thread.vertices[-1]:
            return Thread(tuple(reversed(thread.edges)),
                          tuple(reversed(thread.vertices)), "path")
        return thread
    if thread.length >= 2 and thread.edges[-1] < thread.edges[0]:
        inner = tuple(reversed(thread.vertices))
        return Thread(tuple(reversed(thread.edges)), inner, "cycle")
    return thread


def middle_edge(thread: Thread) -> int:
    """Edge at position ceil(L/2) along the canonical walk (1-based)."""
    t = _canonical(thread)
    return t.edges[(t.length + 1) // 2 - 1]


def select_far_edge_set(d: DualGraph, g_star: int, alpha_value: int) -> list[int]:
    """Run the middle-edge selection loop on the dual; return sorted F*.

    Each iteration picks the longest thread (ties: smallest minimum edge id),
    takes its middle edge, removes it, and prunes dangling vertices.  A
    thread of length L qualifies when L * alpha >= g_star; by the long-thread
    guarantee one always exists, so a shortfall raises NoLongThreadError.
    """
    view = DualView(d)
    selected = []
    rounds = 0
    while view.edge_count > 0:
        rounds += 1
        if rounds > 2 * len(d.dual_edges) + 2:
            raise AssertionError("selection loop failed to terminate")
        view.prune_degree_one()
        if view.edge_count == 0:
            break
        threads = find_threads(view)
        best = max(threads, key=lambda t: (t.length, -min(t.edges)))
        if best.length * alpha_value < g_star:
            raise NoLongThreadError(
                f"longest thread has length {best.length} < {g_star}/{alpha_value}")
        mid = middle_edge(best)
        l, r = d.faces_of(mid)
        view.remove_edge(mid, l, r)
        selected.append(mid)
    return sorted(selected)


@dataclass
class ThinTreeResult:
    """Spanning tree with its thinness certificate.

    thinness_bound is 2*alpha/g*; certificate_distance is the measured
    minimum pairwise dual distance m of the far set (capped into [1, g*]),
    which certifies that far_set is 1/m-thin.
    """

    tree_edges: tuple[int, ...]
    far_set: tuple[int, ...]
    thinness_bound: Fraction
    certificate_distance: int
    g_star: int
    alpha: int
    cost_ratio: Fraction | None = None


def _min_pairwise_distance(d: DualGraph, edge_ids) -> int | None:
    """Minimum pairwise edge distance within edge_ids, None for < 2 edges."""
    ids = sorted(edge_ids)
    if len(ids) < 2:
        return None
    adj = d.adjacency()
    endpoint_edges = {}
    for e in ids:
        for f in d.faces_of(e):
            endpoint_edges.setdefault(f, set()).add(e)
    best = None
    for e in ids:
        sources = set(d.faces_of(e))
        dist = {f: 0 for f in sources}
        q = deque(sources)
        while q:
            u = q.popleft()
            if best is not None and dist[u] >= best:
                continue
            for edge2, w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    q.append(w)
        for f, du in dist.items():
            for other in endpoint_edges.get(f, ()):
                if other > e and (best is None or du < best):
                    best = du
        if best == 0:
            break
    return best


def _bfs_spanning_tree(g: EmbeddedGraph, allowed) -> list[int]:
    """BFS tree over (V, allowed) rooted at 0, ties by smallest edge id."""
    incident = {v: [] for v in range(g.vertex_count)}
    for e in sorted(allowed):
        u, v = g.endpoints(e)
        if u == v:
            continue
        incident[u].append((e, v))
        incident[v].append((e, u))
    seen = {0}
    tree = []
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for e, w in incident[u]:
            if w not in seen:
                seen.add(w)
                tree.append(e)
                queue.append(w)
    if len(seen) != g.vertex_count:
        raise DisconnectedError(
            f"edge set spans only {len(seen)} of {g.vertex_count} vertices")
    return sorted(tree)


def thin_spanning_tree(g: EmbeddedGraph) -> ThinTreeResult:
    """Spanning tree with thinness bound 2*alpha/g*.

    For g* <= 2*alpha the bound is at least 1, so any spanning tree does and
    the whole edge set is reported as the far set with certificate 1.
    Otherwise the selection loop runs and the certificate is the measured
    minimum pairwise dual distance of the selected dual edges.
    """
    if not g.is_connected():
        raise DisconnectedError("thin_spanning_tree needs a connected graph")
    if g.vertex_count <= 1:
        return ThinTreeResult((), tuple(g.edges()), Fraction(0), 1, 1, alpha(g.genus()))
    d = geometric_dual(g)
    g_star = dual_girth(d)
    a = alpha(g.genus())

    if g_star <= 2 * a:
        far = g.edges()
        certificate = 1
    else:
        far = select_far_edge_set(d, g_star, a)
        measured = _min_pairwise_distance(d, far)
        certificate = g_star if measured is None else max(1, min(measured, g_star))

    tree = _bfs_spanning_tree(g, far)
    cost_ratio = None
    if g.edge_cost is not None:
        total = g.total_cost()
        if total > 0:
            cost_ratio = sum((g.edge_cost[e] for e in tree), Fraction(0)) / total
    return ThinTreeResult(
        tree_edges=tuple(tree),
        far_set=tuple(far),
        thinness_bound=Fraction(2 * a, g_star),
        certificate_distance=certificate,
        g_star=g_star,
        alpha=a,
        cost_ratio=cost_ratio,
    )
