"""Immutable simple graphs on dense vertex ids 0..n-1.

Adjacency is stored as one bitmask per vertex, which keeps the exhaustive
subset sweeps elsewhere in the package cheap: any induced subgraph is just
an integer mask, and never needs to be materialised.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Invalid graph construction input."""


class Graph:
    """Immutable undirected simple graph on vertices 0..order-1."""

    __slots__ = ("order", "_adj", "_edges", "_pm_cache", "_oc_cache", "_metrics")

    order: int
    _adj: tuple[int, ...]

    def __init__(self, order: int, adj: tuple[int, ...]):
        # Internal constructor; use build_graph() to validate raw edge lists.
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "_adj", adj)
        object.__setattr__(self, "_edges", None)
        object.__setattr__(self, "_pm_cache", None)
        object.__setattr__(self, "_oc_cache", None)
        object.__setattr__(self, "_metrics", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # The lazy caches are the one exception to immutability: they memoise
    # pure functions of the graph, so observable behaviour never changes.
    def _set_cache(self, name: str, value) -> None:
        object.__setattr__(self, name, value)

    @property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhood bitmasks, one per vertex."""
        return self._adj

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        if self._edges is None:
            es = []
            for u in range(self.order):
                m = self._adj[u] >> (u + 1)
                while m:
                    low = m & -m
                    es.append((u, u + 1 + low.bit_length() - 1))
                    m ^= low
            self._set_cache("_edges", es)
        return list(self._edges)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self._adj[v]))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.order == other.order
            and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.order, self._adj))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()!r})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> Iterator[int]:
    """Vertices of a bitmask, ascending."""
    return _bits(mask)


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def build_graph(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list.

    Duplicate edges are deduplicated silently; self-loops and out-of-range
    endpoints are rejected, naming the index of the offending pair.
    """
    if order < 0:
        raise GraphError(f"order must be non-negative, got {order}")
    adj = [0] * order
    for i, (u, v) in enumerate(edges):
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) at edge index {i}")
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(
                f"endpoint out of range [0, {order}) in edge ({u}, {v}) at index {i}"
            )
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(order, tuple(adj))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.order, tuple((full ^ g.adj[v]) & ~(1 << v) for v in range(g.order)))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all cross edges; g2 vertex ids shift by g1.order."""
    n1, n2 = g1.order, g2.order
    mask2 = ((1 << n2) - 1) << n1
    adj = [g1.adj[v] | mask2 for v in range(n1)]
    mask1 = (1 << n1) - 1
    adj += [(g2.adj[v] << n1) | mask1 for v in range(n2)]
    return Graph(n1 + n2, tuple(adj))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Side-by-side placement, no cross edges; g2 vertex ids shift by g1.order."""
    n1 = g1.order
    adj = list(g1.adj) + [g2.adj[v] << n1 for v in range(g2.order)]
    return Graph(g1.order + g2.order, tuple(adj))


def delete_vertices(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the remaining vertices.

    Returns the subgraph together with the relabeling map old id -> new id;
    kept vertices are relabeled in increasing order.
    """
    s = set(vertices)
    for v in s:
        if not (0 <= v < g.order):
            raise GraphError(f"vertex {v} out of range [0, {g.order})")
    kept = [v for v in range(g.order) if v not in s]
    relabel = {old: new for new, old in enumerate(kept)}
    adj = []
    for old in kept:
        m = 0
        for w in _bits(g.adj[old]):
            if w not in s:
                m |= 1 << relabel[w]
        adj.append(m)
    return Graph(len(kept), tuple(adj)), relabel


def induced_subgraph(g: Graph, mask: int) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the vertices of a bitmask, with the relabeling map."""
    kept = list(_bits(mask))
    relabel = {old: new for new, old in enumerate(kept)}
    adj = []
    for old in kept:
        m = 0
        sub = g.adj[old] & mask
        for w in _bits(sub):
            m |= 1 << relabel[w]
        adj.append(m)
    return Graph(len(kept), tuple(adj)), relabel


def component_masks(g: Graph, mask: int | None = None) -> list[int]:
    """Connected components of the subgraph induced by mask, as bitmasks.

    Components are listed in increasing order of their smallest vertex.
    """
    remaining = g.full_mask if mask is None else mask
    adj = g.adj
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            nxt &= remaining & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        remaining &= ~comp
    return comps


def odd_component_count(g: Graph, mask: int) -> int:
    """Number of odd components of the subgraph induced by mask (cached).

    Strips one component at a time and caches every suffix mask, so subset
    sweeps pay one component search per distinct mask overall.
    """
    cache = g._oc_cache
    if cache is None:
        cache = {}
        g._set_cache("_oc_cache", cache)
    adj = g._adj
    chain = []
    m = mask
    while True:
        base = cache.get(m)
        if base is not None:
            break
        if m == 0:
            base = 0
            break
        comp = m & -m
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & m & ~comp
            comp |= frontier
        chain.append((m, comp.bit_count() & 1))
        m &= ~comp
    for suffix, parity in reversed(chain):
        base += parity
        cache[suffix] = base
    return base


def is_bipartite_mask(g: Graph, mask: int) -> bool:
    """2-colorability of the subgraph induced by mask."""
    color = {}
    adj = g.adj
    for start in _bits(mask):
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in _bits(adj[v] & mask):
                if w not in color:
                    color[w] = color[v] ^ 1
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


@dataclass(frozen=True)
class StructureMetrics:
    connected: bool
    bipartite: bool
    min_degree: int
    components: tuple[frozenset[int], ...]
    odd_component_count: int


def structure_metrics(g: Graph) -> StructureMetrics:
    """Connectivity, bipartiteness, minimum degree and component structure.

    Degenerate conventions: the empty graph has min_degree 0, and graphs on
    at most one vertex count as connected.
    """
    if g._metrics is not None:
        return g._metrics
    comps = component_masks(g)
    metrics = StructureMetrics(
        connected=len(comps) <= 1,
        bipartite=is_bipartite_mask(g, g.full_mask),
        min_degree=min((m.bit_count() for m in g.adj), default=0),
        components=tuple(frozenset(_bits(c)) for c in comps),
        odd_component_count=sum(c.bit_count() & 1 for c in comps),
    )
    g._set_cache("_metrics", metrics)
    return metrics


def is_connected(g: Graph) -> bool:
    return structure_metrics(g).connected


def cross_edge_count(g: Graph, xs: Iterable[int], ys: Iterable[int]) -> int:
    """Number of edges with one endpoint in xs and the other in ys."""
    xmask = mask_of(xs)
    ymask = mask_of(ys)
    if xmask & ymask:
        raise GraphError("vertex sets overlap")
    if (xmask | ymask) & ~g.full_mask:
        raise GraphError(f"vertex out of range [0, {g.order})")
    return sum((g.adj[v] & ymask).bit_count() for v in _bits(xmask))


def parse_edge_list(text: str) -> Graph:
    """Parse the plain text fixture format: "order size" then one "u v" line
    per edge. Blank lines and whole-line # comments are tolerated."""
    rows = [
        line.split()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise GraphError("empty edge-list text")
    if len(rows[0]) != 2:
        raise GraphError("edge-list header must be 'order size'")
    try:
        order, size = int(rows[0][0]), int(rows[0][1])
        edges = [(int(u), int(v)) for u, v in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"edge-list is not whitespace-separated integers: {exc}")
    if len(edges) != size:
        raise GraphError(f"header promises {size} edges, found {len(edges)}")
    return build_graph(order, edges)


def emit_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.order} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"
