"""Immutable undirected simple graphs with 1-based vertex and edge labels.

Edge ``j`` is the j-th pair given at construction time.  All algorithms in
this package report vertices and edges by these labels, so graphs built from
published tables keep the table's numbering.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class GraphError(ValueError):
    """Base class for invalid graph data or arguments."""


class VertexRangeError(GraphError):
    """A vertex label falls outside 1..n."""


class SelfLoopError(GraphError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(GraphError):
    """The same unordered pair appears twice in an edge list."""


class EmptyVertexSetError(GraphError):
    """An operation that needs at least one vertex received none."""


def ring_sum(sets: Iterable[Iterable[int]]) -> frozenset[int]:
    """Symmetric difference (GF(2) sum) of a sequence of index sets."""
    acc: frozenset[int] = frozenset()
    for s in sets:
        acc = acc ^ frozenset(s)
    return acc


class Graph:
    """Undirected simple graph on vertices ``1..n``.

    Immutable after construction.  ``edges[j-1]`` holds the endpoints of
    edge ``j`` as an ordered pair ``(u, v)`` with ``u < v``.
    """

    __slots__ = ("n", "m", "edges", "_eid", "_adj", "_adj_mask", "_incident")

    def __init__(self, n: int, pairs: Iterable[tuple[int, int]]):
        if n < 1:
            raise VertexRangeError(f"vertex count must be positive, got {n}")
        edges: list[tuple[int, int]] = []
        eid: dict[tuple[int, int], int] = {}
        adj: list[set[int]] = [set() for _ in range(n + 1)]
        incident: list[list[int]] = [[] for _ in range(n + 1)]
        for u, v in pairs:
            if not (1 <= u <= n and 1 <= v <= n):
                raise VertexRangeError(f"edge ({u},{v}) outside 1..{n}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if (u, v) in eid:
                raise DuplicateEdgeError(f"duplicate edge ({u},{v})")
            edges.append((u, v))
            eid[(u, v)] = len(edges)
            adj[u].add(v)
            adj[v].add(u)
            incident[u].append(len(edges))
            incident[v].append(len(edges))

        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", len(edges))
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "_eid", eid)
        object.__setattr__(self, "_adj", tuple(frozenset(s) for s in adj))
        masks = [0] * (n + 1)
        for v in range(1, n + 1):
            for u in adj[v]:
                masks[v] |= 1 << u
        object.__setattr__(self, "_adj_mask", tuple(masks))
        object.__setattr__(self, "_incident", tuple(tuple(l) for l in incident))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edge_list(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, pairs)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    # -- views ------------------------------------------------------------

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._eid

    def edge_id(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        try:
            return self._eid[(u, v)]
        except KeyError:
            raise GraphError(f"({u},{v}) is not an edge") from None

    def endpoints(self, e: int) -> tuple[int, int]:
        self._check_edge(e)
        return self.edges[e - 1]

    def incident_edges(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._incident[v]

    def adjacency_mask(self, v: int) -> int:
        """Neighbor set of ``v`` as an int bitmask (bit ``u`` set iff u~v)."""
        self._check_vertex(v)
        return self._adj_mask[v]

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise VertexRangeError(f"vertex {v} outside 1..{self.n}")

    def _check_edge(self, e: int) -> None:
        if not 1 <= e <= self.m:
            raise GraphError(f"edge id {e} outside 1..{self.m}")

    # -- derived graphs ---------------------------------------------------

    def complement(self) -> "Graph":
        """Graph on the same vertices whose edges are exactly the missing pairs."""
        pairs = [
            (u, v)
            for u in range(1, self.n + 1)
            for v in range(u + 1, self.n + 1)
            if not self.has_edge(u, v)
        ]
        return Graph(self.n, pairs)

    def induced_subgraph(self, vertices: Iterable[int]) -> "InducedSubgraph":
        """Subgraph on ``vertices`` relabelled 1..k in ascending parent order.

        Raises EmptyVertexSetError on an empty selection.
        """
        vs = sorted(set(vertices))
        if not vs:
            raise EmptyVertexSetError("induced subgraph needs at least one vertex")
        for v in vs:
            self._check_vertex(v)
        sub_of = {p: i + 1 for i, p in enumerate(vs)}
        pairs = []
        parent_edges = []
        for i, u in enumerate(vs):
            for v in vs[i + 1:]:
                if self.has_edge(u, v):
                    pairs.append((sub_of[u], sub_of[v]))
                    parent_edges.append(self.edge_id(u, v))
        return InducedSubgraph(
            graph=Graph(len(vs), pairs),
            parent_vertices=tuple(vs),
            sub_vertex_of=sub_of,
            parent_edge_ids=tuple(parent_edges),
        )


@dataclass(frozen=True)
class InducedSubgraph:
    """An induced subgraph plus the index maps back to its parent.

    ``parent_vertices[i-1]`` is the parent label of subgraph vertex ``i``;
    ``parent_edge_ids[j-1]`` the parent label of subgraph edge ``j``.
    """

    graph: Graph
    parent_vertices: tuple[int, ...]
    sub_vertex_of: dict[int, int]
    parent_edge_ids: tuple[int, ...]

    def parent_vertex(self, sub_v: int) -> int:
        return self.parent_vertices[sub_v - 1]

    def parent_edge(self, sub_e: int) -> int:
        return self.parent_edge_ids[sub_e - 1]


@dataclass(frozen=True)
class NonseparabilityReport:
    """Structural flags for the nonseparability precondition.

    The pruning heuristic is specified for connected graphs with no bridge,
    no articulation point, and minimum degree at least three.  The report is
    informational: callers may still run on graphs that fail it.
    """

    connected: bool
    has_bridge: bool
    has_articulation_point: bool
    min_degree: int

    @property
    def min_degree_ok(self) -> bool:
        return self.min_degree >= 3

    @property
    def is_nonseparable(self) -> bool:
        return (
            self.connected
            and not self.has_bridge
            and not self.has_articulation_point
            and self.min_degree_ok
        )


def check_nonseparable(g: Graph) -> NonseparabilityReport:
    """Run connectivity, bridge and articulation-point checks on ``g``."""
    n = g.n
    if n == 1:
        return NonseparabilityReport(True, False, False, 0)

    # iterative DFS lowlink; one outer loop pass per connected component
    disc = [0] * (n + 1)
    low = [0] * (n + 1)
    parent = [0] * (n + 1)
    timer = 1
    has_bridge = False
    has_art = False
    components = 0

    for root in range(1, n + 1):
        if disc[root]:
            continue
        components += 1
        root_children = 0
        stack: list[tuple[int, Iterable[int]]] = [(root, iter(g.neighbors(root)))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if not disc[w]:
                    parent[w] = v
                    if v == root:
                        root_children += 1
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, iter(g.neighbors(w))))
                    advanced = True
                    break
                elif w != parent[v]:
                    low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        has_bridge = True
                    if p != root and low[v] >= disc[p]:
                        has_art = True
        if root_children > 1:
            has_art = True

    connected = components == 1
    min_degree = min(g.degree(v) for v in g.vertices())
    return NonseparabilityReport(connected, has_bridge, has_art, min_degree)


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff every pair of the given vertices is an edge of ``g``."""
    vs = sorted(set(vertices))
    if not vs:
        raise EmptyVertexSetError("clique test needs at least one vertex")
    for v in vs:
        g._check_vertex(v)
    for i, u in enumerate(vs):
        mask = g.adjacency_mask(u)
        for v in vs[i + 1:]:
            if not mask >> v & 1:
                return False
    return True
