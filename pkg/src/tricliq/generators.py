"""Deterministic generators for the graph families used throughout the package.

All generators emit edges in lexicographic order of the endpoint pair
(u-major, u < v).  That is the numbering the reference tables for these
families use, so edge ids line up with published traces.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, GraphError


def complete(n: int) -> Graph:
    """Complete graph on n >= 1 vertices; C(n,2) edges."""
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Complete multipartite graph with the given part sizes.

    Vertices are numbered consecutively by part; every cross-part pair is
    an edge and no same-part pair is.
    """
    if len(parts) < 2:
        raise GraphError("complete multipartite graph needs at least 2 parts")
    if any(s < 1 for s in parts):
        raise GraphError("every part must have size >= 1")
    part_of = {}
    v = 1
    for idx, size in enumerate(parts):
        for _ in range(size):
            part_of[v] = idx
            v += 1
    n = v - 1
    pairs = [
        (u, w)
        for u in range(1, n + 1)
        for w in range(u + 1, n + 1)
        if part_of[u] != part_of[w]
    ]
    return Graph(n, pairs)


def moon_moser(k: int) -> Graph:
    """Moon-Moser graph with k triads: 3k vertices, n(n-3)/2 edges.

    Triad i is {3i-2, 3i-1, 3i}; triads are independent sets and every
    cross-triad pair is an edge.  The graph has exactly 3**k maximal
    cliques, each of size k, which is what makes the family the standard
    worst case for clique enumeration.
    """
    if k < 1:
        raise GraphError(f"moon_moser needs k >= 1, got {k}")
    n = 3 * k
    pairs = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if (u - 1) // 3 != (v - 1) // 3
    ]
    return Graph(n, pairs)
