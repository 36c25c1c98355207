"""Named graphs used as fixtures and family experiments."""

from __future__ import annotations

from mpgc.errors import GraphInputError
from mpgc.graph import Graph, from_edges


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError("a cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Graph:
    return from_edges(n, [])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def generalized_petersen(n: int, k: int) -> Graph:
    """P(n, k): outer cycle 0..n-1, spokes i -- n+i, inner chords n+i -- n+(i+k mod n)."""
    if n < 3 or not 1 <= k < n / 2:
        raise GraphInputError(f"P(n, k) needs n >= 3 and 1 <= k < n/2, got n={n}, k={k}")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return from_edges(2 * n, edges)


def petersen_graph() -> Graph:
    return generalized_petersen(5, 2)


def grotzsch_graph() -> Graph:
    """Mycielskian of C5: triangle-free with chromatic number 4."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    for i in range(5):
        # shadow vertex 5+i copies the cycle neighbourhood of i
        edges.append((5 + i, (i + 1) % 5))
        edges.append((5 + i, (i - 1) % 5))
        edges.append((5 + i, 10))
    return from_edges(11, edges)
