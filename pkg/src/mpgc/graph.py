"""Simple undirected graphs stored as per-vertex bit rows, plus structural queries.

Vertices are the integers ``0..order-1``.  Row ``rows[v]`` is an int whose bit
``w`` is set iff ``v`` and ``w`` are adjacent, so common-neighbour and triangle
queries reduce to ``rows[u] & rows[v]``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from mpgc.errors import CapabilityError, GraphInputError

Edge = tuple[int, int]
CycleWitness = tuple[int, ...]

# Largest order accepted by canonical_form.  The search is exact; runtime for
# highly symmetric graphs grows quickly past ~16 vertices.
MAX_CANONICAL_ORDER = 24


def _bits(x: int) -> Iterator[int]:
    """Yield indices of set bits in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Graph:
    order: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 0 or len(self.rows) != self.order:
            raise GraphInputError("row count must equal order")
        full = (1 << self.order) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphInputError(f"vertex {v} has a neighbour outside 0..{self.order - 1}")
            if row >> v & 1:
                raise GraphInputError(f"self-loop at vertex {v}")
            for w in _bits(row):
                if not self.rows[w] >> v & 1:
                    raise GraphInputError(f"adjacency not symmetric at ({v}, {w})")

    @classmethod
    def _trusted(cls, order: int, rows: Sequence[int]) -> Graph:
        # Skips validation; callers guarantee symmetric, loop-free rows.
        g = object.__new__(cls)
        object.__setattr__(g, "order", order)
        object.__setattr__(g, "rows", tuple(rows))
        return g

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.order) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[Edge]:
        return [(u, v) for u, v in combinations(range(self.order), 2) if not self.rows[u] >> v & 1]

    def add_edge(self, u: int, v: int) -> Graph:
        self._check_pair(u, v)
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._trusted(self.order, rows)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.order)):
            raise GraphInputError("relabeling must be a permutation of the vertices")
        rows = [0] * self.order
        for v, row in enumerate(self.rows):
            rows[perm[v]] = sum(1 << perm[w] for w in _bits(row))
        return Graph._trusted(self.order, rows)

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph; ``vertices[i]`` becomes vertex ``i``."""
        pos = {v: i for i, v in enumerate(vertices)}
        rows = [sum(1 << pos[w] for w in _bits(self.rows[v]) if w in pos) for v in vertices]
        return Graph._trusted(len(vertices), rows)

    def _check_pair(self, u: int, v: int) -> None:
        for w in (u, v):
            if not 0 <= w < self.order:
                raise GraphInputError(f"vertex {w} out of range for order {self.order}")
        if u == v:
            raise GraphInputError(f"self-loop ({u}, {v})")


def from_edges(order: int, edges: Iterable[Sequence[int]]) -> Graph:
    if order < 0:
        raise GraphInputError("order must be non-negative")
    rows = [0] * order
    for pair in edges:
        u, v = pair
        for w in (u, v):
            if not 0 <= w < order:
                raise GraphInputError(f"endpoint {w} out of range for order {order}")
        if u == v:
            raise GraphInputError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._trusted(order, rows)


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return Graph._trusted(g.order, [full & ~row & ~(1 << v) for v, row in enumerate(g.rows)])


def _require_vertices(g: Graph) -> None:
    if g.order < 1:
        raise GraphInputError("graph must have at least one vertex")


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, listed by smallest vertex."""
    seen = 0
    comps = []
    for s in range(g.order):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(list(_bits(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    _require_vertices(g)
    return len(components(g)) == 1


def bfs_distances(g: Graph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * g.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in _bits(g.rows[v]):
            if dist[w] is None:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def diameter(g: Graph) -> int | float:
    """Largest shortest-path distance; ``math.inf`` when disconnected."""
    _require_vertices(g)
    best = 0
    for s in range(g.order):
        dist = bfs_distances(g, s)
        if None in dist:
            return math.inf
        best = max(best, max(dist))
    return best


def min_degree(g: Graph) -> int:
    _require_vertices(g)
    return min(g.degrees())


def triangle_witness(g: Graph) -> tuple[int, int, int] | None:
    """Lexicographically first triangle, or None."""
    for i in range(g.order):
        for j in _bits(g.rows[i] >> (i + 1) << (i + 1)):
            common = (g.rows[i] & g.rows[j]) >> (j + 1) << (j + 1)
            if common:
                return (i, j, (common & -common).bit_length() - 1)
    return None


def is_triangle_free(g: Graph) -> bool:
    return triangle_witness(g) is None


def is_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    """True iff ``cycle`` lists >= 3 distinct vertices forming a closed walk in ``g``."""
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    if any(not 0 <= v < g.order for v in cycle):
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k))


def cycles_through_edge(g: Graph, e: Sequence[int], k: int, first: bool = False) -> list[CycleWitness]:
    """All simple ``k``-cycles containing edge ``e``.

    Each witness starts with the edge's endpoints ``(min(e), max(e), ...)`` and
    the list is in lexicographic order.  With ``first=True`` only the first
    witness is returned.
    """
    u, v = sorted(e)
    if not (0 <= u and v < g.order) or not g.has_edge(u, v):
        raise GraphInputError(f"{tuple(e)} is not an edge")
    if k < 3:
        raise GraphInputError("cycle length must be at least 3")
    rows = g.rows
    back = bfs_distances(g, u)
    found: list[CycleWitness] = []
    path = [u, v]

    def extend(last: int, used: int) -> bool:
        remaining = k - len(path)
        if remaining == 0:
            if rows[last] >> u & 1:
                found.append(tuple(path))
                return first
            return False
        for w in _bits(rows[last] & ~used):
            # w must still be able to reach u in the remaining steps
            d = back[w]
            if d is None or d > remaining:
                continue
            path.append(w)
            stop = extend(w, used | 1 << w)
            path.pop()
            if stop:
                return True
        return False

    extend(v, 1 << u | 1 << v)
    return found


def has_induced_c5(g: Graph) -> CycleWitness | None:
    """A chordless 5-cycle, in cyclic order from its smallest vertex, or None."""
    for subset in combinations(range(g.order), 5):
        mask = sum(1 << v for v in subset)
        # On five vertices, 2-regular forces a single 5-cycle.
        if all((g.rows[v] & mask).bit_count() == 2 for v in subset):
            start = subset[0]
            cycle = [start]
            prev, cur = start, min(_bits(g.rows[start] & mask))
            while cur != start:
                cycle.append(cur)
                prev, cur = cur, next(w for w in _bits(g.rows[cur] & mask) if w != prev)
            return tuple(cycle)
    return None


def is_bipartite(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Two-sided split with every edge crossing, or None.

    The smallest vertex of each component is placed on the first side.
    """
    side = [-1] * g.order
    for s in range(g.order):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in _bits(g.rows[v]):
                if side[w] < 0:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    return (
        tuple(v for v in range(g.order) if side[v] == 0),
        tuple(v for v in range(g.order) if side[v] == 1),
    )


# ---------------------------------------------------------------------------
# canonical forms


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Order plus the minimal upper-triangle adjacency bit string.

    Bits are read in graph6 order, x(0,1), x(0,2), x(1,2), x(0,3), ..., with
    x(0,1) as the most significant bit of ``bits``.
    """

    order: int
    bits: int

    def to_graph(self) -> Graph:
        n = self.order
        total = n * (n - 1) // 2
        rows = [0] * n
        pos = total - 1
        for j in range(1, n):
            for i in range(j):
                if self.bits >> pos & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                pos -= 1
        return Graph._trusted(n, rows)


def upper_triangle_bits(g: Graph, ordering: Sequence[int] | None = None) -> int:
    """Adjacency bits in graph6 order, with position ``p`` holding vertex ``ordering[p]``."""
    if ordering is None:
        ordering = range(g.order)
    rows = g.rows
    out = 0
    for j in range(1, g.order):
        rj = rows[ordering[j]]
        for i in range(j):
            out = out << 1 | (rj >> ordering[i] & 1)
    return out


def _refine(rows: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    # Split cells by neighbour counts into every cell until stable.  Keys are
    # isomorphism-invariant, so the ordered partition is too.
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                key = tuple((rows[v] & m).bit_count() for m in masks)
                groups.setdefault(key, []).append(v)
            out.extend(groups[key] for key in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def _twins(rows: Sequence[int], v: int, w: int) -> bool:
    return rows[v] & ~(1 << w) == rows[w] & ~(1 << v)


def canonical_labeling(g: Graph) -> list[int]:
    """Vertex ordering whose relabeled adjacency bit string is minimal.

    Individualization/refinement search: refine the ordered partition by
    neighbour counts, individualize each vertex of the first non-singleton
    cell, recurse; every leaf is a vertex ordering and the least encoding
    wins.  Twin vertices in a cell are interchangeable by an automorphism
    fixing the partition, so only one of them is branched on.
    """
    if g.order > MAX_CANONICAL_ORDER:
        raise CapabilityError(f"canonical_form supports order <= {MAX_CANONICAL_ORDER}, got {g.order}")
    if g.order == 0:
        return []
    rows = g.rows
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(rows, cells)
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            ordering = [cell[0] for cell in cells]
            code = upper_triangle_bits(g, ordering)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, ordering
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if any(_twins(rows, v, w) for w in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1 :])

    search([list(range(g.order))])
    return best[1]


def canonical_form(g: Graph) -> CanonicalForm:
    return CanonicalForm(g.order, upper_triangle_bits(g, canonical_labeling(g)))


def canonical_graph(g: Graph) -> Graph:
    """The relabeled copy of ``g`` whose encoding is its canonical form."""
    ordering = canonical_labeling(g)
    perm = [0] * g.order
    for p, v in enumerate(ordering):
        perm[v] = p
    return g.relabel(perm)
