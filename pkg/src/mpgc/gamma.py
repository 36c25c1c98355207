"""The six-part bipartite family Gamma(m, n, k, l, x, y).

Parts and their labels::

    e  (x vertices, green)   joined to c and a
    f  (y vertices, green)   joined to b and d
    c  (k vertices, red)     joined to e and d
    a  (n vertices, blue)    joined to e and b
    b  (m vertices, red)     joined to f and a
    d  (l vertices, blue)    joined to f and c

Every listed pair of parts is completely joined; there are no other edges.
With one vertex per part this is the hexagon a-e-c-d-f-b-a.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpgc.coloring import BLUE, GREEN, RED, VertexColoring, validate
from mpgc.errors import CapabilityError, GraphInputError
from mpgc.graph import Edge, Graph, _bits, cycles_through_edge, from_edges, is_bipartite
from mpgc.mpg import check_mpg, check_mpgc

# vertex numbering order of the parts
PART_ORDER = ("b", "a", "c", "d", "e", "f")
PART_COLOR = {"a": BLUE, "d": BLUE, "b": RED, "c": RED, "e": GREEN, "f": GREEN}
PART_EDGES = (("e", "c"), ("e", "a"), ("f", "b"), ("f", "d"), ("c", "d"), ("a", "b"))
# The two sides of the bipartition: c, a, f on one side; b, d, e on the other.
SIDE_ONE = ("c", "a", "f")
SIDE_TWO = ("b", "d", "e")

MAX_EMBED_ORDER = 24


@dataclass(frozen=True)
class GammaParams:
    m: int
    n: int
    k: int
    l: int  # noqa: E741
    x: int
    y: int

    def __post_init__(self) -> None:
        for name in ("m", "n", "x", "y"):
            val = getattr(self, name)
            if not isinstance(val, int) or val < 1:
                raise GraphInputError(f"{name} must be a positive integer, got {val!r}")
        for name in ("k", "l"):
            val = getattr(self, name)
            if not isinstance(val, int) or val < 0:
                raise GraphInputError(f"{name} must be a non-negative integer, got {val!r}")

    @classmethod
    def parse(cls, text: str) -> GammaParams:
        """Parse ``"m,n,k,l,x,y"``."""
        try:
            values = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise GraphInputError(f"parameters must be six integers, got {text!r}") from None
        if len(values) != 6:
            raise GraphInputError(f"expected six parameters m,n,k,l,x,y, got {len(values)}")
        return cls(*values)

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.m, self.n, self.k, self.l, self.x, self.y)

    def part_sizes(self) -> dict[str, int]:
        return {"a": self.n, "b": self.m, "c": self.k, "d": self.l, "e": self.x, "f": self.y}


@dataclass(frozen=True)
class GammaGraph:
    params: GammaParams
    graph: Graph
    parts: dict[str, tuple[int, ...]]
    coloring: VertexColoring

    def labels(self) -> list[str]:
        out = [""] * self.graph.order
        for name, vs in self.parts.items():
            for i, v in enumerate(vs, start=1):
                out[v] = f"{name}_{i}"
        return out

    def part_of(self) -> list[str]:
        out = [""] * self.graph.order
        for name, vs in self.parts.items():
            for v in vs:
                out[v] = name
        return out


def _expected_edges(parts: dict[str, tuple[int, ...]]) -> set[Edge]:
    return {tuple(sorted((u, v))) for p, q in PART_EDGES for u in parts[p] for v in parts[q]}


def build_gamma(p: GammaParams) -> GammaGraph:
    sizes = p.part_sizes()
    parts: dict[str, tuple[int, ...]] = {}
    nxt = 0
    for name in PART_ORDER:
        parts[name] = tuple(range(nxt, nxt + sizes[name]))
        nxt += sizes[name]
    graph = from_edges(nxt, sorted(_expected_edges(parts)))
    coloring = [0] * nxt
    for name, vs in parts.items():
        for v in vs:
            coloring[v] = PART_COLOR[name]
    return GammaGraph(p, graph, parts, tuple(coloring))


def gamma_counts(p: GammaParams) -> tuple[int, int]:
    """(vertex count, edge count) of Gamma(p) in closed form."""
    vertices = p.m + p.n + p.k + p.l + p.x + p.y
    edges = p.x * (p.k + p.n) + p.y * (p.m + p.l) + p.k * p.l + p.m * p.n
    return vertices, edges


@dataclass
class GammaReport:
    params: tuple[int, ...]
    vertices: int
    edges: int
    counts_match: bool
    bipartite: bool
    partition_ok: bool
    coloring_proper: bool
    edges_match: bool
    is_mpgc: bool
    is_mpg: bool

    @property
    def ok(self) -> bool:
        return (
            self.counts_match
            and self.bipartite
            and self.partition_ok
            and self.coloring_proper
            and self.edges_match
            and not self.is_mpgc
            and not self.is_mpg
        )

    def to_dict(self) -> dict:
        return {
            "params": list(self.params),
            "vertices": self.vertices,
            "edges": self.edges,
            "counts_match": self.counts_match,
            "bipartite": self.bipartite,
            "partition_ok": self.partition_ok,
            "coloring_proper": self.coloring_proper,
            "edges_match": self.edges_match,
            "is_mpgc": self.is_mpgc,
            "is_mpg": self.is_mpg,
            "ok": self.ok,
        }


def _check_parts(gg: GammaGraph) -> None:
    sizes = gg.params.part_sizes()
    if set(gg.parts) != set(PART_ORDER):
        raise GraphInputError("Gamma graph must have parts a, b, c, d, e, f")
    seen: set[int] = set()
    for name, vs in gg.parts.items():
        if len(vs) != sizes[name]:
            raise GraphInputError(f"part {name} has {len(vs)} vertices, expected {sizes[name]}")
        if seen & set(vs):
            raise GraphInputError("Gamma parts overlap")
        seen |= set(vs)
    if seen != set(range(gg.graph.order)):
        raise GraphInputError("Gamma parts do not cover the vertex set")
    if len(gg.coloring) != gg.graph.order:
        raise GraphInputError("Gamma colouring does not cover every vertex")


def verify_gamma(gg: GammaGraph) -> GammaReport:
    """Re-derive every structural claim about a built Gamma graph."""
    _check_parts(gg)
    g = gg.graph
    side_one = {v for name in SIDE_ONE for v in gg.parts[name]}
    partition_ok = all((u in side_one) != (v in side_one) for u, v in g.edges())
    return GammaReport(
        params=gg.params.as_tuple(),
        vertices=g.order,
        edges=g.num_edges,
        counts_match=gamma_counts(gg.params) == (g.order, g.num_edges),
        bipartite=is_bipartite(g) is not None,
        partition_ok=partition_ok,
        coloring_proper=validate(g, gg.coloring),
        edges_match=set(g.edges()) == _expected_edges(gg.parts),
        is_mpgc=check_mpgc(g).is_mpgc,
        is_mpg=check_mpg(g).is_mpgc,
    )


def _search_order(pattern: Graph) -> list[int]:
    # BFS from vertex 0, neighbours ascending: every vertex after the first
    # has a placed neighbour, and twins within a part come out in index order.
    order = [0]
    seen = 1
    i = 0
    while i < len(order):
        for w in _bits(pattern.rows[order[i]] & ~seen):
            seen |= 1 << w
            order.append(w)
        i += 1
    return order


def embed_gamma(h: Graph, p: GammaParams) -> dict[int, int] | None:
    """First subgraph embedding of Gamma(p) into ``h``, as pattern vertex -> host vertex.

    Not necessarily induced.  Candidates must have at least the pattern
    vertex's degree and be adjacent to the images of all placed neighbours.
    Vertices of one part are interchangeable, so their images are forced to
    increase, which removes the within-part symmetry from the search.
    """
    gg = build_gamma(p)
    pattern = gg.graph
    if pattern.order > MAX_EMBED_ORDER:
        raise CapabilityError(f"embed_gamma supports Gamma graphs up to {MAX_EMBED_ORDER} vertices")
    if pattern.order > h.order:
        return None
    part = gg.part_of()
    order = _search_order(pattern)
    pdeg = pattern.degrees()
    hdeg = h.degrees()
    prev_in_part: dict[int, int | None] = {}
    last: dict[str, int] = {}
    for v in sorted(order):
        prev_in_part[v] = last.get(part[v])
        last[part[v]] = v
    image: dict[int, int] = {}
    all_host = (1 << h.order) - 1

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        cand = all_host & ~used
        for w in _bits(pattern.rows[v]):
            if w in image:
                cand &= h.rows[image[w]]
        floor = prev_in_part[v]
        if floor is not None:
            cand = cand >> (image[floor] + 1) << (image[floor] + 1)
        for t in _bits(cand):
            if hdeg[t] < pdeg[v]:
                continue
            image[v] = t
            if place(i + 1, used | 1 << t):
                return True
            del image[v]
        return False

    if place(0, 0):
        return dict(sorted(image.items()))
    return None


@dataclass
class GammaCoverReport:
    edges: list[tuple[Edge, Edge, tuple[int, ...] | None]]  # (pattern edge, host edge, witness)
    violations: list[Edge]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "edges": [
                {"pattern": list(pe), "host": list(he), "five_cycle": list(w) if w else None}
                for pe, he, w in self.edges
            ],
            "violations": [list(e) for e in self.violations],
            "ok": self.ok,
        }


def check_gamma_cover(h: Graph, gg: GammaGraph, emb: dict[int, int]) -> GammaCoverReport:
    """A 5-cycle of ``h`` through every embedded Gamma edge."""
    pattern = gg.graph
    if sorted(emb) != list(range(pattern.order)):
        raise GraphInputError("embedding must map every Gamma vertex")
    targets = list(emb.values())
    if len(set(targets)) != len(targets) or any(not 0 <= t < h.order for t in targets):
        raise GraphInputError("embedding must be injective into the host graph")
    rows: list[tuple[Edge, Edge, tuple[int, ...] | None]] = []
    violations: list[Edge] = []
    for u, v in pattern.edges():
        he = tuple(sorted((emb[u], emb[v])))
        if not h.has_edge(*he):
            raise GraphInputError(f"Gamma edge ({u}, {v}) maps to non-edge {he}")
        rows.append(((u, v), he, None))
    for i, (pe, he, _) in enumerate(rows):
        found = cycles_through_edge(h, he, 5, first=True)
        rows[i] = (pe, he, found[0] if found else None)
        if not found:
            violations.append(he)
    return GammaCoverReport(rows, violations)
