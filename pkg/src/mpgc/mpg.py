"""Membership tests for minimal prime graph complements and the theorem checks built on them.

Throughout, ``h`` is a candidate MPGC (the complement of a candidate MPG).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from mpgc.coloring import VertexColoring, color_counts_on, three_color, validate
from mpgc.errors import GraphInputError, PreconditionError, TheoremCheckFailure
from mpgc.graph import (
    CycleWitness,
    Edge,
    Graph,
    _bits,
    complement,
    components,
    cycles_through_edge,
    diameter,
    has_induced_c5,
    is_connected,
    min_degree,
    triangle_witness,
)


@dataclass
class MpgcReport:
    """Per-condition verdicts for a candidate MPGC.

    ``role`` is ``"mpgc"`` when the input itself was checked and ``"mpg"``
    when the input's complement was (see :func:`check_mpg`); the condition
    fields always describe the complement-side graph ``h``.
    """

    order: int
    complement_connected: bool
    triangle_free: bool
    triangle: tuple[int, int, int] | None
    three_colorable: bool
    coloring: VertexColoring | None
    maximal: bool
    violating_pair: Edge | None
    connected: bool
    role: str = "mpgc"

    @property
    def is_mpgc(self) -> bool:
        return self.complement_connected and self.triangle_free and self.three_colorable and self.maximal

    def to_dict(self) -> dict:
        return {
            "role": self.role,
            "order": self.order,
            "is_mpgc": self.is_mpgc,
            "complement_connected": self.complement_connected,
            "triangle_free": self.triangle_free,
            "triangle": list(self.triangle) if self.triangle else None,
            "three_colorable": self.three_colorable,
            "coloring": list(self.coloring) if self.coloring is not None else None,
            "maximal": self.maximal,
            "violating_pair": list(self.violating_pair) if self.violating_pair else None,
            "connected": self.connected,
        }


def _maximality_violation(h: Graph, coloring: VertexColoring) -> Edge | None:
    # First non-edge (lexicographic) whose addition keeps h triangle-free and
    # 3-colourable.  A common neighbour means a triangle; a pair already
    # coloured differently can be joined without recolouring; only
    # same-coloured pairs need the solver.
    rows = h.rows
    for u, v in h.non_edges():
        if rows[u] & rows[v]:
            continue
        if coloring[u] != coloring[v]:
            return (u, v)
        if three_color(h.add_edge(u, v)) is not None:
            return (u, v)
    return None


def check_mpgc(h: Graph) -> MpgcReport:
    if h.order < 2:
        raise GraphInputError("an MPG has at least 2 vertices")
    tri = triangle_witness(h)
    coloring = three_color(h)
    violating = None
    # Adding edges never removes a triangle or restores colourability, so
    # maximality is only in question for triangle-free 3-colourable h.
    if tri is None and coloring is not None:
        violating = _maximality_violation(h, coloring)
    return MpgcReport(
        order=h.order,
        complement_connected=is_connected(complement(h)),
        triangle_free=tri is None,
        triangle=tri,
        three_colorable=coloring is not None,
        coloring=coloring,
        maximal=violating is None,
        violating_pair=violating,
        connected=is_connected(h),
    )


def check_mpg(g: Graph) -> MpgcReport:
    """Decide whether ``g`` is an MPG by checking its complement as an MPGC."""
    report = check_mpgc(complement(g))
    report.role = "mpg"
    return report


def is_mpgc(h: Graph) -> bool:
    return h.order >= 2 and check_mpgc(h).is_mpgc


def find_blocker(h: Graph, c: VertexColoring, u: int, v: int) -> int:
    """Smallest common neighbour of the differently coloured non-adjacent pair ``u``, ``v``.

    In an MPGC such a vertex must exist: joining ``u`` and ``v`` cannot break
    the colouring ``c``, so maximality forces a triangle.
    """
    if not validate(h, c):
        raise GraphInputError("colouring is not proper")
    for w in (u, v):
        if not 0 <= w < h.order:
            raise GraphInputError(f"vertex {w} out of range")
    if u == v or h.has_edge(u, v):
        raise GraphInputError(f"({u}, {v}) is not a non-edge")
    if c[u] == c[v]:
        raise PreconditionError(f"vertices {u} and {v} share colour {c[u]}; no blocker is guaranteed")
    common = h.rows[u] & h.rows[v]
    if not common:
        raise TheoremCheckFailure(f"no vertex blocks the non-edge ({u}, {v})")
    return (common & -common).bit_length() - 1


@dataclass
class CycleCover:
    covered: dict[Edge, CycleWitness]
    uncovered: list[Edge]
    all_witnesses: dict[Edge, list[CycleWitness]] | None = None

    @property
    def complete(self) -> bool:
        return not self.uncovered


def five_cycle_cover(h: Graph, all_witnesses: bool = False) -> CycleCover:
    """One 5-cycle per edge where possible; edges with none go to ``uncovered``."""
    covered: dict[Edge, CycleWitness] = {}
    uncovered: list[Edge] = []
    every: dict[Edge, list[CycleWitness]] | None = {} if all_witnesses else None
    for e in h.edges():
        found = cycles_through_edge(h, e, 5, first=not all_witnesses)
        if every is not None:
            every[e] = found
        if found:
            covered[e] = found[0]
        else:
            uncovered.append(e)
    return CycleCover(covered, uncovered, every)


@dataclass
class StructureReport:
    connected: bool
    components: int
    min_degree_ok: bool
    min_degree: int
    diameter_ok: bool
    diameter: int | float
    induced_c5: CycleWitness | None

    @property
    def has_induced_c5(self) -> bool:
        return self.induced_c5 is not None

    @property
    def ok(self) -> bool:
        return self.connected and self.min_degree_ok and self.diameter_ok and self.has_induced_c5

    def failures(self) -> list[str]:
        names = []
        if not self.connected:
            names.append("connected")
        if not self.min_degree_ok:
            names.append("min_degree")
        if not self.diameter_ok:
            names.append("diameter")
        if not self.has_induced_c5:
            names.append("induced_c5")
        return names

    def to_dict(self) -> dict:
        diam = self.diameter if self.diameter != float("inf") else "infinite"
        return {
            "connected": self.connected,
            "components": self.components,
            "min_degree_ok": self.min_degree_ok,
            "min_degree": self.min_degree,
            "diameter_ok": self.diameter_ok,
            "diameter": diam,
            "has_induced_c5": self.has_induced_c5,
            "induced_c5": list(self.induced_c5) if self.induced_c5 else None,
        }


def check_structure(h: Graph) -> StructureReport:
    """Connectivity, minimum degree >= 2, diameter in {2, 3} and an induced C5."""
    comps = components(h)
    mindeg = min_degree(h)
    diam = diameter(h)
    return StructureReport(
        connected=len(comps) == 1,
        components=len(comps),
        min_degree_ok=mindeg >= 2,
        min_degree=mindeg,
        diameter_ok=diam in (2, 3),
        diameter=diam,
        induced_c5=has_induced_c5(h),
    )


def simple_cycles(h: Graph, k: int) -> list[CycleWitness]:
    """Every simple ``k``-cycle once, up to rotation and reflection.

    Each cycle is listed from its smallest vertex, with the smaller of that
    vertex's two cycle neighbours second.
    """
    rows = h.rows
    out: list[CycleWitness] = []
    for s in range(h.order):
        allowed = ((1 << h.order) - 1) >> (s + 1) << (s + 1)
        path = [s]

        def extend(last: int, used: int) -> None:
            if len(path) == k:
                if rows[last] >> s & 1 and path[1] < path[-1]:
                    out.append(tuple(path))
                return
            for w in _bits(rows[last] & allowed & ~used):
                path.append(w)
                extend(w, used | 1 << w)
                path.pop()

        extend(s, 1 << s)
    return out


@dataclass
class CycleLemmaReport:
    k: int
    cycles: int
    violations: list[dict] = field(default_factory=list)
    coloring: VertexColoring | None = None
    # k == 7 only: (cycle, whether every colour occurs at least twice on it)
    precondition_tags: list[tuple[CycleWitness, bool]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        out = {
            "k": self.k,
            "cycles": self.cycles,
            "violations": self.violations,
            "ok": self.ok,
        }
        if self.k == 7:
            out["coloring"] = list(self.coloring) if self.coloring is not None else None
            out["each_color_twice"] = sum(1 for _, held in self.precondition_tags if held)
            out["precondition_failed"] = sum(1 for _, held in self.precondition_tags if not held)
        return out


def check_cycle_lemma(h: Graph, k: int, coloring: VertexColoring | None = None) -> CycleLemmaReport:
    """Check that every edge of every ``k``-cycle of ``h`` lies on some 5-cycle.

    For ``k == 7`` each cycle is also tagged with whether all three colours
    appear at least twice on it under ``coloring`` (default: ``three_color(h)``).
    """
    if k not in (4, 6, 7):
        raise GraphInputError("cycle lemma length must be 4, 6 or 7")
    cycles = simple_cycles(h, k)
    report = CycleLemmaReport(k=k, cycles=len(cycles))
    if k == 7:
        report.coloring = coloring if coloring is not None else three_color(h)
    on_pentagon: dict[Edge, bool] = {}
    for cyc in cycles:
        for i in range(k):
            e = tuple(sorted((cyc[i], cyc[(i + 1) % k])))
            if e not in on_pentagon:
                on_pentagon[e] = bool(cycles_through_edge(h, e, 5, first=True))
            if not on_pentagon[e]:
                report.violations.append({"cycle": list(cyc), "edge": list(e)})
        if k == 7 and report.coloring is not None:
            counts = color_counts_on(report.coloring, cyc)
            report.precondition_tags.append((cyc, min(counts) >= 2))
    return report


def duplicate_vertex(h: Graph, v: int) -> Graph:
    """Add a non-adjacent twin of ``v`` as the new last vertex."""
    if not 0 <= v < h.order:
        raise GraphInputError(f"vertex {v} out of range for order {h.order}")
    n = h.order
    rows = list(h.rows) + [h.rows[v]]
    for w in _bits(h.rows[v]):
        rows[w] |= 1 << n
    return Graph._trusted(n + 1, rows)


def mpg_uncovered_edges(h: Graph) -> list[Edge]:
    """Edges of the MPG ``complement(h)`` lying on no 5-cycle of that MPG."""
    return five_cycle_cover(complement(h)).uncovered

