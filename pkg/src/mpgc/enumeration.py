"""Isomorphism-free enumeration of triangle-free graphs and MPGCs, and the theorem sweep."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from mpgc.coloring import three_color
from mpgc.errors import CapabilityError, GraphInputError, PreconditionError, TheoremCheckFailure
from mpgc.formats import encode_graph6
from mpgc.graph import CanonicalForm, Graph, _bits, canonical_form, is_connected
from mpgc.mpg import (
    check_cycle_lemma,
    check_mpgc,
    check_structure,
    duplicate_vertex,
    find_blocker,
    five_cycle_cover,
)

log = logging.getLogger(__name__)

MAX_ENUM_ORDER = 10
DUPLICATION_MAX_ORDER = 7
CHECK_NAMES = (
    "five_cycle_cover",
    "structure",
    "cycle_lemma_4",
    "cycle_lemma_6",
    "cycle_lemma_7",
    "blocker",
    "duplication",
    "soundness",
)


def _check_bound(max_order: int) -> None:
    if max_order < 1:
        raise GraphInputError("max_order must be at least 1")
    if max_order > MAX_ENUM_ORDER:
        raise CapabilityError(f"enumeration supports max_order <= {MAX_ENUM_ORDER}, got {max_order}")


def _independent_sets(g: Graph) -> Iterator[int]:
    """Every independent vertex set of ``g`` as a bitmask, the empty set included."""
    rows = g.rows

    def grow(start: int, chosen: int, blocked: int) -> Iterator[int]:
        yield chosen
        for v in range(start, g.order):
            if not blocked >> v & 1:
                yield from grow(v + 1, chosen | 1 << v, blocked | rows[v])

    yield from grow(0, 0, 0)


def _children(args: tuple[int, int, bool]) -> set[int]:
    # Canonical bit codes of all one-vertex extensions of a parent.  A new
    # vertex joined to an independent set keeps the graph triangle-free.
    order, bits, connected = args
    parent = CanonicalForm(order, bits).to_graph()
    n = order
    out = set()
    for nbrs in _independent_sets(parent):
        if connected and not nbrs:
            continue
        rows = list(parent.rows)
        for w in _bits(nbrs):
            rows[w] |= 1 << n
        rows.append(nbrs)
        out.add(canonical_form(Graph._trusted(n + 1, rows)).bits)
    return out


def triangle_free_levels(max_order: int, connected: bool = False, jobs: int = 1) -> Iterator[tuple[int, list[Graph]]]:
    """Yield ``(order, graphs)`` for orders 1..max_order.

    Each level is every triangle-free graph of that order up to isomorphism
    (only connected ones if ``connected``), as canonically labeled graphs
    sorted by canonical code.  Every triangle-free graph minus a vertex is
    triangle-free, and every connected graph has a vertex whose removal
    keeps it connected, so augmenting the previous level is complete.
    """
    _check_bound(max_order)
    level = [0]  # K1
    yield 1, [CanonicalForm(1, 0).to_graph()]
    for n in range(1, max_order):
        tasks = [(n, bits, connected) for bits in level]
        found: set[int] = set()
        if jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for part in pool.map(_children, tasks, chunksize=max(1, len(tasks) // (4 * jobs))):
                    found |= part
        else:
            for task in tasks:
                found |= _children(task)
        level = sorted(found)
        yield n + 1, [CanonicalForm(n + 1, bits).to_graph() for bits in level]


def enumerate_triangle_free(max_order: int, connected: bool = False, jobs: int = 1) -> Iterator[Graph]:
    """Every triangle-free graph on 1..max_order vertices, once up to isomorphism."""
    for _, graphs in triangle_free_levels(max_order, connected, jobs):
        yield from graphs


def enumerate_mpgc(max_order: int, jobs: int = 1) -> list[Graph]:
    """All MPGCs on at most ``max_order`` vertices, canonically labeled."""
    out = []
    for order, graphs in triangle_free_levels(max_order, connected=True, jobs=jobs):
        if order >= 2:
            out.extend(g for g in graphs if check_mpgc(g).is_mpgc)
    return out


def theorem_violations(h: Graph, duplication_max_order: int = DUPLICATION_MAX_ORDER) -> list[tuple[str, str]]:
    """Run every verified property on one MPGC; return ``(check, detail)`` failures."""
    bad: list[tuple[str, str]] = []
    report = check_mpgc(h)
    if not report.is_mpgc:
        bad.append(("soundness", f"re-check rejected the graph: {report.to_dict()}"))
        return bad
    cover = five_cycle_cover(h)
    if cover.uncovered:
        bad.append(("five_cycle_cover", f"edges without a 5-cycle: {cover.uncovered}"))
    structure = check_structure(h)
    if not structure.ok:
        bad.append(("structure", f"failed: {structure.failures()} ({structure.to_dict()})"))
    coloring = three_color(h)
    for k in (4, 6, 7):
        lemma = check_cycle_lemma(h, k, coloring)
        if not lemma.ok:
            bad.append((f"cycle_lemma_{k}", f"violations: {lemma.violations}"))
    for u, v in h.non_edges():
        if coloring[u] == coloring[v]:
            continue
        try:
            find_blocker(h, coloring, u, v)
        except (TheoremCheckFailure, PreconditionError) as exc:
            bad.append(("blocker", str(exc)))
    if h.order <= duplication_max_order:
        for v in range(h.order):
            if not check_mpgc(duplicate_vertex(h, v)).is_mpgc:
                bad.append(("duplication", f"duplicating vertex {v} leaves the class"))
    return bad


def _verify_task(bits_order: tuple[int, int, int]) -> list[tuple[str, str]]:
    order, bits, dup_max = bits_order
    return theorem_violations(CanonicalForm(order, bits).to_graph(), dup_max)


@dataclass
class OrderStats:
    order: int
    candidates: int  # connected triangle-free graphs of this order
    mpgcs: int
    seconds: float


@dataclass
class EnumerationSummary:
    max_order: int
    orders: list[OrderStats] = field(default_factory=list)
    representatives: list[Graph] = field(default_factory=list)
    violations: dict[str, list[dict]] = field(default_factory=lambda: {name: [] for name in CHECK_NAMES})

    @property
    def total_violations(self) -> int:
        return sum(len(v) for v in self.violations.values())

    @property
    def ok(self) -> bool:
        return self.total_violations == 0

    def mpgcs_by_order(self) -> dict[int, list[str]]:
        out: dict[int, list[str]] = {s.order: [] for s in self.orders}
        for g in self.representatives:
            out[g.order].append(encode_graph6(g))
        return out

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "max_order": self.max_order,
            "orders": [
                {
                    "order": s.order,
                    "triangle_free_connected": s.candidates,
                    "mpgcs": s.mpgcs,
                    "seconds": round(s.seconds, 4) if timing else 0.0,
                }
                for s in self.orders
            ],
            "total_mpgcs": len(self.representatives),
            "mpgcs_by_order": {str(k): v for k, v in self.mpgcs_by_order().items()},
            "violations": self.violations,
            "total_violations": self.total_violations,
            "ok": self.ok,
        }


def verify_theorems(
    max_order: int,
    jobs: int = 1,
    duplication_max_order: int = DUPLICATION_MAX_ORDER,
    checks: bool = True,
) -> EnumerationSummary:
    """Enumerate all MPGCs up to ``max_order`` and check every property on each.

    With ``checks=False`` only the enumeration and per-order counts are
    produced.  Violations carry the graph6 string of the offending graph.
    """
    summary = EnumerationSummary(max_order)
    seen: set[CanonicalForm] = set()
    start = time.perf_counter()
    for order, graphs in triangle_free_levels(max_order, connected=True, jobs=jobs):
        found = [g for g in graphs if order >= 2 and is_connected(g) and check_mpgc(g).is_mpgc]
        for g in found:
            cf = canonical_form(g)
            if cf in seen:
                summary.violations["soundness"].append({"graph6": encode_graph6(g), "detail": "duplicate canonical form"})
            seen.add(cf)
        if checks and found:
            tasks = [(g.order, canonical_form(g).bits, duplication_max_order) for g in found]
            if jobs > 1 and len(tasks) > 1:
                with ProcessPoolExecutor(max_workers=jobs) as pool:
                    results = list(pool.map(_verify_task, tasks))
            else:
                results = [_verify_task(t) for t in tasks]
            for g, bad in zip(found, results):
                for name, detail in bad:
                    summary.violations[name].append({"graph6": encode_graph6(g), "detail": detail})
        summary.representatives.extend(found)
        now = time.perf_counter()
        summary.orders.append(OrderStats(order, len(graphs), len(found), now - start))
        log.info("order %d: %d connected triangle-free, %d MPGCs", order, len(graphs), len(found))
        start = now
    return summary
