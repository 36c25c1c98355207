"""Exact 3-colouring and colouring manipulation.

A colouring is a tuple with one entry per vertex, each in ``{0, 1, 2}``
(read as red, green, blue).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from mpgc.errors import GraphInputError
from mpgc.graph import Graph

VertexColoring = tuple[int, ...]

COLOR_NAMES = ("red", "green", "blue")
RED, GREEN, BLUE = 0, 1, 2


def three_color(g: Graph) -> VertexColoring | None:
    """A proper 3-colouring of ``g``, or None if none exists.

    DSATUR backtracking: always branch on the uncoloured vertex with the most
    distinct neighbour colours (ties: higher degree, then lower index).  A
    vertex may only open color ``max_used + 1``, which removes the 3! colour
    permutations from the search.
    """
    n = g.order
    rows = g.rows
    degree = g.degrees()
    colors = [-1] * n
    classes = [0, 0, 0]  # vertex bitmask per colour

    def forbidden(v: int) -> int:
        return (
            (1 if rows[v] & classes[0] else 0)
            | (2 if rows[v] & classes[1] else 0)
            | (4 if rows[v] & classes[2] else 0)
        )

    def solve(done: int, max_used: int) -> bool:
        if done == n:
            return True
        best_v, best_key, best_forb = -1, None, 0
        for v in range(n):
            if colors[v] >= 0:
                continue
            forb = forbidden(v)
            key = (forb.bit_count(), degree[v])
            if best_key is None or key > best_key:
                best_v, best_key, best_forb = v, key, forb
        if best_forb == 7:
            return False
        v = best_v
        for c in range(min(3, max_used + 2)):
            if best_forb >> c & 1:
                continue
            colors[v] = c
            classes[c] |= 1 << v
            if solve(done + 1, max(max_used, c)):
                return True
            classes[c] &= ~(1 << v)
            colors[v] = -1
        return False

    if solve(0, -1):
        return tuple(colors)
    return None


def is_three_colorable(g: Graph) -> bool:
    return three_color(g) is not None


def _check_total(g: Graph, c: Sequence[int]) -> None:
    if len(c) != g.order:
        raise GraphInputError(f"colouring has {len(c)} entries for {g.order} vertices")
    bad = [v for v, col in enumerate(c) if col not in (0, 1, 2)]
    if bad:
        raise GraphInputError(f"vertices {bad} have no colour in {{0, 1, 2}}")


def validate(g: Graph, c: Sequence[int]) -> bool:
    """True iff ``c`` is a proper colouring of ``g``."""
    _check_total(g, c)
    return all(c[u] != c[v] for u, v in g.edges())


def rotate_component_colors(g: Graph, c: Sequence[int], component: Iterable[int], shift: int) -> VertexColoring:
    """Advance every colour inside ``component`` by ``shift`` (mod 3).

    ``component`` must be a union of connected components of ``g``: no edge may
    leave it, otherwise the rotation could create a monochromatic edge.
    """
    if shift not in (1, 2):
        raise GraphInputError("shift must be 1 or 2")
    if not validate(g, c):
        raise GraphInputError("colouring is not proper")
    part = set(component)
    if any(not 0 <= v < g.order for v in part):
        raise GraphInputError("component contains a vertex outside the graph")
    mask = sum(1 << v for v in part)
    for v in part:
        if g.rows[v] & ~mask:
            raise GraphInputError(f"vertex {v} has a neighbour outside the given component set")
    return tuple((col + shift) % 3 if v in part else col for v, col in enumerate(c))


def color_counts_on(c: Sequence[int], vs: Iterable[int]) -> tuple[int, int, int]:
    """Occurrences of (red, green, blue) among the vertices ``vs``."""
    counts = [0, 0, 0]
    for v in vs:
        counts[c[v]] += 1
    return counts[0], counts[1], counts[2]
