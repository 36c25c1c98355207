"""graph6 and DOT serialization.

graph6 support is limited to the single-byte order header (0..62 vertices);
larger orders use a multi-byte header, which is rejected explicitly.
"""

from __future__ import annotations

from typing import Sequence

from mpgc.coloring import COLOR_NAMES, validate
from mpgc.errors import GraphInputError
from mpgc.graph import Graph, upper_triangle_bits

GRAPH6_HEADER = ">>graph6<<"
MAX_GRAPH6_ORDER = 62


def encode_graph6(g: Graph) -> str:
    n = g.order
    if n > MAX_GRAPH6_ORDER:
        raise GraphInputError(f"graph6 multi-byte orders are not supported (order {n} > {MAX_GRAPH6_ORDER})")
    nbits = n * (n - 1) // 2
    pad = -nbits % 6
    bits = upper_triangle_bits(g) << pad
    ngroups = (nbits + pad) // 6
    chars = [chr(n + 63)]
    for i in range(ngroups - 1, -1, -1):
        chars.append(chr((bits >> (6 * i) & 0x3F) + 63))
    return "".join(chars)


def decode_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    if not s:
        raise GraphInputError("empty graph6 string")
    values = [ord(ch) - 63 for ch in s]
    for pos, val in enumerate(values):
        if not 0 <= val <= 63:
            raise GraphInputError(f"graph6 character {s[pos]!r} at position {pos} is outside the printable range 63..126")
    n = values[0]
    if n == 63:
        raise GraphInputError("graph6 multi-byte orders are not supported")
    nbits = n * (n - 1) // 2
    ngroups = (nbits + 5) // 6
    payload = values[1:]
    if len(payload) < ngroups:
        raise GraphInputError(f"truncated graph6 payload: {len(payload)} of {ngroups} bytes for order {n}")
    if len(payload) > ngroups:
        raise GraphInputError(f"graph6 payload too long: {len(payload)} bytes, expected {ngroups} for order {n}")
    bits = 0
    for val in payload:
        bits = bits << 6 | val
    bits >>= ngroups * 6 - nbits
    rows = [0] * n
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph._trusted(n, rows)


def emit_dot(
    g: Graph,
    coloring: Sequence[int] | None = None,
    labels: Sequence[str] | None = None,
    name: str = "G",
) -> str:
    """DOT text for ``g``; a proper colouring becomes red/green/blue fills."""
    if coloring is not None and len(coloring) == 0:
        coloring = None
    if coloring is not None and not validate(g, coloring):
        raise GraphInputError("cannot render an improper colouring")
    if labels is not None and len(labels) != g.order:
        raise GraphInputError("one label per vertex required")

    def node(v: int) -> str:
        return f'"{labels[v]}"' if labels is not None else str(v)

    lines = [f"graph {name} {{"]
    for v in range(g.order):
        if coloring is not None:
            lines.append(f"  {node(v)} [style=filled, fillcolor={COLOR_NAMES[coloring[v]]}];")
        else:
            lines.append(f"  {node(v)};")
    for u, v in g.edges():
        lines.append(f"  {node(u)} -- {node(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
