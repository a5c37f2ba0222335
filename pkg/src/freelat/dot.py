"""Graphviz DOT text for Hasse diagrams, drawn bottom to top."""

from __future__ import annotations

from .order import Poset


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse_dot(p: Poset, name: str = "hasse") -> str:
    """DOT source with one node per element and one edge per cover pair.

    Nodes of equal height share a ``rank=same`` group so layouts come out
    levelled like the usual hand-drawn diagrams.
    """
    heights = p.heights()
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for h in range(max(heights, default=-1) + 1):
        level = [p.names[i] for i in range(len(p)) if heights[i] == h]
        lines.append("  { rank=same; " + " ".join(_quote(x) + ";" for x in level) + " }")
    for x, y in p.covers():
        lines.append(f"  {_quote(p.names[x])} -> {_quote(p.names[y])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
