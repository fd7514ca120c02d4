"""Deterministic DOT export, with decomposition-aware styling."""

from __future__ import annotations

from .errors import DomainError
from .graph import OrientedGraph, VertexClass
from .recognize import Decomposition

_SHAPES = {
    VertexClass.WEST: "diamond",
    VertexClass.EAST: "box",
    VertexClass.INNER: "ellipse",
    VertexClass.ISOLATED: "plaintext",
}


def export_dot(graph: OrientedGraph, decomposition: Decomposition | None = None) -> str:
    """DOT text for the graph: west vertices are diamonds, east vertices
    boxes; with a decomposition, transversal edges are dotted and tree edges
    solid.  Output is byte-stable for equal inputs."""
    transversal = set()
    if decomposition is not None:
        edges = list(decomposition.transversal.edges)
        for _, tree in decomposition.in_trees + decomposition.out_trees:
            edges.extend(tree.edges)
        if sorted(edges) != list(graph.edges) or len(edges) != len(set(edges)):
            raise DomainError("decomposition does not belong to this graph")
        transversal = set(decomposition.transversal.edges)
    lines = ["digraph kcut {", "  rankdir=LR;"]
    for v in graph.vertices:
        lines.append(f'  "{v}" [shape={_SHAPES[graph.vertex_class(v)]}];')
    for e in graph.edges:
        style = "dotted" if e in transversal else "solid"
        lines.append(f'  "{e.tail}" -> "{e.head}" [style={style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
