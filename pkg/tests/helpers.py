"""Shared fixture graphs and small builders for the test suite."""

from __future__ import annotations

from kcut import Compass, Edge, OrientedGraph


def g(*items: str) -> OrientedGraph:
    """Build a graph from 'a>b' edge strings and bare isolated-vertex names."""
    vertices: list[str] = []
    edges: list[tuple[str, str]] = []
    for item in items:
        if ">" in item:
            tail, head = item.split(">")
            vertices += [tail, head]
            edges.append((tail, head))
        else:
            vertices.append(item)
    return OrientedGraph.of(vertices, edges)


def e(text: str) -> Edge:
    tail, head = text.split(">")
    return Edge(tail, head)


def compass_of(assignments: dict[str, dict[str, str]]) -> Compass:
    """Compass from {vertex: {slot: 'a>b'}} shorthand."""
    return Compass.of(
        {
            (v, slot): e(text)
            for v, slots in assignments.items()
            for slot, text in slots.items()
        }
    )


# Star with two premises and one conclusion.
F1 = g("w1>m", "w2>m", "m>e1")

# F1 cut against B1 at (m,e1)/(w3,n).
F2 = g("w1>m", "w2>m", "m>n", "n>e2", "n>e3")

# Smallest graph with a transversal edge: (p,q).
F3 = g("w>p", "p>q", "p>r", "s>q", "q>e")

# Three-armed star of stars: a Q-graph with a transversal bifurcation at m.
F4 = g(
    "w>m", "m>x1", "m>x2", "m>x3",
    "z1>x1", "z2>x2", "z3>x3",
    "x1>o1", "x2>o2", "x3>o3",
)

# A semicycle on four vertices.
F5 = g("a>b", "c>b", "c>d", "a>d")

# Minimal graph with an indecent path a,b,c under the compass below.
F6 = g("i1>a", "a>b", "a>d", "b>c", "e>c", "c>o1")

F6_COMPASS = compass_of(
    {
        "a": {"NW": "i1>a", "SW": "i1>a", "NE": "a>d", "SE": "a>b"},
        "b": {"NW": "a>b", "SW": "a>b", "NE": "b>c", "SE": "b>c"},
        "c": {"NW": "e>c", "SW": "b>c", "NE": "c>o1", "SE": "c>o1"},
    }
)

F1_COMPASS = compass_of(
    {"m": {"NW": "w1>m", "SW": "w2>m", "NE": "m>e1", "SE": "m>e1"}}
)

# Adapted seven-vertex-transversal figure: transversal a..g with in-going
# trees planted west of it and out-going trees east of it.
FIG_TRANSVERSAL = g(
    # transversal edges
    "b>a", "c>b", "c>d", "d>e", "f>e", "f>g",
    # in-going tree at c
    "w1>v", "w2>v", "v>c",
    # trees at a
    "t>a", "a>m", "m>z5", "m>z6",
    # trees at e
    "x>e", "e>k", "k>z2", "k>z3", "k>z4",
    # trees at f and g
    "u>f", "u2>g", "g>z1",
)
