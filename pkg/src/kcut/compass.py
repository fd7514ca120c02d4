"""Per-vertex compasses: the local description of a plural-cut graph.

A compass assigns to every inner vertex four incident edges NW/SW/NE/SE
(the W slots end in the vertex, the E slots begin in it).  A graph with a
compass is a local compass graph when it is weakly connected, asemicyclic,
W-E-functional with an inner vertex, separates N from S, and every directed
path is decent.  Paths that enter at a west vertex or leave at an east
vertex are decent by convention; without that convention no star would
qualify.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .construct import cut_graph
from .errors import CompositionError, DomainError, ValidationError
from .graph import SLOTS, Edge, OrientedGraph, SemiPath


@dataclass(frozen=True)
class Compass:
    """An immutable (vertex, slot) -> edge assignment, canonically ordered."""

    entries: tuple[tuple[str, str, Edge], ...]

    @classmethod
    def of(cls, assignments: Mapping[tuple[str, str], Edge]) -> "Compass":
        entries = tuple(sorted((v, slot, e) for (v, slot), e in assignments.items()))
        for v, slot, _ in entries:
            if slot not in SLOTS:
                raise ValidationError(f"bad compass slot {slot!r} at {v}")
        if len({(v, s) for v, s, _ in entries}) != len(entries):
            raise ValidationError("duplicate compass slot")
        return cls(entries)

    @cached_property
    def _map(self) -> dict[tuple[str, str], Edge]:
        return {(v, slot): e for v, slot, e in self.entries}

    def get(self, v: str, slot: str) -> Edge | None:
        return self._map.get((v, slot))

    def edge(self, v: str, slot: str) -> Edge:
        value = self.get(v, slot)
        if value is None:
            raise DomainError(f"compass has no {slot} value at {v}")
        return value

    @cached_property
    def vertices(self) -> tuple[str, ...]:
        return tuple(sorted({v for v, _, _ in self.entries}))

    def slots_at(self, v: str) -> dict[str, Edge]:
        return {slot: e for u, slot, e in self.entries if u == v}

    def substituted(self, replacements: Mapping[Edge, Edge]) -> "Compass":
        return Compass.of(
            {(v, slot): replacements.get(e, e) for v, slot, e in self.entries}
        )

    def merged(self, other: "Compass") -> "Compass":
        combined = dict(self._map)
        for key, e in other._map.items():
            if key in combined and combined[key] != e:
                raise ValidationError(f"conflicting compass values at {key}")
            combined[key] = e
        return Compass.of(combined)

    def restricted(self, vertices: Iterable[str]) -> "Compass":
        keep = set(vertices)
        return Compass.of({(v, slot): e for v, slot, e in self.entries if v in keep})


@dataclass(frozen=True)
class LocalCompassGraph:
    """A graph together with a compass; valid instances satisfy the five
    conditions checked by `is_local_compass_graph`."""

    graph: OrientedGraph
    compass: Compass

    @classmethod
    def checked(cls, graph: OrientedGraph, compass: Compass, extended: bool = False) -> "LocalCompassGraph":
        verdict = is_local_compass_graph(graph, compass, extended=extended)
        if not verdict.ok:
            raise DomainError(f"not a local compass graph: {verdict.describe()}")
        return cls(graph, compass)


def compass_shape_problems(graph: OrientedGraph, compass: Compass) -> list[str]:
    """Missing, extraneous, or misdirected compass slots, as messages."""
    problems = []
    inner = set(graph.inner_vertices)
    for v in sorted(inner):
        for slot in SLOTS:
            value = compass.get(v, slot)
            if value is None:
                problems.append(f"missing {slot} at {v}")
                continue
            if not graph.contains_edge(value):
                problems.append(f"{slot} at {v} is not an edge: {value}")
            elif slot.endswith("W") and value.head != v:
                problems.append(f"{slot} at {v} must end in {v}, got {value}")
            elif slot.endswith("E") and value.tail != v:
                problems.append(f"{slot} at {v} must begin in {v}, got {value}")
    for v, slot, _ in compass.entries:
        if v not in inner:
            problems.append(f"compass names non-inner vertex {v}")
            break
    return problems


def separates_n_from_s(graph: OrientedGraph, compass: Compass) -> bool:
    """True when the N and S choices differ at every vertex and side where
    the degree leaves room for a difference."""
    problems = compass_shape_problems(graph, compass)
    if problems:
        raise ValidationError("; ".join(problems))
    return separation_witness(graph, compass) is None


def separation_witness(graph: OrientedGraph, compass: Compass) -> tuple[str, str] | None:
    for v in graph.inner_vertices:
        for x, degree in (("W", graph.in_degree(v)), ("E", graph.out_degree(v))):
            if degree >= 2 and compass.get(v, "N" + x) == compass.get(v, "S" + x):
                return (v, x)
    return None


def _require_path(graph: OrientedGraph, path: SemiPath) -> None:
    if not path.is_path:
        raise DomainError(f"{path} is not a path (it has a backward step)")
    for step in path.steps:
        if not graph.contains_edge(step.edge):
            raise DomainError(f"{step.edge} is not an edge of the graph")
    for v in path.vertices:
        if not graph.has_vertex(v):
            raise DomainError(f"unknown vertex {v!r}")


def is_y_decent(graph: OrientedGraph, compass: Compass, path: SemiPath, y: str) -> bool:
    """Decency for one of N and S: the path leaves its first vertex along
    that vertex's Y-east choice, or arrives at its last vertex along the
    Y-west choice.  A W-edge first step or an E-edge last step counts
    automatically (the boundary vertex has no compass)."""
    if y not in ("N", "S"):
        raise DomainError(f"Y must be 'N' or 'S', got {y!r}")
    _require_path(graph, path)
    if len(path.vertices) == 1:
        return True
    first = path.steps[0].edge
    if graph.is_w_edge(first) or compass.get(path.first, y + "E") == first:
        return True
    last = path.steps[-1].edge
    return graph.is_e_edge(last) or compass.get(path.last, y + "W") == last


def is_decent(graph: OrientedGraph, compass: Compass, path: SemiPath) -> bool:
    return is_y_decent(graph, compass, path, "N") and is_y_decent(graph, compass, path, "S")


def indecent_path_witness(graph: OrientedGraph, compass: Compass) -> tuple[SemiPath, str] | None:
    """The first indecent path in canonical order with its failing Y, or
    None when every path is decent.  Enumerates all directed paths, of which
    a tree has at most |V|^2."""
    for path in graph.directed_paths:
        for y in ("N", "S"):
            if not is_y_decent(graph, compass, path, y):
                return (path, y)
    return None


@dataclass(frozen=True)
class LocalCheck:
    """Outcome of the five-condition check, with the first failure."""

    ok: bool
    condition: int | None = None
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "local compass graph"
        reasons = {
            1: "not weakly connected",
            2: "has a semicycle",
            3: "not W-E-functional with an inner vertex",
            4: "does not separate N from S",
            5: "has an indecent path",
        }
        return f"condition ({self.condition}) fails: {reasons[self.condition]} ({self.witness})"


def is_local_compass_graph(graph: OrientedGraph, compass: Compass, extended: bool = False) -> LocalCheck:
    """Check the five defining conditions in order, reporting the first
    failure with a witness.  With `extended`, an identity-shaped graph (an
    edge, no inner vertex) is admitted under condition (3)."""
    components = graph.component_witness()
    if components is not None:
        return LocalCheck(False, 1, components)
    semicycle = graph.semicycle_witness()
    if semicycle is not None:
        return LocalCheck(False, 2, semicycle)
    nonfunctional = graph.nonfunctional_witness()
    if nonfunctional is not None:
        return LocalCheck(False, 3, nonfunctional)
    if extended:
        if not graph.edges:
            return LocalCheck(False, 3, "no edge")
    elif not graph.inner_vertices:
        return LocalCheck(False, 3, "no inner vertex")
    shape = compass_shape_problems(graph, compass)
    if shape:
        return LocalCheck(False, 4, "; ".join(shape))
    separation = separation_witness(graph, compass)
    if separation is not None:
        return LocalCheck(False, 4, separation)
    indecent = indecent_path_witness(graph, compass)
    if indecent is not None:
        return LocalCheck(False, 5, indecent)
    return LocalCheck(True)


def compose_local(
    west: LocalCompassGraph, e_west: Edge, east: LocalCompassGraph, e_east: Edge
) -> LocalCompassGraph:
    """Cut two local compass graphs together.

    Compass values equal to a consumed edge become the new edge; the other
    values carry over.  Only paths covering the new edge need a decency
    check, and an indecent one is reported as the composition error.
    """
    carrier = cut_graph(west.graph, e_west, east.graph, e_east)
    new_edge = Edge(e_west.tail, e_east.head)
    replacements = {e_west: new_edge, e_east: new_edge}
    merged = west.compass.substituted(replacements).merged(
        east.compass.substituted(replacements)
    )
    for path in carrier.paths_covering(new_edge):
        for y in ("N", "S"):
            if not is_y_decent(carrier, merged, path, y):
                raise CompositionError(
                    f"path {path} covering the cut edge {new_edge} is not {y}-decent"
                )
    return LocalCompassGraph(carrier, merged)
