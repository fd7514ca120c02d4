"""Independent brute-force oracles the production code is checked against.

Everything here recomputes results from first principles: semicycles by
exhaustive semiwalk extension, transversal edges by enumerating semipaths,
decency by pairwise forward reachability, compass existence by enumerating
all assignments, rewrite equivalence by breadth-first search over moves,
and oriented-tree counts from labeled trees.  None of it shares algorithms
with the production path it checks.
"""

from __future__ import annotations

import heapq
import itertools
from collections import deque

from kcut import (
    Construction,
    Edge,
    IdentityGraph,
    OrientedGraph,
    RewriteError,
    SemiPath,
    applicable_rho_moves,
    apply_rho_move,
    is_local_compass_graph,
)
from kcut.compass import Compass


def semicycle_exists(graph: OrientedGraph) -> bool:
    """Exhaustive search for a closed semiwalk with >= 3 distinct vertices."""

    def extend(walk: list[str]) -> bool:
        last = walk[-1]
        for nxt in graph._adjacency[last]:
            if nxt == walk[0] and len(walk) >= 3:
                return True
            if nxt not in walk:
                walk.append(nxt)
                if extend(walk):
                    return True
                walk.pop()
        return False

    return any(extend([v]) for v in graph.vertices)


def all_semipaths(graph: OrientedGraph) -> list[SemiPath]:
    """Every simple semipath with at least two vertices."""
    found: list[SemiPath] = []

    def extend(walk: list[str]) -> None:
        for nxt in graph._adjacency[walk[-1]]:
            if nxt in walk:
                continue
            walk.append(nxt)
            found.append(SemiPath.through(graph, walk))
            extend(walk)
            walk.pop()

    for v in graph.vertices:
        extend([v])
    return found


def proper_semipaths(graph: OrientedGraph) -> list[SemiPath]:
    def is_proper(sp: SemiPath) -> bool:
        return any(s.forward for s in sp.steps) and any(not s.forward for s in sp.steps)

    return [sp for sp in all_semipaths(graph) if is_proper(sp)]


def transversal_edge_by_enumeration(graph: OrientedGraph, edge: Edge) -> bool:
    """The defining condition verbatim: some proper semipath starts
    tail,head and some proper semipath starts head,tail."""
    proper = proper_semipaths(graph)
    starts = {(sp.vertices[0], sp.vertices[1]) for sp in proper}
    return (edge.tail, edge.head) in starts and (edge.head, edge.tail) in starts


def transversal_edges_by_enumeration(graph: OrientedGraph) -> set[Edge]:
    return {e for e in graph.edges if transversal_edge_by_enumeration(graph, e)}


def bifurcation_by_enumeration(graph: OrientedGraph) -> tuple[Edge, Edge, Edge] | None:
    """Any triple of distinct transversal edges sharing a vertex."""
    t_edges = sorted(transversal_edges_by_enumeration(graph))
    for triple in itertools.combinations(t_edges, 3):
        shared = set.intersection(*({e.tail, e.head} for e in triple))
        if shared:
            return triple
    return None


def forward_paths_by_reachability(graph: OrientedGraph) -> list[tuple[str, ...]]:
    """All directed paths, found pairwise: for each ordered vertex pair,
    breadth-first search along forward edges only."""
    out = []
    for u in graph.vertices:
        prev: dict[str, str] = {u: u}
        queue = deque([u])
        while queue:
            v = queue.popleft()
            for edge in graph.out_edges(v):
                if edge.head not in prev:
                    prev[edge.head] = v
                    queue.append(edge.head)
        for v in graph.vertices:
            if v != u and v in prev:
                chain = [v]
                while chain[-1] != u:
                    chain.append(prev[chain[-1]])
                out.append(tuple(reversed(chain)))
    return sorted(out)


def decent_by_definition(graph: OrientedGraph, compass: Compass, chain: tuple[str, ...], y: str) -> bool:
    """Decency re-derived from scratch, boundary convention included."""
    if len(chain) == 1:
        return True
    first = Edge(chain[0], chain[1])
    last = Edge(chain[-2], chain[-1])
    first_ok = graph.is_w_edge(first) or compass.get(chain[0], y + "E") == first
    last_ok = graph.is_e_edge(last) or compass.get(chain[-1], y + "W") == last
    return first_ok or last_ok


def every_path_decent(graph: OrientedGraph, compass: Compass) -> bool:
    return all(
        decent_by_definition(graph, compass, chain, y)
        for chain in forward_paths_by_reachability(graph)
        for y in ("N", "S")
    )


def enumerate_compasses(graph: OrientedGraph, branching_limit: int = 7):
    """Yield every N-from-S-separating compass assignment.  Guarded by the
    number of branching (vertex, side) slots to keep the product bounded."""
    per_slot: list[tuple[str, str, list[tuple[Edge, Edge]]]] = []
    branching = 0
    for v in graph.inner_vertices:
        for x, edges in (("W", graph.in_edges(v)), ("E", graph.out_edges(v))):
            if len(edges) == 1:
                pairs = [(edges[0], edges[0])]
            else:
                branching += 1
                pairs = [(n, s) for n in edges for s in edges if n != s]
            per_slot.append((v, x, pairs))
    if branching > branching_limit:
        raise ValueError(f"too many branching slots ({branching}) to enumerate")
    for combo in itertools.product(*(pairs for _, _, pairs in per_slot)):
        assignments = {}
        for (v, x, _), (north, south) in zip(per_slot, combo):
            assignments[(v, "N" + x)] = north
            assignments[(v, "S" + x)] = south
        yield Compass.of(assignments)


def some_valid_compass(graph: OrientedGraph, branching_limit: int = 7) -> Compass | None:
    for compass in enumerate_compasses(graph, branching_limit):
        if is_local_compass_graph(graph, compass).ok:
            return compass
    return None


def _encode(c: Construction):
    if c.is_leaf:
        obj = c.leaf_obj
        if isinstance(obj, IdentityGraph):
            return ("identity", obj.west, obj.east)
        return ("basic", obj.center, obj.west, obj.east, obj.nw, obj.sw, obj.ne, obj.se)
    return ("cut", _encode(c.left), c.cut_west, _encode(c.right), c.cut_east)


def rho_equivalent_by_search(g: Construction, h: Construction, max_states: int = 20000) -> bool:
    """Breadth-first search over rewrite moves from g, looking for h."""
    target = _encode(h)
    seen = {_encode(g)}
    queue = deque([g])
    while queue:
        current = queue.popleft()
        if _encode(current) == target:
            return True
        for site, move, direction in applicable_rho_moves(current):
            nxt = apply_rho_move(current, site, move, direction)
            key = _encode(nxt)
            if key not in seen:
                if len(seen) >= max_states:
                    raise RewriteError("state budget exhausted")
                seen.add(key)
                queue.append(nxt)
    return False


# -- labeled oriented trees, for enumeration cross-checks --------------------


def labeled_trees(n: int) -> list[list[tuple[int, int]]]:
    """All labeled trees on 0..n-1 as undirected edge lists, one per
    Pruefer sequence."""
    if n == 1:
        return [[]]
    if n == 2:
        return [[(0, 1)]]
    trees = []
    for seq in itertools.product(range(n), repeat=n - 2):
        degree = [1] * n
        for v in seq:
            degree[v] += 1
        heap = [v for v in range(n) if degree[v] == 1]
        heapq.heapify(heap)
        edges = []
        for v in seq:
            u = heapq.heappop(heap)
            edges.append((u, v))
            degree[u] -= 1
            degree[v] -= 1
            if degree[v] == 1:
                heapq.heappush(heap, v)
        last = [v for v in range(n) if degree[v] == 1]
        edges.append((last[0], last[1]))
        trees.append(edges)
    return trees


def _oracle_canon(n: int, arcs: frozenset[tuple[int, int]]) -> frozenset:
    """Canonical form by minimizing over all vertex permutations; exact but
    exponential, so only used at tiny sizes."""
    best = None
    for perm in itertools.permutations(range(n)):
        image = frozenset((perm[a], perm[b]) for a, b in arcs)
        key = tuple(sorted(image))
        if best is None or key < best:
            best = key
    return frozenset(best)


def count_oriented_trees_bruteforce(n: int) -> int:
    """Number of oriented trees on n vertices up to isomorphism, from all
    labeled trees and all orientations, deduplicated by permutation canon."""
    seen = set()
    for tree in labeled_trees(n):
        for bits in itertools.product((0, 1), repeat=len(tree)):
            arcs = frozenset(
                (a, b) if bit == 0 else (b, a) for (a, b), bit in zip(tree, bits)
            )
            seen.add(_oracle_canon(n, arcs))
    return len(seen)
