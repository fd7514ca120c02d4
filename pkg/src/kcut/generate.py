"""Generators: exhaustive oriented-tree enumeration and random constructions.

Oriented trees are enumerated up to isomorphism by growing a leaf at a time
and deduplicating on a canonical code (minimum over all rootings of the
direction-annotated subtree encoding).  Representatives are relabelled
deterministically, so the stream is byte-stable.
"""

from __future__ import annotations

import itertools
import os
import random
from functools import lru_cache

from .construct import Construction, compose, leaf, make_basic
from .errors import ConfigError, DomainError
from .graph import Edge, OrientedGraph

DEFAULT_MAX_ENUM = 10
MAX_ENUM_ENV = "KCUT_MAX_ENUM"


def max_enumeration_size() -> int:
    raw = os.environ.get(MAX_ENUM_ENV, "")
    if not raw:
        return DEFAULT_MAX_ENUM
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{MAX_ENUM_ENV} must be an integer, got {raw!r}")
    if value < 1:
        raise ConfigError(f"{MAX_ENUM_ENV} must be positive, got {value}")
    return value


def _direction_adjacency(graph: OrientedGraph) -> dict[str, list[tuple[str, str]]]:
    adj: dict[str, list[tuple[str, str]]] = {v: [] for v in graph.vertices}
    for e in graph.edges:
        adj[e.tail].append((e.head, ">"))
        adj[e.head].append((e.tail, "<"))
    return adj


def _subtree_code(adj, vertex: str, parent: str | None) -> str:
    parts = sorted(
        bit + _subtree_code(adj, child, vertex)
        for child, bit in adj[vertex]
        if child != parent
    )
    return "(" + "".join(parts) + ")"


def canonical_code(graph: OrientedGraph) -> str:
    """Isomorphism-invariant code of an oriented tree."""
    if not graph.is_tree:
        raise DomainError("canonical codes are defined for oriented trees")
    adj = _direction_adjacency(graph)
    return min(_subtree_code(adj, v, None) for v in graph.vertices)


def _names() -> itertools.chain:
    letters = "abcdefghijklmnopqrstuvwxyz"
    return itertools.chain(letters, (a + b for a in letters for b in letters))


def canonical_representative(graph: OrientedGraph) -> OrientedGraph:
    """The same oriented tree relabelled a, b, c, ... along a canonical
    traversal, identical for isomorphic inputs."""
    adj = _direction_adjacency(graph)
    root = min(graph.vertices, key=lambda v: _subtree_code(adj, v, None))
    names = _names()
    mapping: dict[str, str] = {}

    def visit(vertex: str, parent: str | None) -> None:
        mapping[vertex] = next(names)
        children = sorted(
            ((child, bit) for child, bit in adj[vertex] if child != parent),
            key=lambda cb: (cb[1], _subtree_code(adj, cb[0], vertex), cb[0]),
        )
        for child, _ in children:
            visit(child, vertex)

    visit(root, None)
    return graph.rename(mapping)


@lru_cache(maxsize=None)
def _enumerated(size: int) -> tuple[OrientedGraph, ...]:
    if size == 1:
        return (OrientedGraph.of(["a"], []),)
    seen: dict[str, OrientedGraph] = {}
    for smaller in _enumerated(size - 1):
        for v in smaller.vertices:
            for orient in ("out", "in"):
                new_edge = ("zz", v) if orient == "in" else (v, "zz")
                grown = OrientedGraph.of(
                    smaller.vertices + ("zz",), smaller.edges + (Edge(*new_edge),)
                )
                code = canonical_code(grown)
                if code not in seen:
                    seen[code] = canonical_representative(grown)
    return tuple(seen[code] for code in sorted(seen))


def enumerate_oriented_trees(size: int):
    """All weakly connected antisymmetric orientations of trees with exactly
    `size` vertices, one representative per isomorphism class, in canonical
    order."""
    bound = max_enumeration_size()
    if size < 1:
        raise DomainError(f"size must be positive, got {size}")
    if size > bound:
        raise ConfigError(
            f"size {size} exceeds the enumeration bound {bound} "
            f"(override with {MAX_ENUM_ENV})"
        )
    yield from _enumerated(size)


def count_oriented_trees(size: int) -> int:
    return len(_enumerated(size)) if size <= max_enumeration_size() else 0


# -- deterministic random constructions ---------------------------------------


def _random_leaf(rng: random.Random, index: int, mode: str) -> Construction:
    k_w = rng.randint(1, 3)
    k_e = rng.randint(1, 3)
    center = f"m{index}"
    wests = tuple(f"w{index}_{j}" for j in range(k_w))
    easts = tuple(f"e{index}_{j}" for j in range(k_e))
    w_edges = [Edge(w, center) for w in wests]
    e_edges = [Edge(center, e) for e in easts]
    if mode == "K":
        nw, sw = (w_edges[0], w_edges[1]) if k_w >= 2 else (w_edges[0], w_edges[0])
        ne, se = (e_edges[0], e_edges[1]) if k_e >= 2 else (e_edges[0], e_edges[0])
        if k_w >= 2 and rng.random() < 0.5:
            nw, sw = sw, nw
        if k_e >= 2 and rng.random() < 0.5:
            ne, se = se, ne
    else:
        nw, sw = rng.choice(w_edges), rng.choice(w_edges)
        ne, se = rng.choice(e_edges), rng.choice(e_edges)
    return leaf(make_basic(center, wests, easts, nw, sw, ne, se, mode=mode), mode)


def random_construction(seed: int, leaf_count: int, mode: str = "K") -> Construction:
    """A pseudo-random construction, deterministic in the seed.

    Mode-K cuts consume a currently distinguished edge on each side (either
    SE against NW or NE against SW), which always satisfies the cut's side
    conditions; mode-Q cuts pick any functional E-/W-edge pair.
    """
    if leaf_count < 1:
        raise DomainError(f"leaf_count must be positive, got {leaf_count}")
    if mode not in ("K", "Q"):
        raise DomainError(f"mode must be 'K' or 'Q', got {mode!r}")
    rng = random.Random(seed)
    pool = [_random_leaf(rng, i, mode) for i in range(leaf_count)]
    while len(pool) > 1:
        west = pool.pop(rng.randrange(len(pool)))
        east = pool.pop(rng.randrange(len(pool)))
        if mode == "K":
            e_slot, w_slot = rng.choice((("SE", "NW"), ("NE", "SW")))
            e_west, e_east = west.yx(e_slot), east.yx(w_slot)
        else:
            e_west = rng.choice(west.root_graph.e_edges)
            e_east = rng.choice(east.root_graph.w_edges)
        pool.append(compose(west, e_west, east, e_east))
    return pool[0]
