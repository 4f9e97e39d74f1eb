"""Hypergraphs, basis-index subsets, and cut sets.

Bit convention used throughout the package: a basis index ``i`` in
``[0, 2**n)`` is read MSB-first, so vertex ``0`` corresponds to the most
significant bit of ``i``.  ``vertex_set_of_index`` and
``index_of_vertex_set`` are the two directions of that encoding.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple

MAX_VERTICES = 24  # bitmask width cap for the combinatorial layer


def edge_mask(edge: Iterable[int], n: int) -> int:
    """Bitmask of an edge under the MSB-first vertex convention."""
    mask = 0
    for v in edge:
        if not 0 <= v < n:
            raise ValueError(f"vertex label {v} out of range for n={n}")
        mask |= 1 << (n - 1 - v)
    return mask


def vertex_set_of_index(i: int, n: int) -> frozenset[int]:
    """Vertices whose bit is set in basis index ``i`` (vertex 0 = MSB)."""
    if not 0 <= i < 1 << n:
        raise ValueError(f"basis index {i} out of range for n={n}")
    return frozenset(v for v in range(n) if (i >> (n - 1 - v)) & 1)


def index_of_vertex_set(members: Iterable[int], n: int) -> int:
    """Inverse of :func:`vertex_set_of_index`."""
    return edge_mask(members, n)


def cluster(n: int, k: int) -> list[int]:
    """All basis indices of Hamming weight ``k``, ascending."""
    if not 0 <= k <= n:
        raise ValueError(f"weight {k} out of range for n={n}")
    return [i for i in range(1 << n) if i.bit_count() == k]


@dataclass(frozen=True)
class Hypergraph:
    """A vertex count plus a set of nonempty hyperedges over {0, ..., n-1}."""

    n: int
    edges: frozenset[frozenset[int]]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be an integer in [1, {MAX_VERTICES}], got {self.n!r}")
        for e in self.edges:
            if not e:
                raise ValueError("empty hyperedge is not allowed")
            for v in e:
                if not isinstance(v, int) or not 0 <= v < self.n:
                    raise ValueError(f"vertex label {v!r} out of range for n={self.n}")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Iterable[int]],
        *,
        allow_empty_edge: bool = False,
    ) -> "Hypergraph":
        """Build a hypergraph from an iterable of edges.

        Duplicate edges and duplicated vertices inside an edge are rejected
        rather than silently collapsed.  With ``allow_empty_edge`` an empty
        edge is accepted and dropped (it acts as the identity operator).
        """
        seen: set[frozenset[int]] = set()
        for raw in edges:
            listed = [int(v) for v in raw]
            e = frozenset(listed)
            if len(e) != len(listed):
                raise ValueError(f"edge {sorted(listed)} repeats a vertex")
            if not e:
                if allow_empty_edge:
                    continue
                raise ValueError("empty hyperedge is not allowed")
            if e in seen:
                raise ValueError(f"duplicate edge {sorted(e)}")
            seen.add(e)
        return cls(n=int(n), edges=frozenset(seen))

    def canonical_edges(self) -> list[tuple[int, ...]]:
        """Edges as sorted vertex tuples, in lexicographic order."""
        return sorted(tuple(sorted(e)) for e in self.edges)

    def to_json(self) -> str:
        """Canonical JSON emission (stable byte-for-byte)."""
        payload = {"n": self.n, "edges": [list(e) for e in self.canonical_edges()]}
        return json.dumps(payload, separators=(",", ":"))


def parse_hypergraph(text: str, *, allow_empty_edge: bool = False) -> Hypergraph:
    """Parse ``{"n": <int>, "edges": [[v, ...], ...]}`` into a Hypergraph."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed hypergraph JSON: {exc}") from exc
    if not isinstance(payload, dict) or set(payload) != {"n", "edges"}:
        raise ValueError('hypergraph JSON must be an object with exactly the keys "n" and "edges"')
    n = payload["n"]
    edges = payload["edges"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError(f'"n" must be an integer, got {n!r}')
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise ValueError('"edges" must be a list of vertex lists')
    for e in edges:
        for v in e:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"vertex label {v!r} is not an integer")
    return Hypergraph.from_edges(n, edges, allow_empty_edge=allow_empty_edge)


def complete_k_graph(n: int, k: int) -> Hypergraph:
    """All C(n, k) hyperedges of cardinality ``k`` on ``n`` vertices."""
    if not 1 <= k <= n:
        raise ValueError(f"edge cardinality {k} out of range for n={n}")
    return Hypergraph(n=n, edges=frozenset(frozenset(c) for c in combinations(range(n), k)))


def union_of_complete_graphs(n: int, ks: Iterable[int]) -> Hypergraph:
    """Union of the complete ``k``-graph edge sets for distinct cardinalities."""
    ks = list(ks)
    if sorted(set(ks)) != ks or not ks:
        raise ValueError(f"cardinalities must be distinct and ascending, got {ks}")
    edges: set[frozenset[int]] = set()
    for k in ks:
        edges |= complete_k_graph(n, k).edges
    return Hypergraph(n=n, edges=frozenset(edges))


@dataclass(frozen=True)
class CutSet:
    """A nonempty proper subset of qubit positions, stored sorted ascending."""

    n: int
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"a cut requires at least 2 qubits, got n={self.n!r}")
        idx = self.indices
        if not idx:
            raise ValueError("cut set must be nonempty")
        if list(idx) != sorted(set(idx)):
            raise ValueError(f"cut indices must be strictly ascending, got {idx}")
        if idx[0] < 0 or idx[-1] >= self.n:
            raise ValueError(f"cut indices {idx} out of range for n={self.n}")
        if len(idx) >= self.n:
            raise ValueError("cut set must be a proper subset of the qubit positions")

    @classmethod
    def of(cls, indices: Iterable[int], n: int) -> "CutSet":
        return cls(n=n, indices=tuple(sorted(int(k) for k in indices)))

    @property
    def m(self) -> int:
        return len(self.indices)

    @property
    def complement(self) -> tuple[int, ...]:
        inside = set(self.indices)
        return tuple(v for v in range(self.n) if v not in inside)

    @property
    def mask(self) -> int:
        return edge_mask(self.indices, self.n)


class EdgeClasses(NamedTuple):
    within_cut: frozenset[frozenset[int]]
    within_complement: frozenset[frozenset[int]]
    crossing: frozenset[frozenset[int]]


def classify_edges(graph: Hypergraph, cut: CutSet) -> EdgeClasses:
    """Partition the edge set by the bipartition a cut induces."""
    if cut.n != graph.n:
        raise ValueError(f"cut is over n={cut.n} but hypergraph has n={graph.n}")
    inside = set(cut.indices)
    within, without, crossing = set(), set(), set()
    for e in graph.edges:
        if e <= inside:
            within.add(e)
        elif e.isdisjoint(inside):
            without.add(e)
        else:
            crossing.add(e)
    return EdgeClasses(frozenset(within), frozenset(without), frozenset(crossing))
