"""Two-way conversion between hypergraphs and Boolean truth tables.

A hypergraph on ``n`` vertices determines ``f(bin(i)) = |{e : e ⊆ O(i)}| mod 2``
where ``O(i)`` is the vertex set encoded by basis index ``i``.  The inverse
direction recovers the edge set as the mod-2 Möbius transform of the truth
table over the subset lattice: the transform coefficients are exactly the
hyperedge indicator.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable

import numpy as np

from .hypergraph import Hypergraph, edge_mask, union_of_complete_graphs, vertex_set_of_index


@dataclass(frozen=True, eq=False)
class BooleanTable:
    """Truth table of f over {0,1}^n: entry i is f(bin(i)), MSB-first."""

    n: int
    bits: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.bits, dtype=np.uint8)
        if arr.shape != (1 << self.n,):
            raise ValueError(f"table must have exactly 2**{self.n} entries, got shape {arr.shape}")
        if not np.isin(arr, (0, 1)).all():
            raise ValueError("table entries must be 0 or 1")
        arr.setflags(write=False)
        object.__setattr__(self, "bits", arr)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BooleanTable)
            and self.n == other.n
            and bool(np.array_equal(self.bits, other.bits))
        )

    @classmethod
    def from_string(cls, text: str) -> "BooleanTable":
        """Parse a 2**n-character string of 0/1, index 0 leftmost."""
        size = len(text)
        n = size.bit_length() - 1
        if size == 0 or size != 1 << n:
            raise ValueError(f"table length {size} is not a power of two")
        if set(text) - {"0", "1"}:
            raise ValueError("table string may contain only 0 and 1")
        return cls(n=n, bits=np.frombuffer(text.encode(), dtype=np.uint8) - ord("0"))

    def to_string(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)


def boolean_from_hypergraph(graph: Hypergraph) -> BooleanTable:
    """Truth table by parity of the edges contained in each index's vertex set."""
    size = 1 << graph.n
    idx = np.arange(size, dtype=np.int64)
    bits = np.zeros(size, dtype=np.uint8)
    for e in graph.edges:
        mask = edge_mask(e, graph.n)
        bits ^= ((idx & mask) == mask).astype(np.uint8)
    return BooleanTable(n=graph.n, bits=bits)


def incidence_matrix(graph: Hypergraph) -> np.ndarray:
    """Vertex-edge incidence matrix, columns in canonical edge order."""
    edges = graph.canonical_edges()
    mat = np.zeros((graph.n, len(edges)), dtype=np.int64)
    for col, e in enumerate(edges):
        for v in e:
            mat[v, col] = 1
    return mat


def boolean_via_incidence(graph: Hypergraph, i: int) -> int:
    """f(bin(i)) as the parity of zero rows of M^t (j_n - bin(i)^t)."""
    if not 0 <= i < 1 << graph.n:
        raise ValueError(f"basis index {i} out of range for n={graph.n}")
    mat = incidence_matrix(graph)
    ones = np.ones(graph.n, dtype=np.int64)
    b = np.array([(i >> (graph.n - 1 - v)) & 1 for v in range(graph.n)], dtype=np.int64)
    residual = mat.T @ (ones - b)
    return int(np.count_nonzero(residual == 0)) & 1


def subset_xor_transform(bits: np.ndarray) -> np.ndarray:
    """In-place-style XOR butterfly over the subset lattice, O(n 2^n).

    Self-inverse: applying it to a truth table yields the XOR-of-monomials
    coefficients, and applying it again recovers the table.
    """
    out = np.array(bits, dtype=np.uint8)
    size = out.size
    h = 1
    while h < size:
        out = out.reshape(-1, 2, h)
        out[:, 1, :] ^= out[:, 0, :]
        out = out.reshape(size)
        h *= 2
    return out


def hypergraph_from_boolean(table: BooleanTable) -> Hypergraph:
    """The unique hypergraph whose truth table is ``table``.

    Requires f(0...0) = 0: a sign-vector state built from a hypergraph always
    carries a positive leading amplitude, so a table with f(0...0) = 1 only
    corresponds to a state up to global phase.
    """
    if table.bits[0]:
        raise ValueError(
            "f(0...0) = 1 is not representable: hypergraph states have a "
            "positive leading amplitude, so this table matches one only up to global phase"
        )
    coeffs = subset_xor_transform(table.bits)
    edges = [vertex_set_of_index(int(i), table.n) for i in np.flatnonzero(coeffs)]
    return Hypergraph(n=table.n, edges=frozenset(edges))


def closed_form_f(n: int, ks: Iterable[int], i: int) -> int:
    """f(bin(i)) for a union of complete k-graphs: parity of sum of C(s, k)."""
    union_of_complete_graphs(n, ks)  # validates n and ks
    if not 0 <= i < 1 << n:
        raise ValueError(f"basis index {i} out of range for n={n}")
    s = i.bit_count()
    return sum(comb(s, k) for k in ks) & 1


def corank(graph: Hypergraph) -> int:
    """Least cardinality of a hyperedge; undefined for an empty edge set."""
    if not graph.edges:
        raise ValueError("co-rank is undefined for a hypergraph without edges")
    return min(len(e) for e in graph.edges)
