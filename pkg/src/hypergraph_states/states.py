"""Sign-vector states, edge operators, qubit permutations, density matrices.

States built from hypergraphs are real vectors with amplitudes
``signs[i] / sqrt(2**n)``; the signs are kept as exact int8 values so the
combinatorial layer never touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .hypergraph import CutSet, Hypergraph, edge_mask

DENSE_MATRIX_MAX_N = 13  # order 8192; larger systems use the Schmidt path


@dataclass(frozen=True, eq=False)
class SignState:
    """An n-qubit state with entries ±1/sqrt(2**n), stored as ±1 signs."""

    n: int
    signs: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.signs, dtype=np.int8)
        if arr.shape != (1 << self.n,):
            raise ValueError(f"sign vector must have 2**{self.n} entries, got shape {arr.shape}")
        if not np.isin(arr, (-1, 1)).all():
            raise ValueError("sign entries must be +1 or -1")
        arr.setflags(write=False)
        object.__setattr__(self, "signs", arr)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SignState)
            and self.n == other.n
            and bool(np.array_equal(self.signs, other.signs))
        )

    @classmethod
    def plus_state(cls, n: int) -> "SignState":
        return cls(n=n, signs=np.ones(1 << n, dtype=np.int8))

    def amplitudes(self) -> np.ndarray:
        return self.signs.astype(np.float64) / math.sqrt(1 << self.n)

    def to_lines(self) -> str:
        return "\n".join("+1" if s > 0 else "-1" for s in self.signs)

    def to_compact(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)


def apply_edge_operator(state: SignState, edge) -> SignState:
    """Negate the sign of every basis state whose 1-bits cover ``edge``."""
    mask = edge_mask(edge, state.n)
    idx = np.arange(1 << state.n, dtype=np.int64)
    signs = state.signs.copy()
    covered = (idx & mask) == mask
    signs[covered] = -signs[covered]
    return SignState(n=state.n, signs=signs)


def build_state(graph: Hypergraph) -> SignState:
    """Fold the edge operators over the uniform all-plus state."""
    state = SignState.plus_state(graph.n)
    for e in graph.canonical_edges():
        state = apply_edge_operator(state, e)
    return state


@dataclass(frozen=True)
class Permutation:
    """A bijection of qubit positions; mapping[v] is the image of position v."""

    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.mapping) != list(range(len(self.mapping))):
            raise ValueError(f"mapping {self.mapping} is not a bijection on positions")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        mapping = list(range(n))
        mapping[a], mapping[b] = mapping[b], mapping[a]
        return cls(tuple(mapping))

    @property
    def n(self) -> int:
        return len(self.mapping)

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self ∘ other)(v) = self(other(v))."""
        if self.n != other.n:
            raise ValueError("permutation sizes differ")
        return Permutation(tuple(self.mapping[other.mapping[v]] for v in range(self.n)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for v, img in enumerate(self.mapping):
            inv[img] = v
        return Permutation(tuple(inv))


def permutation_from_cut(cut: CutSet) -> Permutation:
    """Map the cut positions to the front, complement filling in ascending."""
    n = cut.n
    mapping = [0] * n
    for j, k in enumerate(cut.indices):
        mapping[k] = j
    for i, v in enumerate(cut.complement):
        mapping[v] = cut.m + i
    return Permutation(tuple(mapping))


def apply_permutation(state: SignState, perm: Permutation) -> SignState:
    """Permute qubit positions: new index bit perm(v) = old index bit v."""
    n = state.n
    if perm.n != n:
        raise ValueError(f"permutation is over {perm.n} positions but state has {n} qubits")
    idx = np.arange(1 << n, dtype=np.int64)
    target = np.zeros_like(idx)
    for v in range(n):
        bit = (idx >> (n - 1 - v)) & 1
        target |= bit << (n - 1 - perm.mapping[v])
    signs = np.empty_like(state.signs)
    signs[target] = state.signs
    return SignState(n=n, signs=signs)


def is_permutation_invariant(graph: Hypergraph) -> bool:
    """Whether the state is fixed by every qubit permutation.

    Adjacent transpositions generate the full symmetric group, so checking
    the n-1 generators suffices.  Holds exactly when the edge set is a union
    of complete k-graph edge sets for distinct k.
    """
    if graph.n == 1:
        return True
    state = build_state(graph)
    for j in range(graph.n - 1):
        swapped = apply_permutation(state, Permutation.transposition(graph.n, j, j + 1))
        if swapped != state:
            return False
    return True


def density_matrix(state: SignState, *, max_n: int = DENSE_MATRIX_MAX_N) -> np.ndarray:
    """Rank-1 projector with entries signs[i]·signs[j]/2**n."""
    if state.n > max_n:
        raise ValueError(f"dense density matrix capped at n={max_n}, got n={state.n}")
    amps = state.amplitudes()
    return np.outer(amps, amps)
