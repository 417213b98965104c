"""Graph and digraph value types, family generators and small-order canonical forms.

Vertices are the integers ``0..n-1``. Wheels put the centre at ``n-1``;
fans put it at ``0``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

MAX_TOURNAMENT_ORDER = 8
MAX_CANONICAL_ORDER = 9

OutDegreeSequence = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Digraph:
    """A loopless digraph; digons are allowed, parallel arcs are not."""

    n: int
    arcs: frozenset[tuple[int, int]]

    # Structural equality, so a Tournament equals the plain Digraph with the same arcs.
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        for u, v in arcs:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={self.n}")
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
        arcs = list(arcs)
        if len(set(arcs)) != len(arcs):
            raise ValueError("duplicate arc")
        return cls(n, frozenset(arcs))

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    def out_degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, _ in self.arcs:
            deg[u] += 1
        return deg

    def nonisolated(self) -> list[int]:
        return sorted({x for arc in self.arcs for x in arc})

    def underlying(self) -> Graph:
        """Underlying simple graph; a digon collapses to a single edge."""
        return Graph(self.n, frozenset((min(u, v), max(u, v)) for u, v in self.arcs))

    def has_digon(self) -> bool:
        return any((v, u) in self.arcs for u, v in self.arcs)

    def is_tournament(self) -> bool:
        return len(self.arcs) == self.n * (self.n - 1) // 2 and not self.has_digon()

    def delete_vertex(self, x: int) -> Digraph:
        """Remove ``x`` and shift the higher vertices down by one."""

        def shift(v: int) -> int:
            return v - 1 if v > x else v

        return Digraph(
            self.n - 1,
            frozenset((shift(u), shift(v)) for u, v in self.arcs if x not in (u, v)),
        )

    def relabel(self, perm: Iterable[int]) -> Digraph:
        """Image of this digraph under the vertex map ``v -> perm[v]``."""
        perm = list(perm)
        return Digraph(self.n, frozenset((perm[u], perm[v]) for u, v in self.arcs))


class Tournament(Digraph):
    """A digraph with exactly one arc between every pair of vertices."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not self.is_tournament():
            raise ValueError("not a tournament")


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph; edges are stored as ``(low, high)``."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        edges = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            edges.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(edges))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        edges = [(min(u, v), max(u, v)) for u, v in edges]
        if len(set(edges)) != len(edges):
            raise ValueError("duplicate edge")
        return cls(n, frozenset(edges))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def nonisolated(self) -> list[int]:
        return sorted({x for e in self.edges for x in e})

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()] - seen:
                seen.add(w)
                stack.append(w)
        return len(seen) == self.n

    def orient(self, mask: int) -> Digraph:
        """Orientation whose bit ``e`` reverses the ``e``-th edge in sorted order."""
        arcs = []
        for e, (u, v) in enumerate(self.sorted_edges()):
            arcs.append((v, u) if mask >> e & 1 else (u, v))
        return Digraph(self.n, frozenset(arcs))

    def as_symmetric_digraph(self) -> Digraph:
        return Digraph(self.n, frozenset(self.edges | {(v, u) for u, v in self.edges}))


def reverse_digraph(d: Digraph) -> Digraph:
    return Digraph(d.n, frozenset((v, u) for u, v in d.arcs))


def gen_complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, frozenset(itertools.combinations(range(n), 2)))


def _rim_edges(r: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % r) for i in range(r)]


def gen_wheel(n: int) -> Graph:
    """Wheel on ``n`` vertices: rim cycle ``0..n-2`` and centre ``n-1``."""
    if n < 4:
        raise ValueError(f"wheel needs n >= 4, got {n}")
    r = n - 1
    return Graph(n, frozenset(_rim_edges(r) + [(i, r) for i in range(r)]))


def gen_fan(n: int) -> Graph:
    """Fan on ``n`` vertices: centre ``0`` joined to every vertex of the path ``1..n-1``."""
    if n < 4:
        raise ValueError(f"fan needs n >= 4, got {n}")
    spokes = [(0, i) for i in range(1, n)]
    path = [(i, i + 1) for i in range(1, n - 1)]
    return Graph(n, frozenset(spokes + path))


def gen_cycle_out_wheel(n: int) -> Digraph:
    """Wheel with every spoke leaving the centre and the rim a directed cycle."""
    if n < 4:
        raise ValueError(f"wheel needs n >= 4, got {n}")
    r = n - 1
    return Digraph(n, frozenset(_rim_edges(r) + [(r, i) for i in range(r)]))


def gen_cycle_out_fan(n: int) -> Digraph:
    """Fan with every spoke leaving the centre and the path directed ``1 -> n-1``."""
    if n < 4:
        raise ValueError(f"fan needs n >= 4, got {n}")
    spokes = [(0, i) for i in range(1, n)]
    path = [(i, i + 1) for i in range(1, n - 1)]
    return Digraph(n, frozenset(spokes + path))


def gen_parallel_edges_graph(n: int) -> Graph:
    """Three disjoint edges plus ``n - 6`` isolated vertices."""
    if n < 6:
        raise ValueError(f"three parallel edges need n >= 6, got {n}")
    return Graph(n, frozenset({(0, 1), (2, 3), (4, 5)}))


def tournament_pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def tournament_from_index(n: int, index: int) -> Tournament:
    """Labelled tournament number ``index``: bit ``e`` set reverses pair ``e`` to point high -> low."""
    arcs = []
    for e, (i, j) in enumerate(tournament_pairs(n)):
        arcs.append((j, i) if index >> e & 1 else (i, j))
    return Tournament(n, frozenset(arcs))


def enumerate_tournaments(
    n: int, start: int = 0, stop: int | None = None
) -> Iterator[Tournament]:
    """All ``2**C(n,2)`` labelled tournaments in ascending index order.

    ``start``/``stop`` select an index range so callers can partition the
    stream between workers.
    """
    if not 1 <= n <= MAX_TOURNAMENT_ORDER:
        raise ValueError(f"tournament enumeration supports 1 <= n <= {MAX_TOURNAMENT_ORDER}, got {n}")
    total = 1 << (n * (n - 1) // 2)
    stop = total if stop is None else min(stop, total)
    for index in range(start, stop):
        yield tournament_from_index(n, index)


def out_degree_sequence(d: Digraph) -> OutDegreeSequence:
    return tuple(sorted(d.out_degrees(), reverse=True))


def adjacency_matrix(d: Digraph) -> np.ndarray:
    adj = np.zeros((d.n, d.n), dtype=np.uint8)
    for u, v in d.arcs:
        adj[u, v] = 1
    return adj


def _permutation_chunks(n: int, size: int = 40320) -> Iterator[np.ndarray]:
    perms = itertools.permutations(range(n))
    while True:
        chunk = list(itertools.islice(perms, size))
        if not chunk:
            return
        yield np.array(chunk, dtype=np.intp)


def _lexmin_rows(rows: np.ndarray) -> np.ndarray:
    for col in range(rows.shape[1]):
        column = rows[:, col]
        rows = rows[column == column.min()]
        if len(rows) == 1:
            break
    return rows[0]


def _min_relabelled_bits(adj: np.ndarray) -> np.ndarray:
    n = adj.shape[0]
    flat = adj.reshape(-1)
    best = None
    for perms in _permutation_chunks(n):
        idx = (perms[:, :, None] * n + perms[:, None, :]).reshape(len(perms), n * n)
        cand = _lexmin_rows(flat[idx])
        if best is None or tuple(cand) < tuple(best):
            best = cand
    if best is None:  # n == 0
        return np.zeros(0, dtype=np.uint8)
    return best


def _form_bytes(n: int, bits: np.ndarray) -> bytes:
    return bytes([n]) + np.packbits(bits.astype(np.uint8)).tobytes()


def canonical_form(d: Digraph) -> bytes:
    """Isomorphism invariant: the lexicographically least row-major adjacency
    bit string over all vertex relabellings, prefixed by ``n``.
    """
    if d.n > MAX_CANONICAL_ORDER:
        raise ValueError(f"canonical_form supports n <= {MAX_CANONICAL_ORDER}, got {d.n}")
    return _form_bytes(d.n, _min_relabelled_bits(adjacency_matrix(d)))


def canonical_forms_batch(n: int, adjs: np.ndarray) -> list[bytes]:
    """Canonical forms for a stack of ``n x n`` adjacency matrices (``n <= 7``).

    Same definition as :func:`canonical_form`; vectorised over the stack by
    packing each relabelled matrix into a single integer, most significant
    bit first.
    """
    if n > 7:
        raise ValueError("batched canonicalisation packs into 63 bits; use canonical_form")
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp)
    idx = (perms[:, :, None] * n + perms[:, None, :]).reshape(len(perms), n * n)
    weights = (np.int64(1) << np.arange(n * n - 1, -1, -1, dtype=np.int64)).astype(np.int64)
    flat = adjs.reshape(len(adjs), n * n).astype(np.int64)
    codes = np.empty(len(adjs), dtype=np.int64)
    chunk = max(1, (1 << 22) // idx.size)
    for lo in range(0, len(adjs), chunk):
        block = flat[lo : lo + chunk]
        codes[lo : lo + chunk] = (block[:, idx] @ weights).min(axis=1)
    out = []
    for code in codes.tolist():
        bits = np.array([(code >> (n * n - 1 - k)) & 1 for k in range(n * n)], dtype=np.uint8)
        out.append(_form_bytes(n, bits))
    return out


def connected_graph_classes(n: int) -> list[Graph]:
    """One representative (first in edge-subset order) of each connected graph on ``n`` vertices."""
    if not 1 <= n <= 6:
        raise ValueError(f"connected graph sweep supports 1 <= n <= 6, got {n}")
    pairs = list(itertools.combinations(range(n), 2))
    seen: set[bytes] = set()
    reps = []
    for mask in range(1 << len(pairs)):
        g = Graph(n, frozenset(p for e, p in enumerate(pairs) if mask >> e & 1))
        if not g.is_connected():
            continue
        form = canonical_form(g.as_symmetric_digraph())
        if form not in seen:
            seen.add(form)
            reps.append(g)
    return reps
