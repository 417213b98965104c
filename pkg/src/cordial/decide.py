"""Exhaustive (2,3)-cordiality and (2,3)-orientability decisions.

The fast paths scan friendly labellings in ascending bitmask order with
numpy, one chunk at a time, and stop at the first hit, so a witness is
always the enumeration-order minimum. When the in-scope vertex count is
even only masks with the top bit clear are scanned: the complement of a
labelling is friendly, swaps the +1/-1 counts and is numerically smaller
whenever the top bit is set, so the first witness is never skipped.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterator

import numpy as np

from .graphs import (
    Digraph,
    Graph,
    Tournament,
    canonical_forms_batch,
    gen_complete_graph,
    out_degree_sequence,
    tournament_from_index,
    tournament_pairs,
)
from .labelling import (
    CapExceededError,
    LambdaTriple,
    Scope,
    VertexLabelling,
    enumerate_friendly_labellings,
    friendly_masks,
    friendly_space_size,
    in_scope_vertices,
    is_cordial_triple,
    is_friendly,
    labelling_from_mask,
    lambda_of,
)

MAX_ORACLE_EDGES = 16


class FalsifiedClaimError(RuntimeError):
    """An exhaustive check found a counterexample to a claimed result."""


@dataclass(frozen=True)
class Witness:
    labelling: VertexLabelling
    orientation: Digraph | None
    lam: LambdaTriple

    def to_dict(self) -> dict:
        return {
            "labelling": list(self.labelling.labels),
            "orientation": None
            if self.orientation is None
            else [list(a) for a in self.orientation.sorted_arcs()],
            "lambda": self.lam.as_dict(),
        }


@dataclass(frozen=True)
class Verdict:
    decision: bool
    witness: Witness | None
    search_space: int

    def to_dict(self) -> dict:
        return {
            "decision": self.decision,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "search_space": self.search_space,
        }


def _mask_chunks(p: int, limit: int, size: int) -> Iterator[np.ndarray]:
    masks = itertools.islice(friendly_masks(p), limit)
    while True:
        chunk = np.fromiter(itertools.islice(masks, size), dtype=np.int64)
        if len(chunk) == 0:
            return
        yield chunk


def _scan(
    p: int,
    tails: list[int],
    heads: list[int],
    accept: Callable[[np.ndarray, np.ndarray], np.ndarray],
) -> tuple[int | None, int]:
    """First accepted mask and the number of masks examined.

    ``accept`` receives the label matrices of arc tails and heads
    (``chunk x m``) and returns a boolean per row.
    """
    total = friendly_space_size(p)
    limit = total // 2 if p and p % 2 == 0 else total
    size = max(1024, (1 << 21) // max(len(tails), 1))
    u = np.array(tails, dtype=np.int64)
    v = np.array(heads, dtype=np.int64)
    seen = 0
    for chunk in _mask_chunks(p, limit, size):
        fu = (chunk[:, None] >> u[None, :]) & 1
        fv = (chunk[:, None] >> v[None, :]) & 1
        hits = np.flatnonzero(accept(fu, fv))
        if len(hits):
            return int(chunk[hits[0]]), seen + int(hits[0]) + 1
        seen += len(chunk)
    return None, seen


def _positions(host, scope: Scope) -> tuple[list[int], dict[int, int]]:
    vertices = in_scope_vertices(host, scope)
    if len(vertices) > 32:
        raise CapExceededError(f"{len(vertices)} in-scope vertices exceeds the cap of 32")
    return vertices, {v: i for i, v in enumerate(vertices)}


def _cordial_rows(fu: np.ndarray, fv: np.ndarray) -> np.ndarray:
    alpha = ((1 - fu) & fv).sum(axis=1)
    beta = (fu & (1 - fv)).sum(axis=1)
    gamma = fu.shape[1] - alpha - beta
    hi = np.maximum(np.maximum(alpha, beta), gamma)
    lo = np.minimum(np.minimum(alpha, beta), gamma)
    return hi - lo <= 1


def is_23_cordial(d: Digraph, scope: Scope | str = Scope.NONISOLATED) -> Verdict:
    """Decide whether some friendly labelling of ``d`` induces a cordial triple."""
    scope = Scope(scope)
    vertices, pos = _positions(d, scope)
    arcs = d.sorted_arcs()
    mask, seen = _scan(
        len(vertices), [pos[a] for a, _ in arcs], [pos[b] for _, b in arcs], _cordial_rows
    )
    if mask is None:
        return Verdict(False, None, seen)
    f = labelling_from_mask(d.n, vertices, mask, scope)
    return Verdict(True, Witness(f, None, lambda_of(d, f)), seen)


def cordial_feasible_triple(m: int, z: int) -> bool:
    """Can ``m - z`` bichromatic edges be split into +1/-1 so that, with
    ``z`` zero-labelled arcs, all three counts are within one of each other?

    The balanced split is optimal: any other split widens the +1/-1 gap
    without moving either count closer to ``z``.
    """
    if not 0 <= z <= m:
        raise ValueError(f"need 0 <= z <= m, got m={m}, z={z}")
    b = m - z
    return is_cordial_triple(((b + 1) // 2, b // 2, z))


def _feasible_rows(m: int) -> Callable[[np.ndarray, np.ndarray], np.ndarray]:
    def accept(fu: np.ndarray, fv: np.ndarray) -> np.ndarray:
        z = (fu == fv).sum(axis=1)
        b = m - z
        return (np.abs(z - (b + 1) // 2) <= 1) & (np.abs(z - b // 2) <= 1)

    return accept


def witness_orientation(g: Graph, f: VertexLabelling) -> Digraph:
    """Deterministic orientation realising the balanced split for ``f``.

    The first ``ceil(B/2)`` bichromatic edges (sorted order) point from the
    0-end to the 1-end, the rest the other way; monochromatic edges point
    from the lower to the higher vertex.
    """
    edges = g.sorted_edges()
    bichromatic = [(u, v) for u, v in edges if f[u] != f[v]]
    up = (len(bichromatic) + 1) // 2
    arcs = []
    for u, v in edges:
        if f[u] == f[v]:
            arcs.append((u, v))
            continue
        lo, hi = (u, v) if f[u] == 0 else (v, u)
        rank = bichromatic.index((u, v))
        arcs.append((lo, hi) if rank < up else (hi, lo))
    return Digraph(g.n, frozenset(arcs))


def is_23_orientable(g: Graph, scope: Scope | str = Scope.NONISOLATED) -> Verdict:
    """Decide orientability through the monochromatic-edge count of each labelling."""
    scope = Scope(scope)
    vertices, pos = _positions(g, scope)
    edges = g.sorted_edges()
    mask, seen = _scan(
        len(vertices),
        [pos[a] for a, _ in edges],
        [pos[b] for _, b in edges],
        _feasible_rows(len(edges)),
    )
    if mask is None:
        return Verdict(False, None, seen)
    f = labelling_from_mask(g.n, vertices, mask, scope)
    d = witness_orientation(g, f)
    return Verdict(True, Witness(f, d, lambda_of(d, f)), seen)


def brute_force_orientable_oracle(g: Graph, scope: Scope | str = Scope.NONISOLATED) -> bool:
    """Try all ``2**m`` orientations against every friendly labelling.

    Built only from the labelling primitives so that it shares no code
    with the vectorised search above.
    """
    m = len(g.edges)
    if m > MAX_ORACLE_EDGES:
        raise CapExceededError(f"{m} edges exceeds the oracle cap of {MAX_ORACLE_EDGES}")
    labellings = list(enumerate_friendly_labellings(g, scope))
    for mask in range(1 << m):
        d = g.orient(mask)
        for f in labellings:
            if is_friendly(f, g) and is_cordial_triple(lambda_of(d, f)):
                return True
    return False


def monochromatic_census(g: Graph, scope: Scope | str = Scope.NONISOLATED) -> set[int]:
    """Distinct monochromatic-edge counts over all friendly labellings."""
    edges = g.sorted_edges()
    return {
        sum(f[u] == f[v] for u, v in edges) for f in enumerate_friendly_labellings(g, scope)
    }


@dataclass(frozen=True)
class CensusRow:
    form: bytes
    out_degrees: tuple[int, ...]
    size: int
    cordial: bool
    representative: int

    def to_dict(self) -> dict:
        return {
            "canonical_form": self.form.hex(),
            "out_degree_sequence": list(self.out_degrees),
            "class_size": self.size,
            "cordial": self.cordial,
            "representative_index": self.representative,
        }


@dataclass
class CensusReport:
    n: int
    total: int
    cordial: int
    noncordial: int
    rows: list[CensusRow] = field(default_factory=list)

    def merge(self, other: CensusReport) -> CensusReport:
        """Combine partial censuses taken over disjoint index ranges."""
        if other.n != self.n:
            raise ValueError("cannot merge censuses of different orders")
        by_form: dict[bytes, CensusRow] = {r.form: r for r in self.rows}
        for r in other.rows:
            if r.form in by_form:
                old = by_form[r.form]
                by_form[r.form] = CensusRow(
                    r.form,
                    r.out_degrees,
                    old.size + r.size,
                    old.cordial,
                    min(old.representative, r.representative),
                )
            else:
                by_form[r.form] = r
        return CensusReport(
            self.n,
            self.total + other.total,
            self.cordial + other.cordial,
            self.noncordial + other.noncordial,
            sorted(by_form.values(), key=lambda r: r.form),
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "cordial": self.cordial,
            "noncordial": self.noncordial,
            "classes": [r.to_dict() for r in self.rows],
        }


def _tournament_bits(n: int, start: int, stop: int) -> np.ndarray:
    m = n * (n - 1) // 2
    idx = np.arange(start, stop, dtype=np.int64)
    return ((idx[:, None] >> np.arange(m, dtype=np.int64)[None, :]) & 1).astype(np.int8)


def _tournament_adjacency(n: int, bits: np.ndarray) -> np.ndarray:
    adj = np.zeros((len(bits), n, n), dtype=np.uint8)
    for e, (i, j) in enumerate(tournament_pairs(n)):
        adj[:, i, j] = 1 - bits[:, e]
        adj[:, j, i] = bits[:, e]
    return adj


def tournament_census(n: int, start: int = 0, stop: int | None = None) -> CensusReport:
    """Group labelled tournaments by isomorphism class and decide each class once."""
    if not 3 <= n <= 6:
        raise ValueError(f"tournament census supports 3 <= n <= 6, got {n}")
    total = 1 << (n * (n - 1) // 2)
    stop = total if stop is None else min(stop, total)
    adj = _tournament_adjacency(n, _tournament_bits(n, start, stop))
    classes: dict[bytes, list[int]] = defaultdict(list)
    for offset, form in enumerate(canonical_forms_batch(n, adj)):
        classes[form].append(start + offset)
    rows = []
    for form, members in sorted(classes.items()):
        rep = tournament_from_index(n, members[0])
        rows.append(
            CensusRow(form, out_degree_sequence(rep), len(members), is_23_cordial(rep).decision, members[0])
        )
    cordial = sum(r.size for r in rows if r.cordial)
    return CensusReport(n, stop - start, cordial, stop - start - cordial, rows)


def labelled_tournament_cordiality(n: int) -> np.ndarray:
    """Cordiality flag for every labelled tournament, indexed as in
    :func:`~cordial.graphs.enumerate_tournaments`, decided directly rather
    than per isomorphism class.
    """
    if not 1 <= n <= 7:
        raise ValueError(f"direct tournament sweep supports n <= 7, got {n}")
    bits = _tournament_bits(n, 0, 1 << (n * (n - 1) // 2))
    flip = 1 - 2 * bits.astype(np.int64)
    pairs = tournament_pairs(n)
    flags = np.zeros(len(bits), dtype=bool)
    host = gen_complete_graph(n)
    for f in enumerate_friendly_labellings(host, Scope.ALL):
        sign = np.array([f[j] - f[i] for i, j in pairs], dtype=np.int64)
        lab = flip * sign[None, :]
        alpha = (lab == 1).sum(axis=1)
        beta = (lab == -1).sum(axis=1)
        gamma = (lab == 0).sum(axis=1)
        hi = np.maximum(np.maximum(alpha, beta), gamma)
        lo = np.minimum(np.minimum(alpha, beta), gamma)
        flags |= hi - lo <= 1
    return flags


def extremal_zero_count(n: int) -> int:
    """Monochromatic edges of ``K_n`` under a friendly labelling."""
    return comb((n + 1) // 2, 2) + comb(n // 2, 2)


def max_arcs(n: int) -> int:
    """Closed-form bound on the size of a (2,3)-cordial digraph on ``n >= 6`` vertices."""
    if n < 6:
        raise ValueError(f"max_arcs is stated for n >= 6, got {n}")
    bichromatic = comb(n, 2) - extremal_zero_count(n)
    return bichromatic + (bichromatic + 1) // 2


@dataclass
class ExtremalReport:
    n: int
    bound: int
    zero_count: int
    witness: Digraph
    witness_labelling: VertexLabelling
    witness_cordial: bool
    subsets_examined: int
    orientable_above_bound: list[list[tuple[int, int]]]

    @property
    def confirmed(self) -> bool:
        return self.witness_cordial and not self.orientable_above_bound

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "bound": self.bound,
            "Z": self.zero_count,
            "witness": {
                "labelling": list(self.witness_labelling.labels),
                "orientation": [list(a) for a in self.witness.sorted_arcs()],
                "lambda": lambda_of(self.witness, self.witness_labelling).as_dict(),
            },
            "witness_cordial": self.witness_cordial,
            "subsets_examined": self.subsets_examined,
            "orientable_above_bound": len(self.orientable_above_bound),
            "first_orientable_above_bound": [
                list(e) for e in self.orientable_above_bound[0]
            ]
            if self.orientable_above_bound
            else None,
            "confirmed": self.confirmed,
        }


def extremal_witness(n: int) -> tuple[Digraph, VertexLabelling]:
    """A ``max_arcs(n)``-arc orientation of a subgraph of ``K_n`` with its labelling.

    Vertices below ``ceil(n/2)`` get label 0; every bichromatic edge is kept
    and monochromatic edges are kept in sorted order up to the bound.
    """
    bound = max_arcs(n)
    f = VertexLabelling(tuple(0 if v < (n + 1) // 2 else 1 for v in range(n)))
    edges = gen_complete_graph(n).sorted_edges()
    bichromatic = [e for e in edges if f[e[0]] != f[e[1]]]
    mono = [e for e in edges if f[e[0]] == f[e[1]]][: bound - len(bichromatic)]
    g = Graph(n, frozenset(bichromatic + mono))
    return witness_orientation(g, f), f


def verify_extremal_bound(n: int) -> ExtremalReport:
    """Check the closed-form bound at ``n`` in {6, 7} by exhaustive subset sweep."""
    if not 6 <= n <= 7:
        raise ValueError(f"extremal verification supports n in 6..7, got {n}")
    bound = max_arcs(n)
    witness, f = extremal_witness(n)
    ok = (
        len(witness.arcs) == bound
        and is_friendly(f, witness)
        and is_cordial_triple(lambda_of(witness, f))
        and is_23_cordial(witness).decision
    )
    edges = gen_complete_graph(n).sorted_edges()
    examined = 0
    orientable = []
    for subset in itertools.combinations(edges, bound + 1):
        examined += 1
        if is_23_orientable(Graph(n, frozenset(subset))).decision:
            orientable.append(list(subset))
    return ExtremalReport(n, bound, extremal_zero_count(n), witness, f, ok, examined, orientable)


# The two non-cordial 4-tournaments: T43 has out-degrees (2,2,2,0), T44 has (3,1,1,1).
T43 = Tournament(4, frozenset({(2, 0), (2, 3), (3, 1), (1, 0), (1, 2), (3, 0)}))
T44 = Tournament(4, frozenset({(0, 2), (2, 3), (3, 1), (0, 1), (1, 2), (0, 3)}))


def add_twin(d: Digraph, x: int) -> Digraph:
    """Append a vertex that copies the arcs of ``x`` and receives an arc from ``x``."""
    w = d.n
    arcs = set(d.arcs)
    for u, v in d.arcs:
        if u == x:
            arcs.add((w, v))
        elif v == x:
            arcs.add((u, w))
    arcs.add((x, w))
    return Digraph(d.n + 1, frozenset(arcs))


def contract_arc(d: Digraph, x: int, w: int) -> Digraph:
    """Merge ``w`` into ``x``; the arc between them disappears."""
    if (x, w) not in d.arcs and (w, x) not in d.arcs:
        raise ValueError(f"no arc between {x} and {w}")
    merged = set()
    for u, v in d.arcs:
        u, v = (x if u == w else u), (x if v == w else v)
        if u != v:
            merged.add((u, v))
    return Digraph(d.n, frozenset(merged)).delete_vertex(w)


@dataclass
class NonClosureReport:
    chain: list[Digraph]
    cordial: list[bool]
    deletion_ok: bool
    contraction_ok: bool

    def to_dict(self) -> dict:
        return {
            "chain": [[list(a) for a in d.sorted_arcs()] for d in self.chain],
            "cordial": self.cordial,
            "deletion_recovers": self.deletion_ok,
            "contraction_recovers": self.contraction_ok,
        }


def non_closure_witnesses() -> NonClosureReport:
    """Non-cordial ``T43`` inside a cordial 5-tournament inside a non-cordial
    6-tournament.

    Each step adds a twin of vertex 0, so deleting the new vertex and
    contracting the arc from vertex 0 into it both undo the step.
    """
    chain = [T43, add_twin(T43, 0)]
    chain.append(add_twin(chain[1], 0))
    cordial = [is_23_cordial(d).decision for d in chain]
    if cordial != [False, True, False]:
        raise FalsifiedClaimError(f"expected cordiality pattern [F, T, F], got {cordial}")
    deletion = all(chain[i + 1].delete_vertex(chain[i].n) == chain[i] for i in range(2))
    contraction = all(contract_arc(chain[i + 1], 0, chain[i].n) == chain[i] for i in range(2))
    if not (deletion and contraction):
        raise FalsifiedClaimError("extension is not undone by deletion/contraction")
    return NonClosureReport(chain, cordial, deletion, contraction)
