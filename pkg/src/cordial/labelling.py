"""Friendly (0,1) vertex labellings and the induced +1/-1/0 arc labelling."""

from __future__ import annotations

import enum
import heapq
import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterator, NamedTuple, Union

from .graphs import Digraph, Graph

MAX_LABELLED_VERTICES = 32

Host = Union[Digraph, Graph]


class Scope(str, enum.Enum):
    """Which vertices the friendliness count ranges over."""

    NONISOLATED = "nonisolated"
    ALL = "all"


class CapExceededError(ValueError):
    """A search would exceed one of the documented size caps."""


@dataclass(frozen=True)
class VertexLabelling:
    labels: tuple[int, ...]
    scope: Scope = Scope.NONISOLATED

    def __post_init__(self) -> None:
        labels = tuple(int(b) for b in self.labels)
        if any(b not in (0, 1) for b in labels):
            raise ValueError(f"labels must be 0 or 1, got {labels}")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "scope", Scope(self.scope))

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    def __len__(self) -> int:
        return len(self.labels)


class LambdaTriple(NamedTuple):
    alpha: int
    beta: int
    gamma: int

    def as_dict(self) -> dict[str, int]:
        return {"alpha": self.alpha, "beta": self.beta, "gamma": self.gamma}


class LambdaSplit(NamedTuple):
    spoke: LambdaTriple
    rim: LambdaTriple


def in_scope_vertices(host: Host, scope: Scope | str = Scope.NONISOLATED) -> list[int]:
    if Scope(scope) is Scope.ALL:
        return list(range(host.n))
    return host.nonisolated()


def is_friendly(f: VertexLabelling, host: Host) -> bool:
    vertices = in_scope_vertices(host, f.scope)
    if vertices and vertices[-1] >= len(f):
        raise ValueError(f"labelling has {len(f)} labels but vertex {vertices[-1]} is in scope")
    ones = sum(f[v] for v in vertices)
    return abs(len(vertices) - 2 * ones) <= 1


def arc_label(f: VertexLabelling, u: int, v: int) -> int:
    return f[v] - f[u]


def induce_arc_labelling(d: Digraph, f: VertexLabelling) -> dict[tuple[int, int], int]:
    if len(f) < d.n:
        raise ValueError(f"labelling covers {len(f)} vertices, digraph has {d.n}")
    return {(u, v): f[v] - f[u] for u, v in d.sorted_arcs()}


def _count(labels) -> LambdaTriple:
    labels = list(labels)
    return LambdaTriple(labels.count(1), labels.count(-1), labels.count(0))


def lambda_of(d: Digraph, f: VertexLabelling) -> LambdaTriple:
    """Counts of arcs labelled +1, -1 and 0."""
    return _count(induce_arc_labelling(d, f).values())


def lambda_split(d: Digraph, center: int, f: VertexLabelling) -> LambdaSplit:
    if not 0 <= center < d.n:
        raise ValueError(f"centre {center} not a vertex of a {d.n}-vertex digraph")
    g = induce_arc_labelling(d, f)
    spoke = _count(lab for arc, lab in g.items() if center in arc)
    rim = _count(lab for arc, lab in g.items() if center not in arc)
    return LambdaSplit(spoke, rim)


def is_cordial_triple(t: tuple[int, int, int]) -> bool:
    return max(t) - min(t) <= 1


def complement_labelling(f: VertexLabelling) -> VertexLabelling:
    return VertexLabelling(tuple(1 - b for b in f.labels), f.scope)


def bichromatic_count(edges, f: VertexLabelling) -> int:
    return sum(f[u] != f[v] for u, v in edges)


def friendly_counts(p: int) -> tuple[int, ...]:
    """Admissible numbers of 1-labels among ``p`` in-scope vertices."""
    return (p // 2,) if p % 2 == 0 else (p // 2, p // 2 + 1)


def friendly_space_size(p: int) -> int:
    return sum(comb(p, k) for k in friendly_counts(p))


def _same_popcount_ascending(p: int, k: int) -> Iterator[int]:
    if k == 0:
        yield 0
        return
    if k > p:
        return
    mask = (1 << k) - 1
    limit = 1 << p
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = (((ripple ^ mask) >> 2) // low) | ripple


def friendly_masks(p: int) -> Iterator[int]:
    """Every friendly labelling of ``p`` vertices as a bitmask, ascending.

    Bit ``i`` is the label of the ``i``-th in-scope vertex.
    """
    if p > MAX_LABELLED_VERTICES:
        raise CapExceededError(f"{p} in-scope vertices exceeds the cap of {MAX_LABELLED_VERTICES}")
    streams = [_same_popcount_ascending(p, k) for k in friendly_counts(p)]
    if len(streams) == 1:
        yield from streams[0]
    else:
        yield from heapq.merge(*streams)


def labelling_from_mask(
    n: int, vertices: list[int], mask: int, scope: Scope | str = Scope.NONISOLATED
) -> VertexLabelling:
    """Expand a mask over ``vertices``; vertices outside scope get label 0."""
    labels = [0] * n
    for i, v in enumerate(vertices):
        labels[v] = mask >> i & 1
    return VertexLabelling(tuple(labels), Scope(scope))


def enumerate_friendly_labellings(
    host: Host,
    scope: Scope | str = Scope.NONISOLATED,
    start: int = 0,
    stop: int | None = None,
) -> Iterator[VertexLabelling]:
    """Every friendly labelling of ``host`` once, in ascending mask order.

    ``start``/``stop`` slice the stream by position so it can be split
    between workers.
    """
    vertices = in_scope_vertices(host, scope)
    masks = itertools.islice(friendly_masks(len(vertices)), start, stop)
    for mask in masks:
        yield labelling_from_mask(host.n, vertices, mask, scope)
