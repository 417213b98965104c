"""Plain-text graph and labelling formats, plus DOT export.

Graph files::

    # comment
    D 3 2        (or ``G n m`` for an undirected graph)
    0 1
    1 2

Labelling files::

    L 3
    0 1
    1 0
    2 1
"""

from __future__ import annotations

from typing import Union

from .graphs import Digraph, Graph
from .labelling import Scope, VertexLabelling, induce_arc_labelling


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((number, body.split()))
    return out


def _ints(tokens: list[str], count: int, line: int) -> list[int]:
    if len(tokens) != count:
        raise ParseError(f"expected {count} fields, got {len(tokens)}", line)
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"non-integer field in {' '.join(tokens)!r}", line) from None


def parse_graph_text(text: str) -> Union[Digraph, Graph]:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input")
    line, header = lines[0]
    if not header or header[0] not in ("D", "G"):
        raise ParseError("header must start with 'D' or 'G'", line)
    kind = header[0]
    n, m = _ints(header[1:], 2, line)
    if n < 0 or m < 0:
        raise ParseError("vertex and edge counts must be non-negative", line)
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} {'arcs' if kind == 'D' else 'edges'}, found {len(body)}", line)
    pairs = []
    seen = set()
    for number, tokens in body:
        u, v = _ints(tokens, 2, number)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", number)
        if u == v:
            raise ParseError(f"loop at vertex {u}", number)
        key = (u, v) if kind == "D" else (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate {'arc' if kind == 'D' else 'edge'} {u} {v}", number)
        seen.add(key)
        pairs.append(key)
    if kind == "D":
        return Digraph(n, frozenset(pairs))
    return Graph(n, frozenset(pairs))


def format_graph_text(obj: Union[Digraph, Graph]) -> str:
    if isinstance(obj, Digraph):
        kind, pairs = "D", obj.sorted_arcs()
    else:
        kind, pairs = "G", obj.sorted_edges()
    lines = [f"{kind} {obj.n} {len(pairs)}"] + [f"{u} {v}" for u, v in pairs]
    return "\n".join(lines) + "\n"


def parse_labelling_text(text: str, scope: Scope | str = Scope.NONISOLATED) -> VertexLabelling:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input")
    line, header = lines[0]
    if header[0] != "L":
        raise ParseError("header must start with 'L'", line)
    (n,) = _ints(header[1:], 1, line)
    if len(lines) - 1 != n:
        raise ParseError(f"header announces {n} vertices, found {len(lines) - 1}", line)
    labels: dict[int, int] = {}
    for number, tokens in lines[1:]:
        v, b = _ints(tokens, 2, number)
        if not 0 <= v < n:
            raise ParseError(f"vertex {v} out of range", number)
        if b not in (0, 1):
            raise ParseError(f"label must be 0 or 1, got {b}", number)
        if v in labels:
            raise ParseError(f"vertex {v} labelled twice", number)
        labels[v] = b
    return VertexLabelling(tuple(labels[v] for v in range(n)), Scope(scope))


def format_labelling_text(f: VertexLabelling) -> str:
    return "\n".join([f"L {len(f)}"] + [f"{v} {b}" for v, b in enumerate(f.labels)]) + "\n"


def _signed(x: int) -> str:
    return f"+{x}" if x > 0 else str(x)


def to_dot(
    obj: Union[Digraph, Graph], labelling: VertexLabelling | None = None, name: str = "G"
) -> str:
    """DOT text; with a labelling, vertices show their label and arcs their induced label."""
    directed = isinstance(obj, Digraph)
    lines = [f"{'digraph' if directed else 'graph'} {name} {{"]
    for v in range(obj.n):
        if labelling is None:
            lines.append(f'  {v} [label="v{v}"];')
        else:
            lines.append(f'  {v} [label="v{v}: {labelling[v]}"];')
    if directed:
        arc_labels = induce_arc_labelling(obj, labelling) if labelling is not None else {}
        for u, v in obj.sorted_arcs():
            attr = f' [label="{_signed(arc_labels[(u, v)])}"]' if labelling is not None else ""
            lines.append(f"  {u} -> {v}{attr};")
    else:
        for u, v in obj.sorted_edges():
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
