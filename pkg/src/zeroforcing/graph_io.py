"""Graph file formats shared by the command line tools.

Two readable formats plus a render-only export:
* edge-list text: first line "n m", then m lines "u v";
* structured JSON: {"n": int, "edges": [[u, v], ...]};
* DOT (export only), with optional node labels.
Readers auto-detect the format; writers emit canonically sorted edges, so
round trips are byte-stable.
"""

from __future__ import annotations

import json

from .graphs import Graph


def parse_edge_list(text: str) -> Graph:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"expected header 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError(f"expected integer header 'n m', got {lines[0]!r}") from None
    body = lines[1:]
    if len(body) != m:
        raise ValueError(f"header promises {m} edges, found {len(body)} lines")
    edges = []
    for line in body:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"expected edge line 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"expected integer endpoints, got {line!r}") from None
    return Graph(n, edges)


def parse_structured(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON graph: {exc}") from None
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ValueError('structured graph must be {"n": int, "edges": [[u, v], ...]}')
    return Graph(data["n"], [tuple(e) for e in data["edges"]])


def loads(text: str) -> Graph:
    """Parse either readable format, detected by the leading character."""
    if text.lstrip().startswith("{"):
        return parse_structured(text)
    return parse_edge_list(text)


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def to_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {len(G.edges)}"]
    lines += [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def to_structured(G: Graph) -> str:
    return json.dumps({"n": G.n, "edges": [list(e) for e in G.edges]}) + "\n"


def to_dot(G: Graph, labels: dict[int, str] | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(G.n):
        if labels and v in labels:
            lines.append(f'  {v} [label="{labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in G.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps(G: Graph, fmt: str, labels: dict[int, str] | None = None) -> str:
    if fmt == "edgelist":
        return to_edge_list(G)
    if fmt in ("json", "data"):
        return to_structured(G)
    if fmt == "dot":
        return to_dot(G, labels=labels)
    raise ValueError(f"unknown graph format: {fmt!r}")
