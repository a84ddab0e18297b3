"""The reconfiguration graph of minimum zero forcing sets.

Nodes are the minimum zero forcing sets of a base graph; two nodes are
adjacent when their symmetric difference has exactly two elements, i.e. one
set turns into the other by swapping a single vertex (token jumping). Node
order follows the sorted catalog, so everything downstream is byte-stable.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass

from .forcing import enumerate_min_zfs
from .graphs import (
    Graph,
    VertexSet,
    cartesian_product,
    connected_components,
    contains_induced_c3_or_c4,
    disjoint_union,
    has_triangle,
    is_connected,
    is_isomorphic,
    max_clique_size,
)
from .graphs import CLIQUE_CAP_DEFAULT, ISO_CAP_DEFAULT


@dataclass(frozen=True)
class ReconfigGraph:
    """Reconfiguration graph tagged with provenance of its base graph."""

    base_signature: str
    z: int
    nodes: tuple[VertexSet, ...]
    graph: Graph


@dataclass(frozen=True)
class ZfgStats:
    order: int
    max_degree: int
    clique_number: int
    triangle_free: bool
    c3c4_free: bool


def graph_signature(G: Graph) -> str:
    """Short stable hash identifying a graph up to equality (not isomorphism)."""
    text = f"{G.n};" + ",".join(f"{u}-{v}" for u, v in G.edges)
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def build_zfg(G: Graph, cap: int | None = None, jobs: int = 1) -> ReconfigGraph:
    """Enumerate the minimum sets of G and wire up the swap adjacency."""
    catalog = enumerate_min_zfs(G, cap=cap, jobs=jobs)
    nodes = catalog.sets
    as_sets = [set(s) for s in nodes]
    want = catalog.z - 1
    edges = [
        (i, j)
        for i in range(len(nodes))
        for j in range(i + 1, len(nodes))
        if len(as_sets[i] & as_sets[j]) == want
    ]
    return ReconfigGraph(
        base_signature=graph_signature(G),
        z=catalog.z,
        nodes=nodes,
        graph=Graph(len(nodes), edges),
    )


def zfg_is_connected(R: ReconfigGraph) -> bool:
    return is_connected(R.graph)


def zfg_components(R: ReconfigGraph) -> list[VertexSet]:
    """Connected components of the reconfiguration graph, as node indices."""
    return connected_components(R.graph)


def zfg_distance(R: ReconfigGraph, A, B) -> int | None:
    """Fewest single-vertex swaps from node A to node B; None if unreachable."""
    index = {s: i for i, s in enumerate(R.nodes)}
    a = tuple(sorted(A))
    b = tuple(sorted(B))
    if a not in index or b not in index:
        raise ValueError("both endpoints must be minimum zero forcing sets")
    src, dst = index[a], index[b]
    if src == dst:
        return 0
    dist = {src: 0}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        for w in R.graph.neighbors(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                if w == dst:
                    return dist[w]
                queue.append(w)
    return None


def product_law_check(G: Graph, H: Graph, cap: int | None = None) -> bool:
    """Check that the reconfiguration graph of a disjoint union factors.

    The nodes of the union's reconfiguration graph must be exactly the
    pairwise unions X | (Y shifted by |V(G)|) of the factor nodes, and that
    correspondence must map edges onto the Cartesian product's edges
    exactly. The correspondence is itself an isomorphism witness; an
    independent backtracking isomorphism check runs too when the graphs are
    small enough.
    """
    rg = build_zfg(G, cap=cap)
    rh = build_zfg(H, cap=cap)
    ru = build_zfg(disjoint_union(G, H), cap=cap)
    prod = cartesian_product(rg.graph, rh.graph)
    if len(ru.nodes) != len(rg.nodes) * len(rh.nodes):
        return False
    shift = G.n
    index = {s: i for i, s in enumerate(ru.nodes)}
    hn = len(rh.nodes)
    perm = []
    for x in rg.nodes:
        for y in rh.nodes:
            merged = tuple(sorted(x + tuple(v + shift for v in y)))
            if merged not in index:
                return False
            perm.append(index[merged])
    if len(set(perm)) != len(perm):
        return False
    mapped = {tuple(sorted((perm[a], perm[b]))) for a, b in prod.edges}
    if mapped != set(ru.graph.edges):
        return False
    if prod.n <= ISO_CAP_DEFAULT:
        return is_isomorphic(ru.graph, prod)
    return True


def zfg_stats(R: ReconfigGraph, clique_cap: int = CLIQUE_CAP_DEFAULT) -> ZfgStats:
    """Order, max degree, clique number, and cycle-freeness flags of R."""
    g = R.graph
    return ZfgStats(
        order=g.n,
        max_degree=g.max_degree,
        clique_number=max_clique_size(g, cap=clique_cap),
        triangle_free=not has_triangle(g),
        c3c4_free=not contains_induced_c3_or_c4(g),
    )
