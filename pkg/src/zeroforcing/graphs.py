"""Immutable simple-graph kernel.

Graphs live on dense vertex labels 0..n-1. Vertex sets are passed around as
sorted tuples of ints, which keeps every derived listing deterministic.
Adjacency is kept both as sorted neighbor tuples and as per-vertex bitmasks;
the bitmasks are what make exhaustive subset scans cheap elsewhere.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import CapacityError

VertexSet = tuple[int, ...]

ISO_CAP_DEFAULT = 16
CLIQUE_CAP_DEFAULT = 24


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Edges are canonicalized on construction: endpoints validated, pairs
    normalized to (min, max), duplicates collapsed, and the list sorted.
    Instances are hashable and safe to share across workers.
    """

    __slots__ = ("n", "edges", "_adj", "_masks", "_frozen")

    def __init__(self, n: int, edges=()):
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"vertex count must be a nonnegative int, got {n!r}")
        canon = set()
        for e in edges:
            u, v = e
            if not isinstance(u, int) or not isinstance(v, int):
                raise ValueError(f"edge endpoints must be ints, got {e!r}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {e!r} has an endpoint outside 0..{n - 1}")
            canon.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = tuple(sorted(canon))
        adj = [[] for _ in range(n)]
        masks = [0] * n
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._masks = tuple(masks)
        self._frozen = True

    def __setattr__(self, name, value):
        if getattr(self, "_frozen", False):
            raise AttributeError("Graph instances are immutable")
        super().__setattr__(name, value)

    # basic queries -------------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_mask(self, v: int) -> int:
        """Neighbors of v as a bitmask (bit i set iff i ~ v)."""
        return self._masks[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self._adj)

    @property
    def min_degree(self) -> int:
        return min(self.degrees) if self.n else 0

    @property
    def max_degree(self) -> int:
        return max(self.degrees) if self.n else 0

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._masks[u] >> v) & 1)

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


def build_graph(n: int, edges) -> Graph:
    """Construct a canonical Graph; duplicate pairs collapse, bad input raises."""
    return Graph(n, edges)


def check_vertex_set(G: Graph, members) -> VertexSet:
    """Normalize an iterable of vertex indices to a sorted tuple within G."""
    out = tuple(sorted(set(members)))
    for v in out:
        if not isinstance(v, int) or not (0 <= v < G.n):
            raise ValueError(f"vertex {v!r} outside 0..{G.n - 1}")
    return out


def bits_of(mask: int) -> tuple[int, ...]:
    """Indices of set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def mask_of(members) -> int:
    m = 0
    for v in members:
        m |= 1 << v
    return m


# combinators -------------------------------------------------------------


def disjoint_union(G: Graph, H: Graph) -> Graph:
    """Disjoint union; H's vertices are shifted up by |V(G)|."""
    shift = G.n
    edges = list(G.edges) + [(u + shift, v + shift) for u, v in H.edges]
    return Graph(G.n + H.n, edges)


def cartesian_product(G: Graph, H: Graph) -> Graph:
    """Cartesian product; vertex (i, j) is encoded as i * |V(H)| + j.

    (i, j) ~ (i', j') iff i = i' and j ~ j' in H, or j = j' and i ~ i' in G.
    """
    hn = H.n
    edges = []
    for i in range(G.n):
        base = i * hn
        for j, jp in H.edges:
            edges.append((base + j, base + jp))
    for i, ip in G.edges:
        for j in range(hn):
            edges.append((i * hn + j, ip * hn + j))
    return Graph(G.n * hn, edges)


def connected_components(G: Graph) -> list[VertexSet]:
    """Maximal connected vertex sets, each sorted, ordered by least member."""
    seen = [False] * G.n
    comps = []
    for start in range(G.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        comp = [start]
        while queue:
            v = queue.popleft()
            for w in G.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(G: Graph) -> bool:
    """True when G has at most one connected component (n <= 1 counts)."""
    return len(connected_components(G)) <= 1


def induced_subgraph(G: Graph, vertices) -> Graph:
    """Subgraph induced on the given vertices, relabeled in sorted order."""
    vs = check_vertex_set(G, vertices)
    index = {v: i for i, v in enumerate(vs)}
    edges = [(index[u], index[v]) for u, v in G.edges if u in index and v in index]
    return Graph(len(vs), edges)


# isomorphism -------------------------------------------------------------


def _joint_refinement(G: Graph, H: Graph):
    """Iterated neighbor-color refinement over both graphs with a shared
    palette. Returns (colors_G, colors_H) or None when the color histograms
    separate the graphs."""
    n = G.n
    cg = list(G.degrees)
    ch = list(H.degrees)
    if Counter(cg) != Counter(ch):
        return None
    ncolors = len(set(cg))
    while True:
        sg = [(cg[v], tuple(sorted(cg[u] for u in G.neighbors(v)))) for v in range(n)]
        sh = [(ch[v], tuple(sorted(ch[u] for u in H.neighbors(v)))) for v in range(n)]
        palette = {s: i for i, s in enumerate(sorted(set(sg) | set(sh)))}
        ng = [palette[s] for s in sg]
        nh = [palette[s] for s in sh]
        if Counter(ng) != Counter(nh):
            return None
        if len(palette) == ncolors:
            return ng, nh
        ncolors = len(palette)
        cg, ch = ng, nh


def is_isomorphic(G: Graph, H: Graph, cap: int = ISO_CAP_DEFAULT) -> bool:
    """Decide whether an edge-preserving bijection V(G) -> V(H) exists.

    Backtracking search guided by degree-partition refinement. Intended for
    small graphs; raises CapacityError above the cap rather than stalling.
    """
    if G.n > cap or H.n > cap:
        raise CapacityError(
            f"isomorphism test capped at {cap} vertices, got {G.n} and {H.n}"
        )
    if G.n != H.n or len(G.edges) != len(H.edges):
        return False
    n = G.n
    if n == 0:
        return True
    refined = _joint_refinement(G, H)
    if refined is None:
        return False
    cg, ch = refined
    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(ch[v], []).append(v)
    order = sorted(range(n), key=lambda v: (len(by_color[cg[v]]), -G.degree(v), v))
    mapping = [-1] * n
    used = [False] * n
    placed: list[int] = []

    def extend(idx: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        for h in by_color.get(cg[v], ()):
            if used[h]:
                continue
            ok = True
            for u in placed:
                if G.has_edge(v, u) != H.has_edge(h, mapping[u]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = h
            used[h] = True
            placed.append(v)
            if extend(idx + 1):
                return True
            placed.pop()
            used[h] = False
            mapping[v] = -1
        return False

    return extend(0)


# predicates and small invariants ------------------------------------------


@dataclass(frozen=True)
class GraphShape:
    """Shape flags for a graph; hypercube_dim is None unless G is some Q_d.

    The 0-vertex graph reports all flags False. K1 counts as a path and as a
    complete graph (and as Q_0), but not as a cycle or a star.
    """

    is_path: bool
    is_cycle: bool
    is_complete: bool
    is_star: bool
    hypercube_dim: int | None


@lru_cache(maxsize=None)
def _hypercube(d: int) -> Graph:
    G = Graph(1)
    k2 = Graph(2, [(0, 1)])
    for _ in range(d):
        G = cartesian_product(G, k2)
    return G


def _is_bipartite(G: Graph) -> bool:
    color = [-1] * G.n
    for start in range(G.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in G.neighbors(v):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def shape_predicates(G: Graph, iso_cap: int = ISO_CAP_DEFAULT) -> GraphShape:
    """Classify G against the named small families."""
    n, m = G.n, len(G.edges)
    if n == 0:
        return GraphShape(False, False, False, False, None)
    degs = G.degrees
    conn = is_connected(G)
    path = conn and m == n - 1 and max(degs) <= 2
    cyc = conn and n >= 3 and all(d == 2 for d in degs)
    comp = all(d == n - 1 for d in degs)
    star = conn and n >= 2 and m == n - 1 and max(degs) == n - 1
    dim = None
    if conn and n & (n - 1) == 0:
        d = n.bit_length() - 1
        if m == d * n // 2 and all(x == d for x in degs) and _is_bipartite(G):
            if is_isomorphic(G, _hypercube(d), cap=iso_cap):
                dim = d
    return GraphShape(path, cyc, comp, star, dim)


def has_triangle(G: Graph) -> bool:
    for u, v in G.edges:
        if G._masks[u] & G._masks[v]:
            return True
    return False


def contains_induced_c3_or_c4(G: Graph) -> bool:
    """True iff some 3 vertices induce a triangle or some 4 induce a 4-cycle.

    A triangle is induced as soon as it appears; an induced 4-cycle is a
    non-adjacent pair u, v with two common neighbors that are themselves
    non-adjacent. Scanning edges and vertex pairs covers exactly the same
    subsets as a size-3/size-4 subset sweep.
    """
    if has_triangle(G):
        return True
    masks = G._masks
    for u in range(G.n):
        mu = masks[u]
        for v in range(u + 1, G.n):
            if (mu >> v) & 1:
                continue
            common = mu & masks[v]
            if common.bit_count() < 2:
                continue
            rest = common
            while rest:
                low = rest & -rest
                x = low.bit_length() - 1
                rest ^= low
                if common & ~masks[x] & ~low:
                    return True
    return False


def max_clique_size(G: Graph, cap: int = CLIQUE_CAP_DEFAULT) -> int:
    """Clique number by branch-and-bound over candidate bitmasks."""
    if G.n > cap:
        raise CapacityError(f"clique search capped at {cap} vertices, got {G.n}")
    if G.n == 0:
        return 0
    masks = G._masks
    best = 1

    def expand(size: int, cand: int):
        nonlocal best
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            nxt = cand & masks[v]
            if nxt:
                expand(size + 1, nxt)
            elif size + 1 > best:
                best = size + 1

    expand(0, (1 << G.n) - 1)
    return best
