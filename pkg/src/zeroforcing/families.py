"""Named constructors for the base graphs the test suite reasons about.

Every constructor fixes one documented labeling so output is reproducible.
Figure-style labelings that start at 1 map onto these by subtracting one.
"""

from __future__ import annotations

from .graphs import Graph, cartesian_product, check_vertex_set, disjoint_union


def path(n: int) -> Graph:
    """Path 0-1-...-(n-1); n >= 1."""
    if n < 1:
        raise ValueError("path requires n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle 0-1-...-(n-1)-0; n >= 3."""
    if n < 3:
        raise ValueError("cycle requires n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    """Complete graph on n vertices; n >= 1."""
    if n < 1:
        raise ValueError("complete requires n >= 1")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(n: int) -> Graph:
    """Star on n vertices with center 0 and leaves 1..n-1; n >= 2."""
    if n < 2:
        raise ValueError("star requires n >= 2")
    return Graph(n, [(0, i) for i in range(1, n)])


def cycle_plus_chords(n: int, k: int) -> Graph:
    """Cycle on 0..n-1 plus the two chords {0, k-1} and {n-1, k-1}.

    Requires n >= 5 and 3 <= k <= ceil(n / 2). Vertex k-1 gets degree 4,
    vertices 0 and n-1 degree 3, everything else stays at degree 2.
    """
    if n < 5:
        raise ValueError("cycle_plus_chords requires n >= 5")
    if not (3 <= k <= (n + 1) // 2):
        raise ValueError(f"chord target k must satisfy 3 <= k <= ceil(n/2), got {k}")
    edges = [(i, (i + 1) % n) for i in range(n)] + [(0, k - 1), (n - 1, k - 1)]
    return Graph(n, edges)


def cycle_plus_edge(n: int) -> Graph:
    """Cycle on 0..n-1 plus the single chord {0, 2}; n >= 4."""
    if n < 4:
        raise ValueError("cycle_plus_edge requires n >= 4")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)] + [(0, 2)])


def h_graph() -> Graph:
    """The 6-vertex H shape: paths 0-1-2 and 3-4-5 joined by the edge {1, 4}."""
    return Graph(6, [(0, 1), (1, 2), (3, 4), (4, 5), (1, 4)])


def spider_tree_two_leaves(d: int) -> Graph:
    """Spine path 0..d-1 with two pendant leaves per spine vertex.

    Spine vertex i carries leaves d + 2i and d + 2i + 1; order 3d.
    """
    if d < 1:
        raise ValueError("spider_tree_two_leaves requires d >= 1")
    edges = [(i, i + 1) for i in range(d - 1)]
    for i in range(d):
        edges += [(i, d + 2 * i), (i, d + 2 * i + 1)]
    return Graph(3 * d, edges)


def spider_tree_three_leaves(n: int) -> Graph:
    """Spine path 0..n-1 with three pendant leaves per spine vertex.

    Spine vertex i carries leaves n + 3i, n + 3i + 1, n + 3i + 2; order 4n.
    """
    if n < 1:
        raise ValueError("spider_tree_three_leaves requires n >= 1")
    edges = [(i, i + 1) for i in range(n - 1)]
    for i in range(n):
        edges += [(i, n + 3 * i + t) for t in range(3)]
    return Graph(4 * n, edges)


def prism_with_leaves(r: int) -> Graph:
    """K_r prism of three layers with one pendant leaf on each outer vertex.

    Start from complete(r) x path(3), encoded so layer vertex (i, j) is
    3i + j. Each vertex of layer j = 0 gets leaf 3r + i, each vertex of
    layer j = 2 gets leaf 4r + i; order 5r. Requires r >= 3.
    """
    if r < 3:
        raise ValueError("prism_with_leaves requires r >= 3")
    base = cartesian_product(complete(r), path(3))
    edges = list(base.edges)
    for i in range(r):
        edges.append((3 * i, 3 * r + i))
    for i in range(r):
        edges.append((3 * i + 2, 4 * r + i))
    return Graph(5 * r, edges)


def append_leaf_blocker(G: Graph, B, B2) -> Graph:
    """Attach one pendant leaf to every vertex of B and of B2.

    B and B2 must be disjoint vertex sets of equal size r >= 2. New leaves
    are numbered after the existing vertices, the B leaves first: member
    B[i] gets leaf n + i and B2[i] gets leaf n + r + i.
    """
    b = check_vertex_set(G, B)
    b2 = check_vertex_set(G, B2)
    if set(b) & set(b2):
        raise ValueError("B and B2 must be disjoint")
    if len(b) != len(b2):
        raise ValueError("B and B2 must have equal size")
    r = len(b)
    if r < 2:
        raise ValueError("append_leaf_blocker requires |B| >= 2")
    n = G.n
    edges = list(G.edges)
    edges += [(b[i], n + i) for i in range(r)]
    edges += [(b2[i], n + r + i) for i in range(r)]
    return Graph(n + 2 * r, edges)


def bridge_join(G: Graph, B_G, H: Graph, B_H) -> Graph:
    """Join G and H through a clique of r fresh vertices.

    B_G and B_H are ordered vertex lists of equal size r >= 2. The result is
    the disjoint union of G and H (H shifted by |V(G)|) plus new clique
    vertices u_i = |V(G)| + |V(H)| + i, with edges B_G[i]-u_i and
    u_i-B_H[i]. Input order fixes the matching.
    """
    bg = list(B_G)
    bh = list(B_H)
    check_vertex_set(G, bg)
    check_vertex_set(H, bh)
    if len(bg) != len(bh) or len(set(bg)) != len(bg) or len(set(bh)) != len(bh):
        raise ValueError("B_G and B_H must be duplicate-free lists of equal size")
    r = len(bg)
    if r < 2:
        raise ValueError("bridge_join requires r >= 2")
    base = disjoint_union(G, H)
    shift = G.n
    u0 = G.n + H.n
    edges = list(base.edges)
    edges += [(u0 + i, u0 + j) for i in range(r) for j in range(i + 1, r)]
    for i in range(r):
        edges.append((bg[i], u0 + i))
        edges.append((u0 + i, bh[i] + shift))
    return Graph(u0 + r, edges)


def corona_k3_k1() -> Graph:
    """Triangle 0-1-2 with one pendant leaf on each vertex (leaf i + 3)."""
    return Graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])
