"""Polynomial-time tree machinery built around path covers.

A path cover partitions the vertices into vertex-disjoint induced paths;
its minimum size equals the zero forcing number on trees, and choosing one
endpoint per path of a minimum cover yields exactly the minimum zero
forcing sets. Three operations matter here:

* center detection: a tree that is not a bare path always contains a
  vertex v of degree >= 3 such that at most one component of T - v fails to
  be a pendant path hanging off v (a "generalized star" center when none
  fails, a "pendent generalized star" center when exactly one does);
* a recursive peeling of such centers that produces one minimum cover in
  which every path contains a leaf;
* exhaustive enumeration of all minimum covers by a three-way split at a
  vertex with two pendant path components, memoized on induced subtrees.

All helpers work on induced subtrees of a fixed ambient tree, identified by
frozen vertex sets, so recorded paths always carry the ambient labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, product

from .errors import CapacityError
from .forcing import ZfsCatalog
from .graphs import Graph, VertexSet, check_vertex_set, connected_components, is_connected

COVER_CAP_DEFAULT = 20


@dataclass(frozen=True)
class PathCover:
    """A partition of tree vertices into vertex-disjoint induced paths.

    Paths are stored in canonical form: each path runs from its smaller
    endpoint, and paths are sorted by their least vertex.
    """

    paths: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class GStarReport:
    """Outcome of center detection on a tree.

    kind is "none" for bare paths. Otherwise center is the detected vertex,
    components lists the components of T - center sorted by least member,
    and non_path_component indexes the unique non-pendant-path component
    when kind is "pendent_generalized_star".
    """

    kind: str
    center: int | None
    components: tuple[VertexSet, ...]
    non_path_component: int | None


def _require_tree(T: Graph) -> None:
    if T.n < 1 or len(T.edges) != T.n - 1 or not is_connected(T):
        raise ValueError("expected a tree (connected and acyclic, n >= 1)")


def _require_forest(T: Graph) -> list[VertexSet]:
    comps = connected_components(T)
    if len(T.edges) != T.n - len(comps):
        raise ValueError("expected a forest (no cycles)")
    return comps


# induced-subtree helpers ---------------------------------------------------


def _deg_within(T: Graph, verts: frozenset, v: int) -> int:
    return sum(1 for w in T.neighbors(v) if w in verts)


def _components_within(T: Graph, verts: frozenset) -> list[tuple[int, ...]]:
    seen = set()
    comps = []
    for start in sorted(verts):
        if start in seen:
            continue
        seen.add(start)
        stack = [start]
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in T.neighbors(v):
                if w in verts and w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def _path_order(T: Graph, verts: frozenset) -> tuple[int, ...] | None:
    """Ordered vertex sequence when the induced subgraph is a path, else None."""
    if len(verts) == 1:
        return (next(iter(verts)),)
    deg = {v: _deg_within(T, verts, v) for v in verts}
    if any(d > 2 for d in deg.values()):
        return None
    ends = sorted(v for v in verts if deg[v] <= 1)
    if len(ends) != 2:
        return None
    seq = [ends[0]]
    prev = None
    while True:
        nxts = [w for w in T.neighbors(seq[-1]) if w in verts and w != prev]
        if not nxts:
            break
        prev = seq[-1]
        seq.append(nxts[0])
    return tuple(seq) if len(seq) == len(verts) else None


def _pendent_path_away(T: Graph, comp, v: int) -> tuple[int, ...]:
    """Order a pendant path component starting at its neighbor of v."""
    near = [x for x in comp if T.has_edge(x, v)]
    seq = [near[0]]
    prev = v
    cset = set(comp)
    while True:
        nxts = [w for w in T.neighbors(seq[-1]) if w in cset and w != prev]
        if not nxts:
            return tuple(seq)
        prev = seq[-1]
        seq.append(nxts[0])


def _find_center(T: Graph, verts: frozenset):
    """First vertex (ascending) of degree >= 3 whose removal leaves at most
    one component containing another vertex of degree >= 3. Returns
    (center, components, non_path_index_or_None); None when the subtree is a
    path."""
    deg = {v: _deg_within(T, verts, v) for v in verts}
    if all(d <= 2 for d in deg.values()):
        return None
    for v in sorted(verts):
        if deg[v] < 3:
            continue
        comps = _components_within(T, verts - {v})
        non_path = [i for i, c in enumerate(comps) if any(deg[x] >= 3 for x in c)]
        if len(non_path) == 0:
            return v, comps, None
        if len(non_path) == 1:
            return v, comps, non_path[0]
    raise RuntimeError("no generalized-star center found in a non-path tree")


def find_gstar_center(T: Graph) -> GStarReport:
    """Detect a generalized-star or pendent-generalized-star center of T."""
    _require_tree(T)
    found = _find_center(T, frozenset(range(T.n)))
    if found is None:
        return GStarReport("none", None, (), None)
    v, comps, npp = found
    kind = "generalized_star" if npp is None else "pendent_generalized_star"
    return GStarReport(kind, v, tuple(comps), npp)


# canonical cover form ------------------------------------------------------


def _canon_path(p) -> tuple[int, ...]:
    p = tuple(p)
    return p if p[0] <= p[-1] else tuple(reversed(p))


def _canon_cover(paths) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted((_canon_path(p) for p in paths), key=min))


def is_valid_path_cover(T: Graph, paths) -> bool:
    """Check disjointness, full coverage, adjacency, and induced-ness."""
    flat = [v for p in paths for v in p]
    if len(flat) != T.n or set(flat) != set(range(T.n)):
        return False
    for p in paths:
        for a, b in zip(p, p[1:]):
            if not T.has_edge(a, b):
                return False
        for i in range(len(p)):
            for j in range(i + 2, len(p)):
                if T.has_edge(p[i], p[j]):
                    return False
    return True


# one leaf-anchored minimum cover -------------------------------------------


def _leafy_cover(T: Graph, verts: frozenset) -> list[tuple[int, ...]]:
    p = _path_order(T, verts)
    if p is not None:
        return [p]
    v, comps, npp = _find_center(T, verts)
    if npp is None:
        pendent = comps
        rest = pendent[2:]
        joined = (
            tuple(reversed(_pendent_path_away(T, pendent[0], v)))
            + (v,)
            + _pendent_path_away(T, pendent[1], v)
        )
        return [joined] + [_path_order(T, frozenset(c)) for c in rest]
    tprime = comps[npp]
    pendent = [c for i, c in enumerate(comps) if i != npp]
    w = next(x for x in tprime if T.has_edge(x, v))
    sub = _leafy_cover(T, frozenset(tprime))
    idx = next(i for i, q in enumerate(sub) if w in q)
    p1 = sub[idx]
    if w in (p1[0], p1[-1]):
        seq = p1 if p1[-1] == w else tuple(reversed(p1))
        newpath = seq + (v,) + _pendent_path_away(T, pendent[0], v)
        out = [q for i, q in enumerate(sub) if i != idx]
        out.append(newpath)
        out += [_path_order(T, frozenset(c)) for c in pendent[1:]]
        return out
    joined = (
        tuple(reversed(_pendent_path_away(T, pendent[0], v)))
        + (v,)
        + _pendent_path_away(T, pendent[1], v)
    )
    out = list(sub)
    out.append(joined)
    out += [_path_order(T, frozenset(c)) for c in pendent[2:]]
    return out


def leafy_min_path_cover(T: Graph) -> PathCover:
    """A minimum path cover in which every path contains a leaf of T.

    Built by peeling pendant paths off detected centers; runs in polynomial
    time, so no size cap applies.
    """
    _require_tree(T)
    return PathCover(_canon_cover(_leafy_cover(T, frozenset(range(T.n)))))


def path_cover_number(T: Graph) -> int:
    """Minimum number of paths needed to cover a forest, per component."""
    comps = _require_forest(T)
    return sum(len(_leafy_cover(T, frozenset(c))) for c in comps)


def all_leaf_min_zfs(T: Graph) -> VertexSet:
    """A minimum zero forcing set of a forest consisting entirely of leaves.

    Every path of the leaf-anchored cover has a leaf at an endpoint; pick
    the smallest qualifying endpoint per path. An isolated vertex counts as
    its own selection.
    """
    comps = _require_forest(T)
    picks = []
    for comp in comps:
        for p in _leafy_cover(T, frozenset(comp)):
            ends = {p[0], p[-1]}
            leaf_ends = sorted(e for e in ends if T.degree(e) <= 1)
            if not leaf_ends:
                raise RuntimeError("leaf-anchored cover produced a leafless path")
            picks.append(leaf_ends[0])
    return tuple(sorted(picks))


# exhaustive minimum-cover enumeration ---------------------------------------


def _min_covers(T: Graph, verts: frozenset, memo: dict):
    if verts in memo:
        return memo[verts]
    p = _path_order(T, verts)
    if p is not None:
        res = ((_canon_path(p),),)
        memo[verts] = res
        return res
    chosen = None
    for u in sorted(verts):
        comps = _components_within(T, verts - {u})
        pend = [c for c in comps if all(_deg_within(T, verts, x) <= 2 for x in c)]
        if len(pend) >= 2:
            chosen = (u, pend[0], pend[1])
            break
    u, pa, pb = chosen
    a_away = _pendent_path_away(T, pa, u)
    b_away = _pendent_path_away(T, pb, u)
    t0 = verts - set(pa)
    t1 = verts - set(pb)
    t2 = verts - set(pa) - set(pb) - {u}
    cands = []
    for c in _min_covers(T, t0, memo):
        cands.append(c + (a_away,))
    for c in _min_covers(T, t1, memo):
        cands.append(c + (b_away,))
    mid = tuple(reversed(a_away)) + (u,) + b_away
    for c in _forest_min_covers(T, t2, memo):
        cands.append(c + (mid,))
    canon = {_canon_cover(c) for c in cands}
    best = min(len(c) for c in canon)
    res = tuple(sorted(c for c in canon if len(c) == best))
    memo[verts] = res
    return res


def _forest_min_covers(T: Graph, verts: frozenset, memo: dict):
    comps = _components_within(T, verts)
    if not comps:
        return ((),)
    per = [_min_covers(T, frozenset(c), memo) for c in comps]
    return tuple(
        tuple(chain.from_iterable(combo)) for combo in product(*per)
    )


def enumerate_min_path_covers(
    T: Graph, cap: int = COVER_CAP_DEFAULT
) -> tuple[PathCover, ...]:
    """All minimum path covers of a tree, duplicate-free, canonically sorted.

    Splits at a vertex u with two pendant path components into three cover
    classes (keep the first path, keep the second, or run one path straight
    through u joining both) and recurses on the leftover subtrees, memoized
    by vertex set. Output can be exponential in the order of T, hence the
    cap.
    """
    _require_tree(T)
    if T.n > cap:
        raise CapacityError(f"cover enumeration capped at {cap} vertices, got {T.n}")
    covers = _min_covers(T, frozenset(range(T.n)), {})
    return tuple(PathCover(c) for c in covers)


def zfs_from_path_covers(T: Graph, cap: int = COVER_CAP_DEFAULT) -> ZfsCatalog:
    """Minimum zero forcing sets derived from minimum path covers.

    Every choice of one endpoint per path of every minimum cover, after
    deduplication. On trees this catalog agrees with the forcing engine's
    enumeration; the two are computed along independent routes.
    """
    covers = enumerate_min_path_covers(T, cap=cap)
    z = len(covers[0].paths)
    sets = set()
    for cover in covers:
        for choice in product(*({p[0], p[-1]} for p in cover.paths)):
            sets.add(tuple(sorted(choice)))
    return ZfsCatalog(base=T, z=z, sets=tuple(sorted(sets)))


def suppress_degree2_triple(T: Graph, u: int, v: int, w: int) -> tuple[Graph, dict[int, int]]:
    """Contract the middle of a degree-2 triple u-v-w out of a tree.

    Requires deg(u) = deg(v) = deg(w) = 2 with v adjacent to both u and w.
    Returns the tree with v removed and the edge {u, w} added, plus the
    relabeling map (vertices above v shift down by one).
    """
    _require_tree(T)
    check_vertex_set(T, (u, v, w))
    if len({u, v, w}) != 3:
        raise ValueError("u, v, w must be three distinct vertices")
    for x in (u, v, w):
        if T.degree(x) != 2:
            raise ValueError(f"vertex {x} must have degree 2")
    if not (T.has_edge(u, v) and T.has_edge(v, w)):
        raise ValueError("v must be adjacent to both u and w")
    relabel = {x: (x if x < v else x - 1) for x in range(T.n) if x != v}
    edges = [
        (relabel[a], relabel[b]) for a, b in T.edges if v not in (a, b)
    ]
    edges.append((relabel[u], relabel[w]))
    return Graph(T.n - 1, edges), relabel
