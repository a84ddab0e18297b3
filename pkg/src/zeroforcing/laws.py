"""Empirical law registry.

Each registered law turns one structural fact about reconfiguration graphs
into a check over a generated corpus and reports instance counts plus any
counterexample graphs. Laws are desk-scale experiments, not proofs: caps
keep every corpus exhaustive or seeded-reproducible.

Corpora:
* all_connected: every connected graph up to isomorphism, order <= 7;
* all_graphs: every graph up to isomorphism, order <= 6;
* all_trees: every tree up to isomorphism, order <= 12;
* random_connected / random_forests: seeded samples, reproducible.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from functools import lru_cache

from . import families
from .errors import CapacityError
from .forcing import enumerate_min_zfs, enumerate_reversals, zero_forcing_number
from .graphs import (
    Graph,
    connected_components,
    contains_induced_c3_or_c4,
    disjoint_union,
    is_isomorphic,
    shape_predicates,
)
from .reconfig import build_zfg, product_law_check, zfg_is_connected, zfg_stats
from .trees import (
    all_leaf_min_zfs,
    enumerate_min_path_covers,
    is_valid_path_cover,
    leafy_min_path_cover,
    suppress_degree2_triple,
    zfs_from_path_covers,
)


@dataclass(frozen=True)
class LawReport:
    law_id: str
    corpus_description: str
    instances_checked: int
    failures: tuple[tuple[Graph, str], ...]
    elapsed: float
    skipped: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures


# corpus generation ---------------------------------------------------------

ALL_CONNECTED_MAX_N = 7
ALL_GRAPHS_MAX_N = 6
ALL_TREES_MAX_N = 12


def _invariant_key(G: Graph):
    degs = G.degrees
    nbr_degs = tuple(
        sorted(tuple(sorted(degs[u] for u in G.neighbors(v))) for v in range(G.n))
    )
    tri = sum((G._masks[u] & G._masks[v]).bit_count() for u, v in G.edges)
    return (G.n, len(G.edges), tuple(sorted(degs)), nbr_degs, tri)


def _extend_classes(parents: tuple[Graph, ...], nonempty_only: bool) -> tuple[Graph, ...]:
    """All one-vertex extensions of the parent classes, deduped up to
    isomorphism. Every n-vertex class arises from some (n-1)-vertex class by
    re-attaching a deleted vertex (a non-cut vertex in the connected case,
    which is why nonempty neighborhoods suffice there)."""
    buckets: dict[tuple, list[Graph]] = {}
    out: list[Graph] = []
    for P in parents:
        new = P.n
        lo = 1 if nonempty_only else 0
        for subset in range(lo, 1 << P.n):
            extra = [(v, new) for v in range(P.n) if (subset >> v) & 1]
            G = Graph(P.n + 1, P.edges + tuple(extra))
            bucket = buckets.setdefault(_invariant_key(G), [])
            if not any(is_isomorphic(G, H) for H in bucket):
                bucket.append(G)
                out.append(G)
    return tuple(out)


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    return _extend_classes(_connected_classes(n - 1), nonempty_only=True)


@lru_cache(maxsize=None)
def _graph_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    return _extend_classes(_graph_classes(n - 1), nonempty_only=False)


def _tree_canonical(G: Graph) -> str:
    """Canonical string for a tree: rooted encoding at the center(s)."""
    n = G.n
    if n == 1:
        return "()"
    deg = list(G.degrees)
    removed = [False] * n
    remaining = n
    layer = [v for v in range(n) if deg[v] <= 1]
    while remaining > 2:
        nxt = []
        for v in layer:
            removed[v] = True
            remaining -= 1
            for w in G.neighbors(v):
                if not removed[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    centers = [v for v in range(n) if not removed[v]]

    def encode(v: int, parent: int) -> str:
        subs = sorted(encode(w, v) for w in G.neighbors(v) if w != parent)
        return "(" + "".join(subs) + ")"

    return min(encode(c, -1) for c in centers)


@lru_cache(maxsize=None)
def _tree_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    seen = set()
    out = []
    for P in _tree_classes(n - 1):
        for v in range(P.n):
            G = Graph(P.n + 1, P.edges + ((v, P.n),))
            key = _tree_canonical(G)
            if key not in seen:
                seen.add(key)
                out.append(G)
    return tuple(out)


def _tree_from_pruefer(seq: list[int], n: int) -> Graph:
    """Decode a label sequence of length n - 2 into the tree it encodes."""
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    edges = []
    ptr = 0
    leaf = -1
    for x in seq:
        if leaf < 0:
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
        edges.append((leaf, x))
        deg[leaf] -= 1
        deg[x] -= 1
        if deg[x] == 1 and x < ptr:
            leaf = x
        else:
            leaf = -1
            ptr += 1
    last = [v for v in range(n) if deg[v] == 1]
    edges.append((last[0], last[1]))
    return Graph(n, edges)


def _random_tree(rng: random.Random, n: int) -> Graph:
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    return _tree_from_pruefer([rng.randrange(n) for _ in range(n - 2)], n)


def generate_corpus(kind: str, max_n: int, seed: int = 0, count: int = 30) -> list[Graph]:
    """Build a named corpus of graphs; exhaustive kinds dedupe up to
    isomorphism, random kinds are reproducible from the seed."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    if kind == "all_connected":
        if max_n > ALL_CONNECTED_MAX_N:
            raise CapacityError(f"all_connected capped at n = {ALL_CONNECTED_MAX_N}")
        return [G for n in range(1, max_n + 1) for G in _connected_classes(n)]
    if kind == "all_graphs":
        if max_n > ALL_GRAPHS_MAX_N:
            raise CapacityError(f"all_graphs capped at n = {ALL_GRAPHS_MAX_N}")
        return [G for n in range(1, max_n + 1) for G in _graph_classes(n)]
    if kind == "all_trees":
        if max_n > ALL_TREES_MAX_N:
            raise CapacityError(f"all_trees capped at n = {ALL_TREES_MAX_N}")
        return [G for n in range(1, max_n + 1) for G in _tree_classes(n)]
    if kind == "random_connected":
        rng = random.Random(seed)
        out = []
        for _ in range(count):
            n = rng.randint(2, max_n)
            G = _random_tree(rng, n)
            p = rng.uniform(0.0, 0.35)
            extra = [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if not G.has_edge(u, v) and rng.random() < p
            ]
            out.append(Graph(n, G.edges + tuple(extra)))
        return out
    if kind == "random_forests":
        rng = random.Random(seed)
        out = []
        for _ in range(count):
            n = rng.randint(1, max_n)
            T = _random_tree(rng, n)
            kept = tuple(e for e in T.edges if rng.random() < 0.75)
            out.append(Graph(n, kept))
        return out
    raise ValueError(f"unknown corpus kind: {kind!r}")


# construction hypothesis checks ---------------------------------------------


def verify_leaf_blocker_hypotheses(G: Graph, B, B2) -> bool:
    """Preconditions for the leaf-blocker construction on (G, B, B2):
    both are minimum zero forcing sets, disjoint, each a reversal of the
    other, and no minimum set meets both."""
    b = tuple(sorted(B))
    b2 = tuple(sorted(B2))
    cat = enumerate_min_zfs(G)
    sets = set(cat.sets)
    if b not in sets or b2 not in sets:
        return False
    if set(b) & set(b2):
        return False
    if b2 not in enumerate_reversals(G, b):
        return False
    for s in sets:
        if set(s) & set(b) and set(s) & set(b2):
            return False
    return True


def verify_bridge_hypotheses(G: Graph, B_G, H: Graph, B_H) -> bool:
    """Preconditions for the clique-bridge construction: both anchor sets
    are minimum zero forcing sets of size r >= 2 and the minimum degree of
    each factor equals its zero forcing number r."""
    bg = tuple(sorted(B_G))
    bh = tuple(sorted(B_H))
    r = len(bg)
    if r < 2 or len(bh) != r:
        return False
    cg = enumerate_min_zfs(G)
    ch = enumerate_min_zfs(H)
    return (
        cg.z == r
        and ch.z == r
        and G.min_degree == r
        and H.min_degree == r
        and bg in set(cg.sets)
        and bh in set(ch.sets)
    )


# registry -------------------------------------------------------------------

_REGISTRY: dict = {}


def _law(law_id: str):
    def deco(fn):
        _REGISTRY[law_id] = fn
        return fn

    return deco


def run_law(law_id: str, **params) -> LawReport:
    """Run one registered law; unknown ids raise ValueError."""
    if law_id not in _REGISTRY:
        raise ValueError(f"unknown law id: {law_id!r}")
    start = time.perf_counter()
    desc, checked, skipped, failures = _REGISTRY[law_id](**params)
    return LawReport(
        law_id=law_id,
        corpus_description=desc,
        instances_checked=checked,
        failures=tuple(failures),
        elapsed=time.perf_counter() - start,
        skipped=skipped,
    )


def run_all_laws(**params) -> list[LawReport]:
    return [run_law(law_id, **params) for law_id in LAW_IDS]


def _connected_corpus(max_n):
    max_n = ALL_CONNECTED_MAX_N if max_n is None else max_n
    corpus = generate_corpus("all_connected", max_n)
    return corpus, f"all connected graphs up to order {max_n} ({len(corpus)} graphs)"


def _tree_corpus(max_n, default):
    max_n = default if max_n is None else max_n
    corpus = generate_corpus("all_trees", max_n)
    return corpus, f"all trees up to order {max_n} ({len(corpus)} trees)"


@_law("exclusion_theorem")
def _exclusion_theorem(max_n=None, **_):
    corpus, desc = _connected_corpus(max_n)
    checked, skipped, failures = 0, 0, []
    for G in corpus:
        if G.n < 2:
            skipped += 1
            continue
        checked += 1
        sets = enumerate_min_zfs(G).sets
        common = set(sets[0]).intersection(*map(set, sets[1:])) if sets else set()
        if common:
            failures.append((G, f"every minimum set contains {sorted(common)}"))
    return desc, checked, skipped, failures


@_law("order_bound")
def _order_bound(max_n=None, **_):
    corpus, desc = _connected_corpus(max_n)
    checked, skipped, failures = 0, 0, []
    for G in corpus:
        if G.n < 2:
            skipped += 1
            continue
        R = build_zfg(G)
        if not zfg_is_connected(R):
            skipped += 1
            continue
        checked += 1
        if len(R.nodes) < R.z + 1:
            failures.append((G, f"|nodes| = {len(R.nodes)} < z + 1 = {R.z + 1}"))
    return desc, checked, skipped, failures


@_law("product_law")
def _product_law(count=50, max_n=None, seed=7, **_):
    max_n = 6 if max_n is None else max_n
    rng = random.Random(seed)
    checked, failures = 0, []
    for _i in range(count):
        n1, n2 = rng.randint(1, max_n), rng.randint(1, max_n)
        g_edges = [
            (u, v) for u in range(n1) for v in range(u + 1, n1) if rng.random() < 0.5
        ]
        h_edges = [
            (u, v) for u in range(n2) for v in range(u + 1, n2) if rng.random() < 0.5
        ]
        G, H = Graph(n1, g_edges), Graph(n2, h_edges)
        checked += 1
        if not product_law_check(G, H):
            failures.append((disjoint_union(G, H), "factorization failed"))
    return f"{count} seeded random pairs with n <= {max_n} (seed {seed})", checked, 0, failures


@_law("min_degree_clique")
def _min_degree_clique(max_n=None, **_):
    corpus, desc = _connected_corpus(max_n)
    checked, skipped, failures = 0, 0, []
    for G in corpus:
        R = build_zfg(G)
        if R.z == G.n:
            skipped += 1
            continue
        checked += 1
        stats = zfg_stats(R, clique_cap=max(len(R.nodes), 1))
        if G.min_degree > stats.clique_number:
            failures.append(
                (G, f"min degree {G.min_degree} > clique number {stats.clique_number}")
            )
    return desc, checked, skipped, failures


@_law("delta_bound")
def _delta_bound(max_n=None, **_):
    corpus, desc = _connected_corpus(max_n)
    checked, skipped, failures = 0, 0, []
    for G in corpus:
        R = build_zfg(G)
        stats = zfg_stats(R, clique_cap=max(len(R.nodes), 1))
        if not stats.triangle_free:
            skipped += 1
            continue
        checked += 1
        if stats.max_degree > R.z:
            failures.append(
                (G, f"triangle-free nodes graph has max degree {stats.max_degree} > z = {R.z}")
            )
    return desc, checked, skipped, failures


LEAF_BLOCKER_INSTANCES = (
    (6, (0, 1), (3, 4)),
    (7, (0, 1), (3, 4)),
    (8, (0, 1), (3, 4)),
    (8, (0, 1), (4, 5)),
    (9, (0, 1), (4, 5)),
    (10, (0, 1), (5, 6)),
)

BRIDGE_INSTANCES = ((5, 5), (5, 6), (6, 6), (6, 7), (7, 7))


@_law("disconnected_constructions")
def _disconnected_constructions(**_):
    checked, skipped, failures = 0, 0, []
    for r in (3, 4):
        G = families.prism_with_leaves(r)
        R = build_zfg(G)
        checked += 1
        comps = connected_components(R.graph)
        if R.z != r or len(R.nodes) != 2 or len(comps) != 2:
            failures.append(
                (G, f"prism r={r}: z={R.z}, nodes={len(R.nodes)}, comps={len(comps)}")
            )
    for m, b, b2 in LEAF_BLOCKER_INSTANCES:
        G = families.cycle(m)
        if not verify_leaf_blocker_hypotheses(G, b, b2):
            skipped += 1
            continue
        checked += 1
        widened = families.append_leaf_blocker(G, b, b2)
        R = build_zfg(widened)
        if R.z != len(b) or zfg_is_connected(R):
            failures.append(
                (widened, f"leaf blocker on C{m}: z={R.z}, connected={zfg_is_connected(R)}")
            )
    for m1, m2 in BRIDGE_INSTANCES:
        G, H = families.cycle(m1), families.cycle(m2)
        if not verify_bridge_hypotheses(G, (0, 1), H, (0, 1)):
            skipped += 1
            continue
        checked += 1
        X = families.bridge_join(G, (0, 1), H, (0, 1))
        R = build_zfg(X)
        if R.z != 2 or zfg_is_connected(R):
            failures.append(
                (X, f"bridge C{m1}+C{m2}: z={R.z}, connected={zfg_is_connected(R)}")
            )
    desc = "prisms r=3,4; leaf-blocker and clique-bridge instances built from cycles"
    return desc, checked, skipped, failures


@_law("k2_characterization")
def _k2_characterization(max_n=None, **_):
    corpus, desc = _connected_corpus(max_n)
    checked, failures = 0, []
    k2 = Graph(2, [(0, 1)])
    for G in corpus:
        checked += 1
        R = build_zfg(G)
        is_k2 = R.graph.n == 2 and is_isomorphic(R.graph, k2)
        shape = shape_predicates(G)
        expect = shape.is_path and G.n >= 2
        if is_k2 != expect:
            failures.append((G, f"nodes graph K2: {is_k2}, path of order >= 2: {expect}"))
    return desc, checked, 0, failures


@_law("kr_characterization")
def _kr_characterization(max_n=None, **_):
    corpus, desc = _connected_corpus(max_n)
    checked, failures = 0, []
    for G in corpus:
        checked += 1
        R = build_zfg(G)
        shape_r = shape_predicates(R.graph)
        shape_g = shape_predicates(G)
        r = R.graph.n
        if shape_r.is_complete and r >= 3:
            if not (
                (shape_g.is_complete and G.n == r)
                or (shape_g.is_star and G.n == r + 1)
            ):
                failures.append((G, f"nodes graph is K{r} but base is neither K{r} nor a star on {r + 1}"))
        if (shape_g.is_complete and G.n >= 3) or (shape_g.is_star and G.n >= 4):
            expect_r = G.n if shape_g.is_complete else G.n - 1
            if not (shape_r.is_complete and r == expect_r):
                failures.append((G, f"base should give complete nodes graph of order {expect_r}"))
    return desc, checked, 0, failures


@_law("kr_z_value")
def _kr_z_value(max_n=None, **_):
    corpus, desc = _connected_corpus(max_n)
    checked, skipped, failures = 0, 0, []
    for G in corpus:
        R = build_zfg(G)
        shape_r = shape_predicates(R.graph)
        if not (shape_r.is_complete and R.graph.n >= 2):
            skipped += 1
            continue
        checked += 1
        if R.z != R.graph.n - 1:
            failures.append((G, f"complete nodes graph of order {R.graph.n} but z = {R.z}"))
    return desc, checked, skipped, failures


@_law("cn2_path")
def _cn2_path(max_n=None, **_):
    hi = 9 if max_n is None else max_n
    checked, failures = 0, []
    for n in range(5, hi + 1):
        for k in range(3, (n + 1) // 2 + 1):
            G = families.cycle_plus_chords(n, k)
            R = build_zfg(G)
            checked += 1
            if not is_isomorphic(R.graph, families.path(n - 1)):
                failures.append((G, f"chorded cycle (n={n}, k={k}) nodes graph is not a path"))
    return f"chorded cycles, 5 <= n <= {hi}, all chord targets", checked, 0, failures


@_law("star_nonexistence")
def _star_nonexistence(max_n=None, **_):
    corpus, desc = _connected_corpus(max_n)
    checked, failures = 0, []
    for G in corpus:
        checked += 1
        R = build_zfg(G)
        shape_r = shape_predicates(R.graph)
        if shape_r.is_star and R.graph.n >= 3:
            failures.append((G, f"nodes graph is a star on {R.graph.n} vertices"))
    return desc, checked, 0, failures


@_law("cn_plus_e")
def _cn_plus_e(max_n=None, **_):
    hi = 9 if max_n is None else max_n
    checked, failures = 0, []
    for n in range(4, hi + 1):
        G = families.cycle_plus_edge(n)
        checked += 1
        if not is_isomorphic(build_zfg(G).graph, families.cycle(n)):
            failures.append((G, f"one-chord cycle (n={n}) nodes graph is not C{n}"))
    return f"one-chord cycles, 4 <= n <= {hi}", checked, 0, failures


@_law("h_graph_c4")
def _h_graph_c4(**_):
    G = families.h_graph()
    R = build_zfg(G)
    failures = []
    if R.nodes != ((0, 3), (0, 5), (2, 3), (2, 5)):
        failures.append((G, f"H graph minimum sets are {R.nodes}"))
    elif not is_isomorphic(R.graph, families.cycle(4)):
        failures.append((G, "H graph nodes graph is not a 4-cycle"))
    return "the 6-vertex H graph", 1, 0, failures


@_law("tree_connected")
def _tree_connected(max_n=None, **_):
    corpus, desc = _tree_corpus(max_n, 10)
    checked, failures = 0, []
    for T in corpus:
        checked += 1
        if not zfg_is_connected(build_zfg(T)):
            failures.append((T, "tree with disconnected nodes graph"))
    return desc, checked, 0, failures


@_law("forest_connected")
def _forest_connected(max_n=None, seed=11, count=40, **_):
    max_n = 9 if max_n is None else max_n
    corpus = generate_corpus("random_forests", max_n, seed=seed, count=count)
    checked, failures = 0, []
    for F in corpus:
        checked += 1
        if not zfg_is_connected(build_zfg(F)):
            failures.append((F, "forest with disconnected nodes graph"))
    desc = f"{count} seeded random forests with n <= {max_n} (seed {seed})"
    return desc, checked, 0, failures


@_law("c3c4")
def _c3c4(max_n=None, **_):
    corpus, desc = _tree_corpus(max_n, 9)
    checked, failures = 0, []
    for T in corpus:
        checked += 1
        R = build_zfg(T)
        has_cycle = contains_induced_c3_or_c4(R.graph)
        if has_cycle == shape_predicates(T).is_path:
            failures.append(
                (T, f"path: {shape_predicates(T).is_path}, induced C3/C4 in nodes graph: {has_cycle}")
            )
    return desc, checked, 0, failures


@_law("hypercube_trees")
def _hypercube_trees(max_d=4, **_):
    checked, failures = 0, []
    for d in range(1, max_d + 1):
        T = families.spider_tree_two_leaves(d)
        checked += 1
        R = build_zfg(T)
        if shape_predicates(R.graph).hypercube_dim != d:
            failures.append((T, f"two-leaf spider d={d} nodes graph is not the d-cube"))
    return f"two-leaf spiders, d = 1..{max_d}", checked, 0, failures


@_law("degree2_suppression")
def _degree2_suppression(count=20, seed=5, **_):
    rng = random.Random(seed)
    checked, failures = 0, []
    while checked < count:
        n = rng.randint(4, 8)
        T = _random_tree(rng, n)
        a, b = rng.choice(T.edges)
        # subdividing one edge three times guarantees a run of degree-2 vertices
        edges = [e for e in T.edges if e != (a, b)]
        x, y, z = n, n + 1, n + 2
        edges += [(a, x), (x, y), (y, z), (z, b)]
        T = Graph(n + 3, edges)
        before = enumerate_min_zfs(T)
        smaller, relabel = suppress_degree2_triple(T, x, y, z)
        after = enumerate_min_zfs(smaller)
        checked += 1
        try:
            mapped = tuple(
                sorted(tuple(sorted(relabel[v] for v in s)) for s in before.sets)
            )
        except KeyError:
            failures.append((T, "a minimum set contains the suppressed vertex"))
            continue
        if mapped != after.sets:
            failures.append((T, "minimum sets changed after suppressing a degree-2 triple"))
    desc = f"{count} seeded trees with a subdivided edge (seed {seed})"
    return desc, checked, 0, failures


@_law("leafy_cover")
def _leafy_cover(max_n=None, **_):
    corpus, desc = _tree_corpus(max_n, 12)
    checked, failures = 0, []
    for T in corpus:
        checked += 1
        cover = leafy_min_path_cover(T)
        if not is_valid_path_cover(T, cover.paths):
            failures.append((T, "leaf-anchored cover is not a path cover"))
            continue
        if any(all(T.degree(v) > 1 for v in p) for p in cover.paths):
            failures.append((T, "leaf-anchored cover has a path without a leaf"))
            continue
        if len(cover.paths) != zero_forcing_number(T):
            failures.append((T, "leaf-anchored cover is not minimum"))
    return desc, checked, 0, failures


@_law("leaf_zfs")
def _leaf_zfs(max_n=None, **_):
    corpus, desc = _tree_corpus(max_n, 10)
    checked, failures = 0, []
    for T in corpus:
        checked += 1
        s = all_leaf_min_zfs(T)
        if any(T.degree(v) > 1 for v in s):
            failures.append((T, "all-leaf selection contains a non-leaf"))
            continue
        if s not in set(enumerate_min_zfs(T).sets):
            failures.append((T, "all-leaf selection is not a minimum zero forcing set"))
    return desc, checked, 0, failures


@_law("path_cover_counts")
def _path_cover_counts(max_n=None, **_):
    hi = 4 if max_n is None else min(max_n, 4)
    checked, failures = 0, []
    for n in range(1, hi + 1):
        T = families.spider_tree_three_leaves(n)
        checked += 1
        got = len(enumerate_min_path_covers(T))
        if got != 3**n:
            failures.append((T, f"three-leaf spider n={n} has {got} covers, expected {3**n}"))
    for d in range(1, hi + 1):
        T = families.spider_tree_two_leaves(d)
        checked += 1
        got = len(enumerate_min_path_covers(T))
        if got != 1:
            failures.append((T, f"two-leaf spider d={d} has {got} covers, expected 1"))
    return f"spider trees up to parameter {hi}", checked, 0, failures


@_law("zfs_cover_bijection")
def _zfs_cover_bijection(max_n=None, **_):
    corpus, desc = _tree_corpus(max_n, 10)
    checked, failures = 0, []
    for T in corpus:
        checked += 1
        if zfs_from_path_covers(T).sets != enumerate_min_zfs(T).sets:
            failures.append((T, "cover-derived sets differ from enumerated minimum sets"))
    return desc, checked, 0, failures


LAW_IDS = tuple(sorted(_REGISTRY))
