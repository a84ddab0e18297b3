"""The zero forcing engine.

The color change rule: a blue vertex u with exactly one white neighbor w
turns w blue ("u forces w"). The closure of a starting set is the unique
fixed point of repeated rule application; it does not depend on the order
in which forces are applied. A set whose closure is the whole vertex set is
a zero forcing set, and the zero forcing number z is the minimum size of
one.

Traces record one concrete schedule under a fixed tie-break so output is
reproducible: scan blue vertices in ascending index, apply the first
available force, restart the scan. Closures themselves are computed with a
faster sweep, which is safe because the fixed point is schedule-independent.

Minimum-set enumeration scans subset sizes k = 1, 2, ... and keeps every
hit at the first size that succeeds. The scan is exponential in the worst
case, so it is guarded by a vertex cap (default 30).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import CapacityError
from .graphs import Graph, VertexSet, bits_of, check_vertex_set, mask_of

ENUM_CAP_DEFAULT = 30
_PARALLEL_MIN_N = 10


@dataclass(frozen=True)
class ForcingTrace:
    """One complete record of a forcing run.

    forces is the chronological list of (u, w) pairs meaning u forced w.
    chains are the maximal sequences of consecutive forces; they partition
    the final blue set, one chain per member of the initial set. reversal
    holds the last vertex of each chain, i.e. the vertices that never
    forced.
    """

    universe: int
    initial: VertexSet
    forces: tuple[tuple[int, int], ...]
    final: VertexSet
    chains: tuple[tuple[int, ...], ...]
    reversal: VertexSet

    @property
    def complete(self) -> bool:
        return len(self.final) == self.universe


@dataclass(frozen=True)
class ZfsCatalog:
    """All minimum zero forcing sets of a base graph, sorted lexicographically."""

    base: Graph
    z: int
    sets: tuple[VertexSet, ...]


def _closure_mask(masks: tuple[int, ...], blue: int, full: int) -> int:
    """Fixed point of the color change rule, as a bitmask sweep."""
    if blue == full:
        return blue
    while True:
        progress = False
        rem = blue
        while rem:
            low = rem & -rem
            rem ^= low
            u = low.bit_length() - 1
            white = masks[u] & ~blue
            if white and not (white & (white - 1)):
                blue |= white
                if blue == full:
                    return blue
                progress = True
        if not progress:
            return blue


def closure(G: Graph, S) -> VertexSet:
    """Vertices that end up blue when S starts blue."""
    s = check_vertex_set(G, S)
    full = (1 << G.n) - 1
    return bits_of(_closure_mask(G._masks, mask_of(s), full))


def is_zero_forcing_set(G: Graph, S) -> bool:
    """True iff the closure of S is all of V(G)."""
    s = check_vertex_set(G, S)
    full = (1 << G.n) - 1
    return _closure_mask(G._masks, mask_of(s), full) == full


def trace(G: Graph, S) -> ForcingTrace:
    """Run the deterministic schedule from S and record everything.

    Tie-break: among all available forces, the one whose forcing vertex has
    the lowest index fires first; the scan restarts after every force.
    """
    s = check_vertex_set(G, S)
    masks = G._masks
    blue = mask_of(s)
    forces: list[tuple[int, int]] = []
    while True:
        rem = blue
        fired = False
        while rem:
            low = rem & -rem
            rem ^= low
            u = low.bit_length() - 1
            white = masks[u] & ~blue
            if white and not (white & (white - 1)):
                w = white.bit_length() - 1
                forces.append((u, w))
                blue |= white
                fired = True
                break
        if not fired:
            break
    nxt = dict(forces)
    chains = []
    for head in s:
        chain = [head]
        while chain[-1] in nxt:
            chain.append(nxt[chain[-1]])
        chains.append(tuple(chain))
    return ForcingTrace(
        universe=G.n,
        initial=s,
        forces=tuple(forces),
        final=bits_of(blue),
        chains=tuple(chains),
        reversal=tuple(sorted(c[-1] for c in chains)),
    )


def replay_forces(G: Graph, initial, forces) -> VertexSet:
    """Apply an explicit chronological list of forces, validating each one."""
    s = check_vertex_set(G, initial)
    masks = G._masks
    blue = mask_of(s)
    for u, w in forces:
        if not (blue >> u) & 1:
            raise ValueError(f"force {u} -> {w}: {u} is not blue")
        white = masks[u] & ~blue
        if white != 1 << w:
            raise ValueError(f"force {u} -> {w}: {w} is not the unique white neighbor")
        blue |= white
    return bits_of(blue)


def reverse_trace(t: ForcingTrace) -> ForcingTrace:
    """Reverse a completed trace: flip the list order and each force.

    The result starts from t.reversal and its reversal is t.initial.
    """
    if not t.complete:
        raise ValueError("reverse_trace requires a trace that colored every vertex")
    forces = tuple((w, u) for u, w in reversed(t.forces))
    chains = tuple(sorted(tuple(reversed(c)) for c in t.chains))
    return ForcingTrace(
        universe=t.universe,
        initial=t.reversal,
        forces=forces,
        final=t.final,
        chains=chains,
        reversal=t.initial,
    )


def enumerate_reversals(G: Graph, S) -> tuple[VertexSet, ...]:
    """Every reversal reachable from S, over all choices of forces.

    Explores the force-choice tree with memoization on (blue, forcers)
    states; two schedules that color the same vertices with the same set of
    forcing vertices are interchangeable. Each reversal is the set of blue
    vertices that never forced in some complete run.
    """
    s = check_vertex_set(G, S)
    masks = G._masks
    full = (1 << G.n) - 1
    out: set[int] = set()
    seen: set[tuple[int, int]] = set()
    stack = [(mask_of(s), 0)]
    while stack:
        blue, forcers = stack.pop()
        if (blue, forcers) in seen:
            continue
        seen.add((blue, forcers))
        moves = []
        rem = blue
        while rem:
            low = rem & -rem
            rem ^= low
            u = low.bit_length() - 1
            white = masks[u] & ~blue
            if white and not (white & (white - 1)):
                moves.append((low, white))
        if not moves:
            if blue == full:
                out.add(full & ~forcers)
            continue
        for ubit, wbit in moves:
            stack.append((blue | wbit, forcers | ubit))
    return tuple(sorted(bits_of(m) for m in out))


def _scan_size(masks: tuple[int, ...], n: int, k: int) -> list[VertexSet]:
    full = (1 << n) - 1
    hits = []
    clo = _closure_mask
    for combo in combinations(range(n), k):
        if clo(masks, mask_of(combo), full) == full:
            hits.append(combo)
    return hits


def _scan_shard(args) -> list[VertexSet]:
    masks, n, k, first = args
    full = (1 << n) - 1
    base = 1 << first
    hits = []
    for rest in combinations(range(first + 1, n), k - 1):
        if _closure_mask(masks, base | mask_of(rest), full) == full:
            hits.append((first, *rest))
    return hits


def _enumerate_scan(G: Graph, cap: int, jobs: int = 1) -> ZfsCatalog:
    if G.n > cap:
        raise CapacityError(
            f"minimum-set enumeration capped at {cap} vertices, got {G.n}"
        )
    n = G.n
    if n == 0:
        return ZfsCatalog(base=G, z=0, sets=((),))
    masks = G._masks
    for k in range(1, n + 1):
        if jobs > 1 and n >= _PARALLEL_MIN_N and k > 1:
            tasks = [(masks, n, k, first) for first in range(n - k + 1)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                shards = list(pool.map(_scan_shard, tasks))
            hits = sorted(s for shard in shards for s in shard)
        else:
            hits = _scan_size(masks, n, k)
        if hits:
            return ZfsCatalog(base=G, z=k, sets=tuple(hits))
    raise AssertionError("unreachable: V(G) is always a zero forcing set")


@lru_cache(maxsize=None)
def _catalog_cached(G: Graph, cap: int) -> ZfsCatalog:
    return _enumerate_scan(G, cap)


def enumerate_min_zfs(G: Graph, cap: int | None = None, jobs: int = 1) -> ZfsCatalog:
    """Zero forcing number plus every minimum zero forcing set.

    Subset sizes are scanned in increasing order; the first size with a hit
    fixes z and all hits of that size are returned, sorted. With jobs > 1
    the size-k scan is sharded by leading element across processes; the
    merged catalog is identical to the sequential one.
    """
    cap = ENUM_CAP_DEFAULT if cap is None else cap
    if jobs > 1 and G.n >= _PARALLEL_MIN_N:
        return _enumerate_scan(G, cap, jobs=jobs)
    return _catalog_cached(G, cap)


def zero_forcing_number(G: Graph, cap: int | None = None) -> int:
    """Minimum size of a zero forcing set of G."""
    return enumerate_min_zfs(G, cap=cap).z


def neighbor_trade(G: Graph, B) -> list[VertexSet]:
    """All minimum sets reachable from B by one first-force exchange.

    For every legal first force v -> w with deg(v) >= 2, every other
    neighbor u of v (necessarily in B) trades out for w. Every emitted set
    is again a minimum zero forcing set, adjacent to B in the
    reconfiguration graph.
    """
    b = check_vertex_set(G, B)
    catalog = enumerate_min_zfs(G)
    if b not in set(catalog.sets):
        raise ValueError("neighbor_trade requires a minimum zero forcing set")
    bmask = mask_of(b)
    bset = set(b)
    out = set()
    for v in b:
        white = G._masks[v] & ~bmask
        if not white or white & (white - 1) or G.degree(v) < 2:
            continue
        w = white.bit_length() - 1
        for u in G.neighbors(v):
            if u == w:
                continue
            out.add(tuple(sorted((bset - {u}) | {w})))
    return sorted(out)
