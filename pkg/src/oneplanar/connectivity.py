"""Vertex connectivity via unit-capacity flows, with witness cuts, plus
exhaustive 3-cut enumeration at desk scale.

The flow network is the standard vertex split (v_in -> v_out, capacity 1);
a minimum s-t cut read off the residual graph gives a Menger-style witness.
3-cuts are enumerated by brute force over vertex triples with a bitmask
reachability check, which keeps the enumerator independent of the flow
code (the two cross-check each other in the tests).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, adjacency, adjacency_masks, connected_components, is_connected


class ConnectivityError(ValueError):
    pass


@dataclass(frozen=True)
class CutReport:
    connectivity: int
    witness_cut: Optional[frozenset[int]]
    three_cuts: Optional[tuple[tuple[tuple[int, int, int], tuple[tuple[int, ...], ...]], ...]] = None


def _local_connectivity(g: Graph, s: int, t: int, cap: Optional[int] = None):
    """Max number of internally disjoint s-t paths (s,t non-adjacent), and
    a vertex cut witnessing it when the search stopped below ``cap``.

    With ``cap`` set, stops augmenting once ``cap`` paths are found and
    returns (cap, None).
    """
    n = g.n
    adj = adjacency(g)
    # Arcs: v_in = 2v, v_out = 2v+1.  Residual capacities in a dict.
    res: dict[tuple[int, int], int] = {}
    big = n + 1

    def add_arc(a: int, b: int, c: int) -> None:
        res[(a, b)] = res.get((a, b), 0) + c
        res.setdefault((b, a), 0)

    for v in range(n):
        add_arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u in range(n):
        for w in adj[u]:
            add_arc(2 * u + 1, 2 * w, big)

    out: dict[int, list[int]] = {}
    for (a, b) in res:
        out.setdefault(a, []).append(b)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while cap is None or flow < cap:
        parent = {source: source}
        queue = [source]
        while queue and sink not in parent:
            nxt: list[int] = []
            for a in queue:
                for b in out.get(a, ()):
                    if b not in parent and res[(a, b)] > 0:
                        parent[b] = a
                        nxt.append(b)
            queue = nxt
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            res[(a, b)] -= 1
            res[(b, a)] += 1
            b = a
        flow += 1
    if cap is not None and flow >= cap:
        return flow, None
    # Min cut: vertices whose internal arc crosses the residual boundary.
    reach = {source}
    queue = [source]
    while queue:
        a = queue.pop()
        for b in out.get(a, ()):
            if b not in reach and res[(a, b)] > 0:
                reach.add(b)
                queue.append(b)
    cut = frozenset(
        v for v in range(n) if 2 * v in reach and 2 * v + 1 not in reach
    )
    return flow, cut


def _pivot_pairs(g: Graph):
    """Candidate (s,t) pairs covering every minimum cut, Even-style: a
    minimum-degree pivot against all non-neighbours, then non-adjacent
    pairs inside its neighbourhood."""
    adj = adjacency(g)
    v0 = min(range(g.n), key=lambda v: (len(adj[v]), v))
    nbrs = set(adj[v0])
    for t in range(g.n):
        if t != v0 and t not in nbrs:
            yield v0, t
    ns = sorted(nbrs)
    for i, x in enumerate(ns):
        for y in ns[i + 1:]:
            if not g.has_edge(x, y):
                yield x, y


def vertex_connectivity(g: Graph) -> CutReport:
    """Exact vertex connectivity with a witness cut (none for cliques)."""
    if g.n < 2:
        raise ConnectivityError("connectivity needs at least 2 vertices")
    if all(g.degree(v) == g.n - 1 for v in range(g.n)):
        return CutReport(g.n - 1, None)
    if not is_connected(g):
        return CutReport(0, frozenset())
    best = g.n - 1
    witness: Optional[frozenset[int]] = None
    adj = adjacency(g)
    v0 = min(range(g.n), key=lambda v: (len(adj[v]), v))
    if len(adj[v0]) < best:
        best = len(adj[v0])
        witness = frozenset(adj[v0])
    for s, t in _pivot_pairs(g):
        flow, cut = _local_connectivity(g, s, t, cap=best)
        if cut is not None and flow < best:
            best = flow
            witness = cut
    return CutReport(best, witness)


def is_k_connected(g: Graph, k: int):
    """(boolean, witness cut when false); early-exit flow version."""
    if g.n <= k:
        raise ConnectivityError("graph must have more than k vertices")
    if k <= 0:
        return True, None
    if not is_connected(g):
        return False, frozenset()
    if all(g.degree(v) == g.n - 1 for v in range(g.n)):
        return True, None
    adj = adjacency(g)
    v0 = min(range(g.n), key=lambda v: (len(adj[v]), v))
    if len(adj[v0]) < k:
        return False, frozenset(adj[v0])
    for s, t in _pivot_pairs(g):
        flow, cut = _local_connectivity(g, s, t, cap=k)
        if cut is not None and flow < k:
            return False, cut
    return True, None


def _disconnects(masks, alive: int) -> bool:
    if alive == 0:
        return False
    start = alive & -alive
    visited = start
    frontier = start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            bit = f & -f
            f ^= bit
            nxt |= masks[bit.bit_length() - 1]
        nxt &= alive & ~visited
        visited |= nxt
        frontier = nxt
    return visited != alive


def enumerate_3cuts(g: Graph):
    """All vertex triples whose removal disconnects a 3-connected graph,
    with the separated components, in deterministic sorted order."""
    ok, _ = is_k_connected(g, 3)
    if not ok:
        raise ConnectivityError("3-cut enumeration requires a 3-connected graph")
    masks = adjacency_masks(g)
    full = (1 << g.n) - 1
    cuts = []
    for a in range(g.n):
        for b in range(a + 1, g.n):
            for c in range(b + 1, g.n):
                alive = full & ~((1 << a) | (1 << b) | (1 << c))
                if _disconnects(masks, alive):
                    comps = connected_components(g, removed=frozenset((a, b, c)))
                    cuts.append(((a, b, c), tuple(tuple(x) for x in comps)))
    return cuts


def connectivity_report(g: Graph, with_three_cuts: bool = False) -> CutReport:
    base = vertex_connectivity(g)
    if not with_three_cuts:
        return base
    three = tuple(enumerate_3cuts(g)) if base.connectivity >= 3 else None
    return CutReport(base.connectivity, base.witness_cut, three)
