"""Exact desk-scale cycle and path solvers.

Backtracking over adjacency bitmasks with three pruning layers: BFS
reachability, an iterated 2-core, and a block-cut-tree bound (only blocks
on the tree path between the trail head and its required closing vertex
can still contribute).  Budgets count search nodes, never wall time, so
results are deterministic; absence is only ever reported from an
untruncated search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .graph import (
    CERT_CYCLE,
    CERT_PATH,
    Certificate,
    Edge,
    Graph,
    adjacency_masks,
    canon_edge,
    is_independent_set,
    verify_certificate,
)

FOUND = "found"
PROVEN_ABSENT = "proven_absent"
BUDGET_EXHAUSTED = "budget_exhausted"

DEFAULT_BUDGET = 5_000_000


class SolveError(ValueError):
    pass


@dataclass(frozen=True)
class SolveConstraints:
    """Side constraints for hamiltonian searches.

    forbidden_pairs: of each pair of edges, at most one may be used.
    required_hit_sets: each edge set must intersect the solution.
    endpoints: optional (s, t) pinning for path searches.
    node_budget: search-node budget (overridden by an explicit budget arg).
    """

    forbidden_pairs: tuple[tuple[Edge, Edge], ...] = ()
    required_hit_sets: tuple[frozenset[Edge], ...] = ()
    endpoints: Optional[tuple[int, int]] = None
    node_budget: Optional[int] = None

    def validate_against(self, g: Graph) -> None:
        for e1, e2 in self.forbidden_pairs:
            if e1 not in g.edges or e2 not in g.edges:
                raise SolveError(f"forbidden pair ({e1},{e2}) references a non-edge")
        for hs in self.required_hit_sets:
            for e in hs:
                if e not in g.edges:
                    raise SolveError(f"hit set references non-edge {e}")


@dataclass(frozen=True)
class SolveResult:
    status: str
    certificate: Optional[Certificate]
    explored: int

    @property
    def found(self) -> bool:
        return self.status == FOUND


class _Budget(Exception):
    pass


def _bits(mask: int) -> Iterable[int]:
    while mask:
        bit = mask & -mask
        mask ^= bit
        yield bit.bit_length() - 1


def _reach_mask(masks: Sequence[int], start_bit: int, allowed: int) -> int:
    visited = start_bit & allowed
    frontier = visited
    while frontier:
        nxt = 0
        f = frontier
        while f:
            bit = f & -f
            f ^= bit
            nxt |= masks[bit.bit_length() - 1]
        nxt &= allowed & ~visited
        visited |= nxt
        frontier = nxt
    return visited


def _two_core(masks: Sequence[int], alive: int, exempt: int) -> int:
    """Strip vertices with fewer than 2 live neighbours (exempt kept)."""
    changed = True
    while changed:
        changed = False
        f = alive & ~exempt
        while f:
            bit = f & -f
            f ^= bit
            v = bit.bit_length() - 1
            if bin(masks[v] & alive).count("1") < 2:
                alive ^= bit
                changed = True
    return alive


def _block_path_vertices(
    masks: Sequence[int], alive: int, src: int, dst: int
) -> int:
    """Vertices of the blocks along the block-cut-tree path from src to dst
    inside the graph induced by ``alive`` (both assumed in one component).

    A simple path from src to dst cannot enter a side block and return, so
    everything off the tree path is unusable.
    """
    verts = list(_bits(alive))
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    disc = [0] * n
    low = [0] * n
    parent = [-1] * n
    comp_of_edge: dict[tuple[int, int], int] = {}
    timer = 1
    edge_stack: list[tuple[int, int]] = []
    blocks: list[list[tuple[int, int]]] = []

    s0 = index[src]
    stack: list[tuple[int, int]] = [(s0, 0)]
    nbrs = [
        [index[w] for w in _bits(masks[v] & alive)] for v in verts
    ]
    disc[s0] = timer
    low[s0] = timer
    timer += 1
    while stack:
        v, ptr = stack[-1]
        if ptr < len(nbrs[v]):
            stack[-1] = (v, ptr + 1)
            w = nbrs[v][ptr]
            if disc[w] == 0:
                parent[w] = v
                edge_stack.append((v, w))
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, 0))
            elif w != parent[v] and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        else:
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    block = []
                    while True:
                        e = edge_stack.pop()
                        block.append(e)
                        if e == (u, v):
                            break
                    blocks.append(block)

    # Build block membership and find the chain of blocks from src to dst
    # through shared cut vertices (block-cut tree is a tree; BFS over it).
    block_verts = [set() for _ in blocks]
    incident: dict[int, list[int]] = {}
    for i, blk in enumerate(blocks):
        for a, b in blk:
            block_verts[i].add(a)
            block_verts[i].add(b)
        for v in block_verts[i]:
            incident.setdefault(v, []).append(i)
    d0 = index.get(dst)
    if d0 is None:
        return 0
    src_blocks = set(incident.get(s0, ()))
    dst_blocks = set(incident.get(d0, ()))
    if not src_blocks or not dst_blocks:
        return 0
    if src_blocks & dst_blocks:
        chain = src_blocks & dst_blocks
    else:
        # BFS over blocks via shared cut vertices.
        prev: dict[int, tuple[int, int]] = {}
        frontier = list(src_blocks)
        seen = set(src_blocks)
        goal = None
        while frontier and goal is None:
            nxt = []
            for bi in frontier:
                for v in block_verts[bi]:
                    for bj in incident[v]:
                        if bj not in seen:
                            seen.add(bj)
                            prev[bj] = (bi, v)
                            if bj in dst_blocks:
                                goal = bj
                                break
                            nxt.append(bj)
                    if goal is not None:
                        break
                if goal is not None:
                    break
            frontier = nxt
        if goal is None:
            return 0
        chain = {goal}
        bi = goal
        while bi not in src_blocks:
            bi, _ = prev[bi]
            chain.add(bi)
    usable = 0
    for bi in chain:
        for v in block_verts[bi]:
            usable |= 1 << verts[v]
    return usable


@dataclass
class _SearchState:
    explored: int = 0
    budget: int = DEFAULT_BUDGET
    best_len: int = 0
    best: Optional[tuple[int, ...]] = None
    stop_at: Optional[int] = None  # accept immediately at this length
    collector: Optional[list] = None
    collect_min: int = 0


def _canon_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    k = len(seq)
    i = seq.index(min(seq))
    rot = [seq[(i + j) % k] for j in range(k)]
    if rot[1] > rot[-1]:
        rot = [rot[0]] + rot[1:][::-1]
    return tuple(rot)


def _cycle_search(
    g: Graph,
    state: _SearchState,
    allowed: int,
    root: int,
    constraints: Optional[SolveConstraints],
) -> None:
    """Enumerate cycles through ``root`` inside ``allowed`` (root = minimum
    allowed vertex), updating state.best; raises _Budget on exhaustion."""
    masks = adjacency_masks(g)
    root_bit = 1 << root
    partner: dict[Edge, list[Edge]] = {}
    hit_sets: tuple[frozenset[Edge], ...] = ()
    if constraints:
        for e1, e2 in constraints.forbidden_pairs:
            partner.setdefault(e1, []).append(e2)
            partner.setdefault(e2, []).append(e1)
        hit_sets = constraints.required_hit_sets
    used_edges: set[Edge] = set()
    path = [root]

    def accept(cycle: tuple[int, ...]) -> bool:
        if hit_sets:
            edges = {canon_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))}
            if any(not (hs & edges) for hs in hit_sets):
                return False
        return True

    def step(cur: int, visited: int) -> bool:
        """Returns True to abort the whole search (stop_at satisfied)."""
        state.explored += 1
        if state.explored > state.budget:
            raise _Budget()
        plen = len(path)
        # Closing edge available?
        if plen >= 3 and (masks[cur] & root_bit):
            closing = canon_edge(cur, root)
            legal = True
            if constraints:
                for other in partner.get(closing, ()):
                    if other in used_edges:
                        legal = False
                        break
            if legal and plen > state.best_len:
                cyc = _canon_cycle(path)
                if accept(cyc):
                    state.best_len = plen
                    state.best = cyc
                    if state.stop_at is not None and plen >= state.stop_at:
                        return True
            if legal and state.collector is not None and plen >= state.collect_min:
                cyc = _canon_cycle(path)
                if accept(cyc):
                    state.collector.append(cyc)
        # Bound: future vertices live in the blocks between cur and root.
        rest = allowed & ~visited
        live = _reach_mask(masks, 1 << cur, rest | (1 << cur) | root_bit)
        if not (live & root_bit):
            return False
        target = state.best_len + 1 if state.stop_at is None else state.stop_at
        if plen + bin(live & rest).count("1") < target:
            return False
        core = _two_core(masks, live, (1 << cur) | root_bit)
        if not (core & root_bit) or not (core & (1 << cur)):
            return False
        if plen + bin(core & rest).count("1") < target:
            return False
        if plen + 2 < target and cur != root:
            usable = _block_path_vertices(masks, core, cur, root)
            if plen + bin(usable & rest).count("1") < target:
                return False
            cand_mask = masks[cur] & usable & rest
        else:
            cand_mask = masks[cur] & core & rest
        cands = sorted(
            _bits(cand_mask),
            key=lambda w: (bin(masks[w] & rest).count("1"), w),
        )
        for w in cands:
            e = canon_edge(cur, w)
            if constraints and any(o in used_edges for o in partner.get(e, ())):
                continue
            path.append(w)
            used_edges.add(e)
            aborted = step(w, visited | (1 << w))
            used_edges.discard(e)
            path.pop()
            if aborted:
                return True
        return False

    step(root, root_bit)


def hamiltonian_cycle(
    g: Graph,
    constraints: Optional[SolveConstraints] = None,
    budget: Optional[int] = None,
) -> SolveResult:
    """Find a hamiltonian cycle (deterministic) or prove none exists."""
    if g.n < 3:
        raise SolveError("hamiltonian cycle needs at least 3 vertices")
    if constraints:
        constraints.validate_against(g)
    state = _SearchState(
        budget=_resolve_budget(budget, constraints), stop_at=g.n
    )
    full = (1 << g.n) - 1
    try:
        _cycle_search(g, state, full, 0, constraints)
    except _Budget:
        return SolveResult(BUDGET_EXHAUSTED, None, state.explored)
    if state.best is not None and state.best_len == g.n:
        cert = Certificate(CERT_CYCLE, state.best)
        if not verify_certificate(g, cert, expect_spanning=True):
            raise SolveError("internal error: found cycle failed verification")
        return SolveResult(FOUND, cert, state.explored)
    return SolveResult(PROVEN_ABSENT, None, state.explored)


def _resolve_budget(budget: Optional[int], constraints: Optional[SolveConstraints]) -> int:
    if budget is not None:
        return int(budget)
    if constraints is not None and constraints.node_budget is not None:
        return int(constraints.node_budget)
    return DEFAULT_BUDGET


@dataclass(frozen=True)
class LongCycleResult:
    length: int
    cycle: Optional[tuple[int, ...]]
    optimal: bool
    explored: int
    status: str


def longest_cycle(
    g: Graph,
    budget: Optional[int] = None,
    lower_target: Optional[int] = None,
    collector: Optional[list] = None,
    collect_min: int = 0,
) -> LongCycleResult:
    """Exact longest cycle; or, with ``lower_target`` L, decide whether a
    cycle of length >= L exists (stopping at the first witness).

    ``optimal`` is True only when the search ran to completion.
    """
    if g.n < 3:
        raise SolveError("cycles need at least 3 vertices")
    state = _SearchState(
        budget=budget if budget is not None else DEFAULT_BUDGET,
        stop_at=lower_target,
        collector=collector,
        collect_min=collect_min,
    )
    full = (1 << g.n) - 1
    exhausted = False
    try:
        for root in range(g.n - 2):
            allowed = full & ~((1 << root) - 1)
            _cycle_search(g, state, allowed, root, None)
            if lower_target is not None and state.best_len >= lower_target:
                break
    except _Budget:
        exhausted = True
    cycle = state.best
    if cycle is not None:
        cert = Certificate(CERT_CYCLE, cycle)
        if not verify_certificate(g, cert):
            raise SolveError("internal error: cycle failed verification")
    if lower_target is not None:
        if cycle is not None and state.best_len >= lower_target:
            status = FOUND
        elif exhausted:
            status = BUDGET_EXHAUSTED
        else:
            status = PROVEN_ABSENT
    else:
        status = BUDGET_EXHAUSTED if exhausted else FOUND
    return LongCycleResult(state.best_len, cycle, not exhausted, state.explored, status)


# ---------------------------------------------------------------------------
# Paths
# ---------------------------------------------------------------------------

def _path_search(
    g: Graph,
    state: _SearchState,
    start: int,
    end: Optional[int],
    constraints: Optional[SolveConstraints],
) -> None:
    masks = adjacency_masks(g)
    full = (1 << g.n) - 1
    partner: dict[Edge, list[Edge]] = {}
    hit_sets: tuple[frozenset[Edge], ...] = ()
    if constraints:
        for e1, e2 in constraints.forbidden_pairs:
            partner.setdefault(e1, []).append(e2)
            partner.setdefault(e2, []).append(e1)
        hit_sets = constraints.required_hit_sets
    used_edges: set[Edge] = set()
    path = [start]

    def accept() -> bool:
        if end is not None and path[-1] != end:
            return False
        if hit_sets:
            edges = {canon_edge(a, b) for a, b in zip(path, path[1:])}
            if any(not (hs & edges) for hs in hit_sets):
                return False
        return True

    def record() -> bool:
        plen = len(path)
        if plen > state.best_len and accept():
            seq = tuple(path)
            if seq[0] > seq[-1]:
                seq = seq[::-1]
            state.best_len = plen
            state.best = seq
            if state.stop_at is not None and plen >= state.stop_at:
                return True
        return False

    def step(cur: int, visited: int) -> bool:
        state.explored += 1
        if state.explored > state.budget:
            raise _Budget()
        if record():
            return True
        rest = full & ~visited
        live = _reach_mask(masks, 1 << cur, rest | (1 << cur))
        target = state.best_len + 1 if state.stop_at is None else state.stop_at
        if end is not None and not (live & (1 << end)) and cur != end:
            return False
        if len(path) + bin(live & rest).count("1") < target:
            return False
        # At most one unvisited vertex may end up with a single live
        # neighbour (it must then be the final endpoint).
        if state.stop_at is not None and state.stop_at >= g.n:
            deficient = 0
            f = live & rest
            while f:
                bit = f & -f
                f ^= bit
                v = bit.bit_length() - 1
                if bin(masks[v] & (live & rest | (1 << cur))).count("1") < 2:
                    if end is not None and v != end:
                        return False
                    deficient += 1
                    if deficient > 1:
                        return False
        cands = sorted(
            _bits(masks[cur] & rest),
            key=lambda w: (bin(masks[w] & rest).count("1"), w),
        )
        for w in cands:
            e = canon_edge(cur, w)
            if constraints and any(o in used_edges for o in partner.get(e, ())):
                continue
            path.append(w)
            used_edges.add(e)
            aborted = step(w, visited | (1 << w))
            used_edges.discard(e)
            path.pop()
            if aborted:
                return True
        return False

    step(start, 1 << start)


def hamiltonian_path(
    g: Graph,
    constraints: Optional[SolveConstraints] = None,
    budget: Optional[int] = None,
) -> SolveResult:
    """Find a hamiltonian path (optionally endpoint-pinned) or prove absence."""
    if g.n < 1:
        raise SolveError("empty graph")
    if constraints:
        constraints.validate_against(g)
    state = _SearchState(budget=_resolve_budget(budget, constraints), stop_at=g.n)
    endpoints = constraints.endpoints if constraints else None
    starts = [endpoints[0]] if endpoints else list(range(g.n))
    end = endpoints[1] if endpoints else None
    try:
        for s in starts:
            _path_search(g, state, s, end, constraints)
            if state.best is not None and state.best_len >= g.n:
                break
    except _Budget:
        return SolveResult(BUDGET_EXHAUSTED, None, state.explored)
    if state.best is not None and state.best_len == g.n:
        cert = Certificate(CERT_PATH, state.best)
        if not verify_certificate(g, cert, expect_spanning=True):
            raise SolveError("internal error: found path failed verification")
        return SolveResult(FOUND, cert, state.explored)
    return SolveResult(PROVEN_ABSENT, None, state.explored)


@dataclass(frozen=True)
class LongPathResult:
    length: int
    path: Optional[tuple[int, ...]]
    optimal: bool
    explored: int


def longest_path(g: Graph, budget: Optional[int] = None) -> LongPathResult:
    """Exact longest path (number of vertices) within the node budget."""
    if g.n < 1:
        raise SolveError("empty graph")
    state = _SearchState(budget=budget if budget is not None else DEFAULT_BUDGET)
    exhausted = False
    try:
        for s in range(g.n):
            _path_search(g, state, s, None, None)
            if state.best_len == g.n:
                break
    except _Budget:
        exhausted = True
    if state.best is not None:
        cert = Certificate(CERT_PATH, state.best)
        if not verify_certificate(g, cert):
            raise SolveError("internal error: path failed verification")
    return LongPathResult(state.best_len, state.best, not exhausted, state.explored)


# ---------------------------------------------------------------------------
# Counting certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IndependenceBounds:
    circ_upper: int
    traceable_possible: bool


def independence_bounds(g: Graph, i_set: Iterable[int]) -> IndependenceBounds:
    """Cycle/path counting bounds from an independent set: a cycle alternates
    members with non-members, a path can carry one extra member."""
    s = frozenset(i_set)
    if not is_independent_set(g, s):
        raise SolveError("set is not independent")
    circ_upper = 2 * (g.n - len(s))
    traceable_possible = len(s) <= (g.n + 1) // 2
    return IndependenceBounds(circ_upper, traceable_possible)
