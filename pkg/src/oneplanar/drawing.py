"""1-planar drawings stored as planarized rotation systems.

A drawing holds the abstract graph together with the sphere embedding of
its planarization: crossings become 4-valent nodes, and every node (real
vertex or crossing node) carries a cyclic sequence of darts.  A dart is
one end of an edge segment; an uncrossed edge is a single segment, a
crossed edge is exactly two segments meeting at its crossing node.

There are no coordinates anywhere; faces, redraw arguments and all
classification run on the combinatorial map.  Crossing nodes are numbered
n, n+1, ... in the canonical order of the crossing list.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Sequence

from .graph import (
    Certificate,
    Edge,
    Graph,
    adjacency,
    adjacency_masks,
    canon_edge,
    graph_from_json,
    graph_to_json,
    induced_edge_count,
)

Dart = tuple[Edge, int]  # (edge, segment index)
DirectedDart = tuple[int, Dart]  # (tail node, dart at tail)

FULL = "Full"
ALMOST_FULL = "AlmostFull"
OTHER = "Other"

LOCALLY_MAXIMAL = "LocallyMaximal"
WEAKLY_LOCALLY_MAXIMAL = "WeaklyLocallyMaximal"
NEITHER = "Neither"


class DrawingError(ValueError):
    """Structurally invalid drawing input."""


class BudgetExceededError(RuntimeError):
    """An enumeration exceeded its size budget."""


@dataclass(frozen=True)
class Drawing:
    """Planarized rotation system of a 1-planar drawing."""

    graph: Graph
    crossings: tuple[tuple[Edge, Edge], ...]
    rot: tuple[tuple[Dart, ...], ...]

    @property
    def n_real(self) -> int:
        return self.graph.n

    @property
    def n_nodes(self) -> int:
        return self.graph.n + len(self.crossings)

    def crossing_node(self, index: int) -> int:
        return self.graph.n + index

    def is_crossing_node(self, node: int) -> bool:
        return node >= self.graph.n

    def crossing_pair(self, node: int) -> tuple[Edge, Edge]:
        return self.crossings[node - self.graph.n]

    def crossing_count(self) -> int:
        return len(self.crossings)


@lru_cache(maxsize=2048)
def _maps(d: Drawing):
    """Derived lookups: edge->crossing node, segment->endpoints, dart pos."""
    n = d.graph.n
    edge_cross: dict[Edge, int] = {}
    for i, (ea, eb) in enumerate(d.crossings):
        edge_cross[ea] = n + i
        edge_cross[eb] = n + i
    seg_ends: dict[Dart, tuple[int, int]] = {}
    for e in d.graph.edges:
        u, v = e
        c = edge_cross.get(e)
        if c is None:
            seg_ends[(e, 0)] = (u, v)
        else:
            seg_ends[(e, 0)] = (u, c)
            seg_ends[(e, 1)] = (c, v)
    dart_pos: dict[tuple[int, Dart], int] = {}
    for node in range(d.n_nodes):
        for idx, dart in enumerate(d.rot[node]):
            dart_pos[(node, dart)] = idx
    return edge_cross, seg_ends, dart_pos


def edge_crossing_map(d: Drawing) -> dict[Edge, int]:
    return dict(_maps(d)[0])


def dart_other_end(d: Drawing, node: int, dart: Dart) -> int:
    a, b = _maps(d)[1][dart]
    return b if a == node else a


def next_face_dart(d: Drawing, step: DirectedDart) -> DirectedDart:
    """Successor of a directed dart along its facial walk."""
    node, dart = step
    head = dart_other_end(d, node, dart)
    _, _, dart_pos = _maps(d)
    idx = dart_pos[(head, dart)]
    nxt = d.rot[head][(idx + 1) % len(d.rot[head])]
    return (head, nxt)


def faces(d: Drawing) -> list[list[DirectedDart]]:
    """All facial walks of the planarized map, deterministically ordered.

    Each directed dart lies on exactly one walk; walks start at their
    lexicographically smallest directed dart.
    """
    all_darts: list[DirectedDart] = []
    for node in range(d.n_nodes):
        for dart in d.rot[node]:
            all_darts.append((node, dart))
    all_darts.sort()
    seen: set[DirectedDart] = set()
    walks: list[list[DirectedDart]] = []
    for start in all_darts:
        if start in seen:
            continue
        walk = [start]
        seen.add(start)
        cur = next_face_dart(d, start)
        while cur != start:
            walk.append(cur)
            seen.add(cur)
            cur = next_face_dart(d, cur)
        walks.append(walk)
    return walks


def face_nodes(walk: Sequence[DirectedDart]) -> list[int]:
    """Node sequence visited by a facial walk (tails, in walk order)."""
    return [tail for tail, _ in walk]


def segment_count(d: Drawing) -> int:
    # A crossed edge contributes two segments, an uncrossed edge one.
    return d.graph.m + 2 * len(d.crossings)


def map_is_connected(d: Drawing) -> bool:
    total = d.n_nodes
    if total == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for dart in d.rot[u]:
            w = dart_other_end(d, u, dart)
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == total


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

def validate_drawing(d: Drawing) -> list[str]:
    """All drawing invariants; returns a list of violations (empty = valid)."""
    violations: list[str] = []
    n = d.graph.n

    crossed_edges: set[Edge] = set()
    for i, (ea, eb) in enumerate(d.crossings):
        if ea not in d.graph.edges or eb not in d.graph.edges:
            violations.append(f"crossing {i} references a non-edge")
            continue
        if ea >= eb:
            violations.append(f"crossing {i} pair not in canonical order")
        if ea in crossed_edges or eb in crossed_edges:
            violations.append(f"edge crossed twice at crossing {i}")
        crossed_edges.update((ea, eb))
        ends = set(ea) | set(eb)
        if len(ends) != 4:
            violations.append(
                f"crossing {i} endpoints not mutually distinct: {sorted(ends)}"
            )
    if violations:
        return violations

    if len(d.rot) != d.n_nodes:
        return [f"rotation table has {len(d.rot)} nodes, expected {d.n_nodes}"]

    edge_cross, seg_ends, _ = _maps(d)

    # Per-node dart inventories.
    for v in range(n):
        expected: set[Dart] = set()
        for w in adjacency(d.graph)[v]:
            e = canon_edge(v, w)
            if e in edge_cross:
                expected.add((e, 0 if v == e[0] else 1))
            else:
                expected.add((e, 0))
        got = list(d.rot[v])
        if len(got) != len(set(got)):
            violations.append(f"vertex {v} repeats a dart")
        if set(got) != expected:
            violations.append(f"vertex {v} darts do not match incident edges")
    for i, (ea, eb) in enumerate(d.crossings):
        c = n + i
        got = list(d.rot[c])
        if sorted(got) != sorted([(ea, 0), (ea, 1), (eb, 0), (eb, 1)]):
            violations.append(f"crossing node {c} does not carry 4 matching darts")
            continue
        edges_cyclic = [dart[0] for dart in got]
        if edges_cyclic[0] == edges_cyclic[1] or edges_cyclic[1] == edges_cyclic[2]:
            violations.append(f"crossing node {c} darts do not alternate edges")
    if violations:
        return violations

    for dart, (a, b) in seg_ends.items():
        if dart not in d.rot[a] or dart not in d.rot[b]:
            violations.append(f"segment {dart} missing from an endpoint rotation")
    if violations:
        return violations

    if not map_is_connected(d):
        violations.append("planarized map is disconnected")
        return violations

    # Euler check via the face trace (sphere embedding).
    nodes = d.n_nodes
    segs = segment_count(d)
    nfaces = len(faces(d)) if segs else 1
    if nodes - segs + nfaces != 2:
        violations.append(
            f"Euler check failed: {nodes} nodes - {segs} segments + {nfaces} faces != 2"
        )
    return violations


@dataclass(frozen=True)
class EdgeBoundReport:
    ok: bool
    optimal: bool
    edges: int
    bound: int


def edge_bound_check(g: Graph) -> EdgeBoundReport:
    """1-planar necessary edge bound: at most 4n-8 edges for n >= 3."""
    if g.n < 3:
        raise DrawingError("edge bound requires at least 3 vertices")
    bound = 4 * g.n - 8
    return EdgeBoundReport(g.m <= bound, g.m == bound, g.m, bound)


# ---------------------------------------------------------------------------
# Crossing classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CrossingInfo:
    node: int
    edges: tuple[Edge, Edge]
    endpoints: frozenset[int]
    cls: str
    missing_chords: tuple[tuple[int, int], ...]
    path_order: Optional[tuple[int, int, int, int]]


def _chord_candidates(ea: Edge, eb: Edge) -> list[tuple[int, int]]:
    return [canon_edge(p, q) for p in ea for q in eb]


def classify_crossing(d: Drawing, node: int) -> CrossingInfo:
    """Full / almost-full / other, with missing chords and the induced
    path order a,b,c,d for almost-full crossings (a < d for determinism)."""
    if not d.is_crossing_node(node) or node >= d.n_nodes:
        raise DrawingError(f"node {node} is not a crossing node")
    ea, eb = d.crossing_pair(node)
    endpoints = frozenset(ea) | frozenset(eb)
    g = d.graph
    present = induced_edge_count(g, endpoints)
    missing = tuple(
        pq for pq in sorted(_chord_candidates(ea, eb)) if pq not in g.edges
    )
    path_order: Optional[tuple[int, int, int, int]] = None
    if present == 6:
        cls = FULL
    elif present == 5:
        cls = ALMOST_FULL
        chords = [pq for pq in _chord_candidates(ea, eb) if pq in g.edges]
        deg: dict[int, list[int]] = {v: [] for v in endpoints}
        for p, q in chords:
            deg[p].append(q)
            deg[q].append(p)
        ends = sorted(v for v in endpoints if len(deg[v]) == 1)
        a = ends[0]
        order = [a]
        prev = None
        while len(order) < 4:
            nxt = [w for w in deg[order[-1]] if w != prev]
            prev = order[-1]
            order.append(nxt[0])
        path_order = tuple(order)  # type: ignore[assignment]
    else:
        cls = OTHER
    return CrossingInfo(node, (ea, eb), endpoints, cls, missing, path_order)


@dataclass(frozen=True)
class MaximalityClass:
    cls: str
    counts: tuple[int, int, int]  # (full, almost_full, other)


def maximality_class(d: Drawing) -> MaximalityClass:
    full = almost = other = 0
    for i in range(len(d.crossings)):
        cls = classify_crossing(d, d.crossing_node(i)).cls
        if cls == FULL:
            full += 1
        elif cls == ALMOST_FULL:
            almost += 1
        else:
            other += 1
    if other:
        cls = NEITHER
    elif almost:
        cls = WEAKLY_LOCALLY_MAXIMAL
    else:
        cls = LOCALLY_MAXIMAL
    return MaximalityClass(cls, (full, almost, other))


# ---------------------------------------------------------------------------
# Builder: the one place drawings are assembled and spliced
# ---------------------------------------------------------------------------

# Rotation entries before canonicalization:
#   at a real vertex u:   the edge tuple (the segment on u's side is implied)
#   at a crossing handle: (edge, real endpoint the segment leads to)
Entry = object


class DrawingBuilder:
    """Mutable assembly of a drawing; ``finish()`` canonicalizes."""

    def __init__(self, n: int):
        self.n = n
        self.edges: set[Edge] = set()
        self.colors: dict[int, str] = {}
        self.cross_of: dict[Edge, tuple[Edge, Edge]] = {}
        self.rot: dict[object, list] = {v: [] for v in range(n)}

    # -- construction ------------------------------------------------------

    def add_vertex(self, color: Optional[str] = None) -> int:
        v = self.n
        self.n += 1
        self.rot[v] = []
        if color is not None:
            self.colors[v] = color
        return v

    def add_edge(self, u: int, v: int) -> Edge:
        e = canon_edge(u, v)
        if e in self.edges:
            raise DrawingError(f"duplicate edge {e}")
        self.edges.add(e)
        return e

    def cross(self, e1: Edge, e2: Edge) -> tuple[Edge, Edge]:
        pair = (e1, e2) if e1 < e2 else (e2, e1)
        for e in pair:
            if e in self.cross_of:
                raise DrawingError(f"edge {e} crossed twice")
        self.cross_of[pair[0]] = pair
        self.cross_of[pair[1]] = pair
        self.rot[pair] = []
        return pair

    def set_rotation(self, key: object, entries: list) -> None:
        self.rot[key] = list(entries)

    # -- splicing ----------------------------------------------------------

    def insert_after(self, key: object, anchor: Entry, new_entries: list) -> None:
        lst = self.rot[key]
        idx = lst.index(anchor)
        for off, entry in enumerate(new_entries, start=1):
            lst.insert(idx + off, entry)

    def delete_edge(self, e: Edge) -> None:
        """Remove an edge; a crossing on it dissolves and its partner edge
        becomes a single uncrossed segment (splice)."""
        self.edges.discard(e)
        for u in e:
            self.rot[u] = [entry for entry in self.rot[u] if entry != e]
        pair = self.cross_of.pop(e, None)
        if pair is not None:
            partner = pair[0] if pair[1] == e else pair[1]
            self.cross_of.pop(partner, None)
            del self.rot[pair]

    # -- canonical output --------------------------------------------------

    def finish(self) -> Drawing:
        pairs = sorted(set(self.cross_of.values()))
        pair_index = {pair: i for i, pair in enumerate(pairs)}
        colors = None
        if self.colors:
            colors = tuple(self.colors.get(v) for v in range(self.n))
        g = Graph(self.n, frozenset(self.edges), colors)

        def resolve_real(u: int, entry) -> Dart:
            e = entry
            if not (isinstance(e, tuple) and len(e) == 2 and isinstance(e[0], int)):
                raise DrawingError(f"bad rotation entry {entry!r} at vertex {u}")
            if u not in e:
                raise DrawingError(f"entry {e} at vertex {u} is not incident")
            if e in self.cross_of:
                return (e, 0 if u == e[0] else 1)
            return (e, 0)

        def resolve_crossing(pair, entry) -> Dart:
            e, toward = entry
            if e not in pair:
                raise DrawingError(f"entry {entry!r} not on crossing {pair}")
            if toward not in e:
                raise DrawingError(f"entry {entry!r} is not an endpoint of {e}")
            return (e, 0 if toward == e[0] else 1)

        rot: list[tuple[Dart, ...]] = []
        for v in range(self.n):
            rot.append(tuple(resolve_real(v, entry) for entry in self.rot[v]))
        for pair in pairs:
            rot.append(tuple(resolve_crossing(pair, entry) for entry in self.rot[pair]))
        _ = pair_index
        return Drawing(g, tuple(pairs), tuple(rot))


def to_builder(d: Drawing) -> DrawingBuilder:
    """Reopen a drawing for splicing; crossing keys are their edge pairs."""
    b = DrawingBuilder(d.graph.n)
    b.edges = set(d.graph.edges)
    if d.graph.colors is not None:
        b.colors = {
            v: c for v, c in enumerate(d.graph.colors) if c is not None
        }
    for ea, eb in d.crossings:
        b.cross_of[ea] = (ea, eb)
        b.cross_of[eb] = (ea, eb)
    for v in range(d.graph.n):
        b.rot[v] = [dart[0] for dart in d.rot[v]]
    for i, pair in enumerate(d.crossings):
        node = d.crossing_node(i)
        b.rot[pair] = [
            (e, e[0] if s == 0 else e[1]) for e, s in d.rot[node]
        ]
    return b


def entry_at(d: Drawing, node: int, dart: Dart) -> Entry:
    """Builder rotation entry corresponding to a dart at ``node``."""
    e, s = dart
    if node < d.graph.n:
        return e
    return (e, e[0] if s == 0 else e[1])


def builder_key(d: Drawing, node: int):
    return node if node < d.graph.n else d.crossing_pair(node)


# ---------------------------------------------------------------------------
# Face insertion primitives
# ---------------------------------------------------------------------------
#
# All primitives take a facial walk of the current drawing and splice new
# darts into the corner wedges.  Along a walk ..., (p, dart to x), (x, dart
# to y), ..., the dart x->y is the rotation successor of the dart x->p, so
# the face's wedge at the corner x sits immediately after the dart of the
# edge back to the predecessor p.  New darts are inserted there, listed
# from the p side towards the y side; validate_drawing certifies the
# result stays a sphere embedding.

def _corner_anchor(d: Drawing, walk: Sequence[DirectedDart], pos: int):
    """Builder entry after which new darts enter the face at this corner."""
    tail = walk[pos][0]
    prev_dart = walk[(pos - 1) % len(walk)][1]
    return tail, entry_at(d, tail, prev_dart)


def insert_star_in_face(
    d: Drawing,
    walk: Sequence[DirectedDart],
    positions: Sequence[int],
    color: Optional[str] = None,
) -> tuple[Drawing, int]:
    """Insert a new vertex inside the face joined to the walk corners at
    ``positions`` (no crossings).  Returns (drawing, new vertex id)."""
    b = to_builder(d)
    w = b.add_vertex(color)
    spokes = []
    for pos in positions:
        tail, anchor = _corner_anchor(d, walk, pos)
        if tail >= d.graph.n:
            raise DrawingError("star targets must be real vertices")
        e = b.add_edge(w, tail)
        b.insert_after(tail, anchor, [e])
        spokes.append(e)
    b.set_rotation(w, list(reversed(spokes)))
    return b.finish(), w


def insert_edge_in_face(
    d: Drawing,
    walk: Sequence[DirectedDart],
    pos_u: int,
    pos_v: int,
) -> Drawing:
    """Insert an uncrossed edge between the two walk corners."""
    b = to_builder(d)
    u, anchor_u = _corner_anchor(d, walk, pos_u)
    v, anchor_v = _corner_anchor(d, walk, pos_v)
    if u >= d.graph.n or v >= d.graph.n:
        raise DrawingError("edge endpoints must be real vertices")
    e = b.add_edge(u, v)
    b.insert_after(u, anchor_u, [e])
    b.insert_after(v, anchor_v, [e])
    return b.finish()


def insert_k6_gadget_in_triangle(
    d: Drawing,
    walk: Sequence[DirectedDart],
) -> tuple[Drawing, tuple[int, int, int]]:
    """Insert the three-vertex crossing gadget into a triangular face.

    The corners u,v,w of the walk and the new a,b,c span a K6 with three
    full crossings; the host edges uv, vw, wu remain uncrossed.  Crossed
    gadget edges are ub, va (a pair), vc, wb (a pair), wa, uc (a pair).
    """
    if len(walk) != 3:
        raise DrawingError("K6 gadget needs a triangular face")
    u, w, v = (tail for tail, _ in walk)  # a sits at u, b at v, c at w
    if len({u, v, w}) != 3 or any(x >= d.graph.n for x in (u, v, w)):
        raise DrawingError("triangle corners must be three distinct real vertices")
    b = to_builder(d)
    a = b.add_vertex()
    bb = b.add_vertex()
    c = b.add_vertex()
    ua, vb, wc = b.add_edge(u, a), b.add_edge(v, bb), b.add_edge(w, c)
    ub, va = b.add_edge(u, bb), b.add_edge(v, a)
    vc, wb = b.add_edge(v, c), b.add_edge(w, bb)
    wa, uc = b.add_edge(w, a), b.add_edge(u, c)
    ab, bc, ca = b.add_edge(a, bb), b.add_edge(bb, c), b.add_edge(c, a)
    p1 = b.cross(ub, va)
    p2 = b.cross(vc, wb)
    p3 = b.cross(wa, uc)
    tail_u, anchor_u = _corner_anchor(d, walk, 0)
    tail_w, anchor_w = _corner_anchor(d, walk, 1)
    tail_v, anchor_v = _corner_anchor(d, walk, 2)
    b.insert_after(tail_u, anchor_u, [ub, ua, uc])
    b.insert_after(tail_w, anchor_w, [wa, wc, wb])
    b.insert_after(tail_v, anchor_v, [vc, vb, va])
    b.set_rotation(a, [ua, va, ab, ca, wa])
    b.set_rotation(bb, [wb, bc, ab, ub, vb])
    b.set_rotation(c, [wc, uc, ca, bc, vc])
    b.set_rotation(p1, [(ub, bb), (va, a), (ub, u), (va, v)])
    b.set_rotation(p2, [(wb, w), (vc, c), (wb, bb), (vc, v)])
    b.set_rotation(p3, [(uc, c), (wa, w), (uc, u), (wa, a)])
    return b.finish(), (a, bb, c)


def delete_edge(d: Drawing, e: Edge) -> Drawing:
    """Drawing minus one edge (a crossing on it dissolves, partner spliced)."""
    if e not in d.graph.edges:
        raise DrawingError(f"{e} is not an edge")
    b = to_builder(d)
    b.delete_edge(e)
    return b.finish()


# ---------------------------------------------------------------------------
# Normalization: the two redraw arguments used by the proofs
# ---------------------------------------------------------------------------

def _find_corner_face(
    d: Drawing, node: int, first: int, second: int
) -> Optional[tuple[list[DirectedDart], int]]:
    """Face whose walk contains the subwalk first -> node -> second, and the
    walk index of the ``node`` step."""
    for walk in faces(d):
        k = len(walk)
        for i, (tail, _) in enumerate(walk):
            if tail != node:
                continue
            if walk[i - 1][0] == first and walk[(i + 1) % k][0] == second:
                return walk, i
    return None


def _rewrite_reroute_crossed_chord(d: Drawing) -> Optional[Drawing]:
    """Rule (a): if uv and xy cross and the chord ux exists but is itself
    crossed, redraw ux uncrossed inside the corner face at the crossing."""
    edge_cross = _maps(d)[0]
    for pair in d.crossings:
        ea, eb = pair
        for p in ea:
            for q in eb:
                chord = canon_edge(p, q)
                if chord not in d.graph.edges or chord not in edge_cross:
                    continue
                trial = delete_edge(d, chord)
                # The crossing keeps its edge pair but its node id may slide.
                node = trial.graph.n + trial.crossings.index(pair)
                corner = _find_corner_face(trial, node, p, q)
                if corner is None:
                    corner = _find_corner_face(trial, node, q, p)
                if corner is None:
                    raise DrawingError("crossing corner face disappeared")
                walk, idx = corner
                k = len(walk)
                return insert_edge_in_face(trial, walk, (idx - 1) % k, (idx + 1) % k)
    return None


def _rewrite_remove_rereoutable_crossing(d: Drawing) -> Optional[Drawing]:
    """Rule (b): if one edge of a crossing has both endpoints on a common
    face of the map without that crossing, reroute it there (Jordan curve),
    deleting the crossing."""
    for i, (ea, eb) in enumerate(d.crossings):
        for e in (eb, ea):
            x, y = e
            trial = delete_edge(d, e)
            for walk in faces(trial):
                tails = [tail for tail, _ in walk]
                if x in tails and y in tails:
                    return insert_edge_in_face(
                        trial, walk, tails.index(x), tails.index(y)
                    )
    return None


def normalize(d: Drawing) -> Drawing:
    """Fixpoint of the two local rewrites; never increases crossings."""
    if validate_drawing(d):
        raise DrawingError("normalize requires a valid drawing")
    cur = d
    while True:
        out = _rewrite_reroute_crossed_chord(cur)
        if out is None:
            out = _rewrite_remove_rereoutable_crossing(cur)
        if out is None:
            return cur
        if len(out.crossings) >= len(cur.crossings):
            raise DrawingError("normalize rewrite did not reduce crossings")
        bad = validate_drawing(out)
        if bad:
            raise DrawingError(f"normalize produced invalid drawing: {bad}")
        cur = out


# ---------------------------------------------------------------------------
# Lemma 1 style check: crossing-sharing K5 subgraphs are 3-sharing
# ---------------------------------------------------------------------------

def _five_cliques(g: Graph, budget: int) -> list[int]:
    """All K5 subgraphs as vertex bitmasks; raises past the budget."""
    masks = adjacency_masks(g)
    out: list[int] = []
    explored = 0

    def extend(clique: int, size: int, last: int, common: int) -> None:
        nonlocal explored
        if size == 5:
            out.append(clique)
            if len(out) > budget:
                raise BudgetExceededError("too many K5 subgraphs for the budget")
            return
        cand = common & ~((1 << (last + 1)) - 1)
        while cand:
            bit = cand & -cand
            cand ^= bit
            w = bit.bit_length() - 1
            explored += 1
            if explored > 50 * budget:
                raise BudgetExceededError("K5 enumeration budget exceeded")
            extend(clique | bit, size + 1, w, common & masks[w])

    for v in range(g.n):
        extend(1 << v, 1, v, masks[v])
    return out


def check_lemma1(d: Drawing, size_budget: int = 200_000) -> list[dict]:
    """Every pair of K5 subgraphs sharing a crossing must share >= 3 vertices.

    Returns the violating pairs (expected empty for 1-planar drawings).
    """
    cliques = _five_cliques(d.graph, size_budget)
    violations: list[dict] = []
    by_edge: dict[Edge, list[int]] = {}
    for mask in cliques:
        vs = [v for v in range(d.graph.n) if (mask >> v) & 1]
        for i, u in enumerate(vs):
            for v in vs[i + 1:]:
                by_edge.setdefault((u, v), []).append(mask)
    for ea, eb in d.crossings:
        for m1 in by_edge.get(ea, ()):
            for m2 in by_edge.get(eb, ()):
                if bin(m1 & m2).count("1") < 3:
                    violations.append(
                        {
                            "crossing": (ea, eb),
                            "k5_a": [v for v in range(d.graph.n) if (m1 >> v) & 1],
                            "k5_b": [v for v in range(d.graph.n) if (m2 >> v) & 1],
                        }
                    )
    return violations


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def drawing_to_json(d: Drawing) -> dict:
    edge_ids = {e: i for i, e in enumerate(d.graph.sorted_edges())}
    return {
        "graph": graph_to_json(d.graph),
        "crossings": [
            {"edge_a": edge_ids[ea], "edge_b": edge_ids[eb]}
            for ea, eb in d.crossings
        ],
        "rotation": {
            str(node): [
                {"edge": edge_ids[e], "segment": s} for e, s in d.rot[node]
            ]
            for node in range(d.n_nodes)
        },
    }


def drawing_from_json(data: Mapping) -> Drawing:
    try:
        g = graph_from_json(data["graph"])
        edges = sorted(g.edges)
        crossing_pairs = []
        for item in data["crossings"]:
            ea, eb = edges[int(item["edge_a"])], edges[int(item["edge_b"])]
            pair = (ea, eb) if ea < eb else (eb, ea)
            crossing_pairs.append(pair)
        crossing_pairs.sort()
        rotation = data["rotation"]
        rot: list[tuple[Dart, ...]] = []
        for node in range(g.n + len(crossing_pairs)):
            entries = rotation[str(node)]
            rot.append(
                tuple((edges[int(it["edge"])], int(it["segment"])) for it in entries)
            )
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise DrawingError(f"malformed drawing JSON: {exc}") from exc
    return Drawing(g, tuple(crossing_pairs), tuple(rot))


def face_count_certificate(d: Drawing) -> Certificate:
    return Certificate(
        "face_count", {"faces": len(faces(d)), "drawing": drawing_to_json(d)}
    )


def verify_face_count_certificate(cert: Certificate) -> bool:
    payload = cert.payload
    if not isinstance(payload, dict):
        return False
    d = drawing_from_json(payload["drawing"])
    if validate_drawing(d):
        return False
    return len(faces(d)) == int(payload["faces"])


def planarization_graph(d: Drawing) -> Graph:
    """The plane graph of the map itself (crossing nodes as vertices)."""
    edges = set()
    _, seg_ends, _ = _maps(d)
    for (e, s), (a, b) in seg_ends.items():
        edges.add(canon_edge(a, b))
    return Graph(d.n_nodes, frozenset(edges))
