"""Simple undirected graphs with optional black/white vertex roles.

Vertices are dense integers 0..n-1 so that generators can document a fixed
labelling and tests can address named vertices.  Graphs are immutable after
construction; every mutation-style helper returns a new value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Sequence

Edge = tuple[int, int]

BLACK = "black"
WHITE = "white"


class GraphError(ValueError):
    """Malformed graph input (loops, duplicates, dangling endpoints)."""


def canon_edge(u: int, v: int) -> Edge:
    """Return the canonical (min, max) form of an edge."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset[Edge]
    colors: Optional[tuple[Optional[str], ...]] = None

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"loop edge at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u},{v}) has a dangling endpoint")
            if u > v:
                raise GraphError(f"edge ({u},{v}) not in canonical order")
        if self.colors is not None and len(self.colors) != self.n:
            raise GraphError("colors tuple length must equal vertex count")

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return canon_edge(u, v) in self.edges

    def color(self, v: int) -> Optional[str]:
        return None if self.colors is None else self.colors[v]

    def color_class(self, color: str) -> frozenset[int]:
        if self.colors is None:
            return frozenset()
        return frozenset(v for v in range(self.n) if self.colors[v] == color)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return len(adjacency(self)[v])

    def min_degree(self) -> int:
        return min((len(a) for a in adjacency(self)), default=0)


@lru_cache(maxsize=4096)
def adjacency(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Per-vertex sorted neighbour tuples (cached per graph value)."""
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    return tuple(tuple(sorted(a)) for a in adj)


@lru_cache(maxsize=4096)
def adjacency_masks(g: Graph) -> tuple[int, ...]:
    """Neighbour sets as bitmasks; fast set algebra for search and cuts."""
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return tuple(masks)


def build_graph(
    vertex_count: int,
    edge_list: Iterable[Sequence[int]],
    colors: Optional[Mapping[int, str] | Sequence[Optional[str]]] = None,
) -> Graph:
    """Build a simple graph, rejecting loops, duplicates and bad endpoints."""
    if vertex_count < 0:
        raise GraphError("vertex count must be nonnegative")
    seen: set[Edge] = set()
    for pair in edge_list:
        u, v = int(pair[0]), int(pair[1])
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphError(f"edge ({u},{v}) has a dangling endpoint")
        e = canon_edge(u, v)
        if e in seen:
            raise GraphError(f"duplicate edge {e}")
        seen.add(e)
    color_tuple: Optional[tuple[Optional[str], ...]] = None
    if colors is not None:
        if isinstance(colors, Mapping):
            color_tuple = tuple(colors.get(v) for v in range(vertex_count))
        else:
            color_tuple = tuple(colors)
    return Graph(vertex_count, frozenset(seen), color_tuple)


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph on vertex set ``s``, relabelled 0..|s|-1 in sorted id order."""
    vs = sorted(set(s))
    if any(v < 0 or v >= g.n for v in vs):
        raise GraphError("induced set is not a subset of the vertex set")
    index = {v: i for i, v in enumerate(vs)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges
        if u in index and v in index
    ]
    colors = None
    if g.colors is not None:
        colors = tuple(g.colors[v] for v in vs)
    return Graph(len(vs), frozenset(canon_edge(u, v) for u, v in edges), colors)


def induced_edge_count(g: Graph, s: Iterable[int]) -> int:
    ss = set(s)
    return sum(1 for u, v in g.edges if u in ss and v in ss)


def is_independent_set(g: Graph, s: Iterable[int]) -> bool:
    ss = set(s)
    if any(v < 0 or v >= g.n for v in ss):
        raise GraphError("set is not a subset of the vertex set")
    return all(not (u in ss and v in ss) for u, v in g.edges)


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    vs = sorted(set(s))
    return all(g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])


def is_connected(g: Graph, removed: frozenset[int] = frozenset()) -> bool:
    """Connectivity of g minus ``removed`` (vacuously true when empty)."""
    alive = [v for v in range(g.n) if v not in removed]
    if not alive:
        return True
    adj = adjacency(g)
    seen = {alive[0]}
    stack = [alive[0]]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(alive)


def connected_components(g: Graph, removed: frozenset[int] = frozenset()) -> list[list[int]]:
    """Components of g minus ``removed``, sorted by smallest contained id."""
    adj = adjacency(g)
    seen: set[int] = set(removed)
    comps: list[list[int]] = []
    for v in range(g.n):
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        stack = [v]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return sorted(comps, key=lambda c: c[0])


def isomorphic_to_k4(g: Graph, s: Sequence[int]) -> bool:
    return len(set(s)) == 4 and induced_edge_count(g, s) == 6


def isomorphic_to_k4_minus(g: Graph, s: Sequence[int]) -> bool:
    """K4 with exactly one edge removed on the four vertices of ``s``."""
    return len(set(s)) == 4 and induced_edge_count(g, s) == 5


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------

CERT_CYCLE = "cycle"
CERT_PATH = "path"
CERT_CUT = "cut"
CERT_INDEPENDENT_SET = "independent_set"
CERT_SUBDIVISION = "subdivision"
CERT_FACE_COUNT = "face_count"


@dataclass(frozen=True)
class Certificate:
    """Tagged verification artifact, re-checkable without re-running search.

    Payload shape by kind:
      cycle / path      -- tuple of vertex ids in visit order
      cut               -- tuple of removed vertex ids
      independent_set   -- tuple of vertex ids
      subdivision       -- dict with "target" ("K5"|"K33"), "branch" tuple,
                           "paths" tuple of vertex tuples (endpoints included)
      face_count        -- dict with "faces" (int); verified by the drawing
                           module against a face trace
    """

    kind: str
    payload: object = field(default=None)

    def as_json(self) -> dict:
        payload = self.payload
        if isinstance(payload, tuple):
            payload = list(payload)
        elif isinstance(payload, dict):
            payload = {
                k: ([list(p) for p in v] if k == "paths" else
                    list(v) if isinstance(v, tuple) else v)
                for k, v in payload.items()
            }
        return {"kind": self.kind, "payload": payload}


class CertificateError(ValueError):
    """Certificate payload malformed for its kind."""


def _check_walk(g: Graph, seq: Sequence[int], closed: bool) -> bool:
    if len(seq) != len(set(seq)):
        return False
    if any(v < 0 or v >= g.n for v in seq):
        raise CertificateError("walk references unknown vertices")
    pairs = list(zip(seq, seq[1:]))
    if closed:
        if len(seq) < 3:
            return False
        pairs.append((seq[-1], seq[0]))
    return all(g.has_edge(u, v) for u, v in pairs)


def _check_subdivision(g: Graph, payload: dict) -> bool:
    try:
        target = payload["target"]
        branch = tuple(payload["branch"])
        paths = tuple(tuple(p) for p in payload["paths"])
    except (TypeError, KeyError) as exc:
        raise CertificateError(f"malformed subdivision payload: {exc}") from exc
    if target not in ("K5", "K33"):
        raise CertificateError(f"unknown subdivision target {target!r}")
    if len(set(branch)) != len(branch):
        return False
    bset = set(branch)
    if target == "K5":
        if len(branch) != 5:
            return False
        wanted = {frozenset((a, b)) for i, a in enumerate(branch) for b in branch[i + 1:]}
    else:
        if len(branch) != 6:
            return False
        side_a, side_b = branch[:3], branch[3:]
        wanted = {frozenset((a, b)) for a in side_a for b in side_b}
    seen_pairs: set[frozenset[int]] = set()
    interior_used: set[int] = set()
    for p in paths:
        if len(p) < 2 or p[0] not in bset or p[-1] not in bset:
            return False
        if not _check_walk(g, p, closed=False):
            return False
        pair = frozenset((p[0], p[-1]))
        if pair not in wanted or pair in seen_pairs:
            return False
        seen_pairs.add(pair)
        interior = set(p[1:-1])
        if interior & bset or interior & interior_used:
            return False
        interior_used |= interior
    return seen_pairs == wanted


def verify_certificate(g: Graph, cert: Certificate, expect_spanning: bool = False) -> bool:
    """Kind-specific check of a certificate against ``g``.

    ``expect_spanning`` additionally requires cycle/path certificates to
    visit every vertex (hamiltonicity).
    """
    if cert.kind == CERT_CYCLE:
        seq = tuple(cert.payload)  # type: ignore[arg-type]
        ok = _check_walk(g, seq, closed=True)
        return ok and (not expect_spanning or len(seq) == g.n)
    if cert.kind == CERT_PATH:
        seq = tuple(cert.payload)  # type: ignore[arg-type]
        if len(seq) < 1:
            return False
        ok = _check_walk(g, seq, closed=False)
        return ok and (not expect_spanning or len(seq) == g.n)
    if cert.kind == CERT_CUT:
        cut = frozenset(cert.payload)  # type: ignore[arg-type]
        if any(v < 0 or v >= g.n for v in cut):
            raise CertificateError("cut references unknown vertices")
        if len(cut) >= g.n:
            return False
        return not is_connected(g, removed=cut)
    if cert.kind == CERT_INDEPENDENT_SET:
        return is_independent_set(g, cert.payload)  # type: ignore[arg-type]
    if cert.kind == CERT_SUBDIVISION:
        return _check_subdivision(g, cert.payload)  # type: ignore[arg-type]
    if cert.kind == CERT_FACE_COUNT:
        # Needs the drawing; re-traced by drawing.verify_face_count_certificate.
        from . import drawing as _drawing

        return _drawing.verify_face_count_certificate(cert)
    raise CertificateError(f"unknown certificate kind {cert.kind!r}")


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------

def graph_to_json(g: Graph) -> dict:
    data: dict = {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}
    if g.colors is not None and any(c is not None for c in g.colors):
        data["colors"] = {
            str(v): g.colors[v] for v in range(g.n) if g.colors[v] is not None
        }
    return data


def graph_from_json(data: Mapping) -> Graph:
    try:
        n = int(data["n"])
        edges = [(int(u), int(v)) for u, v in data["edges"]]
    except (TypeError, KeyError, ValueError) as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from exc
    colors = None
    if "colors" in data and data["colors"]:
        colors = {int(k): str(v) for k, v in data["colors"].items()}
    return build_graph(n, edges, colors)
