"""Deterministic constructors for every graph family used by the pipelines.

Each generator self-checks the properties the text asserts (counts,
regularity, crossing classes, connectivity, independence) and refuses to
emit on failure, so figure-transcription errors cannot slip through.

Vertex labelling conventions are documented per generator so tests can
address named vertices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .connectivity import is_k_connected, vertex_connectivity
from .drawing import (
    ALMOST_FULL,
    Drawing,
    DrawingBuilder,
    LOCALLY_MAXIMAL,
    WEAKLY_LOCALLY_MAXIMAL,
    edge_bound_check,
    face_nodes,
    faces,
    insert_k6_gadget_in_triangle,
    insert_star_in_face,
    maximality_class,
    validate_drawing,
)
from .graph import (
    BLACK,
    CERT_SUBDIVISION,
    Certificate,
    Graph,
    WHITE,
    build_graph,
    canon_edge,
    is_independent_set,
    verify_certificate,
)
from .planarity import planarity_certificate


class GeneratorError(RuntimeError):
    """A generator's self-check failed; the output is not emitted."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise GeneratorError(msg)


def _checked(d: Drawing, name: str) -> Drawing:
    bad = validate_drawing(d)
    _require(not bad, f"{name}: invalid drawing: {bad}")
    if d.graph.n >= 3:
        _require(edge_bound_check(d.graph).ok, f"{name}: edge bound violated")
    return d


# ---------------------------------------------------------------------------
# Small planar fixtures
# ---------------------------------------------------------------------------

def tetrahedron() -> Graph:
    return build_graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])


def octahedron() -> Graph:
    # Antipodal pairs (0,5), (1,4), (2,3); every other pair adjacent.
    non_edges = {(0, 5), (1, 4), (2, 3)}
    return build_graph(
        6,
        [
            (i, j)
            for i in range(6)
            for j in range(i + 1, 6)
            if (i, j) not in non_edges
        ],
    )


def icosahedron() -> Graph:
    edges = [
        (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
        (1, 2), (2, 3), (3, 4), (4, 5), (5, 1),
        (1, 6), (1, 7), (2, 7), (2, 8), (3, 8), (3, 9),
        (4, 9), (4, 10), (5, 10), (5, 6), (6, 7), (7, 8),
        (8, 9), (9, 10), (10, 6),
        (11, 6), (11, 7), (11, 8), (11, 9), (11, 10),
    ]
    return build_graph(12, edges)


def wheel(rim: int) -> Graph:
    """Hub 0 plus a rim cycle 1..rim."""
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return build_graph(rim + 1, edges)


def _embed(g: Graph, name: str) -> Drawing:
    out = planarity_certificate(g)
    _require(isinstance(out, Drawing), f"{name}: host graph is not planar")
    return out  # type: ignore[return-value]


def is_maximal_planar(g: Graph) -> bool:
    if g.n < 3:
        return False
    if g.m != 3 * g.n - 6:
        return False
    return isinstance(planarity_certificate(g), Drawing)


# ---------------------------------------------------------------------------
# Theorem 1 machinery: the K6 crossing gadget
# ---------------------------------------------------------------------------

def k6_gadget() -> Drawing:
    """The K6 drawn as a triangle u,v,w with the three-vertex gadget inside.

    Labels: u,v,w = 0,1,2 (host triangle), a,b,c = 3,4,5 with a matched to
    u, b to v, c to w by the uncrossed spokes ua, vb, wc.  The six crossed
    edges are ub, va (one crossing), vc, wb (one crossing), wa, uc (one
    crossing); every crossing is full.
    """
    tri = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    d = _embed(tri, "k6_gadget")
    walk = next(w for w in faces(d) if face_nodes(w)[0] == 0)
    out, _ = insert_k6_gadget_in_triangle(d, walk)
    out = _checked(out, "k6_gadget")
    _require(out.graph.m == 15, "k6_gadget: expected 15 edges")
    _require(out.crossing_count() == 3, "k6_gadget: expected 3 crossings")
    mc = maximality_class(out)
    _require(mc.cls == LOCALLY_MAXIMAL, "k6_gadget: crossings must all be full")
    return out


def theorem1_expand(h: Graph) -> Drawing:
    """Insert the K6 gadget into every face of a maximal planar host.

    Output has 7n-12 vertices and 27n-54 edges; new vertices are numbered
    n, n+1, ... in face order (three per face).
    """
    _require(h.n >= 4, "theorem1_expand: host needs at least 4 vertices")
    _require(is_maximal_planar(h), "theorem1_expand: host must be maximal planar")
    d = _embed(h, "theorem1_expand")
    walks = faces(d)
    _require(all(len(w) == 3 for w in walks), "theorem1_expand: non-triangular face")
    for walk in walks:
        d, _ = insert_k6_gadget_in_triangle(d, walk)
    d = _checked(d, "theorem1_expand")
    n = h.n
    _require(d.graph.n == 7 * n - 12, "theorem1_expand: vertex count mismatch")
    _require(d.graph.m == 27 * n - 54, "theorem1_expand: edge count mismatch")
    _require(
        maximality_class(d).cls == LOCALLY_MAXIMAL,
        "theorem1_expand: crossings must all be full",
    )
    return d


def theorem1_gadget_subset(h: Graph, face_indices: list[int]) -> Drawing:
    """Theorem-1 style expansion gadgeting only the selected faces (by index
    into the canonical face order of the host embedding)."""
    _require(is_maximal_planar(h), "gadget_subset: host must be maximal planar")
    d = _embed(h, "gadget_subset")
    walks = faces(d)
    for i in sorted(face_indices):
        d, _ = insert_k6_gadget_in_triangle(d, walks[i])
    return _checked(d, "gadget_subset")


# ---------------------------------------------------------------------------
# Figure 1 family
# ---------------------------------------------------------------------------

def _figure1_builder(k: int, with_chords: bool) -> Drawing:
    """Cyclic chain of k crossed-K4 blocks.

    Block i carries u_i = 4i, x_i = 4i+1, y_i = 4i+2, z_i = 4i+3; inside a
    block the edges u x and z y cross, the other four pairs are chords.
    Blocks are linked by y_i u_{i+1} and x_i z_{i+1}.  ``with_chords``
    False omits the x_i y_i chords (the weak variant).
    """
    _require(k >= 2, "figure1: k must be at least 2")
    b = DrawingBuilder(4 * k)

    def u(i):
        return 4 * (i % k)

    def x(i):
        return 4 * (i % k) + 1

    def y(i):
        return 4 * (i % k) + 2

    def z(i):
        return 4 * (i % k) + 3

    eu: dict[tuple[str, int], tuple[int, int]] = {}
    for i in range(k):
        eu[("uz", i)] = b.add_edge(u(i), z(i))
        eu[("uy", i)] = b.add_edge(u(i), y(i))
        eu[("zx", i)] = b.add_edge(z(i), x(i))
        if with_chords:
            eu[("xy", i)] = b.add_edge(x(i), y(i))
        eu[("ux", i)] = b.add_edge(u(i), x(i))
        eu[("zy", i)] = b.add_edge(z(i), y(i))
        eu[("ext_top", i)] = b.add_edge(y(i), u(i + 1))
        eu[("ext_bot", i)] = b.add_edge(x(i), z(i + 1))
    pairs = {}
    for i in range(k):
        pairs[i] = b.cross(eu[("ux", i)], eu[("zy", i)])
    for i in range(k):
        rot_u = [eu[("uy", i)], eu[("ext_top", (i - 1) % k)], eu[("uz", i)], eu[("ux", i)]]
        rot_y = [eu[("ext_top", i)], eu[("uy", i)], eu[("zy", i)]]
        if with_chords:
            rot_y.append(eu[("xy", i)])
        rot_z = [eu[("zx", i)], eu[("zy", i)], eu[("uz", i)], eu[("ext_bot", (i - 1) % k)]]
        rot_x = [eu[("ext_bot", i)]]
        if with_chords:
            rot_x.append(eu[("xy", i)])
        rot_x += [eu[("ux", i)], eu[("zx", i)]]
        b.set_rotation(u(i), rot_u)
        b.set_rotation(y(i), rot_y)
        b.set_rotation(z(i), rot_z)
        b.set_rotation(x(i), rot_x)
        b.set_rotation(
            pairs[i],
            [
                (eu[("zy", i)], y(i)),
                (eu[("ux", i)], u(i)),
                (eu[("zy", i)], z(i)),
                (eu[("ux", i)], x(i)),
            ],
        )
    return b.finish()


def figure1_family(k: int) -> Drawing:
    """4-regular locally maximal non-planar family on 4k vertices."""
    d = _checked(_figure1_builder(k, with_chords=True), "figure1_family")
    g = d.graph
    _require(all(g.degree(v) == 4 for v in range(g.n)), "figure1: not 4-regular")
    mc = maximality_class(d)
    _require(mc.cls == LOCALLY_MAXIMAL and mc.counts[0] == k, "figure1: crossings")
    return d


def figure1_k5_certificate(k: int) -> Certificate:
    """The K5 subdivision with major vertices u1, x1, y1, z1, x_k read off
    the construction (paths through the u/y and x/z rails)."""
    u = lambda i: 4 * (i % k)
    x = lambda i: 4 * (i % k) + 1
    y = lambda i: 4 * (i % k) + 2
    z = lambda i: 4 * (i % k) + 3
    branch = (u(0), x(0), y(0), z(0), x(k - 1))
    paths = [
        (u(0), x(0)), (u(0), y(0)), (u(0), z(0)),
        (x(0), y(0)), (x(0), z(0)), (y(0), z(0)),
        (u(0), y(k - 1), x(k - 1)),
        (z(0), x(k - 1)),
    ]
    # y1 -> u2 -> y2 -> ... -> u_{k-1} -> y_{k-1}? ends at x_{k-1} via u rail.
    rail_y = [y(0)]
    for i in range(1, k):
        rail_y.append(u(i))
        if i < k - 1:
            rail_y.append(y(i))
    rail_y.append(x(k - 1))
    paths.append(tuple(rail_y))
    rail_x = [x(0)]
    for i in range(1, k - 1):
        rail_x.append(z(i))
        rail_x.append(x(i))
    rail_x.append(z(k - 1))
    rail_x.append(x(k - 1))
    paths.append(tuple(rail_x))
    return Certificate(
        CERT_SUBDIVISION,
        {"target": "K5", "branch": branch, "paths": tuple(sorted(tuple(p) for p in paths))},
    )


def figure1_weak_variant(k: int) -> Drawing:
    """Figure 1 with the x_i y_i chords removed: weakly locally maximal with
    exactly k almost-full crossings, minimum degree 3 at the x and y."""
    d = _checked(_figure1_builder(k, with_chords=False), "figure1_weak_variant")
    mc = maximality_class(d)
    _require(
        mc.cls == WEAKLY_LOCALLY_MAXIMAL and mc.counts == (0, k, 0),
        "figure1_weak: crossings must all be almost full",
    )
    return d


def figure1_weak_forced_subgraph(k: int) -> Graph:
    """Edges of the weak variant incident to the degree-3 vertices x_i, y_i.

    Any 3-connected spanning subgraph would have to contain all of them;
    for k >= 3 this graph already contains a K_{3,3} subdivision.
    """
    d = figure1_weak_variant(k)
    g = d.graph
    deg3 = {v for v in range(g.n) if v % 4 in (1, 2)}
    edges = [e for e in g.sorted_edges() if e[0] in deg3 or e[1] in deg3]
    return Graph(g.n, frozenset(edges))


def figure1_weak_k33_certificate(k: int) -> Certificate:
    """K33 subdivision with majors x1, y1, x_k and u1, z1, x2 inside the
    forced subgraph of the weak variant (k >= 3)."""
    if k < 3:
        raise GeneratorError("K33 tightness certificate needs k >= 3")
    u = lambda i: 4 * (i % k)
    x = lambda i: 4 * (i % k) + 1
    y = lambda i: 4 * (i % k) + 2
    z = lambda i: 4 * (i % k) + 3
    side_a = (x(0), y(0), x(k - 1))
    side_b = (u(0), z(0), x(1))
    paths = [
        (x(0), u(0)), (x(0), z(0)), (x(0), z(1), x(1)),
        (y(0), u(0)), (y(0), z(0)), (y(0), u(1), x(1)),
        (x(k - 1), z(0)),
        (x(k - 1), u(k - 1), y(k - 1), u(0)),
    ]
    rail = [x(k - 1)]
    for i in range(k - 1, 1, -1):
        rail.append(z(i))
        rail.append(x(i - 1) if i - 1 >= 1 else x(1))
    paths.append(tuple(rail))
    return Certificate(
        CERT_SUBDIVISION,
        {
            "target": "K33",
            "branch": side_a + side_b,
            "paths": tuple(sorted(tuple(p) for p in paths)),
        },
    )


# ---------------------------------------------------------------------------
# Pseudo-double-wheel fixtures with a controlled number of almost-full
# crossings (the Theorem 4 test bed)
# ---------------------------------------------------------------------------

def crossed_pseudo_double_wheel(m: int, weak_positions: tuple[int, ...] = ()) -> Drawing:
    """Pseudo-double wheel on poles p=0, q=1 and rim v_0..v_{2m-1} (ids 2..)
    with both diagonals added in every quad face, except that for each j in
    ``weak_positions`` the q-side face Q_j stays undiagonalized and the rim
    edge (v_{2j+1}, v_{2j+2}) is removed, turning P_j's crossing almost full.

    All other crossings are full.  ``weak_positions`` must be cyclically
    non-adjacent in Z_m.
    """
    _require(m >= 4, "pseudo double wheel: m >= 4")
    J = set(weak_positions)
    for j in J:
        _require(0 <= j < m, "weak position out of range")
        _require((j + 1) % m not in J, "weak positions must not be adjacent")
    p, q = 0, 1

    def v(i):
        return 2 + (i % (2 * m))

    b = DrawingBuilder(2 + 2 * m)
    E: dict[tuple[str, int], tuple[int, int]] = {}
    for j in range(m):
        E[("pv", j)] = b.add_edge(p, v(2 * j))
        E[("qv", j)] = b.add_edge(q, v(2 * j + 1))
        E[("pd", j)] = b.add_edge(p, v(2 * j + 1))          # P_j diagonal
        E[("rd", j)] = b.add_edge(v(2 * j), v(2 * j + 2))   # P_j diagonal
        if j not in J:
            E[("qd", j)] = b.add_edge(q, v(2 * j + 2))      # Q_j diagonal
            E[("od", j)] = b.add_edge(v(2 * j + 1), v(2 * j + 3))
    for i in range(2 * m):
        j, odd = divmod(i, 2)
        removed = odd == 1 and j in J
        if not removed:
            E[("rim", i)] = b.add_edge(v(i), v(i + 1))
    P = {j: b.cross(E[("pd", j)], E[("rd", j)]) for j in range(m)}
    Q = {j: b.cross(E[("qd", j)], E[("od", j)]) for j in range(m) if j not in J}

    rot_p = []
    for j in range(m):
        rot_p += [E[("pv", j)], E[("pd", j)]]
    b.set_rotation(p, rot_p)
    rot_q = []
    for j in range(m):
        rot_q.append(E[("qv", j)])
        if j in Q:
            rot_q.append(E[("qd", j)])
    b.set_rotation(q, list(reversed(rot_q)))
    for j in range(m):
        i = 2 * j  # even rim vertex v_i
        rot = []
        if ("rim", i) in E:
            rot.append(E[("rim", i)])
        rot += [E[("rd", j)], E[("pv", j)], E[("rd", (j - 1) % m)]]
        if ("rim", (i - 1) % (2 * m)) in E:
            rot.append(E[("rim", (i - 1) % (2 * m))])
        if (j - 1) % m in Q:
            rot.append(E[("qd", (j - 1) % m)])
        b.set_rotation(v(i), rot)
        i = 2 * j + 1  # odd rim vertex
        rot = []
        if ("rim", i) in E:
            rot.append(E[("rim", i)])
        rot += [E[("pd", j)]]
        if ("rim", i - 1) in E:
            rot.append(E[("rim", i - 1)])
        if (j - 1) % m in Q:
            rot.append(E[("od", (j - 1) % m)])
        rot.append(E[("qv", j)])
        if j in Q:
            rot.append(E[("od", j)])
        b.set_rotation(v(i), rot)
    for j in range(m):
        b.set_rotation(
            P[j],
            [
                (E[("pd", j)], p),
                (E[("rd", j)], v(2 * j)),
                (E[("pd", j)], v(2 * j + 1)),
                (E[("rd", j)], v(2 * j + 2)),
            ],
        )
    for j in Q:
        b.set_rotation(
            Q[j],
            [
                (E[("od", j)], v(2 * j + 3)),
                (E[("qd", j)], v(2 * j + 2)),
                (E[("od", j)], v(2 * j + 1)),
                (E[("qd", j)], q),
            ],
        )
    return b.finish()


def almost_full_test_instance(s: int) -> Drawing:
    """4-connected weakly locally maximal fixture with exactly s almost-full
    crossings (1 <= s <= 4), remaining crossings full."""
    _require(1 <= s <= 4, "almost_full_test_instance: s in 1..4")
    m = 7 if s <= 3 else 8
    weak = tuple(2 * i for i in range(s))
    d = _checked(crossed_pseudo_double_wheel(m, weak), "almost_full_test_instance")
    mc = maximality_class(d)
    _require(mc.counts[1] == s and mc.counts[2] == 0, "fixture: wrong crossing classes")
    ok, _ = is_k_connected(d.graph, 4)
    _require(ok, "fixture: not 4-connected")
    return d


def optimal_pseudo_double_wheel(m: int) -> Drawing:
    """Fully diagonalized pseudo-double wheel: an optimal 1-planar drawing
    (4n-8 edges) with all crossings full."""
    d = _checked(crossed_pseudo_double_wheel(m), "optimal_pdw")
    _require(edge_bound_check(d.graph).optimal, "optimal_pdw: not optimal")
    _require(maximality_class(d).cls == LOCALLY_MAXIMAL, "optimal_pdw: not all full")
    return d


# ---------------------------------------------------------------------------
# Kleetopes and random maximal planar hosts
# ---------------------------------------------------------------------------

def moon_moser_kleetope(depth: int) -> Graph:
    """Iterated kleetope of K4: stack a vertex into every face, ``depth``
    times.  n(0)=4, f(0)=4, n(t+1)=n(t)+f(t), f(t+1)=3 f(t)."""
    _require(depth >= 0, "kleetope: depth >= 0")
    d = _embed(tetrahedron(), "kleetope")
    for _ in range(depth):
        for walk in faces(d):
            d, _ = insert_star_in_face(d, walk, [0, 1, 2])
    d = _checked(d, "kleetope")
    g = d.graph
    _require(is_maximal_planar(g), "kleetope: output not maximal planar")
    return g


def random_maximal_planar(n: int, seed: int) -> Graph:
    """Seeded apollonian growth: repeatedly stack a vertex into a random
    face of the current triangulation.  Always maximal planar."""
    _require(n >= 4, "random_maximal_planar: n >= 4")
    rng = random.Random(seed)
    d = _embed(tetrahedron(), "random_maximal_planar")
    while d.graph.n < n:
        walks = faces(d)
        walk = walks[rng.randrange(len(walks))]
        d, _ = insert_star_in_face(d, walk, [0, 1, 2])
    g = _checked(d, "random_maximal_planar").graph
    _require(g.m == 3 * n - 6, "random_maximal_planar: edge count")
    _require(is_maximal_planar(g), "random_maximal_planar: not maximal planar")
    return g


# ---------------------------------------------------------------------------
# Theorem 2 structures (graph level)
# ---------------------------------------------------------------------------
#
# The published figure for the 41-vertex structure could not be re-derived
# from the text, so these constructors emit the graphs with every property
# the text asserts (counts, colours, white independence, white degree 5,
# black stubs, 5-connectedness) verified mechanically; no rotation system
# is claimed for them.

RING = 18
HUB_P = 18
HUB_Q = 19


@dataclass(frozen=True)
class FamilyStats:
    index: int
    black_count: int
    white_count: int

    @property
    def vertex_count(self) -> int:
        return self.black_count + self.white_count

    def check(self) -> None:
        w, b = 21, 20
        for _ in range(self.index):
            b, w = b + 20 * w, 21 * w
        if (b, w) != (self.black_count, self.white_count):
            raise GeneratorError("family stats do not satisfy the recurrences")
        if not self.vertex_count > 21 ** (self.index + 1):
            raise GeneratorError("family stats: vertex count bound failed")


def _structure_h_graph() -> tuple[Graph, tuple[int, ...]]:
    """20 blacks (ring r_0..r_17 = 0..17, hubs p=18, q=19) and 21 whites
    (20..40), every white adjacent to both hubs and three ring vertices.

    Whites 20+j (j=0..17) take the ring triple {j-1, j, j+1}; the three
    extra whites take spread triples.  Stubs are five distinct blacks.
    """
    edges = [(j, (j + 1) % RING) for j in range(RING)]
    colors: dict[int, str] = {v: BLACK for v in range(20)}
    wid = 20
    for j in range(RING):
        for t in ((j - 1) % RING, j, (j + 1) % RING, HUB_P, HUB_Q):
            edges.append((wid, t))
        colors[wid] = WHITE
        wid += 1
    for triple in ((1, 7, 13), (3, 9, 15), (5, 11, 17)):
        for t in triple + (HUB_P, HUB_Q):
            edges.append((wid, t))
        colors[wid] = WHITE
        wid += 1
    g = build_graph(wid, [canon_edge(u, v) for u, v in edges], colors)
    stubs = (0, 4, 8, 12, 16)
    blacks = g.color_class(BLACK)
    whites = g.color_class(WHITE)
    _require(len(blacks) == 20 and len(whites) == 21, "structure H: counts")
    _require(is_independent_set(g, whites), "structure H: whites not independent")
    _require(all(g.degree(w) == 5 for w in whites), "structure H: white degree")
    _require(all(v in blacks for v in stubs), "structure H: stubs must be black")
    ok, _ = is_k_connected(g, 5)
    _require(ok, "structure H: G_0 not 5-connected")
    return g, stubs


def structure_h() -> tuple[Graph, tuple[int, ...]]:
    """The 41-vertex structure with 5 designated black stub vertices."""
    return _structure_h_graph()


def theorem2_graph() -> Graph:
    """Join a new white vertex (id 41) to the five stubs of the structure:
    42 vertices, 5-connected, 22 independent whites of degree 5."""
    h, stubs = _structure_h_graph()
    edges = set(h.edges)
    for t in stubs:
        edges.add(canon_edge(41, t))
    colors = list(h.colors) + [WHITE]  # type: ignore[arg-type]
    g = Graph(42, frozenset(edges), tuple(colors))
    whites = g.color_class(WHITE)
    _require(len(whites) == 22, "theorem2_graph: white count")
    _require(is_independent_set(g, whites), "theorem2_graph: independence")
    report = vertex_connectivity(g)
    _require(report.connectivity == 5, "theorem2_graph: connectivity must be 5")
    _require(edge_bound_check(g).ok, "theorem2_graph: edge bound")
    return g


def theorem2_family(i: int) -> tuple[Graph, FamilyStats]:
    """G_0 is the structure without half-edges; G_{i+1} replaces each white
    with a fresh copy of the structure, wiring the white's five former
    neighbours to the copy's five stubs (both sides sorted)."""
    _require(0 <= i <= 3, "theorem2_family: index must be 0..3 at desk scale")
    h, stubs = _structure_h_graph()
    g = h
    for _ in range(i):
        whites = sorted(g.color_class(WHITE))
        blacks = sorted(g.color_class(BLACK))
        remap = {v: idx for idx, v in enumerate(blacks)}
        edges: set[tuple[int, int]] = set()
        colors: dict[int, str] = {remap[v]: BLACK for v in blacks}
        for u, v in g.edges:
            if u in remap and v in remap:
                edges.add(canon_edge(remap[u], remap[v]))
        next_id = len(blacks)
        adj = {w: sorted(x for x in range(g.n) if g.has_edge(w, x)) for w in whites}
        for w in whites:
            base = next_id
            for u, v in h.edges:
                edges.add(canon_edge(base + u, base + v))
            for local in range(h.n):
                colors[base + local] = h.colors[local]  # type: ignore[index]
            for nbr, stub in zip(adj[w], stubs):
                edges.add(canon_edge(remap[nbr], base + stub))
            next_id += h.n
        color_tuple = tuple(colors[v] for v in range(next_id))
        g = Graph(next_id, frozenset(edges), color_tuple)
    stats = FamilyStats(
        i, len(g.color_class(BLACK)), len(g.color_class(WHITE))
    )
    stats.check()
    whites = g.color_class(WHITE)
    _require(is_independent_set(g, whites), "theorem2_family: independence")
    _require(
        all(g.degree(w) == 5 for w in whites), "theorem2_family: white degrees"
    )
    return g, stats


# ---------------------------------------------------------------------------
# Theorem 3 fixture corpus
# ---------------------------------------------------------------------------

def theorem3_fixture(seed: int, max_three_cuts: int = 3) -> Drawing:
    """Seeded locally maximal fixture: a small maximal planar host with K6
    gadgets in a seeded subset of faces, keeping the 3-cut count within
    ``max_three_cuts`` (host choice keeps separating triangles rare)."""
    rng = random.Random(seed)
    host_n = rng.choice([4, 4, 5])
    host = tetrahedron() if host_n == 4 else random_maximal_planar(5, seed * 7 + 1)
    host_cuts = 1 if host_n == 5 else 0
    face_count = 2 * host_n - 4
    budget = max_three_cuts - host_cuts
    count = rng.randint(1, min(budget, face_count))
    picked = sorted(rng.sample(range(face_count), count))
    d = theorem1_gadget_subset(host, picked)
    _require(
        maximality_class(d).cls == LOCALLY_MAXIMAL,
        "theorem3_fixture: must be locally maximal",
    )
    ok, _ = is_k_connected(d.graph, 3)
    _require(ok, "theorem3_fixture: must be 3-connected")
    return d
