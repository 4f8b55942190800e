"""Planarity testing with re-verifiable outputs.

``planarity_certificate`` returns either a crossing-free Drawing (checked
by the Euler face trace) or a Kuratowski subdivision certificate (checked
by ``verify_certificate``).  The test itself is delegated to networkx; both
outputs are re-verified here before being returned, so the library is never
trusted blindly.
"""

from __future__ import annotations

from typing import Union

import networkx as nx

from .drawing import Drawing, DrawingBuilder, DrawingError, validate_drawing
from .graph import (
    CERT_SUBDIVISION,
    Certificate,
    Graph,
    canon_edge,
    is_connected,
    verify_certificate,
)


def _to_nx(g: Graph) -> nx.Graph:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    return nxg


def embedding_to_drawing(g: Graph, embedding: nx.PlanarEmbedding) -> Drawing:
    b = DrawingBuilder(g.n)
    if g.colors is not None:
        b.colors = {v: c for v, c in enumerate(g.colors) if c is not None}
    for e in g.edges:
        b.add_edge(*e)
    for v in range(g.n):
        order = list(embedding.neighbors_cw_order(v)) if embedding.degree(v) else []
        b.set_rotation(v, [canon_edge(v, w) for w in order])
    return b.finish()


def _subdivision_certificate(g: Graph, sub: nx.Graph) -> Certificate:
    degrees = dict(sub.degree())
    branch = sorted(v for v, deg in degrees.items() if deg >= 3)
    target = "K5" if any(degrees[v] == 4 for v in branch) else "K33"
    bset = set(branch)

    paths: list[tuple[int, ...]] = []
    seen_pairs: set[frozenset[int]] = set()
    for b0 in branch:
        for w in sub.neighbors(b0):
            path = [b0, w]
            prev = b0
            while path[-1] not in bset:
                nxts = [x for x in sub.neighbors(path[-1]) if x != prev]
                prev = path[-1]
                path.append(nxts[0])
            pair = frozenset((path[0], path[-1]))
            if pair in seen_pairs:
                continue
            seen_pairs.add(pair)
            paths.append(tuple(path))

    if target == "K33":
        # Recover the bipartition: a branch vertex's path-partners form the
        # other side.
        partners = {frozenset((p[0], p[-1])) for p in paths}
        b0 = branch[0]
        side_b = sorted(x for x in branch if frozenset((b0, x)) in partners)
        side_a = sorted(x for x in branch if x not in side_b)
        ordered = tuple(side_a + side_b)
    else:
        ordered = tuple(branch)

    cert = Certificate(
        CERT_SUBDIVISION,
        {"target": target, "branch": ordered, "paths": tuple(sorted(paths))},
    )
    if not verify_certificate(g, cert):
        raise DrawingError("extracted Kuratowski certificate failed verification")
    return cert


def planarity_certificate(g: Graph) -> Union[Drawing, Certificate]:
    """Crossing-free embedding Drawing, or a K5/K33 subdivision certificate.

    The drawing model is a connected sphere map, so embeddings are only
    produced for connected inputs.
    """
    nxg = _to_nx(g)
    is_planar, payload = nx.check_planarity(nxg, counterexample=True)
    if not is_planar:
        return _subdivision_certificate(g, payload)
    if g.n > 0 and not is_connected(g):
        raise DrawingError("embedding output requires a connected graph")
    d = embedding_to_drawing(g, payload)
    bad = validate_drawing(d)
    if bad:
        raise DrawingError(f"planar embedding failed validation: {bad}")
    return d


def is_planar(g: Graph) -> bool:
    return nx.check_planarity(_to_nx(g), counterexample=False)[0]
