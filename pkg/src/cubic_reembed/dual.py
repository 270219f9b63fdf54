"""Dual of the spherical embedding and edge-induced dual subgraphs.

Dual edges reuse the primal edge ids, so the primal/dual edge bijection is
the identity on ids and a twist set doubles as a dual edge set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .graph import Graph, PlanarMap
from .surface import FaceTracer, FaceWalk, to_mask


@dataclass(frozen=True)
class DualMap:
    dual_graph: Graph
    face_of: tuple[FaceWalk, ...]
    dual_faces: tuple[tuple[int, ...], ...]
    """Dual faces as dual-edge-id cycles, one per primal vertex."""

    def dual_of(self, e: int) -> int:
        return e

    @property
    def vertex_count(self) -> int:
        return self.dual_graph.vertex_count

    @property
    def edge_count(self) -> int:
        return self.dual_graph.edge_count

    def adjacent(self, u: int, v: int) -> bool:
        return self.dual_graph.edge_between(u, v) is not None


@dataclass(frozen=True)
class EdgeSubgraph:
    edges: frozenset[int]
    vertices: frozenset[int]
    degree: dict[int, int] = field(hash=False, compare=False)

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.edges))

    @property
    def odd_vertices(self) -> frozenset[int]:
        return frozenset(v for v, d in self.degree.items() if d % 2)

    @property
    def even_vertices(self) -> frozenset[int]:
        return frozenset(v for v, d in self.degree.items() if d % 2 == 0)


def build_dual(pm: PlanarMap) -> DualMap:
    faces = FaceTracer(pm).trace(0)
    if pm.vertex_count - pm.edge_count + len(faces) != 2:
        raise ValueError("build_dual needs a spherical rotation system")
    sides: list[list[int]] = [[] for _ in range(pm.edge_count)]
    for f, walk in enumerate(faces):
        for _, _, e in walk:
            sides[e].append(f)
    dual_edges = []
    for e, fs in enumerate(sides):
        assert len(fs) == 2
        dual_edges.append((fs[0], fs[1]))
    dual = DualMap(Graph(len(faces), dual_edges), tuple(faces), pm.rotation)
    return dual


def h_subgraph(dual: DualMap, twists: Iterable[int] | int) -> EdgeSubgraph:
    mask = to_mask(twists)
    if mask >> dual.edge_count:
        raise ValueError("twist set mentions an unknown edge id")
    edges = []
    degree: dict[int, int] = {}
    for e, (a, b) in enumerate(dual.dual_graph.edges):
        if mask >> e & 1:
            edges.append(e)
            degree[a] = degree.get(a, 0) + 1
            degree[b] = degree.get(b, 0) + 1
    return EdgeSubgraph(frozenset(edges), frozenset(degree), degree)


def is_triangulation(dual: DualMap) -> bool:
    g = dual.dual_graph
    if not g.is_simple():
        return False
    if any(len(face) != 3 for face in dual.dual_faces):
        return False
    shared: dict[tuple[int, int], int] = {}
    owners: dict[int, list[int]] = {}
    for i, face in enumerate(dual.dual_faces):
        for e in face:
            owners.setdefault(e, []).append(i)
    for e, fs in owners.items():
        if len(fs) != 2:
            return False
        key = (min(fs), max(fs))
        shared[key] = shared.get(key, 0) + 1
        if shared[key] > 1:
            return False
    # Each face must close up a triangle of distinct dual vertices.
    for face in dual.dual_faces:
        verts = set()
        for e in face:
            verts.update(g.edges[e])
        if len(verts) != 3:
            return False
    return True
