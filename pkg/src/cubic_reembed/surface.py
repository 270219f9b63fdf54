"""Embedding schemes, face tracing and surface classification.

A twist set ``X`` is a set of edge ids; twisting those edges of the spherical
rotation system gives the embedding scheme whose signature is -1 exactly on
``X``.  Twist sets are passed around either as iterables of edge ids or as
integer bit masks (bit ``e`` set iff edge ``e`` is twisted).

Faces are traced on flags.  A flag ``(e, j, s)`` is edge ``e`` seen from its
end ``j`` on side ``s``: side 1 is the corner between ``e`` and its clockwise
successor, side 0 the corner with its predecessor.  Two fixed-point-free
involutions act on flags; their orbits are exactly the faces.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

from .graph import PlanarMap

if TYPE_CHECKING:
    from .dual import DualMap

TwistSet = frozenset


def to_mask(twists: Iterable[int] | int) -> int:
    if isinstance(twists, int):
        return twists
    mask = 0
    for e in twists:
        mask |= 1 << e
    return mask


def from_mask(mask: int) -> frozenset[int]:
    out = []
    e = 0
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return frozenset(out)


@dataclass(frozen=True)
class Surface:
    euler_characteristic: int
    orientable: bool

    def __post_init__(self):
        if self.euler_characteristic > 2:
            raise ValueError("Euler characteristic of a closed surface is at most 2")
        if self.orientable and self.euler_characteristic % 2:
            raise ValueError("orientable surfaces have even Euler characteristic")
        if self.euler_characteristic == 2 and not self.orientable:
            raise ValueError("the only surface with characteristic 2 is the sphere")

    @property
    def genus(self) -> int:
        """Orientable genus ``g`` or nonorientable genus ``h``."""
        if self.orientable:
            return (2 - self.euler_characteristic) // 2
        return 2 - self.euler_characteristic

    @property
    def name(self) -> str:
        special = {
            (2, True): "sphere",
            (1, False): "projective_plane",
            (0, True): "torus",
            (0, False): "klein_bottle",
        }
        key = (self.euler_characteristic, self.orientable)
        if key in special:
            return special[key]
        return f"S{self.genus}" if self.orientable else f"N{self.genus}"

    def __str__(self) -> str:
        return self.name


SPHERE = Surface(2, True)
PROJECTIVE_PLANE = Surface(1, False)
TORUS = Surface(0, True)
KLEIN_BOTTLE = Surface(0, False)


@dataclass(frozen=True)
class EmbeddingScheme:
    map: PlanarMap
    signature: tuple[int, ...]

    @property
    def twists(self) -> frozenset[int]:
        return frozenset(e for e, s in enumerate(self.signature) if s < 0)


# A face walk is a cyclic tuple of (tail, head, edge id) traversals.
FaceWalk = tuple


def scheme_from_twists(pm: PlanarMap, twists: Iterable[int] | int) -> EmbeddingScheme:
    mask = to_mask(twists)
    if mask >> pm.edge_count:
        raise ValueError(f"twist set mentions an edge id >= {pm.edge_count}")
    if mask < 0:
        raise ValueError("negative edge id in twist set")
    sig = tuple(-1 if mask >> e & 1 else 1 for e in range(pm.edge_count))
    return EmbeddingScheme(pm, sig)


class FaceTracer:
    """Precomputed flag involutions for one planar map."""

    def __init__(self, pm: PlanarMap):
        g = pm.graph
        self.map = pm
        self.edge_count = g.edge_count
        self.vertex_count = g.vertex_count
        corner = [0] * (4 * g.edge_count)
        for e, (a, b) in enumerate(g.edges):
            for j, v in enumerate((a, b)):
                rot = pm.rotation[v]
                i = rot.index(e)
                for s in (0, 1):
                    e2 = rot[(i + 1) % len(rot)] if s else rot[i - 1]
                    j2 = 0 if g.edges[e2][0] == v else 1
                    corner[4 * e + 2 * j + s] = 4 * e2 + 2 * j2 + (1 - s)
        self.corner = corner

    def _across(self, f: int, mask: int) -> int:
        # Untwisted: the other end, opposite side.  Twisted: other end, same side.
        e = f >> 2
        f ^= 2
        if not (mask >> e & 1):
            f ^= 1
        return f

    def count_faces(self, mask: int = 0) -> int:
        corner = self.corner
        nflags = len(corner)
        seen = bytearray(nflags)
        faces = 0
        for start in range(nflags):
            if seen[start]:
                continue
            faces += 1
            f = start
            while True:
                seen[f] = 1
                e = f >> 2
                g = f ^ 2 if mask >> e & 1 else f ^ 3
                seen[g] = 1
                f = corner[g]
                if f == start:
                    break
        return faces

    def trace(self, mask: int = 0) -> list[FaceWalk]:
        edges = self.map.graph.edges
        corner = self.corner
        nflags = len(corner)
        seen = bytearray(nflags)
        walks = []
        visited = 0
        for start in range(nflags):
            if seen[start]:
                continue
            if start & 1 and not (mask >> (start >> 2) & 1):
                # side-0 seed, so untwisted walks share one orientation
                start = self._across(start, mask)
            walk = []
            f = start
            while True:
                seen[f] = 1
                g = self._across(f, mask)
                seen[g] = 1
                e = f >> 2
                ends = edges[e]
                walk.append((ends[(f >> 1) & 1], ends[(g >> 1) & 1], e))
                f = corner[g]
                if f == start:
                    break
            visited += 2 * len(walk)
            walks.append(tuple(walk))
        assert visited == nflags, "every flag must be visited exactly once"
        return walks

    def euler_characteristic(self, mask: int = 0) -> int:
        return self.vertex_count - self.edge_count + self.count_faces(mask)


def count_faces(pm: PlanarMap, twists: Iterable[int] | int = 0) -> int:
    return FaceTracer(pm).count_faces(to_mask(twists))


def trace_faces(scheme: EmbeddingScheme) -> list[FaceWalk]:
    """Facial walks of an embedding scheme, seeded in flag-id order."""
    return FaceTracer(scheme.map).trace(to_mask(scheme.twists))


def euler_characteristic(scheme: EmbeddingScheme) -> int:
    pm = scheme.map
    return pm.vertex_count - pm.edge_count + len(trace_faces(scheme))


def twisted_degrees(dual: "DualMap", mask: int) -> dict[int, int]:
    degrees: dict[int, int] = {}
    for e, (a, b) in enumerate(dual.dual_graph.edges):
        if mask >> e & 1:
            degrees[a] = degrees.get(a, 0) + 1
            degrees[b] = degrees.get(b, 0) + 1
    return degrees


def is_orientable(dual: "DualMap", twists: Iterable[int] | int) -> bool:
    """Orientable iff every vertex of the twisted dual subgraph has even degree."""
    return all(d % 2 == 0 for d in twisted_degrees(dual, to_mask(twists)).values())


def classify_surface(pm: PlanarMap, twists: Iterable[int] | int,
                     dual: "DualMap | None" = None,
                     tracer: FaceTracer | None = None) -> Surface:
    from .dual import build_dual

    mask = to_mask(twists)
    if dual is None:
        dual = build_dual(pm)
    if tracer is None:
        tracer = FaceTracer(pm)
    chi = tracer.euler_characteristic(mask)
    orientable = is_orientable(dual, mask)
    if orientable and chi % 2:
        raise AssertionError(f"odd characteristic {chi} for an orientable scheme")
    return Surface(chi, orientable)
