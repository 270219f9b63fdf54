"""Graphs, planar maps, file formats and the standing-hypothesis checks.

A :class:`PlanarMap` is a simple graph together with a clockwise rotation of
edge ends at every vertex.  Vertex and edge ids are dense 0-based integers;
edge ids follow first appearance when scanning vertices in ascending order
and each rotation in its given order.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

PLANAR_CODE_HEADER = b">>planar_code<<"


class GraphFormatError(ValueError):
    """Raised when a planar_code stream or rotation text cannot be parsed."""


class Graph:
    """Undirected graph on vertices ``0..vertex_count-1``.

    Loops and parallel edges are representable (so that malformed input can
    be reported rather than crash), but every constructor in this package
    that reads user data rejects them.
    """

    __slots__ = ("vertex_count", "edges", "adjacency")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]]):
        self.vertex_count = vertex_count
        self.edges: tuple[tuple[int, int], ...] = tuple(
            (int(a), int(b)) for a, b in edges
        )
        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(vertex_count)]
        for eid, (a, b) in enumerate(self.edges):
            if not (0 <= a < vertex_count and 0 <= b < vertex_count):
                raise ValueError(f"edge {eid} = {(a, b)} has an endpoint out of range")
            adjacency[a].append((b, eid))
            if a != b:
                adjacency[b].append((a, eid))
        self.adjacency: tuple[tuple[tuple[int, int], ...], ...] = tuple(
            tuple(row) for row in adjacency
        )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self.adjacency[v]]

    def is_simple(self) -> bool:
        seen = set()
        for a, b in self.edges:
            if a == b:
                return False
            key = (min(a, b), max(a, b))
            if key in seen:
                return False
            seen.add(key)
        return True

    def edge_between(self, a: int, b: int) -> int | None:
        for w, eid in self.adjacency[a]:
            if w == b:
                return eid
        return None

    def other_end(self, eid: int, v: int) -> int:
        a, b = self.edges[eid]
        return b if v == a else a

    def is_connected(self, removed: Iterable[int] = ()) -> bool:
        removed = set(removed)
        alive = [v for v in range(self.vertex_count) if v not in removed]
        if not alive:
            return True
        seen = {alive[0]}
        queue = deque(seen)
        while queue:
            v = queue.popleft()
            for w, _ in self.adjacency[v]:
                if w not in seen and w not in removed:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(alive)

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


class PlanarMap:
    """A graph with a clockwise rotation of incident edge ids at each vertex."""

    __slots__ = ("graph", "rotation")

    def __init__(self, graph: Graph, rotation: Sequence[Sequence[int]]):
        if len(rotation) != graph.vertex_count:
            raise ValueError("one rotation per vertex is required")
        rot = tuple(tuple(r) for r in rotation)
        for v, r in enumerate(rot):
            if sorted(r) != sorted(eid for _, eid in graph.adjacency[v]):
                raise ValueError(f"rotation at vertex {v} does not list its incident edges")
        self.graph = graph
        self.rotation: tuple[tuple[int, ...], ...] = rot

    @classmethod
    def from_neighbors(cls, neighbors: Sequence[Sequence[int]]) -> "PlanarMap":
        """Build a map from clockwise neighbor lists.

        Raises :class:`GraphFormatError` on loops, repeated neighbors or
        asymmetric adjacency.
        """
        n = len(neighbors)
        edge_id: dict[tuple[int, int], int] = {}
        edges: list[tuple[int, int]] = []
        for v, row in enumerate(neighbors):
            if len(set(row)) != len(row):
                raise GraphFormatError(f"vertex {v}: parallel edge in {list(row)}")
            for w in row:
                if not 0 <= w < n:
                    raise GraphFormatError(f"vertex {v}: neighbor {w} out of range")
                if w == v:
                    raise GraphFormatError(f"vertex {v}: loop")
                if v not in neighbors[w]:
                    raise GraphFormatError(f"asymmetric adjacency between {v} and {w}")
                key = (min(v, w), max(v, w))
                if key not in edge_id:
                    edge_id[key] = len(edges)
                    edges.append(key)
        graph = Graph(n, edges)
        rotation = [[edge_id[(min(v, w), max(v, w))] for w in row] for v, row in enumerate(neighbors)]
        return cls(graph, rotation)

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    @property
    def edge_count(self) -> int:
        return self.graph.edge_count

    def neighbor_rotation(self, v: int) -> tuple[int, ...]:
        return tuple(self.graph.other_end(e, v) for e in self.rotation[v])

    def neighbor_rotations(self) -> list[tuple[int, ...]]:
        return [self.neighbor_rotation(v) for v in range(self.vertex_count)]

    def reversed_at(self, vertices: Iterable[int]) -> "PlanarMap":
        """Copy of the map with the rotation reversed at the given vertices."""
        flip = set(vertices)
        rot = [tuple(reversed(r)) if v in flip else r for v, r in enumerate(self.rotation)]
        return PlanarMap(self.graph, rot)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlanarMap):
            return NotImplemented
        return self.neighbor_rotations() == other.neighbor_rotations()

    def __hash__(self) -> int:
        return hash(tuple(self.neighbor_rotations()))

    def __repr__(self) -> str:
        return f"PlanarMap(n={self.vertex_count}, m={self.edge_count})"


# ---------------------------------------------------------------------------
# planar_code
# ---------------------------------------------------------------------------

def parse_planar_code(data: bytes) -> list[PlanarMap]:
    """Parse the one-octet planar_code format (optional ``>>planar_code<<`` header)."""
    pos = 0
    if data.startswith(b">>planar_code"):
        end = data.find(b"<<", 2)
        if end < 0:
            raise GraphFormatError("unterminated planar_code header")
        pos = end + 2
    maps = []
    record = 0
    while pos < len(data):
        start = pos
        n = data[pos]
        pos += 1
        if n == 0:
            raise GraphFormatError(f"record {record}: zero vertex count at offset {start}")
        neighbors = []
        for v in range(n):
            row = []
            while True:
                if pos >= len(data):
                    raise GraphFormatError(f"record {record}: truncated at offset {pos}")
                x = data[pos]
                pos += 1
                if x == 0:
                    break
                if x > n:
                    raise GraphFormatError(
                        f"record {record}: neighbor id {x} out of range at offset {pos - 1}")
                row.append(x - 1)
            if not row:
                raise GraphFormatError(
                    f"record {record}: vertex {v + 1} has no neighbors (offset {pos - 1})")
            neighbors.append(row)
        try:
            maps.append(PlanarMap.from_neighbors(neighbors))
        except GraphFormatError as exc:
            raise GraphFormatError(f"record {record} (offset {start}): {exc}") from None
        record += 1
    return maps


def write_planar_code(maps: Iterable[PlanarMap]) -> bytes:
    out = bytearray(PLANAR_CODE_HEADER)
    for i, m in enumerate(maps):
        if m.vertex_count > 255:
            raise ValueError(f"map {i} has {m.vertex_count} > 255 vertices")
        out.append(m.vertex_count)
        for v in range(m.vertex_count):
            out.extend(w + 1 for w in m.neighbor_rotation(v))
            out.append(0)
    return bytes(out)


# ---------------------------------------------------------------------------
# rotation text
# ---------------------------------------------------------------------------

def parse_rotation_text(text: str) -> PlanarMap:
    """Parse ``n m`` followed by ``v: a b c`` lines (0-based, clockwise)."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("empty rotation text")
    try:
        n, m = (int(x) for x in lines[0].split())
    except ValueError:
        raise GraphFormatError(f"bad header line {lines[0]!r}") from None
    if len(lines) - 1 != n:
        raise GraphFormatError(f"expected {n} vertex lines, found {len(lines) - 1}")
    neighbors: list[list[int] | None] = [None] * n
    for ln in lines[1:]:
        head, sep, rest = ln.partition(":")
        if not sep:
            raise GraphFormatError(f"missing ':' in {ln!r}")
        try:
            v = int(head)
            row = [int(x) for x in rest.split()]
        except ValueError:
            raise GraphFormatError(f"non-integer entry in {ln!r}") from None
        if not 0 <= v < n or neighbors[v] is not None:
            raise GraphFormatError(f"bad or repeated vertex id in {ln!r}")
        if len(row) != 3:
            raise GraphFormatError(f"vertex {v} has degree {len(row)}, expected 3")
        neighbors[v] = row
    pm = PlanarMap.from_neighbors(neighbors)  # type: ignore[arg-type]
    if pm.edge_count != m:
        raise GraphFormatError(f"header says {m} edges, found {pm.edge_count}")
    return pm


def write_rotation_text(pm: PlanarMap) -> str:
    lines = [f"{pm.vertex_count} {pm.edge_count}"]
    for v in range(pm.vertex_count):
        lines.append(f"{v}: " + " ".join(map(str, pm.neighbor_rotation(v))))
    return "\n".join(lines) + "\n"


def read_maps(data: bytes) -> list[PlanarMap]:
    """Auto-detect planar_code vs rotation text."""
    if data.startswith(b">>planar_code"):
        return parse_planar_code(data)
    stripped = data.lstrip()
    if stripped[:1].isdigit():
        return [parse_rotation_text(data.decode("ascii"))]
    return parse_planar_code(data)


# ---------------------------------------------------------------------------
# validation and predicates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ValidationReport:
    simple: bool
    cubic: bool
    connected: bool
    three_connected: bool
    spherical: bool
    detail: str | None = None

    @property
    def ok(self) -> bool:
        return (self.simple and self.cubic and self.connected
                and self.three_connected and self.spherical)


def validate_cubic_planar(pm: PlanarMap) -> ValidationReport:
    from .surface import count_faces

    g = pm.graph
    details = []
    simple = g.is_simple()
    if not simple:
        details.append("graph has a loop or parallel edge")
    cubic = all(g.degree(v) == 3 for v in range(g.vertex_count))
    if not cubic:
        bad = next(v for v in range(g.vertex_count) if g.degree(v) != 3)
        details.append(f"vertex {bad} has degree {g.degree(bad)}")
    connected = g.vertex_count > 0 and g.is_connected()
    if not connected:
        details.append("graph is disconnected")
    three_connected = connected and g.vertex_count >= 4
    if three_connected:
        for pair in itertools.combinations(range(g.vertex_count), 2):
            if not g.is_connected(pair):
                three_connected = False
                details.append(f"vertex cut {pair}")
                break
    faces = count_faces(pm, 0)
    chi = g.vertex_count - g.edge_count + faces
    spherical = chi == 2
    if not spherical:
        details.append(f"rotation system has Euler characteristic {chi}")
    return ValidationReport(simple, cubic, connected, three_connected, spherical,
                            "; ".join(details) or None)


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.vertex_count
    for s in range(g.vertex_count):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w, _ in g.adjacency[v]:
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def _cyclic_components(g: Graph, removed: set[int]) -> int:
    """Number of components (after deleting ``removed`` edges) containing a cycle."""
    seen = [False] * g.vertex_count
    cyclic = 0
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        nverts = 0
        degree_sum = 0
        while stack:
            v = stack.pop()
            nverts += 1
            for w, eid in g.adjacency[v]:
                if eid in removed:
                    continue
                degree_sum += 1
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        if degree_sum // 2 >= nverts:
            cyclic += 1
    return cyclic


def cyclic_edge_connectivity_at_least(g: Graph, k: int) -> bool:
    """True iff no set of fewer than ``k`` edges separates two cyclic pieces."""
    if k > 5:
        raise ValueError("k > 5 is not supported (exhaustive search)")
    for size in range(k):
        for cut in itertools.combinations(range(g.edge_count), size):
            if _cyclic_components(g, set(cut)) >= 2:
                return False
    return True
