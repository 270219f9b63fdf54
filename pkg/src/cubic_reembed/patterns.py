"""Dual-subgraph patterns that characterize low-genus re-embeddings.

Twisting the edge set ``X`` of a 3-connected cubic planar graph yields

* the projective plane iff the dual edges of ``X`` form ``K2`` or ``K4``;
* the torus iff they form ``K_{2,2,2}``, ``K_{2,2m}`` or ``K_{1,1,2m-1}``;
* the Klein bottle iff they form ``K_{2,2m-1}``, ``K_{1,1,2m}`` or one of
  six sporadic graphs ``A1``..``A6``.

Small patterns with no distinguished vertex pair are found by backtracking
(:func:`find_fixed_pattern`).  The two infinite families are generated per
apex pair from the common neighborhood (:func:`enumerate_apex_family`),
which gives polynomial delay.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .dual import DualMap, EdgeSubgraph, h_subgraph
from .surface import KLEIN_BOTTLE, PROJECTIVE_PLANE, TORUS, Surface


@dataclass(frozen=True)
class PatternKind:
    family: str
    m: int | None = None

    def __str__(self) -> str:
        return self.family if self.m is None else f"{self.family}({self.m})"

    @property
    def is_fixed(self) -> bool:
        return self.m is None

    @property
    def surface(self) -> Surface:
        if self.family in ("K2", "K4"):
            return PROJECTIVE_PLANE
        if self.family in ("TRIANGLE", "C4", "OCTA"):
            return TORUS
        if self.family == "K2M":
            return TORUS if self.m % 2 == 0 else KLEIN_BOTTLE
        if self.family == "K11M":
            return TORUS if self.m % 2 == 1 else KLEIN_BOTTLE
        return KLEIN_BOTTLE

    def graph(self) -> tuple[int, list[tuple[int, int]]]:
        """Vertex count and edge list of the pattern graph."""
        if self.family == "K2M":
            return pattern_k2m(self.m)
        if self.family == "K11M":
            return pattern_k11m(self.m)
        return FIXED_PATTERNS[self.family]


def k2m(m: int) -> PatternKind:
    if m < 1 or m == 2:
        raise ValueError("K2M needs m >= 1 and m != 2 (K_{2,2} is C4)")
    return PatternKind("K2M", m)


def k11m(m: int) -> PatternKind:
    if m < 2:
        raise ValueError("K11M needs m >= 2 (K_{1,1,1} is TRIANGLE)")
    return PatternKind("K11M", m)


def _complete(vs):
    return list(itertools.combinations(vs, 2))


def _join(apex, vs):
    return [(apex, v) for v in vs]


def pattern_k2m(m: int) -> tuple[int, list[tuple[int, int]]]:
    return m + 2, _join(0, range(2, m + 2)) + _join(1, range(2, m + 2))


def pattern_k11m(m: int) -> tuple[int, list[tuple[int, int]]]:
    n, edges = pattern_k2m(m)
    return n, [(0, 1)] + edges


FIXED_PATTERNS: dict[str, tuple[int, list[tuple[int, int]]]] = {
    "K2": (2, [(0, 1)]),
    "K4": (4, _complete(range(4))),
    "TRIANGLE": (3, _complete(range(3))),
    "C4": (4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
    "OCTA": (6, [(a, b) for a, b in _complete(range(6)) if b != a + 3]),
    # two disjoint edges
    "A1": (4, [(0, 1), (2, 3)]),
    # K2 and K4, disjoint
    "A2": (6, [(0, 1)] + _complete(range(2, 6))),
    # two disjoint K4
    "A3": (8, _complete(range(4)) + _complete(range(4, 8))),
    # vertex 4 joined to an isolated vertex and a triangle
    "A4": (5, _complete(range(1, 4)) + _join(4, range(4))),
    # vertex 6 joined to two disjoint triangles
    "A5": (7, _complete(range(3)) + _complete(range(3, 6)) + _join(6, range(6))),
    # nonadjacent 4 and 5 both joined to two disjoint edges
    "A6": (6, [(0, 1), (2, 3)] + _join(4, range(4)) + _join(5, range(4))),
}

K2 = PatternKind("K2")
K4 = PatternKind("K4")
TRIANGLE = PatternKind("TRIANGLE")
C4 = PatternKind("C4")
OCTA = PatternKind("OCTA")
A1, A2, A3, A4, A5, A6 = (PatternKind(f"A{i}") for i in range(1, 7))

FIXED_KINDS = (K2, K4, TRIANGLE, C4, OCTA, A1, A2, A3, A4, A5, A6)

SURFACE_TAGS = {
    "projective": PROJECTIVE_PLANE, "pp": PROJECTIVE_PLANE,
    "torus": TORUS,
    "klein": KLEIN_BOTTLE,
}

FIXED_BY_SURFACE = {
    PROJECTIVE_PLANE: (K2, K4),
    TORUS: (TRIANGLE, C4, OCTA),
    KLEIN_BOTTLE: (A1, A2, A3, A4, A5, A6),
}


def surface_from_tag(tag: str | Surface) -> Surface:
    if isinstance(tag, Surface):
        if tag not in FIXED_BY_SURFACE:
            raise ValueError(f"no pattern characterization for {tag}")
        return tag
    try:
        return SURFACE_TAGS[tag]
    except KeyError:
        raise ValueError(f"unknown surface tag {tag!r}") from None


@dataclass(frozen=True)
class PatternMatch:
    kind: PatternKind
    dual_edges: EdgeSubgraph
    surface: Surface
    apexes: tuple[int, int] | None = None

    @property
    def twists(self) -> frozenset[int]:
        # dual edge ids coincide with primal edge ids
        return self.dual_edges.edges

    @property
    def m(self) -> int | None:
        return self.kind.m

    @property
    def key(self) -> tuple[int, ...]:
        return self.dual_edges.key


def common_neighbors(dual: DualMap, u: int, v: int) -> list[int]:
    if u == v:
        raise ValueError("common_neighbors needs two distinct vertices")
    g = dual.dual_graph
    nu = set(g.neighbors(u))
    return sorted(w for w in g.neighbors(v) if w in nu)


def _search_order(n: int, edges: list[tuple[int, int]]) -> list[int]:
    """Pattern vertices ordered so each one (after the first in its component)
    has an already-placed neighbor; higher degree first."""
    adj = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    order: list[int] = []
    placed: set[int] = set()
    while len(order) < n:
        frontier = [v for v in range(n) if v not in placed and adj[v] & placed]
        pool = frontier or [v for v in range(n) if v not in placed]
        v = max(pool, key=lambda x: (len(adj[x] & placed), len(adj[x]), -x))
        order.append(v)
        placed.add(v)
    return order


def _monomorphisms(dual: DualMap, n: int, edges: list[tuple[int, int]]) -> Iterator[list[int]]:
    """Injective vertex maps pattern -> dual carrying every pattern edge to a dual edge."""
    g = dual.dual_graph
    adj = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    dual_adj = [set(g.neighbors(v)) for v in range(g.vertex_count)]
    order = _search_order(n, edges)
    image = [-1] * n
    used: set[int] = set()

    def extend(i: int) -> Iterator[list[int]]:
        if i == n:
            yield list(image)
            return
        p = order[i]
        need = len(adj[p])
        placed_nbrs = [image[q] for q in adj[p] if image[q] >= 0]
        if placed_nbrs:
            cands = set(dual_adj[placed_nbrs[0]])
            for w in placed_nbrs[1:]:
                cands &= dual_adj[w]
            cands = sorted(cands)
        else:
            cands = range(g.vertex_count)
        for c in cands:
            if c in used or len(dual_adj[c]) < need:
                continue
            image[p] = c
            used.add(c)
            yield from extend(i + 1)
            used.discard(c)
            image[p] = -1

    yield from extend(0)


def _edge_sets(dual: DualMap, kind: PatternKind) -> list[tuple[int, ...]]:
    n, edges = kind.graph()
    g = dual.dual_graph
    keys = set()
    for image in _monomorphisms(dual, n, edges):
        keys.add(tuple(sorted(g.edge_between(image[a], image[b]) for a, b in edges)))
    return sorted(keys)


def _match(dual: DualMap, kind: PatternKind, key, apexes=None) -> PatternMatch:
    return PatternMatch(kind, h_subgraph(dual, key), kind.surface, apexes)


def find_fixed_pattern(dual: DualMap, kind: PatternKind | str) -> list[PatternMatch]:
    """All dual edge sets isomorphic to a fixed-size pattern, sorted by edge ids."""
    if isinstance(kind, str):
        kind = PatternKind(kind)
    if kind not in FIXED_KINDS:
        raise ValueError(f"{kind} is not a fixed-size pattern")
    return [_match(dual, kind, key) for key in _edge_sets(dual, kind)]


def count_fixed_pattern(dual: DualMap, kind: PatternKind) -> int:
    return len(_edge_sets(dual, kind))


def count_k4_subgraphs(dual: DualMap) -> int:
    count = count_fixed_pattern(dual, K4)
    assert count <= max(dual.vertex_count - 3, 0), "more K4 subgraphs than a triangulation allows"
    return count


def _apex_sizes(surface: Surface, adjacent: bool, k: int) -> list[tuple[int, bool]]:
    """(subset size, include uv) combinations allowed for an apex pair."""
    out = []
    for size in range(1, k + 1):
        if surface == TORUS:
            if size % 2 == 0 and size >= 4:
                out.append((size, False))
            elif adjacent and size % 2 == 1 and size >= 3:
                out.append((size, True))
        else:
            if size % 2 == 1:
                out.append((size, False))
            elif adjacent and size >= 2:
                out.append((size, True))
    return out


def enumerate_apex_family(dual: DualMap, u: int, v: int,
                          surface: str | Surface) -> Iterator[PatternMatch]:
    """``K_{2,m}`` / ``K_{1,1,m}`` subgraphs with apexes ``u`` and ``v`` for one surface.

    Subsets of the common neighborhood are produced by increasing size, then
    lexicographically, so each emission costs O(k) work.
    """
    surface = surface_from_tag(surface)
    if surface not in (TORUS, KLEIN_BOTTLE):
        raise ValueError("apex families exist only for the torus and the Klein bottle")
    if u == v:
        raise ValueError("apex vertices must differ")
    u, v = min(u, v), max(u, v)
    g = dual.dual_graph
    common = common_neighbors(dual, u, v)
    uv = g.edge_between(u, v)
    for size, with_uv in _apex_sizes(surface, uv is not None, len(common)):
        kind = k11m(size) if with_uv else k2m(size)
        for subset in itertools.combinations(common, size):
            es = [uv] if with_uv else []
            for w in subset:
                es.append(g.edge_between(u, w))
                es.append(g.edge_between(v, w))
            yield _match(dual, kind, sorted(es), (u, v))


def enumerate_surface(dual: DualMap, surface: str | Surface) -> Iterator[PatternMatch]:
    """Every twist set whose re-embedding lands on ``surface``, one match each."""
    surface = surface_from_tag(surface)
    for kind in FIXED_BY_SURFACE[surface]:
        yield from find_fixed_pattern(dual, kind)
    if surface == PROJECTIVE_PLANE:
        return
    for u, v in itertools.combinations(range(dual.vertex_count), 2):
        yield from enumerate_apex_family(dual, u, v, surface)
