"""Fixture polyhedra and vertex truncation.

Rotation tables are clockwise and were read off planar drawings; every
constructor re-validates its output.
"""

from __future__ import annotations

from .graph import PlanarMap, validate_cubic_planar

_TETRAHEDRON = [(1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1)]

_CUBE = [(1, 3, 4), (0, 5, 2), (1, 6, 3), (0, 2, 7),
         (0, 7, 5), (1, 4, 6), (2, 5, 7), (3, 6, 4)]

_DODECAHEDRON = [
    (1, 4, 5), (0, 6, 2), (1, 7, 3), (2, 8, 4), (0, 3, 9),
    (0, 14, 10), (1, 10, 11), (2, 11, 12), (3, 12, 13), (4, 13, 14),
    (5, 15, 6), (6, 16, 7), (7, 17, 8), (8, 18, 9), (5, 9, 19),
    (10, 19, 16), (11, 15, 17), (12, 16, 18), (13, 17, 19), (14, 18, 15),
]

# ANSI C style LCG: state <- (A * state + C) mod 2**31; vertex = state mod n.
LCG_A = 1103515245
LCG_C = 12345
LCG_MOD = 2 ** 31


def _checked(neighbors) -> PlanarMap:
    pm = PlanarMap.from_neighbors(neighbors)
    report = validate_cubic_planar(pm)
    if not report.ok:
        raise AssertionError(f"generator produced an invalid map: {report.detail}")
    return pm


def tetrahedron() -> PlanarMap:
    return _checked(_TETRAHEDRON)


def cube() -> PlanarMap:
    return _checked(_CUBE)


def dodecahedron() -> PlanarMap:
    return _checked(_DODECAHEDRON)


def prism(m: int) -> PlanarMap:
    """Outer cycle ``0..m-1`` and inner cycle ``m..2m-1`` with rungs ``i -- m+i``."""
    if m < 3:
        raise ValueError("prism needs m >= 3")
    neighbors = []
    for i in range(m):
        neighbors.append(((i + 1) % m, m + i, (i - 1) % m))
    for i in range(m):
        neighbors.append((i, m + (i + 1) % m, m + (i - 1) % m))
    return _checked(neighbors)


def truncate_vertex(pm: PlanarMap, v: int) -> PlanarMap:
    """Replace cubic vertex ``v`` by a triangle.

    The new corner nearest to the i-th rotation neighbor of ``v`` keeps id
    ``v`` for i = 0 and gets ids ``n``, ``n + 1`` for i = 1, 2.
    """
    n = pm.vertex_count
    if not 0 <= v < n:
        raise ValueError(f"no vertex {v}")
    around = pm.neighbor_rotation(v)
    if len(around) != 3:
        raise ValueError(f"vertex {v} is not cubic")
    corners = (v, n, n + 1)
    neighbors = [list(pm.neighbor_rotation(w)) for w in range(n)]
    for i, a in enumerate(around):
        row = neighbors[a]
        row[row.index(v)] = corners[i]
    neighbors.extend([[], []])
    for i in range(3):
        neighbors[corners[i]] = [around[i], corners[(i + 1) % 3], corners[(i + 2) % 3]]
    return _checked(neighbors)


def lcg_stream(seed: int):
    state = seed % LCG_MOD
    while True:
        state = (LCG_A * state + LCG_C) % LCG_MOD
        yield state


def random_truncation_sequence(seed: int, steps: int) -> PlanarMap:
    """Start at K4 and truncate ``steps`` LCG-chosen vertices."""
    if steps < 0:
        raise ValueError("steps must be non-negative")
    pm = tetrahedron()
    rng = lcg_stream(seed)
    for _ in range(steps):
        pm = truncate_vertex(pm, next(rng) % pm.vertex_count)
    return pm
