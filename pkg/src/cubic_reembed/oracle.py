"""Brute-force ground truth: exhaustive twist-set sweeps and pattern counts.

Nothing here uses the pattern characterizations; these functions exist to
check them.
"""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .dual import DualMap, build_dual
from .graph import PlanarMap
from .patterns import PatternKind, enumerate_surface
from .surface import (KLEIN_BOTTLE, PROJECTIVE_PLANE, SPHERE, TORUS, FaceTracer,
                      Surface)

DEFAULT_EDGE_CAP = 24
NAMED = {"pp": PROJECTIVE_PLANE, "torus": TORUS, "klein": KLEIN_BOTTLE}


class CapExceeded(ValueError):
    pass


@dataclass
class GenusDistribution:
    counts: dict[Surface, int]
    total: int

    def __getitem__(self, surface: Surface) -> int:
        return self.counts.get(surface, 0)

    def rows(self) -> list[tuple[Surface, int]]:
        """Rows sorted by decreasing characteristic, orientable first."""
        return sorted(self.counts.items(),
                      key=lambda kv: (-kv[0].euler_characteristic, not kv[0].orientable))


def _sweep(neighbors, start: int, stop: int, collect: bool):
    pm = PlanarMap.from_neighbors(neighbors)
    tracer = FaceTracer(pm)
    dual = build_dual(pm)
    incidence = [0] * dual.vertex_count
    for e, (a, b) in enumerate(dual.dual_graph.edges):
        incidence[a] |= 1 << e
        incidence[b] |= 1 << e
    base = pm.vertex_count - pm.edge_count
    tally: Counter = Counter()
    members: dict[tuple[int, bool], list[int]] = {k: [] for k in ((1, False), (0, True), (0, False))}
    for mask in range(start, stop):
        chi = base + tracer.count_faces(mask)
        orientable = True
        for inc in incidence:
            if (mask & inc).bit_count() & 1:
                orientable = False
                break
        key = (chi, orientable)
        tally[key] += 1
        if collect and key in members:
            members[key].append(mask)
    return tally, members


def _chunks(total: int, jobs: int):
    step = -(-total // jobs)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _run_sweep(pm: PlanarMap, edge_cap: int, jobs: int, collect: bool):
    if pm.edge_count > edge_cap:
        raise CapExceeded(f"{pm.edge_count} edges exceed the sweep cap of {edge_cap}")
    total = 1 << pm.edge_count
    neighbors = pm.neighbor_rotations()
    ranges = _chunks(total, max(1, jobs))
    if jobs <= 1 or len(ranges) == 1:
        parts = [_sweep(neighbors, lo, hi, collect) for lo, hi in ranges]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_sweep, neighbors, lo, hi, collect) for lo, hi in ranges]
            parts = [f.result() for f in futures]
    tally: Counter = Counter()
    members: dict[tuple[int, bool], list[int]] = {}
    for part_tally, part_members in parts:
        tally.update(part_tally)
        for key, masks in part_members.items():
            members.setdefault(key, []).extend(masks)
    counts = {}
    for (chi, orientable), c in tally.items():
        counts[Surface(chi, orientable)] = c
    return GenusDistribution(counts, total), members


def brute_force_distribution(pm: PlanarMap, edge_cap: int = DEFAULT_EDGE_CAP,
                             jobs: int = 1) -> GenusDistribution:
    """Classify every twist set; the result does not depend on ``jobs``."""
    dist, _ = _run_sweep(pm, edge_cap, jobs, collect=False)
    assert dist.total == sum(dist.counts.values())
    assert dist[SPHERE] == 1
    return dist


def brute_force_twist_sets(pm: PlanarMap, edge_cap: int = DEFAULT_EDGE_CAP,
                           jobs: int = 1) -> dict[Surface, set[int]]:
    """Twist-set masks landing on the projective plane, torus and Klein bottle."""
    _, members = _run_sweep(pm, edge_cap, jobs, collect=True)
    return {Surface(*key): set(masks) for key, masks in members.items()}


# ---------------------------------------------------------------------------
# pattern oracle
# ---------------------------------------------------------------------------

def _canonical(vertices: list[int], edges: list[tuple[int, int]]):
    """Smallest relabelled edge list over all degree-respecting relabellings."""
    deg = Counter()
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    classes: dict[int, list[int]] = {}
    for v in vertices:
        classes.setdefault(deg[v], []).append(v)
    degrees = sorted(classes)
    slots = []
    label = 0
    for d in degrees:
        slots.append(list(range(label, label + len(classes[d]))))
        label += len(classes[d])
    best = None
    for perms in itertools.product(*(itertools.permutations(classes[d]) for d in degrees)):
        relabel = {}
        for slot, perm in zip(slots, perms):
            relabel.update(zip(perm, slot))
        form = tuple(sorted(tuple(sorted((relabel[a], relabel[b]))) for a, b in edges))
        if best is None or form < best:
            best = form
    return tuple(sorted(deg.values())), best


def brute_force_pattern_count(dual: DualMap, kind: PatternKind, size_cap: int = 12,
                              max_dual_edges: int = 15) -> int:
    """Count dual edge subsets whose edge-induced subgraph is isomorphic to ``kind``."""
    n, pattern_edges = kind.graph()
    size = len(pattern_edges)
    if size > size_cap:
        raise CapExceeded(f"pattern has {size} edges, cap is {size_cap}")
    if dual.edge_count > max_dual_edges and size > 2:
        raise CapExceeded(f"dual has {dual.edge_count} edges, cap is {max_dual_edges}")
    target = _canonical(list(range(n)), pattern_edges)
    dual_edges = dual.dual_graph.edges
    count = 0
    for subset in itertools.combinations(range(dual.edge_count), size):
        es = [dual_edges[e] for e in subset]
        verts = sorted({x for ab in es for x in ab})
        if len(verts) != n:
            continue
        if _canonical(verts, es) == target:
            count += 1
    return count


# ---------------------------------------------------------------------------
# three-way verification
# ---------------------------------------------------------------------------

@dataclass
class VerifyReport:
    closed_form: dict[str, int]
    enumerated: dict[str, int]
    swept: dict[str, int] | None
    mismatches: dict[str, list[tuple[int, ...]]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        if self.closed_form != self.enumerated:
            return False
        if self.swept is not None and self.swept != self.closed_form:
            return False
        return not any(self.mismatches.values())

    def lines(self) -> list[str]:
        out = []
        for tag in NAMED:
            swept = "-" if self.swept is None else str(self.swept[tag])
            out.append(f"{tag}\tclosed={self.closed_form[tag]}\t"
                       f"enumerated={self.enumerated[tag]}\tswept={swept}")
            for key in self.mismatches.get(tag, []):
                out.append(f"{tag}\tmismatch\t{','.join(map(str, key))}")
        return out


def verify_counts(pm: PlanarMap, edge_cap: int = DEFAULT_EDGE_CAP, jobs: int = 1) -> VerifyReport:
    from .counting import count_klein, count_projective, count_torus

    dual = build_dual(pm)
    closed = {"pp": count_projective(dual), "torus": count_torus(dual),
              "klein": count_klein(dual)}
    enumerated_sets = {}
    enumerated = {}
    for tag in NAMED:
        keys = [m.key for m in enumerate_surface(dual, tag)]
        enumerated[tag] = len(keys)
        enumerated_sets[tag] = set(keys)
    swept = None
    mismatches: dict[str, list[tuple[int, ...]]] = {}
    if pm.edge_count <= edge_cap:
        members = brute_force_twist_sets(pm, edge_cap, jobs)
        swept = {}
        for tag, surface in NAMED.items():
            masks = members.get(surface, set())
            swept[tag] = len(masks)
            truth = {tuple(e for e in range(pm.edge_count) if mask >> e & 1) for mask in masks}
            diff = truth ^ enumerated_sets[tag]
            if diff:
                mismatches[tag] = sorted(diff)
    return VerifyReport(closed, enumerated, swept, mismatches)
