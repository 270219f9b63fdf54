"""Closed-form counts of re-embeddings and the accompanying bounds."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

from .dual import DualMap
from .patterns import (A1, A2, A3, A4, A5, A6, C4, OCTA, TRIANGLE,
                       common_neighbors, count_fixed_pattern, count_k4_subgraphs)


def _check_k(k: int) -> None:
    if k < 0:
        raise ValueError("k must be non-negative")


def f_torus(k: int, adjacent: bool) -> int:
    """Torus patterns with a fixed apex pair whose common neighborhood has size ``k``."""
    _check_k(k)
    if adjacent:
        return sum(comb(k, i) for i in range(3, k + 1))
    return sum(comb(k, 2 * i) for i in range(2, k // 2 + 1))


def f_klein(k: int, adjacent: bool) -> int:
    """Klein bottle patterns with a fixed apex pair and ``k`` common neighbors."""
    _check_k(k)
    if adjacent:
        return sum(comb(k, i) for i in range(1, k + 1))
    return sum(comb(k, 2 * i - 1) for i in range(1, (k + 1) // 2 + 1))


def f_torus_closed(k: int, adjacent: bool) -> int:
    if adjacent:
        return 2 ** k - (k * k + k + 2) // 2
    return 2 ** (k - 1) - (k * k - k + 2) // 2


def f_klein_closed(k: int, adjacent: bool) -> int:
    return 2 ** k - 1 if adjacent else 2 ** (k - 1)


def _pairs(dual: DualMap):
    for u, v in itertools.combinations(range(dual.vertex_count), 2):
        yield u, v, len(common_neighbors(dual, u, v)), dual.adjacent(u, v)


def count_projective(dual: DualMap) -> int:
    return dual.edge_count + count_k4_subgraphs(dual)


def torus_fixed_count(dual: DualMap) -> int:
    return sum(count_fixed_pattern(dual, kind) for kind in (TRIANGLE, C4, OCTA))


def klein_fixed_count(dual: DualMap) -> int:
    return sum(count_fixed_pattern(dual, kind) for kind in (A1, A2, A3, A4, A5, A6))


def count_torus(dual: DualMap) -> int:
    return torus_fixed_count(dual) + sum(f_torus(k, adj) for _, _, k, adj in _pairs(dual))


def count_klein(dual: DualMap) -> int:
    return klein_fixed_count(dual) + sum(f_klein(k, adj) for _, _, k, adj in _pairs(dual))


@dataclass(frozen=True)
class Bounds:
    n: int
    pp_lower: int
    pp_upper: int
    torus_lower: int
    klein_lower: int


def bounds_report(n: int) -> Bounds:
    if n % 2 or n < 4:
        raise ValueError("a cubic graph has an even number (>= 4) of vertices")
    torus = 7 if n == 4 else 5 * n // 2
    return Bounds(n, 3 * n // 2, 2 * n - 1, torus, 3 * n * (3 * n + 2) // 8)


def proposition_floor(dual: DualMap) -> int:
    g = dual.dual_graph
    m = max(len(common_neighbors(dual, a, b)) for a, b in g.edges)
    return 2 ** m - 1


@dataclass
class CountReport:
    n: int
    projective: int
    torus: int
    klein: int
    torus_fixed: int
    klein_fixed: int
    pair_sums: dict[tuple[int, int], tuple[int, int]] = field(default_factory=dict)
    """(u, v) -> (f_torus, f_klein) for every pair with a nonzero term."""

    def by_surface(self) -> dict[str, int]:
        return {"pp": self.projective, "torus": self.torus, "klein": self.klein}


def count_report(dual: DualMap, n: int) -> CountReport:
    pair_sums = {}
    torus_pairs = klein_pairs = 0
    for u, v, k, adj in _pairs(dual):
        ft, fk = f_torus(k, adj), f_klein(k, adj)
        torus_pairs += ft
        klein_pairs += fk
        if ft or fk:
            pair_sums[(u, v)] = (ft, fk)
    nt, nk = torus_fixed_count(dual), klein_fixed_count(dual)
    return CountReport(n, count_projective(dual), nt + torus_pairs, nk + klein_pairs,
                       nt, nk, pair_sums)
