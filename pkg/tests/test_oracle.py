import pytest

from cubic_reembed.generators import prism, random_truncation_sequence
from cubic_reembed.oracle import (CapExceeded, brute_force_distribution,
                                  brute_force_pattern_count, verify_counts)
from cubic_reembed.patterns import FIXED_KINDS, K2, OCTA
from cubic_reembed.surface import KLEIN_BOTTLE, PROJECTIVE_PLANE, SPHERE, TORUS, Surface

from test_patterns import ORACLE_COUNTS


def test_k4_distribution(k4):
    dist = brute_force_distribution(k4)
    assert dist.total == 64
    assert dist[SPHERE] == 1
    assert dist[PROJECTIVE_PLANE] == 7
    assert dist[TORUS] == 7
    assert dist[KLEIN_BOTTLE] == 21
    rest = sum(c for s, c in dist.counts.items() if s.euler_characteristic <= -1)
    assert rest == 28


def test_cube_distribution(cube_map):
    dist = brute_force_distribution(cube_map)
    assert dist.total == 4096
    assert (dist[PROJECTIVE_PLANE], dist[TORUS], dist[KLEIN_BOTTLE]) == (12, 27, 96)
    for s in dist.counts:
        assert s.euler_characteristic <= 2
        if s.orientable:
            assert s.euler_characteristic % 2 == 0


def test_distribution_independent_of_jobs(cube_map):
    assert brute_force_distribution(cube_map).counts == \
        brute_force_distribution(cube_map, jobs=3).counts


def test_distribution_cap(dodeca):
    with pytest.raises(CapExceeded):
        brute_force_distribution(dodeca)
    with pytest.raises(CapExceeded):
        brute_force_distribution(prism(5), edge_cap=12)


@pytest.mark.parametrize("name", sorted(ORACLE_COUNTS))
def test_pattern_oracle_reproduces_frozen_counts(name, request):
    dual = request.getfixturevalue(name)
    for kind in FIXED_KINDS:
        assert brute_force_pattern_count(dual, kind) == ORACLE_COUNTS[name][kind.family]


def test_pattern_oracle_caps(icosahedron, octahedron):
    assert brute_force_pattern_count(icosahedron, K2) == 30
    with pytest.raises(CapExceeded):
        brute_force_pattern_count(icosahedron, OCTA)
    with pytest.raises(CapExceeded):
        brute_force_pattern_count(octahedron, OCTA, size_cap=8)


def test_verify_k4(k4):
    report = verify_counts(k4)
    assert report.ok
    assert report.closed_form == report.enumerated == report.swept == \
        {"pp": 7, "torus": 7, "klein": 21}


def test_verify_pentagonal_prism(prism5):
    report = verify_counts(prism5)
    assert report.ok, report.lines()
    assert report.swept is not None


def test_verify_dodecahedron_skips_sweep(dodeca):
    report = verify_counts(dodeca)
    assert report.swept is None
    assert report.ok
    assert report.closed_form == {"pp": 30, "torus": 50, "klein": 465}


@pytest.mark.slow
def test_verify_graph_with_all_sporadic_patterns():
    # this truncation graph's dual contains A1..A6, including two disjoint K4 (A3)
    report = verify_counts(random_truncation_sequence(16, 4))
    assert report.ok, report.lines()
    assert report.swept == {"pp": 23, "torus": 67, "klein": 289}


def test_report_lines_show_mismatch(k4):
    report = verify_counts(k4)
    report.mismatches["pp"] = [(0, 1)]
    assert not report.ok
    assert "pp\tmismatch\t0,1" in report.lines()
