import pytest

from cubic_reembed.counting import (bounds_report, count_klein, count_projective,
                                    count_report, count_torus, f_klein, f_klein_closed,
                                    f_torus, f_torus_closed, klein_fixed_count,
                                    proposition_floor, torus_fixed_count)


@pytest.mark.parametrize("k, adjacent, expected", [
    (3, True, 1), (4, False, 1), (2, True, 0), (0, False, 0), (0, True, 0), (5, True, 16),
])
def test_f_torus(k, adjacent, expected):
    assert f_torus(k, adjacent) == expected


@pytest.mark.parametrize("k, adjacent, expected", [
    (2, True, 3), (4, False, 8), (0, True, 0), (0, False, 0), (1, False, 1),
])
def test_f_klein(k, adjacent, expected):
    assert f_klein(k, adjacent) == expected


def test_closed_forms_agree_in_range():
    for k in range(0, 20):
        assert f_torus(k, True) == f_torus_closed(k, True)
        assert f_klein(k, True) == f_klein_closed(k, True)
    for k in range(1, 20):
        assert f_torus(k, False) == f_torus_closed(k, False)
        assert f_klein(k, False) == f_klein_closed(k, False)


def test_negative_k():
    with pytest.raises(ValueError):
        f_torus(-1, True)
    with pytest.raises(ValueError):
        f_klein(-1, False)


def test_projective_counts(k4_dual, octahedron, bipyramid):
    assert count_projective(k4_dual) == 7
    assert count_projective(octahedron) == 12
    assert count_projective(bipyramid) == 11


def test_torus_counts(k4_dual, octahedron, icosahedron):
    assert count_torus(k4_dual) == 7
    # 8 triangles + 15 four-cycles + 1 octahedron, then 3 antipodal K_{2,4}
    assert torus_fixed_count(octahedron) == 24
    assert count_torus(octahedron) == 27
    assert count_torus(icosahedron) == 50


def test_klein_counts(k4_dual, octahedron, icosahedron):
    assert count_klein(k4_dual) == 21
    # A1: 30, A6: 6; adjacent pairs 12 x 3; antipodal pairs 3 x 8
    assert klein_fixed_count(octahedron) == 36
    assert count_klein(octahedron) == 96
    assert count_klein(icosahedron) == 465


def test_count_report(octahedron):
    report = count_report(octahedron, 8)
    assert report.by_surface() == {"pp": 12, "torus": 27, "klein": 96}
    assert (report.torus_fixed, report.klein_fixed) == (24, 36)
    assert sum(ft for ft, _ in report.pair_sums.values()) == 3
    assert sum(fk for _, fk in report.pair_sums.values()) == 60


@pytest.mark.parametrize("n, expected", [
    (4, (6, 7, 7, 21)), (8, (12, 15, 20, 78)), (20, (30, 39, 50, 465)),
])
def test_bounds(n, expected):
    b = bounds_report(n)
    assert (b.pp_lower, b.pp_upper, b.torus_lower, b.klein_lower) == expected


def test_bounds_rejects_odd():
    with pytest.raises(ValueError):
        bounds_report(7)


def test_proposition_floor(k4_dual, octahedron, icosahedron):
    assert proposition_floor(k4_dual) == 3
    assert proposition_floor(octahedron) == 3
    assert proposition_floor(icosahedron) == 3


@pytest.mark.parametrize("seed", range(8))
def test_enumeration_length_equals_closed_form(seed):
    from cubic_reembed.dual import build_dual
    from cubic_reembed.generators import random_truncation_sequence
    from cubic_reembed.patterns import enumerate_surface
    dual = build_dual(random_truncation_sequence(seed, 2 + seed))
    counters = {"projective": count_projective, "torus": count_torus, "klein": count_klein}
    for tag, counter in counters.items():
        assert sum(1 for _ in enumerate_surface(dual, tag)) == counter(dual)
