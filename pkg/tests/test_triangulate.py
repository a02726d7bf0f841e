from math import prod

import pytest

from hallwalk.errors import UnsupportedSequenceError
from hallwalk.intlinalg import simplex_is_unimodular
from hallwalk.polytope import contains
from hallwalk.triangulate import Triangulation, chimney_triangulation, verify_triangulation


def test_base_case_segments():
    tri = chimney_triangulation((2,))
    assert tri.simplices == (((0,), (1,)), ((1,), (2,)))


def test_golden_triangulation_1_2():
    tri = chimney_triangulation((1, 2))
    assert tri.simplices == (
        ((0, 0), (1, 2), (0, 1)),
        ((0, 1), (1, 2), (0, 2)),
    )


def test_golden_triangulation_2_2():
    # raise order within the first cell: column (0,) twice (keys 1/2, 1),
    # then column (1,) (key 1, larger tiebreak vertex)
    tri = chimney_triangulation((2, 2))
    assert tri.simplices == (
        ((0, 0), (1, 1), (0, 1)),
        ((0, 1), (1, 1), (0, 2)),
        ((0, 2), (1, 1), (1, 2)),
        ((1, 1), (2, 2), (1, 2)),
    )


def test_simplex_count_is_normalized_volume():
    for s in [(1, 2), (2, 4), (3, 3), (2, 2, 2), (1, 2, 4), (2, 4, 8), (1, 1, 2, 4)]:
        tri = chimney_triangulation(s)
        assert len(tri.simplices) == prod(s), s


def test_all_cells_unimodular_and_inside():
    for s in [(2, 4), (1, 3, 3), (2, 2, 4)]:
        tri = chimney_triangulation(s)
        for simplex in tri.simplices:
            assert simplex_is_unimodular(simplex)
            assert all(contains(s, v) for v in simplex)


def test_verification_passes():
    for s in [(1, 2), (2, 4), (2, 4, 8)]:
        tri = chimney_triangulation(s)
        report = verify_triangulation(s, tri, samples=200, seed=5)
        assert report.ok, report.to_json()
        assert report.samples_checked == 200


def test_reversed_ratio_case():
    # ratios are integral downward; handled through the reversal equivalence
    for s in [(2, 1), (4, 2, 1), (8, 4, 2), (9, 3, 3, 1)]:
        tri = chimney_triangulation(s)
        assert len(tri.simplices) == prod(s)
        report = verify_triangulation(s, tri, samples=150, seed=9)
        assert report.ok, (s, report.to_json())


def test_unsupported_sequences():
    with pytest.raises(UnsupportedSequenceError):
        chimney_triangulation((2, 3))
    with pytest.raises(UnsupportedSequenceError):
        chimney_triangulation((2, 4, 2))


def test_corrupted_triangulation_is_rejected():
    tri = chimney_triangulation((2, 4))
    moved = list(tri.simplices)
    bad = tuple(tuple(c + 4 if i == len(moved[0][0]) - 1 else c for i, c in enumerate(v)) for v in moved[0])
    moved[0] = bad
    report = verify_triangulation((2, 4), Triangulation((2, 4), tuple(moved)), samples=50, seed=1)
    assert not report.ok
    assert report.outside  # the shifted cell left the polytope


def test_dropped_cell_breaks_count_and_coverage():
    tri = chimney_triangulation((2, 4))
    report = verify_triangulation((2, 4), Triangulation((2, 4), tri.simplices[1:]), samples=200, seed=2)
    assert not report.ok
    assert report.simplex_count != report.expected_count


def test_overlapping_cell_is_caught_by_sampling():
    tri = chimney_triangulation((3, 3))
    # duplicate one cell: counts go wrong and interior samples double-cover
    doubled = Triangulation((3, 3), tri.simplices + (tri.simplices[4],))
    report = verify_triangulation((3, 3), doubled, samples=300, seed=3)
    assert not report.ok
    assert report.multiply_covered or report.simplex_count != report.expected_count
