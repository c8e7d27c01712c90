from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from positroids.cells import (
    boundary_codim1,
    boundary_codimk,
    boundary_poset,
    cell,
    dimension,
    dualize,
    intersection_mpos,
    top_dimensional,
)
from positroids.enumeration import mpos
from positroids.exceptions import (
    DimensionMismatchError,
    EmptyBasesError,
    MalformedInputError,
    NotNiceError,
    RankDeficientError,
)
from positroids.graph import component_count
from positroids.le import bases_of, le_of_bases, make_bases, plus_count
from positroids.realize import brute_boundary, census
from positroids.sets import all_pairs, union

from .utils import CROSSING, SMALL, dep

NICE_BY_SIZE = {n: census(n, 'nice') for n in (7, 8)}

SQUARE = dep(4, 34)

SQUARE_BOUNDARY = {
    dep(4, 12, 34),
    dep(4, 13, 14, 34),
    dep(4, 13, 23, 34),
    dep(4, 14, 24, 34),
    dep(4, 23, 24, 34),
}


def cells_of(n):
    return [d for d in census(n, 'nice') if component_count(d) >= 2]


def nice_pairs(n):
    return st.tuples(st.sampled_from(NICE_BY_SIZE[n]), st.sampled_from(NICE_BY_SIZE[n]))


class TestDimension:
    @pytest.mark.parametrize('n', range(4, 13))
    def test_uniform(self, n):
        assert dimension(dep(n)) == 2 * n - 4

    def test_small_example(self):
        assert dimension(SMALL) == 5

    def test_loop(self):
        assert dimension(dep(3, 13, 23)) == 0

    def test_not_nice(self):
        with pytest.raises(NotNiceError):
            dimension(CROSSING)

    def test_rank_deficient(self):
        with pytest.raises(RankDeficientError):
            dimension(dep(4, *all_pairs(4)))

    @pytest.mark.parametrize('n', range(3, 9))
    def test_matches_plus_count(self, n):
        for d in cells_of(n):
            assert dimension(d) == plus_count(le_of_bases(bases_of(d)))


class TestCell:
    def test_small_example(self):
        c = cell(SMALL)
        assert c.loops == ()
        assert c.components == ((1, 2, 3), (4, 5), (6,))
        assert c.dim == 5
        assert not c.degenerate

    def test_degenerate(self):
        c = cell(dep(4, *all_pairs(4)))
        assert c.loops == (1, 2, 3, 4)
        assert c.components == ()
        assert c.degenerate

    def test_not_nice(self):
        with pytest.raises(NotNiceError):
            cell(dep(4, 12, 23))

    def test_top_dimensional(self):
        assert top_dimensional([SMALL, dep(6), dep(6, 12)]) == [dep(6)]
        assert top_dimensional([dep(6, 12), dep(6, 23), SMALL]) == [dep(6, 12), dep(6, 23)]

    def test_top_dimensional_skips_degenerate(self):
        assert top_dimensional([dep(3, *all_pairs(3))]) == []
        assert top_dimensional([]) == []


class TestBoundaryCodim1:
    def test_square(self):
        boundary = boundary_codim1(SQUARE)
        assert set(boundary) == SQUARE_BOUNDARY
        assert len(boundary) == 5
        assert dimension(SQUARE) == 3
        assert all(dimension(d) == 2 for d in boundary)
        assert boundary.degenerate == ()

    def test_uniform(self):
        boundary = boundary_codim1(dep(4))
        assert set(boundary) == {dep(4, 12), dep(4, 23), dep(4, 34), dep(4, 14)}

    def test_two_components_merge_once(self):
        boundary = boundary_codim1(dep(3, 13, 23))
        assert boundary.cells == ()
        assert boundary.degenerate == (dep(3, *all_pairs(3)),)

    def test_not_nice(self):
        with pytest.raises(NotNiceError):
            boundary_codim1(CROSSING)

    def test_rank_deficient(self):
        with pytest.raises(RankDeficientError):
            boundary_codim1(dep(3, *all_pairs(3)))

    @pytest.mark.parametrize('n', range(2, 6))
    def test_matches_brute_force(self, n):
        nice = census(n, 'nice')
        for d in cells_of(n):
            assert list(boundary_codim1(d)) == brute_boundary(d, 1, nice)

    @pytest.mark.slow
    @pytest.mark.parametrize('n', [6, 7])
    def test_matches_brute_force_slow(self, n):
        nice = census(n, 'nice')
        for d in cells_of(n):
            assert list(boundary_codim1(d)) == brute_boundary(d, 1, nice)


class TestBoundaryCodimk:
    def test_first_step(self):
        assert boundary_codimk(SQUARE, 1) == boundary_codim1(SQUARE)

    def test_square_two_steps(self):
        boundary = boundary_codimk(SQUARE, 2)
        assert boundary.cells
        assert all(dimension(d) == 1 for d in boundary)
        assert set(boundary) == set(brute_boundary(SQUARE, 2))

    def test_past_the_bottom(self):
        boundary = boundary_codimk(SQUARE, 4)
        assert boundary.cells == ()
        assert dep(4, *all_pairs(4)) in boundary.degenerate

    def test_in_parallel(self):
        assert boundary_codimk(dep(5), 2, jobs=2) == boundary_codimk(dep(5), 2)

    @pytest.mark.parametrize('codim', [0, -1, 1.5, True])
    def test_bad_codimension(self, codim):
        with pytest.raises(MalformedInputError):
            boundary_codimk(SQUARE, codim)

    @pytest.mark.parametrize('codim', [2, 3])
    def test_matches_brute_force(self, codim):
        nice = census(5, 'nice')
        for d in cells_of(5):
            assert list(boundary_codimk(d, codim)) == brute_boundary(d, codim, nice)


class TestBoundaryPoset:
    def test_square(self):
        poset = boundary_poset(SQUARE, 2)
        assert poset.levels[0] == (SQUARE,)
        assert set(poset.levels[1]) == SQUARE_BOUNDARY
        assert poset.levels[2] == boundary_codimk(SQUARE, 2).cells
        assert {lower for upper, lower in poset.arcs if upper == SQUARE} == SQUARE_BOUNDARY
        for upper, lower in poset.arcs:
            assert poset.codim_of(lower) == poset.codim_of(upper) + 1
            assert upper.issubset(lower)

    def test_codim_of(self):
        poset = boundary_poset(SQUARE, 1)
        assert poset.codim_of(SQUARE) == 0
        assert poset.codim_of(dep(4, 12, 34)) == 1
        assert poset.codim_of(dep(4)) is None

    def test_stops_at_the_bottom(self):
        poset = boundary_poset(dep(3, 13, 23), 3)
        assert poset.levels == ((dep(3, 13, 23),),)
        assert poset.arcs == ()


class TestIntersection:
    def test_two_cells(self):
        result = intersection_mpos([dep(6, 34, 56), dep(6, 23, 56)])
        assert result == [dep(6, 13, 23, 34, 35, 36, 56), dep(6, 23, 24, 34, 56)]
        assert [dimension(d) for d in result] == [5, 5]

    def test_single_cell(self):
        assert intersection_mpos([SMALL]) == [SMALL]

    def test_nested_cells(self):
        assert intersection_mpos([SQUARE, dep(4, 13, 23, 34)]) == [dep(4, 13, 23, 34)]

    def test_not_nice(self):
        with pytest.raises(NotNiceError):
            intersection_mpos([SMALL, CROSSING])

    def test_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            intersection_mpos([dep(4), dep(5)])

    @pytest.mark.parametrize('n', range(2, 6))
    def test_every_pair(self, n):
        for first, second in combinations_with_replacement(census(n, 'nice'), 2):
            assert intersection_mpos([first, second]) == mpos(union(first, second))

    @pytest.mark.slow
    def test_every_pair_n6(self):
        for first, second in combinations_with_replacement(census(6, 'nice'), 2):
            assert intersection_mpos([first, second]) == mpos(union(first, second))

    @settings(max_examples=1000, deadline=None)
    @given(st.sampled_from([7, 8]).flatmap(nice_pairs))
    def test_random_pairs(self, pair):
        first, second = pair
        assert intersection_mpos([first, second]) == mpos(union(first, second))


class TestDualize:
    def test_small_example(self):
        dual = dualize(bases_of(SMALL))
        assert dual.n == 6
        assert dual.k == 4
        assert (2, 3, 5, 6) in dual
        assert len(dual) == len(bases_of(SMALL))

    def test_involution(self):
        assert dualize(dualize(bases_of(SMALL))) == bases_of(SMALL)

    def test_single_basis(self):
        assert dualize(make_bases(4, 2, [[1, 2]])).bases == ((3, 4),)

    def test_empty(self):
        with pytest.raises(EmptyBasesError):
            dualize(make_bases(4, 2, []))
