from fractions import Fraction

import pytest
from django.test import override_settings
from hypothesis import given, settings
from hypothesis import strategies as st

from positroids.enumeration import mpos
from positroids.exceptions import (
    DimensionMismatchError,
    MalformedInputError,
    NotNiceError,
    RankDeficientError,
    SizeLimitError,
)
from positroids.graph import component_count, is_matroid, is_nice
from positroids.le import bases_of, make_bases, positroid_roundtrip_check
from positroids.realize import (
    ZERO_COLUMN,
    WitnessMatrix,
    brute_matroid_check,
    brute_matroids,
    brute_mpos,
    census,
    realize_nice,
    verify_witness,
)
from positroids.sets import all_pairs, from_pairs

from .utils import CROSSING, SMALL, dep


def columns(*pairs):
    return tuple((Fraction(a), Fraction(b)) for a, b in pairs)


def every_subset(n):
    pairs = all_pairs(n)
    for mask in range(1 << len(pairs)):
        yield from_pairs(n, [p for bit, p in enumerate(pairs) if mask >> bit & 1])


class TestRealizeNice:
    def test_small_example(self):
        witness = realize_nice(SMALL)
        assert witness.columns == columns((1, 0), (1, 0), (1, 0), (1, 1), (1, 1), (1, 2))
        assert verify_witness(witness, SMALL)

    def test_wrapping_component(self):
        d = dep(6, 16)
        witness = realize_nice(d)
        assert witness.column(1) == (Fraction(-1), Fraction(-4))
        assert witness.column(2) == (Fraction(1), Fraction(0))
        assert witness.column(6) == (Fraction(1), Fraction(4))
        assert witness.minor(1, 6) == 0
        assert witness.minor(1, 2) > 0
        assert verify_witness(witness, d)

    def test_uniform(self):
        assert realize_nice(dep(4)).columns == columns((1, 0), (1, 1), (1, 2), (1, 3))

    def test_loops_get_zero_columns(self):
        witness = realize_nice(dep(4, 13, 23, 34))
        assert witness.column(3) == ZERO_COLUMN
        assert witness.minor(1, 2) > 0

    def test_not_nice(self):
        with pytest.raises(NotNiceError):
            realize_nice(CROSSING)

    def test_rank_deficient(self):
        with pytest.raises(RankDeficientError):
            realize_nice(dep(4, *all_pairs(4)))

    @pytest.mark.parametrize('n', range(2, 9))
    def test_every_nice_set(self, n):
        for d in census(n, 'nice'):
            if component_count(d) >= 2:
                assert verify_witness(realize_nice(d), d)


class TestWitnessMatrix:
    def test_wrong_column_count(self):
        with pytest.raises(DimensionMismatchError):
            WitnessMatrix(3, columns((1, 0), (1, 1)))

    def test_not_rational(self):
        with pytest.raises(MalformedInputError):
            WitnessMatrix(1, ((1.0, 0.5),))

    def test_verify_rejects_extra_zero(self):
        assert not verify_witness(realize_nice(SMALL), dep(6))

    def test_verify_rejects_negative_minor(self):
        witness = WitnessMatrix(3, columns((1, 0), (1, 2), (1, 1)))
        assert not verify_witness(witness, dep(3))

    def test_verify_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            verify_witness(realize_nice(SMALL), dep(5))


class TestBruteMatroidCheck:
    def test_positroid(self):
        assert brute_matroid_check(bases_of(SMALL))

    def test_crossing(self):
        assert brute_matroid_check(bases_of(CROSSING))

    def test_incomplete_component(self):
        assert not brute_matroid_check(bases_of(dep(4, 12, 23)))

    def test_empty(self):
        assert not brute_matroid_check(make_bases(4, 2, []))

    @pytest.mark.parametrize('n', range(2, 6))
    def test_matches_graph_test(self, n):
        full = len(all_pairs(n))
        for d in every_subset(n):
            if len(d) < full:
                assert brute_matroid_check(bases_of(d)) == is_matroid(d)


class TestCensus:
    def test_three_elements(self):
        nice = census(3, 'nice')
        assert len(nice) == 8
        assert nice == census(3, 'matroids')

    def test_nice_is_a_subset(self):
        matroids = census(6, 'matroids')
        assert census(6, 'nice') == [d for d in matroids if is_nice(d)]

    def test_matches_graph_test(self):
        matroids = [d for d in every_subset(4) if is_matroid(d)]
        assert census(4, 'matroids') == sorted(matroids, key=lambda d: d.sort_key)

    def test_sorted(self):
        found = census(5, 'matroids')
        assert found == sorted(found, key=lambda d: d.sort_key)

    @pytest.mark.parametrize('n', range(2, 6))
    def test_matches_exchange_sweep(self, n):
        full = len(all_pairs(n))
        assert brute_matroids(n) == [d for d in census(n, 'matroids') if len(d) < full]

    def test_bad_kind(self):
        with pytest.raises(MalformedInputError):
            census(4, 'positroids')

    def test_bad_size(self):
        with pytest.raises(MalformedInputError):
            census(-1, 'nice')

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            census(10, 'nice')

    @override_settings(POSITROID_CENSUS_LIMIT=3)
    def test_size_limit_setting(self):
        with pytest.raises(SizeLimitError):
            census(4, 'nice')
        assert census(4, 'nice', slow=True) == [d for d in census(4, 'matroids', slow=True) if is_nice(d)]


class TestOracles:
    @pytest.mark.parametrize('n', range(3, 6))
    def test_nice_is_positroid(self, n):
        full = len(all_pairs(n))
        for d in every_subset(n):
            if len(d) < full:
                assert positroid_roundtrip_check(bases_of(d)) == is_nice(d)

    @settings(max_examples=300, deadline=None)
    @given(st.integers(6, 8).flatmap(
        lambda n: st.sets(st.sampled_from(all_pairs(n)), max_size=len(all_pairs(n)) - 1).map(
            lambda pairs: from_pairs(n, pairs)
        )
    ))
    def test_nice_is_positroid_sampled(self, d):
        assert positroid_roundtrip_check(bases_of(d)) == is_nice(d)

    @pytest.mark.slow
    def test_nice_is_positroid_n6(self):
        full = len(all_pairs(6))
        for d in every_subset(6):
            if len(d) < full:
                assert positroid_roundtrip_check(bases_of(d)) == is_nice(d)

    @pytest.mark.parametrize('n', range(2, 7))
    def test_every_matroid(self, n):
        full = len(all_pairs(n))
        for d in census(n, 'matroids'):
            if len(d) < full:
                assert positroid_roundtrip_check(bases_of(d)) == is_nice(d)

    @pytest.mark.slow
    def test_every_matroid_n7(self):
        full = len(all_pairs(7))
        for d in census(7, 'matroids'):
            if len(d) < full:
                assert positroid_roundtrip_check(bases_of(d)) == is_nice(d)

    @pytest.mark.slow
    def test_mpos_every_matroid_n7(self):
        nice = census(7, 'nice')
        for d in census(7, 'matroids'):
            assert mpos(d) == brute_mpos(d, nice)
