import pytest
from hypothesis import given, strategies as st

from sumsetlab.errors import BudgetExceeded, InconclusiveError
from sumsetlab.points import PointSet
from sumsetlab.polytope import convex_hull
from sumsetlab.structure import hull_lattice_points, reflected_exceptions
from sumsetlab.sumset import (exceptional_set, growth_leading_term, growth_table,
                              min_rep_length, psa_membership, psa_membership_capped, sumset,
                              sumset_layers, width)
from oracles import naive_sizes, naive_sumset


def line(*xs):
    return PointSet([(x,) for x in xs])


def segment(lo, hi):
    return convex_hull(line(lo, hi))


def test_sumset_examples():
    assert list(sumset(line(0, 1), 3)) == [(0,), (1,), (2,), (3,)]
    three = sumset(line(0, 2, 3), 3)
    assert set(three) == naive_sumset([(0,), (2,), (3,)], 3)
    assert [p[0] for p in three] == [0, 2, 3, 4, 5, 6, 7, 8, 9]
    assert len(sumset(PointSet([(0, 0), (1, 0), (0, 1)]), 2)) == 6


def test_growth_examples():
    assert naive_sizes([(0,), (2,), (5,)], 4) == [3, 6, 10, 15]
    assert growth_table(line(0, 2, 5), 4).sizes == (3, 6, 10, 15)
    assert growth_table(line(0, 1), 3).sizes == (2, 3, 4)
    assert growth_table(line(0, 2, 3), 3).sizes == (3, 6, 9)


def test_growth_budget_carries_prefix():
    with pytest.raises(BudgetExceeded) as info:
        growth_table(PointSet([(0, 0), (1, 0), (0, 1), (5, 7)]), 40, budget=200)
    prefix = info.value.partial.sizes
    assert prefix and list(prefix) == naive_sizes([(0, 0), (1, 0), (0, 1), (5, 7)], len(prefix))


def test_min_rep_length_examples():
    A = line(0, 2, 3)
    assert min_rep_length(A, (7,), 10) == 3
    assert min_rep_length(A, (0,), 10) == 0
    assert min_rep_length(A, (1,), 10) is None


def test_membership_examples():
    A = line(0, 2, 3)
    assert not psa_membership(A, 1)
    assert psa_membership(A, 5)
    assert psa_membership(PointSet([(0, 0), (1, 0), (0, 1)]), (4, 7))


def test_membership_needs_extremal_origin():
    with pytest.raises(ValueError):
        psa_membership(line(-1, 0, 1), 3)
    assert psa_membership_capped(line(-1, 0, 2), (5,), 5)
    with pytest.raises(InconclusiveError):
        psa_membership_capped(line(-2, 0, 2), (1,), 6)


def test_exceptional_examples():
    assert list(exceptional_set(line(0, 2, 3), segment(0, 20))) == [(1,)]
    assert list(exceptional_set(line(0, 2, 5), segment(0, 20))) == [(1,), (3,)]
    simplex = PointSet([(0, 0), (1, 0), (0, 1)])
    assert len(exceptional_set(simplex, convex_hull(simplex).scaled(9))) == 0


def test_width_examples():
    assert width(line(0, 2, 5)) == 5
    assert width(PointSet([(0, 0), (1, 1), (2, 0), (0, 3)])) == 3
    assert width(line(4)) == 0


def test_leading_term_kite():
    # |NA| = 3N^2 - 6N + 11 eventually for this set
    degree, lead = growth_leading_term(PointSet([(0, 0), (1, 1), (2, 0), (0, 3)]))
    assert degree == 2 and lead == 3


small_sets = st.one_of(
    st.lists(st.tuples(st.integers(0, 6)), min_size=1, max_size=4, unique=True),
    st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=4, unique=True),
).map(PointSet)


@given(small_sets, st.integers(1, 5))
def test_sumset_matches_naive(A, N):
    assert set(sumset(A, N)) == naive_sumset(list(A), N)


@given(small_sets)
def test_nesting_with_origin(A):
    A = A.translate(tuple(-c for c in A[0]))
    layers = sumset_layers(A, 5)
    for small, big in zip(layers, layers[1:]):
        assert set(small) <= set(big)
    sizes = [len(x) for x in layers]
    assert sizes == sorted(sizes) and sizes[0] >= 1


@given(small_sets, st.integers(1, 6))
def test_min_rep_length_is_first_layer(A, N):
    A = A.translate(tuple(-c for c in A[0]))
    layers = [set(x) for x in sumset_layers(A, N)]
    for v in layers[-1]:
        k = min_rep_length(A, v, N)
        if any(v):
            assert v in layers[k - 1] and (k == 1 or v not in layers[k - 2])
        else:
            assert k == 0


def _vertex_translates(A):
    P = convex_hull(A)
    return [A.reflect(a) for a in P.vertices]  # a - A has 0 as a vertex


@given(small_sets)
def test_exceptional_region_consistency(A):
    for B in _vertex_translates(A):
        P = convex_hull(B)
        small = set(exceptional_set(B, P.scaled(3)))
        large = set(exceptional_set(B, P.scaled(6)))
        assert small == {x for x in large if P.scaled(3).contains(x)}


@given(small_sets, st.integers(1, 5))
def test_third_inclusion(A, N):
    NA = set(sumset(A, N))
    base = set(hull_lattice_points(A, N))
    assert NA <= base
    for a in convex_hull(A).vertices:
        assert not NA & set(reflected_exceptions(A, a, N))
