import random
from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from sumsetlab.errors import SumsetLabError
from sumsetlab.khovanskii import (CosetData, W, _coset_counts, applicable, fit_polynomial,
                                  general_pipeline, khovanskii_poly_general,
                                  khovanskii_poly_simplex, khovanskii_thresholds,
                                  onset_refinement, refinement_is_sharp)
from sumsetlab.minimal import certified_useless_family, minimal_useless
from sumsetlab.points import PointSet
from sumsetlab.polynomial import (BinomialSum, RationalPolynomial, interpolate,
                                  minmax_alternating_sum)
from sumsetlab.polytope import convex_hull, normalized_volume
from sumsetlab.sumset import generated_lattice, growth_table
from oracles import naive_sizes


def line(*xs):
    return PointSet([(x,) for x in xs])


KITE = PointSet([(0, 0), (1, 1), (2, 0), (0, 3)])


def test_fit_examples():
    assert naive_sizes([(0,), (2,), (5,)], 5) == [3, 6, 10, 15, 20]
    fit = fit_polynomial([3, 6, 10, 15, 20], 1)
    assert fit.polynomial == RationalPolynomial([-5, 5]) and fit.onset == 3
    fit = fit_polynomial([2, 3, 4], 1)
    assert fit.polynomial == RationalPolynomial([1, 1]) and fit.onset == 1
    fit = fit_polynomial(growth_table(KITE, 10), 2)
    assert fit.onset == 3 == normalized_volume(KITE) - 2 - 1


def test_fit_needs_long_table():
    with pytest.raises(ValueError):
        fit_polynomial([1, 2], 1)


def test_general_examples():
    fam = minimal_useless(line(0, 1), 3)
    assert khovanskii_poly_general(fam) == RationalPolynomial([1, 1])
    fam = minimal_useless(line(0, 1, 2), 3)
    # C(N+2,2) - C(N,2) = 2N + 1
    expect = RationalPolynomial([1, 2])
    assert khovanskii_poly_general(fam) == expect
    assert all(comb(N + 2, 2) - comb(N, 2) == expect(N) for N in range(10))
    with pytest.raises(ValueError):
        khovanskii_poly_general(fam, ell=0)


def test_simplex_examples():
    unit = PointSet([(0, 0), (1, 0), (0, 1)])
    sp = khovanskii_poly_simplex(unit)
    assert len(sp.cosets) == 1
    assert sp.total == RationalPolynomial([1, Fraction(3, 2), Fraction(1, 2)])  # C(N+2,2)
    sp = khovanskii_poly_simplex(line(0, 2, 3))
    polys = dict(sp.coset_polynomials())
    assert polys[(Fraction(0),)] == RationalPolynomial([1, 1])
    assert polys[(Fraction(2, 3),)] == RationalPolynomial([0, 1])
    assert polys[(Fraction(1, 3),)] == RationalPolynomial([-1, 1])
    assert sp.total == RationalPolynomial([0, 3]) and max(1, sp.refined_onset) == 1
    sp = khovanskii_poly_simplex(line(0, 2, 5))
    assert sp.total == RationalPolynomial([-5, 5]) and sp.onset <= 3
    assert fit_polynomial(growth_table(line(0, 2, 5), 8), 1).onset <= sp.onset


def test_simplex_requires_simplex():
    with pytest.raises(SumsetLabError):
        khovanskii_poly_simplex(PointSet([(0, 0), (1, 0), (0, 1), (1, 1)]))


def _coset(deltas, coords):
    r = len(coords[0])
    counts = BinomialSum(_coset_counts(deltas, coords), r)
    return CosetData((), (), (), tuple(map(tuple, coords)), tuple(deltas), r, counts)


def test_refinement_single_element():
    c = _coset([1], [(2, 3)])
    assert onset_refinement(c) == (0, c.n_full - 2) and W(c, 0) == -1


def test_refinement_proper_subset_forces_h_positive():
    # J* = {u1} already attains N_full, so W(0) = 0
    c = _coset([0, 0], [(5,), (1,)])
    assert W(c, 0) == 0
    h, refined = onset_refinement(c)
    assert h >= 1 and refined == c.n_full - 1 - h


def test_refinement_disjoint_maximisers():
    c = _coset([2, 0, 0], [(0, 0), (3, 0), (0, 3)])
    assert W(c, 0) == (-1) ** (2 + 1)
    assert onset_refinement(c)[0] == 0


def test_threshold_examples():
    t = khovanskii_thresholds(line(0, 2, 5))
    assert applicable(t, "one_dim").value == 4
    assert applicable(t, "triple_exact").value == 3
    assert applicable(t, "general").value == 30 ** 15
    assert applicable(khovanskii_thresholds(KITE), "d_plus_two_exact").value == 3
    assert applicable(khovanskii_thresholds(PointSet([(0, 0), (1, 0), (0, 1), (1, 1)])),
                      "simplex") is None


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=10))
def test_min_max_identity(values):
    assert minmax_alternating_sum(values) == -min(values)


@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(-30, 30)), min_size=1, max_size=5,
                unique_by=lambda p: p[0]))
def test_interpolation_passes_through_points(points):
    P = interpolate(points)
    assert all(P(x) == y for x, y in points)
    assert P.degree < len(points)


@given(st.dictionaries(st.integers(0, 8), st.integers(-3, 3), min_size=1, max_size=4),
       st.integers(0, 3))
def test_binomial_sum_truncation(terms, r):
    bs = BinomialSum(terms, r)
    p = bs.polynomial()
    start = bs.validity_start()
    for N in range(max(0, start), start + 6):
        assert bs.evaluate(N) == p(N)
    onset = bs.agreement_onset(1)
    assert all(bs.evaluate(N) == p(N) for N in range(onset, onset + 10))


def test_pipelines_agree_on_corpus(corpus):
    for inst in corpus:
        A = inst.points
        r = convex_hull(A).affine_dim
        tab = growth_table(A, 16)
        fit = fit_polynomial(tab, r)
        if len(A) <= 4 and A.dim <= 2:
            gp = general_pipeline(certified_useless_family(A))
            assert gp.certified and gp.polynomial == fit.polynomial, inst.name
            assert gp.onset >= fit.onset
        try:
            sp = khovanskii_poly_simplex(A)
        except SumsetLabError:
            continue
        assert sp.total == fit.polynomial, inst.name
        assert max(1, sp.onset) >= fit.onset
        assert max(1, sp.refined_onset) == fit.onset, inst.name
        assert all(sp.counts.evaluate(N) == tab.sizes[N - 1] for N in range(1, 17))
        assert all(sp.total(N).denominator == 1 for N in range(-5, 30))


def test_leading_coefficient_is_volume(simplex_corpus):
    for inst in simplex_corpus:
        A = inst.points
        d = A.dim
        if generated_lattice(A).gram_det() != 1 or generated_lattice(A).rank != d:
            continue
        sp = khovanskii_poly_simplex(A)
        assert sp.total.degree == d
        assert sp.total.leading() == Fraction(normalized_volume(A), factorial(d)), inst.name


def test_refinement_sharpness_on_corpus(simplex_corpus):
    checked = 0
    for inst in simplex_corpus:
        sp = khovanskii_poly_simplex(inst.points)
        for c in sp.cosets:
            verdict = refinement_is_sharp(sp, inst.points, c)
            if verdict is not None:
                assert verdict, (inst.name, c.key)
                checked += 1
    assert checked > 0


def test_random_one_dim_pipelines():
    rng = random.Random(7)
    for _ in range(25):
        pts = sorted(set(rng.sample(range(1, 10), rng.randint(1, 3))) | {0})
        A = line(*pts)
        fit = fit_polynomial(growth_table(A, 14), 1)
        sp = khovanskii_poly_simplex(A)
        assert sp.total == fit.polynomial
        assert max(1, sp.refined_onset) == fit.onset
