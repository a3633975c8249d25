"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -s`` to see the lines inline;
they are also repeated in the terminal summary.
"""

import random
from fractions import Fraction
from itertools import product
from math import gcd, log10

import pytest

from oracles import bounded_minimal_instance
from sumsetlab.khovanskii import (enumerated_coset_counts, fit_polynomial, general_pipeline,
                                  khovanskii_poly_simplex, khovanskii_thresholds)
from sumsetlab.lattice import abstract_group, quotient_group
from sumsetlab.linalg import matvec, rank
from sumsetlab.minimal import (b_minimal_elements, certified_useless_family, davenport_constant,
                               k_constant)
from sumsetlab.points import PointSet, supnorm, vsub
from sumsetlab.polynomial import RationalPolynomial, minmax_alternating_sum
from sumsetlab.polytope import (caratheodory_cover, convex_hull, facet_bound_holds,
                                in_simplex_hull, is_simplex, normalized_volume)
from sumsetlab.solve import (bounded_kernel_basis, brute_force_minimal_solutions,
                             corollary_bound, minimal_positive_solutions, positive_solution,
                             kernel_vector_bound, small_kernel_vector)
from sumsetlab.structure import (empirical_structure_onset, simplex_K, structure_thresholds,
                                 structure_verdicts, verify_structure)
from sumsetlab.sumset import generated_lattice, growth_table, sumset_layers, width

SEED = 20240611


def line(*xs):
    return PointSet([(x,) for x in xs])


def simplex_frame(A):
    verts = is_simplex(A)
    v0 = verts[0]
    return A.translate(tuple(-c for c in v0)), [vsub(v, v0) for v in verts[1:]]


def full_dim_simplex(A):
    return is_simplex(A) is not None and convex_hull(A).affine_dim == A.dim


def random_matrix(rng, m, n):
    M = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)]
    if not any(any(r) for r in M):
        M[0][rng.randrange(n)] = rng.choice([-5, 5])
    return M


def test_triple_sets(criterion):
    with criterion(1, "triples {0,a,b}: N_Kh = max(1, b-2), N_Str = 1") as c:
        pairs = [(a, b) for b in range(2, 13) for a in range(1, b) if gcd(a, b) == 1]
        for a, b in pairs:
            A = line(0, a, b)
            window = 2 * b
            assert fit_polynomial(growth_table(A, window), 1).onset == max(1, b - 2), (a, b)
            assert empirical_structure_onset(A, window).onset == 1, (a, b)
        c.note(f"{len(pairs)} pairs")


def test_kite_exact_onset(criterion):
    with criterion(2, "sets {0, (1,1), m1 e1, m2 e2}: N_Kh = 2 vol - 3") as c:
        for m1, m2 in [(2, 3), (3, 5), (2, 5)]:
            A = PointSet([(0, 0), (1, 1), (m1, 0), (0, m2)])
            nvol = normalized_volume(A)
            assert nvol == m1 * m2
            onset = fit_polynomial(growth_table(A, nvol + 4), 2).onset
            assert onset == nvol - 3, (m1, m2, onset)
            c.note(f"({m1},{m2}) -> {onset}")


def test_simplex_pipeline(criterion, corpus):
    with criterion(3, "simplex pipeline equals interpolation; onset bound and coset counts") as c:
        checked = 0
        for inst in corpus:
            A = inst.points
            if not full_dim_simplex(A) or A.dim > 3 or len(A) > 6 or width(A) > 6:
                continue
            sp = khovanskii_poly_simplex(A)
            r = sp.r
            horizon = max(r + 3, sp.onset + r + 2)
            layers = sumset_layers(A, horizon)
            fit = fit_polynomial([len(L) for L in layers], r)
            assert sp.total == fit.polynomial, inst.name
            # onsets live on N >= 1, so a formula value below 1 means "from N = 1"
            assert max(1, sp.onset) >= fit.onset, inst.name
            assert max(1, sp.refined_onset) >= fit.onset, inst.name
            for N in (1, max(2, horizon // 2), horizon):
                tally = enumerated_coset_counts(sp, A, N, layers)
                expect = {co.key: co.counts.evaluate(N) for co in sp.cosets}
                assert {k: v for k, v in expect.items() if v} == tally, (inst.name, N)
            checked += 1
        assert checked >= 10
        c.note(f"{checked} simplex instances")


def test_general_pipeline(criterion, corpus):
    with criterion(4, "general pipeline from minimally useless vectors equals interpolation") as c:
        by_name = {inst.name: inst.points for inst in corpus}
        sets = [line(0, 1), line(0, 1, 2), line(0, 2, 3), line(0, 2, 5)]
        sets += [by_name[f"random2d_{i}"] for i in (1, 2, 3)]
        for A in sets:
            assert len(A) <= 4 and width(A) <= 5
            fam = certified_useless_family(A)
            gp = general_pipeline(fam)
            r = convex_hull(A).affine_dim
            fit = fit_polynomial(growth_table(A, max(16, gp.onset + r + 2)), r)
            assert fam.certified and gp.polynomial == fit.polynomial, A
            assert gp.onset == fit.onset, A
        fam = certified_useless_family(line(0, 1, 2))
        assert fam.minimal_useless == ((1, 0, 1),)
        assert general_pipeline(fam).polynomial == RationalPolynomial([1, 2])
        c.note(f"{len(sets)} sets; U_min({{0,1,2}}) = {{(1,0,1)}}, P = 2N+1")


def test_structure_identity(criterion, corpus):
    with criterion(5, "structure identity on simplices; inclusion on every instance") as c:
        small = 0
        for inst in corpus:
            A = inst.points
            verdicts = structure_verdicts(A, 8)
            assert all(v.inclusion for v in verdicts), inst.name
            if full_dim_simplex(A) and len(A) in (A.dim + 1, A.dim + 2):
                assert all(v.equal for v in verdicts), inst.name
                small += 1
        assert small >= 5
        with_K = 0
        for inst in corpus:
            A = inst.points
            if not full_dim_simplex(A):
                continue
            K = simplex_K(A)
            if K is None:
                continue
            start = max(1, (A.dim + 1) * (K - 1) + 1)
            if start > 14:
                continue
            for N in range(start, start + 3):
                assert verify_structure(A, N)[0], (inst.name, N)
            with_K += 1
        assert with_K >= 5
        c.note(f"{small} instances with |A| = d+1 or d+2; {with_K} with certified K")


def _factorizations(n, lo=2):
    if n == 1:
        return [[]]
    out = []
    for d in range(lo, n + 1):
        if n % d == 0:
            for rest in _factorizations(n // d, d):
                if not rest or rest[0] % d == 0:
                    out.append([d] + rest)
    return out


def test_davenport_suite(criterion, simplex_corpus):
    with criterion(6, "Davenport constants and k(G,H)") as c:
        for n in range(1, 31):
            assert davenport_constant(abstract_group([n])) == n, n
        assert davenport_constant(abstract_group([2, 2])) == 3
        rng = random.Random(SEED)
        pairs = exact = 0
        for order in range(2, 61):
            for factors in _factorizations(order):
                G = abstract_group(factors)
                lower = 1 + sum(d - 1 for d in factors)
                # exact search for small groups; D >= lower is enough above that
                known = len(factors) == 1 or order <= 36
                D = davenport_constant(G) if known else lower
                exact += known
                nonzero = [g for g in G.elements() if any(g)]
                for size in (1, 2, 3):
                    H = rng.sample(nonzero, min(size, len(nonzero)))
                    k = k_constant(G, H)
                    assert k <= order - len(H), (factors, H, k)
                    assert k < D, (factors, H, k, D)
                    pairs += 1
        checked = 0
        for inst in simplex_corpus:
            A, B = simplex_frame(inst.points)
            if len(B) != A.dim:
                continue
            fam = b_minimal_elements(A, B, 40)
            if not fam.complete:
                continue
            G = quotient_group(generated_lattice(A), generated_lattice(PointSet(B, A.dim)))
            H = sorted({G.project(a) for a in A} - {G.zero()})
            if H:
                assert fam.max_length() <= k_constant(G, H), inst.name
            else:
                assert fam.max_length() == 0
            checked += 1
        assert checked >= 5
        c.note(f"{pairs} (G,H) pairs, D exact on {exact} groups; K <= k on {checked} simplices")


def test_bounded_solvers(criterion):
    with criterion(7, "bounded solvers on 500 random instances each") as c:
        rng = random.Random(SEED)
        for _ in range(500):
            m = rng.randint(1, 3)
            n = rng.randint(m + 1, 6)
            M = random_matrix(rng, m, n)
            X = small_kernel_vector(M)
            K = max(abs(v) for r in M for v in r)
            assert any(X) and not any(matvec(M, X))
            assert supnorm(X) <= kernel_vector_bound(K, n, m), M
        for _ in range(500):
            m = rng.randint(1, 3)
            n = rng.randint(m, 6)
            M = random_matrix(rng, m, n)
            x = [rng.randint(1, 30) for _ in range(n)]
            b = matvec(M, x)
            y = positive_solution(M, b, x)
            K1 = max(abs(v) for r in M for v in r)
            assert matvec(M, y) == b and min(y) >= 1
            assert supnorm(y) <= corollary_bound(n, m, K1, supnorm(b)), (M, b)
        compared = 0
        while compared < 500:
            inst = bounded_minimal_instance(rng)
            if inst is None:
                continue
            M, b, n1, ybox = inst
            fam = minimal_positive_solutions(M, b, n1, box_cap=4)
            assert fam.solutions == brute_force_minimal_solutions(M, b, n1, 4, ybox), (M, b, n1)
            compared += 1
        for _ in range(500):
            m = rng.randint(1, 3)
            n = rng.randint(m, 6)
            M = random_matrix(rng, m, n)
            kb = bounded_kernel_basis(M)
            K = max(abs(v) for r in M for v in r)
            assert len(kb.vectors) == n - rank(M)
            assert all(not any(matvec(M, v)) for v in kb.vectors)
            # (m!)^(1/2) n^(m/2) K^m, compared after squaring
            m_fact = 1
            for i in range(2, m + 1):
                m_fact *= i
            assert kb.norm_product ** 2 <= m_fact * n ** m * K ** (2 * m), M
            assert kb.within_bound
        c.note("kernel, positive, minimal (vs brute force, box <= 10^4), basis")


def test_min_max_identity(criterion):
    with criterion(8, "min-max inclusion-exclusion identity") as c:
        rng = random.Random(SEED)
        for _ in range(200):
            k = rng.randint(1, 10)
            values = [rng.randint(-1000, 1000) for _ in range(k)]
            assert minmax_alternating_sum(values) == -min(values), values
        c.note("200 sequences")


def test_thresholds_dominate(criterion, corpus):
    with criterion(9, "threshold formulas >= empirical onsets on the corpus") as c:
        evaluated = 0
        largest = 0
        for inst in corpus:
            A = inst.points
            r = convex_hull(A).affine_dim
            fit = fit_polynomial(growth_table(A, 16), r)
            n_str = empirical_structure_onset(A, 8).onset
            assert n_str is not None, inst.name
            for t in khovanskii_thresholds(A):
                if not t.applicable:
                    continue
                evaluated += 1
                largest = max(largest, t.value)
                if t.kind == "exact":
                    assert t.value == fit.onset, (inst.name, t.name)
                else:
                    assert max(1, t.value) >= fit.onset, (inst.name, t.name)
            for t in structure_thresholds(A):
                if not t.applicable or t.kind == "constant":
                    continue
                evaluated += 1
                largest = max(largest, t.value)
                if t.kind == "exact":
                    assert t.value == n_str, (inst.name, t.name)
                else:
                    assert max(1, t.value) >= n_str, (inst.name, t.name)
        c.note(f"{evaluated} threshold evaluations, largest has {int(log10(largest)) + 1} digits")


def test_geometry(criterion, corpus):
    with criterion(10, "facet bound, normalized volume, Caratheodory cover") as c:
        for inst in corpus:
            assert facet_bound_holds(inst.points), inst.name
        assert normalized_volume(PointSet([(0, 0), (1, 1), (2, 0), (0, 3)])) == 6
        grid_points = 0
        for inst in corpus:
            A = inst.points
            if A.dim not in (2, 3):
                continue
            P = convex_hull(A)
            cover = caratheodory_cover(A)
            assert all(len(s) == P.affine_dim + 1 for s in cover)
            lo = [min(p[i] for p in A) for i in range(A.dim)]
            hi = [max(p[i] for p in A) for i in range(A.dim)]
            axes = [[Fraction(lo[i]) + Fraction(k, 3) for k in range(3 * (hi[i] - lo[i]) + 1)]
                    for i in range(A.dim)]
            for x in product(*axes):
                if P.contains(x):
                    grid_points += 1
                    assert any(in_simplex_hull(s, x) for s in cover), (inst.name, x)
        c.note(f"{grid_points} rational grid points covered")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
