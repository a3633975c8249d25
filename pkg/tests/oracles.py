"""Brute-force reference implementations. Deliberately naive and independent of sumsetlab."""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product

import sympy


def naive_sumset(A, N):
    return {tuple(map(sum, zip(*combo))) for combo in combinations_with_replacement(A, N)}


def naive_sizes(A, n_max):
    return [len(naive_sumset(A, N)) for N in range(1, n_max + 1)]


def lattice_closure(gens, radius, box):
    """Points of the integer span of gens reachable with coefficients in [-radius, radius], inside box."""
    dim = len(gens[0])
    out = set()
    for coeffs in product(range(-radius, radius + 1), repeat=len(gens)):
        v = tuple(sum(c * g[j] for c, g in zip(coeffs, gens)) for j in range(dim))
        if all(abs(x) <= box for x in v):
            out.add(v)
    return out


def in_convex_hull(points, x):
    """Exact membership by Caratheodory: x lies in the hull of some affinely independent subset."""
    points = [tuple(p) for p in points]
    dim = len(x)
    for k in range(1, min(len(points), dim + 1) + 1):
        for sub in combinations(points, k):
            # solve sum t_i p_i = x, sum t_i = 1 with sympy
            M = sympy.Matrix([[p[j] for p in sub] for j in range(dim)] + [[1] * k])
            rhs = sympy.Matrix(list(x) + [1])
            try:
                sol, params = M.gauss_jordan_solve(rhs)
            except ValueError:
                continue
            if params.shape[0]:
                continue
            if all(t >= 0 for t in sol):
                return True
    return False


def hull_vertices(points):
    points = [tuple(p) for p in points]
    return sorted(p for p in points if not in_convex_hull([q for q in points if q != p], p))


def polygon_double_area(points):
    """2 * area of the convex hull of planar points (sympy)."""
    hull = sympy.convex_hull(*[sympy.Point(*p) for p in points])
    if isinstance(hull, sympy.Polygon):
        return abs(2 * hull.area)
    return 0


def invariant_factors(rows):
    """Nonunit invariant factors of Z^n / rowspan(rows) for a full-rank square matrix (sympy)."""
    from sympy.matrices.normalforms import smith_normal_form
    D = smith_normal_form(sympy.Matrix(rows), domain=sympy.ZZ)
    diag = sorted(abs(int(D[i, i])) for i in range(min(D.shape)))
    return [d for d in diag if d != 1]


def brute_kernel_vectors(M, box):
    n = len(M[0])
    for v in product(range(-box, box + 1), repeat=n):
        if any(v) and all(sum(a * b for a, b in zip(row, v)) == 0 for row in M):
            yield v


def cyclic_product_elements(factors):
    return list(product(*(range(d) for d in factors)))


def _add(g, h, factors):
    return tuple((a + b) % d for a, b, d in zip(g, h, factors))


def _subsums(seq, factors):
    zero = tuple(0 for _ in factors)
    out = []
    for k in range(1, len(seq) + 1):
        for sub in combinations(seq, k):
            s = zero
            for g in sub:
                s = _add(s, g, factors)
            out.append((k, s))
    return out


def brute_davenport(factors):
    """Least D such that every sequence of length D has a nonempty zero-sum subsequence."""
    zero = tuple(0 for _ in factors)
    elems = [g for g in cyclic_product_elements(factors) if g != zero]
    longest = 0
    L = 1
    while True:
        found = any(all(s != zero for _, s in _subsums(seq, factors))
                    for seq in combinations_with_replacement(elems, L))
        if not found:
            return longest + 1
        longest = L
        L += 1


def brute_k(factors, H):
    zero = tuple(0 for _ in factors)
    H = [tuple(h) for h in H]
    hs = set(H)
    best = 0
    L = 1
    while True:
        ok = False
        for seq in combinations_with_replacement(H, L):
            good = True
            for k, s in _subsums(seq, factors):
                if s == zero or (k > 1 and s in hs):
                    good = False
                    break
            if good:
                ok = True
                break
        if not ok:
            return best
        best = L
        L += 1


def naive_useless(A, x):
    """x useless: some y <_lex x with equal l1 norm and equal weighted sum (full enumeration)."""
    n = sum(x)
    dim = len(A[0])
    target = tuple(sum(c * a[j] for c, a in zip(x, A)) for j in range(dim))
    for y in product(range(n + 1), repeat=len(A)):
        if sum(y) != n or y >= x:
            continue
        if tuple(sum(c * a[j] for c, a in zip(y, A)) for j in range(dim)) == target:
            return True
    return False


def naive_minimal_useless(A, norm_cap):
    useless = [x for n in range(norm_cap + 1) for x in product(range(n + 1), repeat=len(A))
               if sum(x) == n and naive_useless(A, x)]
    return sorted(x for x in useless
                  if not any(y != x and all(p <= q for p, q in zip(y, x)) for y in useless))


def naive_b_minimal(A, B, n_max):
    """{(u, N_A(u))} for B-minimal u with N_A(u) <= n_max, from naive sumsets (0 in A)."""
    A = [tuple(a) for a in A]
    zero = tuple(0 for _ in A[0])
    forbidden = [tuple(b) for b in B] + [zero]
    layers = [{zero}] + [naive_sumset(A, N) for N in range(1, n_max + 1)]
    out = {zero: 0}
    for N in range(1, n_max + 1):
        for u in layers[N] - layers[N - 1]:
            if not any(tuple(p - q for p, q in zip(u, b)) in layers[N - 1] for b in forbidden):
                out[u] = N
    return out


def brute_minimal_solutions(M, b, n1, box):
    n = len(M[0])
    xs = set()
    for v in product(range(1, box + 1), repeat=n):
        if all(sum(a * c for a, c in zip(row, v)) == t for row, t in zip(M, b)):
            xs.add(v[:n1])
    return sorted(x for x in xs if not any(y != x and all(p <= q for p, q in zip(y, x)) for y in xs))


def fraction_grid(lo, hi, step):
    k = int((hi - lo) / step)
    return [lo + step * i for i in range(k + 1)]


def as_fraction_point(p):
    return tuple(Fraction(c) for c in p)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def in_planar_hull(points, x):
    """Planar hull membership via triangles, segments and points (Caratheodory in 2-d)."""
    points = [tuple(p) for p in points]
    if x in points:
        return True
    for a, b in combinations(points, 2):
        if _cross(a, b, x) == 0 and min(a[0], b[0]) <= x[0] <= max(a[0], b[0]) \
                and min(a[1], b[1]) <= x[1] <= max(a[1], b[1]):
            return True
    for a, b, c in combinations(points, 3):
        s = [_cross(a, b, x), _cross(b, c, x), _cross(c, a, x)]
        if _cross(a, b, c) != 0 and (all(v >= 0 for v in s) or all(v <= 0 for v in s)):
            return True
    return False


def bounded_minimal_instance(rng, xbox=4, limit=10 ** 4):
    """Random (M, b, n1, ybox) whose positive solutions all lie in a brute-forceable box.

    The first row of the y-block is strictly positive, so y_j <= b_0 - (M1 x)_0.
    Returns None when the box has more than ``limit`` points.
    """
    m = rng.randint(1, 2)
    n = rng.randint(2, 4)
    n1 = rng.randint(1, n - 1)
    M = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)]
    for j in range(n1, n):
        M[0][j] = rng.randint(1, 5)
    w = [rng.randint(1, 4) for _ in range(n)]
    b = [sum(a * c for a, c in zip(row, w)) for row in M]
    ybox = b[0] + sum(max(0, -M[0][i]) for i in range(n1)) * xbox
    if ybox < 1 or xbox ** n1 * ybox ** (n - n1) > limit:
        return None
    return M, b, n1, ybox
