"""Exact convex geometry of finite point sets: hulls, cones, volumes, covers.

Facets are found by brute force over r-subsets of the input, where r is the
affine dimension; every facet hyperplane of a lattice polytope is spanned by
r of its points, so nothing is missed. Normals live inside the linear span of
A - A, are primitive, and point into the hull.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import ceil, floor, factorial

from .errors import BudgetExceeded, default_budget
from .lattice import hermite_normal_form, lattice_coordinates
from .linalg import det, independent_rows, integer_kernel, nullspace, rank, solve_rational
from .points import PointSet, dot, point_set, primitive, vscale, vsub


@dataclass(frozen=True)
class PolytopeDescription:
    """{x : <n, x> >= c for (n, c) in facets, <e, x> = c for (e, c) in equalities}."""

    vertices: PointSet
    facets: tuple
    equalities: tuple
    affine_dim: int

    @property
    def dim(self):
        return self.vertices.dim

    def contains(self, x):
        return (all(dot(n, x) >= c for n, c in self.facets)
                and all(dot(e, x) == c for e, c in self.equalities))

    def scaled(self, N):
        """The dilate N * P (N >= 0)."""
        if N < 0:
            raise ValueError("dilation factor must be nonnegative")
        if N == 0:
            origin = (0,) * self.dim
            return PolytopeDescription(
                PointSet([origin], self.dim),
                tuple((n, 0) for n, _ in self.facets),
                tuple((e, 0) for e, _ in self.equalities), 0)
        return PolytopeDescription(
            PointSet((vscale(N, v) for v in self.vertices), self.dim),
            tuple((n, N * c) for n, c in self.facets),
            tuple((e, N * c) for e, c in self.equalities),
            self.affine_dim)

    def tight_facets(self, x):
        return [i for i, (n, c) in enumerate(self.facets) if dot(n, x) == c]


@dataclass(frozen=True)
class ConeDescription:
    """{x : <v, x> >= 0 for v in facets, <e, x> = 0 for e in equalities}."""

    facets: tuple
    equalities: tuple
    spanning_dim: int

    def contains(self, x):
        return (all(dot(n, x) >= 0 for n in self.facets)
                and all(dot(e, x) == 0 for e in self.equalities))


def _span_basis(diffs):
    idx = independent_rows(diffs)
    return [diffs[i] for i in idx]


def _equalities(diffs, dim):
    """Primitive integer normals cutting out span(diffs)."""
    rows = [list(v) for v in diffs if any(v)]
    return [primitive(v) for v in integer_kernel(rows, ncols=dim)] if rows else [
        tuple(int(i == j) for j in range(dim)) for i in range(dim)]


@lru_cache(maxsize=512)
def _hull(A):
    dim = A.dim
    a0 = A[0]
    diffs = [vsub(a, a0) for a in A]
    V = _span_basis(diffs)
    r = len(V)
    eq_normals = _equalities(diffs, dim)
    equalities = tuple((e, dot(e, a0)) for e in eq_normals) if r < dim else ()
    if r == 0:
        return PolytopeDescription(A, (), equalities, 0)

    facets = set()
    for sub in combinations(A.points, r):
        base = sub[0]
        rel = [vsub(p, base) for p in sub[1:]]
        if rel and rank(rel) < r - 1:
            continue
        # normal n = sum c_k V_k with <n, rel_i> = 0
        conds = [[dot(vk, q) for vk in V] for q in rel]
        ker = nullspace(conds, ncols=r) if conds else [
            [Fraction(int(i == j)) for j in range(r)] for i in range(r)]
        if len(ker) != 1:
            continue
        c = ker[0]
        n = primitive(tuple(sum(c[k] * V[k][j] for k in range(r)) for j in range(dim)))
        off = dot(n, base)
        vals = [dot(n, a) - off for a in A]
        if all(v >= 0 for v in vals):
            facets.add((n, off))
        elif all(v <= 0 for v in vals):
            n = tuple(-x for x in n)
            facets.add((n, -off))
    facets = tuple(sorted(facets))
    verts = []
    for a in A:
        tight = [n for n, c in facets if dot(n, a) == c]
        if tight and rank(tight) == r:
            verts.append(a)
    return PolytopeDescription(PointSet(verts, dim), facets, equalities, r)


def convex_hull(A):
    """Vertices, facet inequalities and affine equalities of conv(A)."""
    A = point_set(A)
    if len(A) == 0:
        raise ValueError("convex hull of an empty set")
    return _hull(A)


def extremal_points(A):
    return convex_hull(A).vertices


def cone_of(A):
    """The cone C_A generated by A; requires 0 in A."""
    A = point_set(A)
    origin = (0,) * A.dim
    if origin not in A:
        raise ValueError("0 must belong to A; translate A by one of its points first")
    P = convex_hull(A)
    normals = tuple(n for n, c in P.facets if c == 0)
    return ConeDescription(normals, tuple(e for e, _ in P.equalities), P.affine_dim)


def is_simplex(A):
    """ex(H(A)) when it has exactly affine_dim + 1 points, else None."""
    P = convex_hull(A)
    if len(P.vertices) == P.affine_dim + 1:
        return P.vertices
    return None


def facet_bound_holds(A):
    """n <= 2 r l^(r/2) for the facet count n, checked as n^2 <= 4 r^2 l^r."""
    A = point_set(A)
    P = convex_hull(A)
    r, n = P.affine_dim, len(P.facets)
    if r == 0:
        return n == 0
    return n * n <= 4 * r * r * len(A) ** r


@lru_cache(maxsize=512)
def saturated_lattice(A):
    """span(A - A) intersected with Z^d, in Hermite normal form."""
    a0 = A[0]
    diffs = [list(vsub(a, a0)) for a in A]
    eqs = _equalities(diffs, A.dim) if rank(diffs) < A.dim else []
    if not eqs:
        gens = [tuple(int(i == j) for j in range(A.dim)) for i in range(A.dim)]
    else:
        gens = integer_kernel([list(e) for e in eqs], ncols=A.dim)
    return hermite_normal_form(gens, dim=A.dim)


def _triangulate(pts):
    """Pulling triangulation of conv(pts) into tuples of vertices."""
    P = _hull(pts)
    if P.affine_dim == 0:
        return [(P.vertices[0],)]
    v0 = P.vertices[0]
    out = []
    for n, c in P.facets:
        if dot(n, v0) == c:
            continue
        face = PointSet((v for v in P.vertices if dot(n, v) == c), pts.dim)
        for simplex in _triangulate(face):
            out.append((v0,) + simplex)
    return out


def triangulation(A):
    A = point_set(A)
    return _triangulate(convex_hull(A).vertices)


def _simplex_nvol(simplex, L):
    base = simplex[0]
    rows = [list(lattice_coordinates(L, vsub(p, base))) for p in simplex[1:]]
    return abs(det(rows))


def normalized_volume(A):
    """r! times the volume of conv(A), measured in the lattice span(A-A) ∩ Z^d."""
    A = point_set(A)
    L = saturated_lattice(A)
    return sum(_simplex_nvol(s, L) for s in triangulation(A))


def euclidean_volume(A):
    """Volume of conv(A) relative to the saturated lattice (an exact rational)."""
    A = point_set(A)
    return Fraction(normalized_volume(A), factorial(convex_hull(A).affine_dim))


def caratheodory_cover(A):
    """Simplices on vertices of H(A), each spanning the affine hull, covering H(A)."""
    return [PointSet(s, point_set(A).dim) for s in triangulation(A)]


def in_simplex_hull(simplex, x):
    """Exact barycentric test: is x in conv(simplex)?"""
    simplex = list(simplex)
    base = simplex[0]
    edges = [vsub(p, base) for p in simplex[1:]]
    rel = vsub(x, base)
    if not edges:
        return not any(rel)
    # solve sum t_k edges_k = rel over Q
    cols = [[e[j] for e in edges] for j in range(len(base))]
    t = solve_rational(cols, rel)
    if t is None:
        return False
    return all(ti >= 0 for ti in t) and sum(t) <= 1


def polytope_lattice_points(P, L=None, shift=None, scale=1, budget=None):
    """All points of (shift + L) inside scale * P, by a scanline over lattice coordinates."""
    if isinstance(P, ConeDescription):
        raise ValueError("region is unbounded; pass a bounded polytope")
    if scale != 1:
        P = P.scaled(scale)
    dim = P.dim
    if L is None:
        L = hermite_normal_form([tuple(int(i == j) for j in range(dim)) for i in range(dim)], dim=dim)
    if shift is None:
        shift = (0,) * dim
    budget = default_budget() if budget is None else budget
    r = L.rank
    if r == 0:
        pts = [shift] if P.contains(shift) else []
        return PointSet(pts, dim)
    B = L.basis
    piv = L.pivots
    # x[piv[k]] = shift[piv[k]] + sum_{j >= k} t_j B[j][piv[k]] since B[j] vanishes after piv[j]
    def coords(x):
        t = [Fraction(0)] * r
        for k in range(r - 1, -1, -1):
            s = Fraction(x[piv[k]] - shift[piv[k]]) - sum(t[j] * B[j][piv[k]] for j in range(k + 1, r))
            t[k] = s / B[k][piv[k]]
        return t
    vt = [coords(v) for v in P.vertices]
    lo = [ceil(min(t[k] for t in vt)) for k in range(r)]
    hi = [floor(max(t[k] for t in vt)) for k in range(r)]
    cons = [(tuple(dot(n, b) for b in B), c - dot(n, shift), False) for n, c in P.facets]
    cons += [(tuple(dot(e, b) for b in B), c - dot(e, shift), True) for e, c in P.equalities]
    out = []
    t = [0] * r

    def inner_interval():
        a, b = lo[r - 1], hi[r - 1]
        for coef, rhs, is_eq in cons:
            rest = rhs - sum(coef[k] * t[k] for k in range(r - 1))
            cl = coef[r - 1]
            if cl == 0:
                if (is_eq and rest != 0) or (not is_eq and rest > 0):
                    return 1, 0
                continue
            # cl * t >= rest (and <= when equality)
            if cl > 0:
                a = max(a, -((-rest) // cl))
                if is_eq:
                    b = min(b, rest // cl)
            else:
                b = min(b, rest // cl)
                if is_eq:
                    a = max(a, -((-rest) // cl))
        return a, b

    def rec(k):
        if k == r - 1:
            a, b = inner_interval()
            for v in range(a, b + 1):
                t[k] = v
                out.append(tuple(shift[j] + sum(t[i] * B[i][j] for i in range(r)) for j in range(dim)))
            if len(out) > budget:
                raise BudgetExceeded("lattice points in polytope", budget)
            return
        for v in range(lo[k], hi[k] + 1):
            t[k] = v
            rec(k + 1)

    rec(0)
    return PointSet(out, dim)
