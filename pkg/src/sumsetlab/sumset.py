"""Iterated sumsets NA, representation lengths, the monoid P(A) and exceptional sets."""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, isqrt

from .errors import BudgetExceeded, InconclusiveError, default_budget
from .lattice import hermite_normal_form
from .points import PointSet, dot, point_set, vadd, vsub
from .polytope import (cone_of, convex_hull, normalized_volume, polytope_lattice_points,
                       saturated_lattice)


class _Packer:
    """Encodes points of kA (k <= n_max) as single nonnegative ints.

    Coordinates are shifted by k * min_j and written in mixed radix
    n_max * span_j + 1, so adding two codes adds the points without carries.
    """

    def __init__(self, A, n_max):
        self.dim = A.dim
        self.mins = [min(p[j] for p in A) for j in range(A.dim)]
        spans = [max(p[j] for p in A) - self.mins[j] for j in range(A.dim)]
        self.radix = [n_max * s + 1 for s in spans]
        self.strides = []
        st = 1
        for r in self.radix:
            self.strides.append(st)
            st *= r
        self.n_max = n_max

    def pack(self, p):
        return sum((c - m) * s for c, m, s in zip(p, self.mins, self.strides))

    def unpack(self, code, k):
        return tuple((code // s) % r + k * m
                     for s, r, m in zip(self.strides, self.radix, self.mins))


def _packed_layers(A, n_max, budget):
    packer = _Packer(A, n_max)
    gens = [packer.pack(a) for a in A]
    layer = set(gens)
    yield packer, layer
    for _ in range(2, n_max + 1):
        layer = {p + g for p in layer for g in gens}
        if len(layer) > budget:
            raise BudgetExceeded("sumset size", budget)
        yield packer, layer


def sumset_layers(A, n_max, budget=None):
    """[1A, 2A, ..., n_max A] as PointSets."""
    A = point_set(A)
    if len(A) == 0:
        raise ValueError("A must be nonempty")
    if n_max < 1:
        return []
    budget = default_budget() if budget is None else budget
    out = []
    for k, (packer, layer) in enumerate(_packed_layers(A, n_max, budget), start=1):
        out.append(PointSet((packer.unpack(c, k) for c in layer), A.dim))
    return out


def sumset(A, N, budget=None):
    """The N-fold sumset NA = {a_1 + ... + a_N : a_i in A}."""
    if N < 1:
        raise ValueError("N must be at least 1")
    return sumset_layers(A, N, budget)[-1]


@dataclass(frozen=True)
class GrowthTable:
    sizes: tuple  # sizes[N-1] = |NA|
    instance: PointSet

    @property
    def n_max(self):
        return len(self.sizes)

    def size(self, N):
        return self.sizes[N - 1]


def growth_table(A, n_max, budget=None):
    """|NA| for N = 1..n_max; on budget overflow the error carries the completed prefix."""
    A = point_set(A)
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    budget = default_budget() if budget is None else budget
    sizes = []
    try:
        for _, layer in _packed_layers(A, n_max, budget):
            sizes.append(len(layer))
    except BudgetExceeded as exc:
        raise BudgetExceeded("sumset size", budget,
                             partial=GrowthTable(tuple(sizes), A)) from exc
    return GrowthTable(tuple(sizes), A)


def width(A):
    """max ||a - a'||_inf over pairs of points of A."""
    A = point_set(A)
    return max(max(p[j] for p in A) - min(p[j] for p in A) for j in range(A.dim))


def generated_lattice(A):
    """Λ_A, the integer span of A."""
    A = point_set(A)
    return hermite_normal_form(A.points, dim=A.dim)


def difference_lattice(A):
    """Λ_{A-A}, the integer span of the differences."""
    A = point_set(A)
    a0 = A[0]
    return hermite_normal_form([vsub(a, a0) for a in A], dim=A.dim)


def growth_leading_term(A):
    """(degree, leading coefficient) that |NA| must have as N grows.

    The degree is the affine dimension r of A; the coefficient is the
    normalized volume divided by r! and by the index of Λ_{A-A} in its
    saturation.
    """
    A = point_set(A)
    r = convex_hull(A).affine_dim
    if r == 0:
        return 0, Fraction(1)
    ratio = Fraction(difference_lattice(A).gram_det(), saturated_lattice(A).gram_det())
    index = isqrt(ratio.numerator)
    if ratio.denominator != 1 or index * index != ratio.numerator:
        raise ArithmeticError("lattice index is not an integer")
    return r, Fraction(normalized_volume(A), factorial(r) * index)


def _require_origin(A):
    origin = (0,) * A.dim
    if origin not in A:
        raise ValueError("0 must belong to A; translate A by one of its points first")
    return origin


def min_rep_length(A, v, cap, budget=None):
    """N_A(v): least N with v in NA (0 for v = 0), or None if above cap."""
    A = point_set(A)
    origin = _require_origin(A)
    v = tuple(v) if not isinstance(v, int) else (v,)
    if v == origin:
        return 0
    if cap < 1:
        return None
    budget = default_budget() if budget is None else budget
    for k, (pk, layer) in enumerate(_packed_layers(A, cap, budget), start=1):
        shifted = tuple(c - k * m for c, m in zip(v, pk.mins))
        if all(0 <= c < r for c, r in zip(shifted, pk.radix)):
            if sum(c * s for c, s in zip(shifted, pk.strides)) in layer:
                return k
    return None


class MonoidSlicer:
    """Level sets of P(A) under a strictly positive integer functional.

    Requires 0 to be a vertex of H(A). The functional f is the sum of the
    facet normals of C_A, so f(a) >= 1 on A \\ {0} and every representation of
    x uses at most f(x) nonzero summands.
    """

    def __init__(self, A, budget=None):
        A = point_set(A)
        origin = _require_origin(A)
        if origin not in convex_hull(A).vertices:
            raise ValueError("0 must be an extremal point of H(A); translate by a vertex first")
        self.A = A
        cone = cone_of(A)
        self.cone = cone
        self.functional = tuple(sum(n[j] for n in cone.facets) for j in range(A.dim))
        self.gens = [(a, dot(self.functional, a)) for a in A if a != origin]
        for a, fa in self.gens:
            assert fa >= 1, "cone functional must be positive on A minus 0"
        self.levels = [{origin}]
        self.total = 1
        self.budget = default_budget() if budget is None else budget

    def value(self, x):
        return dot(self.functional, x)

    def extend_to(self, depth):
        while len(self.levels) <= depth:
            k = len(self.levels)
            new = set()
            for a, fa in self.gens:
                if fa <= k:
                    new.update(vadd(p, a) for p in self.levels[k - fa])
            self.total += len(new)
            if self.total > self.budget:
                raise BudgetExceeded("monoid slice size", self.budget)
            self.levels.append(new)

    def contains(self, x):
        if not self.cone.contains(x):
            return False
        k = self.value(x)
        if k < 0:
            return False
        self.extend_to(k)
        return x in self.levels[k]


@lru_cache(maxsize=256)
def _slicer(A):
    return MonoidSlicer(A)


def monoid_slicer(A):
    return _slicer(point_set(A))


def psa_membership(A, x):
    """Is x in P(A) = union of all NA? Needs 0 to be a vertex of H(A)."""
    A = point_set(A)
    x = (x,) if isinstance(x, int) else tuple(x)
    return monoid_slicer(A).contains(x)


def psa_membership_capped(A, x, cap):
    """Membership for arbitrary 0 in A by search up to length cap.

    Returns True when a representation is found; raises InconclusiveError
    otherwise, since no termination certificate exists in this case.
    """
    if min_rep_length(A, x, cap) is not None:
        return True
    raise InconclusiveError(f"no representation of {tuple(x)} with at most {cap} summands")


def exceptional_set(A, region, budget=None):
    """E(A) ∩ region, where E(A) = (C_A ∩ Λ_A) \\ P(A)."""
    A = point_set(A)
    slicer = monoid_slicer(A)
    L = generated_lattice(A)
    candidates = polytope_lattice_points(region, L, (0,) * A.dim, budget=budget)
    return PointSet((x for x in candidates
                     if slicer.cone.contains(x) and not slicer.contains(x)), A.dim)


def exceptional_margin(A, points):
    """Largest sup-norm distance from a point of E(A) to the boundary of C_A.

    Distance to the facet {<n, x> = 0} in the sup norm is <n, x> / ||n||_1.
    Only defined for full-dimensional cones; returns None otherwise.
    """
    A = point_set(A)
    cone = cone_of(A)
    if cone.equalities or not cone.facets:
        return None
    best = None
    for e in points:
        dist = min(Fraction(dot(n, e), sum(abs(c) for c in n)) for n in cone.facets)
        if best is None or dist > best:
            best = dist
    return best
