"""Khovanskii polynomials |NA| = P_A(N) and their onsets.

Three independent routes:

* ``fit_polynomial``: interpolate an enumerated growth table;
* ``khovanskii_poly_general``: inclusion-exclusion over minimally useless vectors;
* ``khovanskii_poly_simplex``: the per-coset formula for sets whose hull is a simplex.

``khovanskii_thresholds`` evaluates the known onset bounds as exact integers.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, floor, gcd

from .errors import IncompleteFamilyError, SumsetLabError
from .minimal import b_minimal_elements
from .points import PointSet, point_set, vsub
from .polynomial import (BinomialSum, RationalPolynomial, interpolate,
                         join_inclusion_exclusion, useless_binomial_sum)
from .linalg import solve_rational
from .polytope import convex_hull, is_simplex, normalized_volume
from .sumset import GrowthTable, difference_lattice, sumset_layers, width


@dataclass(frozen=True)
class PolynomialFit:
    polynomial: RationalPolynomial
    onset: int
    horizon: int  # the onset is only certified up to this N


def fit_polynomial(table, d):
    """Interpolate the last d+1 sizes; onset is the start of the agreeing suffix."""
    sizes = table.sizes if isinstance(table, GrowthTable) else tuple(table)
    n_max = len(sizes)
    # d + 1 points to interpolate plus one to check
    if n_max < d + 2:
        raise ValueError(f"need at least d + 2 = {d + 2} table entries, got {n_max}")
    pts = [(N, sizes[N - 1]) for N in range(n_max - d, n_max + 1)]
    P = interpolate(pts)
    onset = n_max - d
    while onset > 1 and P(onset - 1) == sizes[onset - 2]:
        onset -= 1
    return PolynomialFit(P, onset, n_max)


def khovanskii_poly_general(family, ell=None, budget=None):
    """P_A from a family of minimally useless vectors (inclusion-exclusion over joins)."""
    if family is None:
        raise ValueError("a useless-vector family is required")
    ell = len(family.ordering) if ell is None else ell
    if ell < 1:
        raise ValueError("A must be nonempty")
    return useless_binomial_sum(family.minimal_useless, ell, budget).polynomial()


@dataclass(frozen=True)
class GeneralPipeline:
    polynomial: RationalPolynomial
    counts: BinomialSum
    onset: int
    certified: bool
    members: tuple


def general_pipeline(family, budget=None):
    """Polynomial, truncated count and exact onset from a useless family."""
    ell = len(family.ordering)
    counts = useless_binomial_sum(family.minimal_useless, ell, budget)
    return GeneralPipeline(counts.polynomial(), counts, counts.agreement_onset(1),
                           family.certified, family.minimal_useless)


@dataclass(frozen=True)
class CosetData:
    key: tuple                 # fractional coordinates of the coset in the basis B
    elements: tuple            # B-minimal elements u_j in this coset
    lengths: tuple             # N_A(u_j)
    coords: tuple              # integer parts u_{j,i}
    deltas: tuple              # N_A(u_j) - sum_i u_{j,i}
    r: int
    counts: BinomialSum = field(repr=False, compare=False, default=None)

    @property
    def n_full(self):
        """N_J for J = all elements."""
        return max(self.deltas) + sum(max(c[i] for c in self.coords) for i in range(self.r))

    @property
    def onset(self):
        return self.n_full - self.r


def _coset_counts(deltas, coords, budget=None):
    vectors = [(dl,) + tuple(c) for dl, c in zip(deltas, coords)]
    ie = join_inclusion_exclusion(vectors, budget)
    terms = {0: 1}
    for v, c in ie.items():
        s = sum(v)
        terms[s] = terms.get(s, 0) - c
    return terms


def onset_refinement(coset):
    """(h, N_full - r - h) where h is the least h >= 0 with W(h) != 0.

    W(h) is the signed count of nonempty J with N_J = N_full - h; it is the
    negated coefficient of the corresponding binomial in the coset count.
    """
    n_full = coset.n_full
    h = 0
    while True:
        if coset.counts.terms.get(n_full - h, 0) != 0:
            return h, n_full - coset.r - h
        h += 1
        if n_full - h < min(coset.counts.terms, default=0):
            raise SumsetLabError("no nonzero W(h); coset data inconsistent")


def W(coset, h):
    return -coset.counts.terms.get(coset.n_full - h, 0)


@dataclass(frozen=True)
class SimplexPipeline:
    cosets: tuple
    total: RationalPolynomial
    counts: BinomialSum
    onset: int                 # max over cosets of N_full - r (may be < 1)
    refined_onset: int         # max over cosets of N_full - r - h
    vertex: tuple              # the vertex translated to 0
    basis: tuple               # the remaining vertices, translated
    r: int
    K: int

    def coset_polynomials(self):
        return [(c.key, c.counts.polynomial()) for c in self.cosets]


def simplex_coordinates(basis, x):
    """Rational coordinates of x in the basis (x must lie in its span)."""
    dim = len(x)
    cols = [[b[j] for b in basis] for j in range(dim)]
    t = solve_rational(cols, list(x))
    if t is None:
        raise ValueError(f"{x} is not in the span of the simplex edges")
    return tuple(t)


def coset_key(basis, x):
    """(fractional parts, integer parts) of the coordinates of x."""
    t = simplex_coordinates(basis, x)
    ints = tuple(floor(c) for c in t)
    return tuple(c - i for c, i in zip(t, ints)), ints


def khovanskii_poly_simplex(A, cap=256, budget=None):
    """Per-coset polynomials, total P_A and onset for a set with simplex hull."""
    A = point_set(A)
    verts = is_simplex(A)
    if verts is None:
        raise SumsetLabError("H(A) is not a simplex")
    v0 = verts[0]
    A0 = A.translate(tuple(-c for c in v0))
    basis = tuple(vsub(v, v0) for v in verts[1:])
    r = len(basis)
    fam = b_minimal_elements(A0, basis, cap, budget)
    if not fam.complete:
        raise IncompleteFamilyError(f"S(A,B) did not close within {cap} layers")
    groups = {}
    for u, n in fam.elements:
        frac, ints = coset_key(basis, u) if r else ((), ())
        groups.setdefault(frac, []).append((u, n, ints))
    cosets = []
    for key in sorted(groups):
        rows = groups[key]
        deltas = tuple(n - sum(ints) for _, n, ints in rows)
        coords = tuple(ints for _, _, ints in rows)
        counts = BinomialSum(_coset_counts(deltas, coords, budget), r)
        cosets.append(CosetData(key, tuple(u for u, _, _ in rows), tuple(n for _, n, _ in rows),
                                coords, deltas, r, counts))
    total_counts = cosets[0].counts
    for c in cosets[1:]:
        total_counts = total_counts + c.counts
    onset = max(c.onset for c in cosets)
    refined = max(onset_refinement(c)[1] for c in cosets)
    return SimplexPipeline(tuple(cosets), total_counts.polynomial(), total_counts, onset,
                           refined, v0, basis, r, fam.max_length())


def enumerated_coset_counts(pipeline, A, N, layers=None):
    """Enumerate NA and tally its points by coset of the simplex basis."""
    A = point_set(A)
    NA = layers[N - 1] if layers is not None else sumset_layers(A, N)[-1]
    shift = tuple(N * c for c in pipeline.vertex)
    tally = {}
    for p in NA:
        key, _ = coset_key(pipeline.basis, vsub(p, shift)) if pipeline.r else ((), ())
        tally[key] = tally.get(key, 0) + 1
    return tally


def refinement_is_sharp(pipeline, A, coset):
    """Check that the coset count differs from P_g just below the refined onset.

    Returns None when that N is below 0 (nothing to check). The difference
    must equal (-1)^r W(h).
    """
    h, refined = onset_refinement(coset)
    N = refined - 1
    if N < 0:
        return None
    if N == 0:
        count = 1 if not any(coset.key) else 0
    else:
        count = enumerated_coset_counts(pipeline, A, N).get(coset.key, 0)
    diff = count - coset.counts.polynomial()(N)
    return diff == (-1) ** pipeline.r * W(coset, h)


@dataclass(frozen=True)
class Threshold:
    name: str
    value: int
    applicable: bool
    kind: str   # "bound", "exact" or "constant" (not an onset statement)
    note: str = ""

    def to_json(self):
        return {"name": self.name, "value": str(self.value), "applicable": self.applicable,
                "kind": self.kind, "source": "formula", "note": self.note}


def _one_dim_normalised(A):
    lo = A[0][0]
    shifted = [p[0] - lo for p in A]
    g = 0
    for x in shifted:
        g = gcd(g, x)
    return shifted, g


def instance_parameters(A):
    A = point_set(A)
    P = convex_hull(A)
    return {
        "d": A.dim,
        "ell": len(A),
        "w": width(A),
        "r": P.affine_dim,
        "nvol": normalized_volume(A),
        "simplex": is_simplex(A) is not None and P.affine_dim == A.dim,
    }


def simplex_bound(d, nvol, ell):
    """(d+1)! vol(H(A)) - (d+1)(|A| - d) + 1 with (d+1)! vol = (d+1) * d! vol."""
    return (d + 1) * nvol - (d + 1) * (ell - d) + 1


def khovanskii_thresholds(A):
    """Every known onset bound for |NA| = P_A(N), with applicability flags."""
    A = point_set(A)
    p = instance_parameters(A)
    d, ell, w, nvol = p["d"], p["ell"], p["w"], p["nvol"]
    out = [Threshold("general", (2 * ell * w) ** ((d + 4) * ell), True, "bound",
                     "(2 l w)^((d+4) l)")]
    out.append(Threshold("simplex", simplex_bound(d, nvol, ell) if p["simplex"] else 0,
                         p["simplex"], "bound", "(d+1)! vol - (d+1)(l-d) + 1"))
    one_dim = d == 1 and ell >= 3 and _one_dim_normalised(A)[1] == 1
    out.append(Threshold("one_dim", w - 1 if d == 1 else 0, one_dim, "bound", "w - 1"))
    triple = False
    triple_value = 0
    if d == 1 and ell == 3:
        shifted, g = _one_dim_normalised(A)
        if g == 1:
            triple = True
            triple_value = max(1, shifted[-1] - 2)
    out.append(Threshold("triple_exact", triple_value, triple, "exact", "max(1, b - 2)"))
    diff_full = difference_lattice(A).rank == d and all(
        difference_lattice(A).basis[i][i] == 1 for i in range(d))
    d_plus_two = ell == d + 2 and diff_full
    out.append(Threshold("d_plus_two_exact", max(1, nvol - d - 1) if d_plus_two else 0,
                         d_plus_two, "exact", "max(1, d! vol - d - 1)"))
    return out


def growth_consistency(threshold, sizes, fit):
    """Compare an onset threshold with an enumerated growth table.

    "violated" needs a counterexample inside the table: for a bound, some
    N >= value where |NA| differs from the fitted polynomial (which is the
    true one once its interpolation window lies past the bound); for an
    exact value, a fitted onset that differs while the table reaches
    value + d + 2.
    """
    if not threshold.applicable or threshold.kind == "constant":
        return "not_applicable"
    horizon = len(sizes)
    d = fit.polynomial.degree
    v = threshold.value
    if threshold.kind == "exact":
        if fit.onset == v:
            return "holds"
        return "violated" if horizon >= v + d + 2 else "unchecked"
    if v >= horizon - max(d, 0):
        return "holds" if fit.onset <= v else "unchecked"
    bad = any(fit.polynomial(N) != sizes[N - 1] for N in range(max(1, v), horizon + 1))
    return "violated" if bad else "holds"


def applicable(thresholds, name):
    for t in thresholds:
        if t.name == name:
            return t if t.applicable else None
    raise KeyError(name)
