"""The structure identity for NA and its thresholds.

For N large, NA is the set of points of N H(A) in the coset a0 N + Λ_{A-A}
with the reflected exceptional sets aN - E(a - A) removed, one per vertex a
of H(A). The inclusion of NA in that set holds for every N.
"""

from dataclasses import dataclass

from .khovanskii import Threshold, instance_parameters, simplex_bound, _one_dim_normalised
from .minimal import K_of, b_minimal_elements
from .points import PointSet, point_set, vscale, vsub
from .polytope import cone_of, convex_hull, is_simplex, polytope_lattice_points
from .sumset import difference_lattice, exceptional_set, monoid_slicer, sumset_layers


def hull_lattice_points(A, N, a0=None, budget=None):
    """N H(A) ∩ (a0 N + Λ_{A-A})."""
    A = point_set(A)
    P = convex_hull(A)
    a0 = P.vertices[0] if a0 is None else tuple(a0)
    return polytope_lattice_points(P.scaled(N), difference_lattice(A), vscale(N, a0), budget=budget)


def reflected_exceptions(A, a, N, budget=None):
    """aN - (E(a - A) ∩ N H(a - A))."""
    A = point_set(A)
    Aa = A.reflect(a)
    region = convex_hull(Aa).scaled(N)
    E = exceptional_set(Aa, region, budget)
    aN = vscale(N, a)
    return PointSet((vsub(aN, e) for e in E), A.dim)


def rhs_structure_set(A, N, budget=None):
    """The right-hand side of the structure identity at dilation N."""
    A = point_set(A)
    base = hull_lattice_points(A, N, budget=budget)
    removed = set()
    for a in convex_hull(A).vertices:
        removed.update(reflected_exceptions(A, a, N, budget))
    return PointSet((x for x in base if x not in removed), A.dim)


@dataclass(frozen=True)
class Verdict:
    N: int
    size: int
    rhs_size: int
    equal: bool
    witness: tuple = None
    inclusion: bool = True  # NA ⊆ RHS


def _compare(N, NA, rhs):
    missing = [x for x in rhs if x not in NA]
    extra = [x for x in NA if x not in rhs]
    witness = None
    if extra:
        witness = extra[0]
    elif missing:
        witness = missing[0]
    return Verdict(N, len(NA), len(rhs), not extra and not missing, witness, not extra)


def verify_structure(A, N, budget=None, layer=None):
    """(equal, witness) comparing NA with the right-hand side."""
    A = point_set(A)
    NA = layer if layer is not None else sumset_layers(A, N, budget)[-1]
    v = _compare(N, NA, rhs_structure_set(A, N, budget))
    return v.equal, v.witness


def structure_verdicts(A, n_max, budget=None):
    A = point_set(A)
    layers = sumset_layers(A, n_max, budget)
    return [_compare(N, layers[N - 1], rhs_structure_set(A, N, budget))
            for N in range(1, n_max + 1)]


@dataclass(frozen=True)
class StructureOnset:
    onset: int      # None when the identity fails at the horizon
    horizon: int
    verdicts: tuple


def empirical_structure_onset(A, n_max, budget=None, verdicts=None):
    """Least N0 with the identity holding for all N0 <= N <= n_max."""
    verdicts = verdicts if verdicts is not None else structure_verdicts(A, n_max, budget)
    if not verdicts or not verdicts[-1].equal:
        return StructureOnset(None, n_max, tuple(verdicts))
    onset = n_max
    while onset > 1 and verdicts[onset - 2].equal:
        onset -= 1
    return StructureOnset(onset, n_max, tuple(verdicts))


def simplex_K(A, cap=256):
    """K(A - v0, B) for the simplex hull, or None when not certified."""
    A = point_set(A)
    verts = is_simplex(A)
    if verts is None:
        return None
    v0 = verts[0]
    A0 = A.translate(tuple(-c for c in v0))
    B = [vsub(v, v0) for v in verts[1:]]
    fam = b_minimal_elements(A0, B, cap)
    if not fam.complete:
        return None
    return K_of(A0, B, family=fam)


def structure_thresholds(A, K=None):
    """Every known bound on N_Str(A) as exact integers with applicability flags."""
    A = point_set(A)
    p = instance_parameters(A)
    d, ell, w, nvol = p["d"], p["ell"], p["w"], p["nvol"]
    simplex = p["simplex"]
    if simplex and K is None:
        K = simplex_K(A)
    out = [Threshold("general", (d * ell * w) ** (13 * d ** 6), True, "bound", "(d l w)^(13 d^6)")]
    out.append(Threshold("simplex", simplex_bound(d, nvol, ell) if simplex else 0, simplex,
                         "bound", "(d+1)! vol - (d+1)(l-d) + 1"))
    small = simplex and ell in (d + 1, d + 2)
    out.append(Threshold("simplex_small", 1, small, "bound", "|A| = d+1 or d+2"))
    out.append(Threshold("simplex_K", (d + 1) * (K - 1) + 1 if simplex and K is not None else 0,
                         simplex and K is not None, "bound", "(d+1)(K(A,B) - 1) + 1"))
    out.append(Threshold("simplex_sharp", (d + 1) * nvol - 2 * d - 2 if simplex else 0, simplex,
                         "bound", "(d+1)! vol - 2d - 2"))
    out.append(Threshold("one_dim_gw", w + 2 - ell if d == 1 else 0, d == 1 and ell >= 2,
                         "bound", "w + 2 - l"))
    one_dim = d == 1 and ell >= 3 and _one_dim_normalised(A)[1] == 1
    out.append(Threshold("one_dim", w - 1 if d == 1 else 0, one_dim, "bound", "w - 1"))
    out.append(Threshold("triple_exact", 1, d == 1 and ell == 3 and _one_dim_normalised(A)[1] == 1,
                         "exact", "N_Str = 1 for |A| = 3"))
    # the last two are constants from the proof, not onset bounds
    out.append(Threshold("interior_margin", 4 * d ** d * ell ** (3 * d) * w ** (3 * d), True,
                         "constant", "K_A = 4 d^d l^(3d) w^(3d)"))
    out.append(Threshold("small_elements_coefficient",
                         2 * d ** (11 * d ** 3) * ell ** d * w ** (5 * d ** 3), True, "constant",
                         "2 d^(11 d^3) l^d w^(5 d^3)"))
    return out


def a_plus(A, B, box):
    """A+ within a box: x in P(A) ∩ C_B with x - b outside P(A) ∩ C_B for every b in B."""
    A = point_set(A)
    origin = (0,) * A.dim
    cone_B = cone_of(list(B) + [origin])
    slicer = monoid_slicer(A)

    def inside(x):
        return cone_B.contains(x) and slicer.contains(x)

    return PointSet((x for x in box if inside(x) and
                     not any(inside(vsub(x, b)) for b in B)), A.dim)


def verdict_consistency(threshold, verdicts):
    """Compare a structure threshold with per-N verdicts (see growth_consistency)."""
    if not threshold.applicable or threshold.kind == "constant":
        return "not_applicable"
    v = threshold.value
    tail = [x for x in verdicts if x.N >= max(1, v)]
    if any(not x.equal for x in tail):
        return "violated"
    if threshold.kind == "exact" and v > 1 and verdicts and v - 1 <= verdicts[-1].N:
        if verdicts[v - 2].equal:
            return "violated"
    return "holds" if tail else "unchecked"
