"""Integer lattices in Hermite normal form and finite quotient groups.

The canonical basis is lower-triangular in the following sense: row k is zero
after its pivot column p_k, pivots strictly increase, pivot entries are
positive, and every entry of a later row in an earlier pivot column is reduced
into [0, pivot). Two equal lattices therefore have identical bases.
"""

from dataclasses import dataclass, field
from itertools import product
from math import prod

from .linalg import det, transpose
from .points import as_point, dot


@dataclass(frozen=True)
class IntegerLattice:
    ambient_dim: int
    basis: tuple
    pivots: tuple = field(compare=False, default=())

    @property
    def rank(self):
        return len(self.basis)

    def contains(self, x):
        return lattice_contains(self, x)

    def coordinates(self, x):
        return lattice_coordinates(self, x)

    def gram_det(self):
        """det(B B^T); the squared covolume of the lattice in its span."""
        B = [list(b) for b in self.basis]
        return det([[dot(u, v) for v in B] for u in B])


def hermite_normal_form(generators, dim=None):
    """Canonical basis of the integer span of ``generators``."""
    gens = [as_point(g) for g in generators]
    if dim is None:
        if not gens:
            raise ValueError("empty generator list needs an explicit ambient dimension")
        dim = len(gens[0])
    for g in gens:
        if len(g) != dim:
            raise ValueError(f"generator {g} does not have dimension {dim}")
    rows = [list(g) for g in gens if any(g)]
    found = []  # (pivot column, row), collected from the last column down
    for col in range(dim - 1, -1, -1):
        while True:
            nz = [r for r in rows if r[col] != 0]
            if len(nz) <= 1:
                break
            piv = min(nz, key=lambda r: abs(r[col]))
            for r in nz:
                if r is not piv:
                    q = r[col] // piv[col]
                    for j in range(col + 1):
                        r[j] -= q * piv[j]
            rows = [r for r in rows if any(r)]
        nz = [r for r in rows if r[col] != 0]
        if nz:
            piv = nz[0]
            if piv[col] < 0:
                for j in range(col + 1):
                    piv[j] = -piv[j]
            rows = [r for r in rows if r is not piv]
            found.append((col, piv))
    found.reverse()
    basis = [row for _, row in found]
    pivots = [c for c, _ in found]
    # reduce entries of later rows in earlier pivot columns
    for j in range(len(basis)):
        for i in range(j - 1, -1, -1):
            p = pivots[i]
            q = basis[j][p] // basis[i][p]
            if q:
                basis[j] = [a - q * b for a, b in zip(basis[j], basis[i])]
    return IntegerLattice(dim, tuple(tuple(b) for b in basis), tuple(pivots))


def lattice_contains(L, x):
    return lattice_coordinates(L, x) is not None


def lattice_coordinates(L, x):
    """Integer coefficients c with x = sum c_k basis_k, or None."""
    x = list(as_point(x))
    if len(x) != L.ambient_dim:
        raise ValueError("dimension mismatch")
    coeffs = [0] * L.rank
    for k in range(L.rank - 1, -1, -1):
        p = L.pivots[k]
        row = L.basis[k]
        q, rem = divmod(x[p], row[p])
        if rem:
            return None
        coeffs[k] = q
        if q:
            for j in range(p + 1):
                x[j] -= q * row[j]
    if any(x):
        return None
    return tuple(coeffs)


def smith_normal_form(matrix):
    """Smith form of an integer matrix with transforms.

    Returns (diagonal, U, V) with U . matrix . V = diag(diagonal) padded by
    zeros, U and V unimodular, and diagonal[i] | diagonal[i+1].
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    A = [list(r) for r in matrix]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, q):  # row dst += q * row src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, q):  # col dst += q * col src
        for r in A:
            r[dst] += q * r[src]
        for r in V:
            r[dst] += q * r[src]

    t = 0
    while t < min(m, n):
        entries = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(t, i, -(A[i][t] // A[t][t]))
                    if A[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(t, j, -(A[t][j] // A[t][t]))
                    if A[t][j]:
                        clean = False
            if not clean:
                entries = [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]]
                entries += [(abs(A[t][j]), t, j) for j in range(t, n) if A[t][j]]
                _, i, j = min(entries)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % A[t][t]), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    diagonal = [A[i][i] for i in range(min(m, n))]
    return diagonal, U, V


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """The quotient L_sup / L_sub as Z/d_1 x ... x Z/d_k with d_i | d_{i+1}.

    ``project`` sends a point of L_sup to its tuple of residues; the kernel of
    the projection is exactly L_sub.
    """

    invariant_factors: tuple
    sup: IntegerLattice = field(default=None, repr=False)
    transform: tuple = field(default=(), repr=False)  # columns of V kept
    offset: int = field(default=0, repr=False)

    @property
    def order(self):
        return prod(self.invariant_factors)

    @property
    def exponent(self):
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def project(self, v):
        coords = lattice_coordinates(self.sup, v)
        if coords is None:
            raise ValueError(f"{v} is not in the ambient lattice of the quotient")
        out = []
        for col, d in zip(self.transform, self.invariant_factors):
            out.append(sum(c * x for c, x in zip(coords, col)) % d)
        return tuple(out)

    def zero(self):
        return tuple(0 for _ in self.invariant_factors)

    def add(self, g, h):
        return tuple((a + b) % d for a, b, d in zip(g, h, self.invariant_factors))

    def neg(self, g):
        return tuple((-a) % d for a, d in zip(g, self.invariant_factors))

    def elements(self):
        return [tuple(e) for e in product(*(range(d) for d in self.invariant_factors))]

    def index(self, g):
        """Mixed-radix position of g among ``elements()``."""
        k = 0
        for a, d in zip(g, self.invariant_factors):
            k = k * d + a
        return k


def abstract_group(invariant_factors):
    """Z/d_1 x ... x Z/d_k built directly (sup = Z^k, sub = diag(d))."""
    factors = [d for d in invariant_factors if d != 1]
    for d in factors:
        if d < 1:
            raise ValueError("invariant factors must be positive")
    k = len(factors)
    sup = hermite_normal_form([tuple(int(i == j) for j in range(k)) for i in range(k)], dim=k)
    sub = hermite_normal_form([tuple(d * int(i == j) for j in range(k)) for i, d in enumerate(factors)], dim=k)
    return quotient_group(sup, sub)


def quotient_group(L_sup, L_sub):
    """Finite quotient L_sup / L_sub via the Smith form of the change of basis."""
    if L_sup.ambient_dim != L_sub.ambient_dim:
        raise ValueError("lattices live in different dimensions")
    if L_sup.rank != L_sub.rank:
        raise ValueError(
            f"quotient is infinite: rank {L_sup.rank} over rank {L_sub.rank}")
    C = []
    for b in L_sub.basis:
        c = lattice_coordinates(L_sup, b)
        if c is None:
            raise ValueError(f"sublattice vector {b} is not in the superlattice")
        C.append(list(c))
    r = L_sup.rank
    if r == 0:
        return FiniteAbelianGroup((), L_sup, ())
    diagonal, _, V = smith_normal_form(C)
    Vt = transpose(V)
    factors, cols = [], []
    for i, d in enumerate(diagonal):
        if d != 1:
            factors.append(d)
            cols.append(tuple(Vt[i]))
    return FiniteAbelianGroup(tuple(factors), L_sup, tuple(cols))
