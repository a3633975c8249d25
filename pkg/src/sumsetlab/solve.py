"""Quantitative integer linear algebra: small kernel vectors, bounded positive
solutions, minimal positive solutions and short kernel bases.

Bounds are checked on the outputs; the algorithms themselves are exact
linear algebra, not the pigeonhole arguments that prove the bounds exist.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import ceil, factorial, floor

from .errors import BudgetExceeded, VerificationError, default_budget
from .linalg import det, independent_rows, integer_kernel, integer_solve, matvec, rank, transpose
from .points import primitive, supnorm


def _check_matrix(M):
    M = [list(r) for r in M]
    if not M or not M[0]:
        raise ValueError("matrix must have at least one row and one column")
    n = len(M[0])
    for row in M:
        if len(row) != n:
            raise ValueError("ragged matrix")
        for c in row:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"matrix entries must be integers, got {c!r}")
    return M


def max_entry(M):
    return max(abs(c) for row in M for c in row)


def _normalise_sign(v):
    v = primitive(tuple(v))
    for c in v:
        if c:
            return v if c > 0 else tuple(-x for x in v)
    return v


def kernel_vector_bound(K, n, m):
    """(K n)^m."""
    return (K * n) ** m


def _cramer_vectors(M):
    """Kernel vectors made of signed maximal minors (entries <= rho! K^rho)."""
    rows = [M[i] for i in independent_rows(M)]
    rho = len(rows)
    n = len(M[0])
    cols = independent_rows(transpose(rows))
    out = []
    for extra in range(n):
        if extra in cols:
            continue
        chosen = sorted(cols + [extra])
        X = [0] * n
        for k, c in enumerate(chosen):
            minor = [[rows[i][j] for j in chosen if j != c] for i in range(rho)]
            X[c] = (-1) ** k * det(minor)
        if any(X):
            out.append(tuple(X))
    return out


def _size_reduce(basis):
    """Greedy pairwise reduction v <- v - q u lowering sup norms until stable."""
    basis = [list(v) for v in basis]
    changed = True
    while changed:
        changed = False
        basis.sort(key=lambda v: (supnorm(v), v))
        for i in range(len(basis)):
            for j in range(len(basis)):
                if i == j:
                    continue
                u, v = basis[j], basis[i]
                best = supnorm(v)
                best_q = 0
                piv = next((k for k in range(len(u)) if u[k]), None)
                if piv is None:
                    continue
                guess = Fraction(v[piv], u[piv])
                for q in {floor(guess), ceil(guess), -1, 1}:
                    if q == 0:
                        continue
                    cand = supnorm([a - q * b for a, b in zip(v, u)])
                    if cand < best:
                        best, best_q = cand, q
                if best_q:
                    basis[i] = [a - best_q * b for a, b in zip(v, u)]
                    changed = True
    return [tuple(v) for v in basis]


def small_kernel_vector(M):
    """Nonzero integer X with M X = 0 and ||X||_inf <= (K n)^m."""
    M = _check_matrix(M)
    m, n = len(M), len(M[0])
    if n <= m:
        raise ValueError("need more columns than rows")
    K = max_entry(M)
    if K == 0:
        raise ValueError("matrix must be nonzero")
    candidates = _cramer_vectors(M)
    candidates += _size_reduce(integer_kernel(M))
    candidates = [_normalise_sign(v) for v in candidates if any(v)]
    X = min(candidates, key=lambda v: (supnorm(v), v))
    if any(matvec(M, X)):
        raise VerificationError("kernel vector does not solve M X = 0")
    if supnorm(X) > kernel_vector_bound(K, n, m):
        raise VerificationError(f"kernel vector {X} exceeds (Kn)^m")
    return X


def corollary_bound(n, m, K1, K2):
    """2 n^(m+1) m^m K1^(2m) + m^m K1^(m-1) K2 (with K1, K2 >= 1)."""
    K1, K2 = max(1, K1), max(1, K2)
    return 2 * n ** (m + 1) * m ** m * K1 ** (2 * m) + m ** m * K1 ** (m - 1) * K2


def _positive_rec(M, b, x):
    """Column-removal induction; M has full row rank m <= n, M x = b, x > 0."""
    m = len(M)
    n = len(x)
    if m == 0:
        return tuple(1 for _ in range(n))
    if n == m:
        return tuple(x)
    X = small_kernel_vector(M)
    if not any(c > 0 for c in X):
        X = tuple(-c for c in X)
    S = [i for i in range(n) if X[i] > 0]
    lam = min((x[i] - 1) // X[i] for i in S)
    x = [xi - lam * Xi for xi, Xi in zip(x, X)]
    i = min(S, key=lambda k: (x[k], k))
    xi = x[i]
    Mi = [[row[j] for j in range(n) if j != i] for row in M]
    bi = [bv - row[i] * xi for bv, row in zip(b, M)]
    x_rest = [x[j] for j in range(n) if j != i]
    if rank(Mi) == m:
        y_rest = _positive_rec(Mi, bi, x_rest)
    else:
        keep = independent_rows(Mi)
        y_rest = _positive_rec([Mi[k] for k in keep], [bi[k] for k in keep], x_rest)
    y = list(y_rest)
    y.insert(i, xi)
    return tuple(y)


def positive_solution(M, b, x):
    """Strictly positive y with M y = b and ||y|| within the corollary bound."""
    M = _check_matrix(M)
    b = list(b)
    x = list(x)
    if len(b) != len(M) or len(x) != len(M[0]):
        raise ValueError("dimension mismatch")
    if any(c <= 0 for c in x) or matvec(M, x) != b:
        raise ValueError("witness must be strictly positive with M x = b")
    keep = independent_rows(M)
    y = _positive_rec([M[k] for k in keep], [b[k] for k in keep], x)
    m, n = len(M), len(M[0])
    bound = corollary_bound(n, len(keep) or m, max_entry(M), supnorm(b))
    if matvec(M, y) != b or any(c <= 0 for c in y):
        raise VerificationError("positive solution failed substitution")
    if supnorm(y) > bound:
        raise VerificationError(f"positive solution {y} exceeds the corollary bound {bound}")
    return y


def minimal_solution_bound(n, m, K1, K2):
    """2^(2n) m^(mn) K1^(m(n+3)) n^(m+1) + 2^n m^(mn) K1^(mn) K2."""
    K1, K2 = max(1, K1), max(1, K2)
    return (2 ** (2 * n) * m ** (m * n) * K1 ** (m * (n + 3)) * n ** (m + 1)
            + 2 ** n * m ** (m * n) * K1 ** (m * n) * K2)


def _fm_bounds(cons, k):
    """Bounds on variable 0 of {t : a . t <= c} by Fourier-Motzkin elimination of the rest."""
    cons = [(list(map(Fraction, a)), Fraction(c)) for a, c in cons]
    for var in range(k - 1, 0, -1):
        pos = [(a, c) for a, c in cons if a[var] > 0]
        neg = [(a, c) for a, c in cons if a[var] < 0]
        zero = [(a, c) for a, c in cons if a[var] == 0]
        new = list(zero)
        for ap, cp in pos:
            for an, cn in neg:
                sp, sn = ap[var], -an[var]
                a = [sn * p + sp * q for p, q in zip(ap, an)]
                new.append((a, sn * cp + sp * cn))
        cons = new
    lo, hi = None, None
    for a, c in cons:
        if a[0] > 0:
            v = c / a[0]
            hi = v if hi is None else min(hi, v)
        elif a[0] < 0:
            v = c / a[0]
            lo = v if lo is None else max(lo, v)
        elif c < 0:
            return 1, 0
    if lo is None or hi is None:
        raise ValueError("unbounded integer search region")
    return ceil(lo), floor(hi)


def _find_integer_point(cons, k):
    """Some integer t with a . t <= c for all constraints, or None."""
    if k == 0:
        return () if all(c >= 0 for _, c in cons) else None
    lo, hi = _fm_bounds(cons, k)
    for v in range(lo, hi + 1):
        sub = [(a[1:], c - a[0] * v) for a, c in cons]
        rest = _find_integer_point(sub, k - 1)
        if rest is not None:
            return (v,) + rest
    return None


def positive_extension(M2, rhs, ybound):
    """Some y with M2 y = rhs and 1 <= y <= ybound, or None (exact)."""
    y0, kernel = integer_solve(M2, rhs)
    if y0 is None:
        return None
    n2 = len(y0)
    k = len(kernel)
    cons = []
    for j in range(n2):
        coef = [kernel[t][j] for t in range(k)]
        cons.append(([-c for c in coef], y0[j] - 1))       # y_j >= 1
        cons.append((coef, ybound - y0[j]))                # y_j <= ybound
    t = _find_integer_point(cons, k)
    if t is None:
        return None
    return tuple(y0[j] + sum(t[s] * kernel[s][j] for s in range(k)) for j in range(n2))


@dataclass(frozen=True)
class MinimalSolutionFamily:
    solutions: tuple
    n1: int
    n2: int
    matrix: tuple
    target: tuple
    box: int          # x was searched in [1, box]^n1
    lemma_bound: int
    certified: bool   # True when box covers the lemma bound


def _split(M, n1):
    M1 = [row[:n1] for row in M]
    M2 = [row[n1:] for row in M]
    return M1, M2


def _ybound(M, b, n1, xbox):
    n2 = len(M[0]) - n1
    m = len(M)
    K1 = max_entry(M)
    M1, _ = _split(M, n1)
    K2 = supnorm(b) + max_entry(M1 or [[0]]) * n1 * xbox
    return corollary_bound(n2, m, max(1, K1), max(1, K2))


def minimal_positive_solutions(M, b, n1, box_cap, budget=None):
    """S_min(M, b): <=_unif-minimal x > 0 that extend to a positive solution (x, y)."""
    M = _check_matrix(M)
    b = list(b)
    m, n = len(M), len(M[0])
    if not 1 <= n1 < n:
        raise ValueError("need 1 <= n1 < n")
    budget = default_budget() if budget is None else budget
    lemma = minimal_solution_bound(n, m, max_entry(M), supnorm(b))
    box = min(lemma, box_cap)
    if box ** n1 > budget:
        raise BudgetExceeded("minimal-solution search box", budget)
    M1, M2 = _split(M, n1)
    found = []
    for x in sorted(product(range(1, box + 1), repeat=n1), key=lambda v: (sum(v), v)):
        if any(all(f <= c for f, c in zip(s, x)) for s in found):
            continue
        rhs = [bv - sum(a * c for a, c in zip(row, x)) for bv, row in zip(b, M1)]
        K2 = max(1, supnorm(rhs))
        if positive_extension(M2, rhs, corollary_bound(n - n1, m, max(1, max_entry(M)), K2)) is not None:
            found.append(x)
    for s in found:
        if max(s) > lemma:
            raise VerificationError(f"minimal solution {s} exceeds the lemma bound")
    return MinimalSolutionFamily(tuple(found), n1, n - n1, tuple(map(tuple, M)), tuple(b),
                                 box, lemma, box >= lemma)


def brute_force_minimal_solutions(M, b, n1, xbox, ybox):
    """Oracle: enumerate every (x, y) in [1, xbox]^n1 x [1, ybox]^n2."""
    M = [list(r) for r in M]
    n = len(M[0])
    xs = set()
    for x in product(range(1, xbox + 1), repeat=n1):
        for y in product(range(1, ybox + 1), repeat=n - n1):
            if matvec(M, list(x) + list(y)) == list(b):
                xs.add(x)
                break
    return tuple(sorted((x for x in xs
                         if not any(o != x and all(p <= q for p, q in zip(o, x)) for o in xs)),
                        key=lambda v: (sum(v), v)))


def kernel_basis_bound_squared(K, n, rho):
    """((rho!)^(1/2) n^(rho/2) K^rho)^2, kept integral."""
    return factorial(rho) * n ** rho * K ** (2 * rho)


@dataclass(frozen=True)
class KernelBasis:
    vectors: tuple
    norm_product: int
    bound_squared: int
    rank: int

    @property
    def within_bound(self):
        return self.norm_product ** 2 <= self.bound_squared


def bounded_kernel_basis(M, search_radius=2):
    """n - rank(M) independent integer kernel vectors with a small norm product.

    A Z-basis of the kernel is size reduced, then short integer combinations
    of it are scanned and the shortest independent ones kept greedily.
    """
    M = _check_matrix(M)
    m, n = len(M), len(M[0])
    if n < m:
        raise ValueError("need at least as many columns as rows")
    rho = rank(M)
    basis = _size_reduce(integer_kernel(M))
    k = len(basis)
    pool = set(_normalise_sign(v) for v in basis)
    if k and (2 * search_radius + 1) ** k <= 200000:
        for coeffs in product(range(-search_radius, search_radius + 1), repeat=k):
            v = tuple(sum(c * b[j] for c, b in zip(coeffs, basis)) for j in range(n))
            if any(v):
                pool.add(_normalise_sign(v))
    chosen = []
    for v in sorted(pool, key=lambda v: (supnorm(v), v)):
        if len(chosen) == k:
            break
        if rank(chosen + [list(v)]) > len(chosen):
            chosen.append(list(v))
    vectors = tuple(tuple(v) for v in chosen)
    for v in vectors:
        if any(matvec(M, v)):
            raise VerificationError("kernel basis vector does not solve M X = 0")
    prod_norm = 1
    for v in vectors:
        prod_norm *= supnorm(v)
    K = max(1, max_entry(M))
    return KernelBasis(vectors, prod_norm, kernel_basis_bound_squared(K, n, rho), rho)
