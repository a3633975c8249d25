"""Exact dense linear algebra over Q and Z on lists of lists."""

from fractions import Fraction


def rref(rows):
    """Reduced row echelon form over Q. Returns (matrix, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows):
    return len(rref(rows)[1])


def independent_rows(rows):
    """Indices of a maximal linearly independent subset, chosen greedily in order."""
    chosen = []
    basis = []
    for i, row in enumerate(rows):
        if rank(basis + [row]) > len(basis):
            basis.append(row)
            chosen.append(i)
    return chosen


def nullspace(rows, ncols=None):
    """Basis of {x in Q^n : rows . x = 0} as a list of Fraction vectors."""
    if not rows:
        n = ncols
        return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    m, piv = rref(rows)
    n = len(m[0])
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, pc in enumerate(piv):
            v[pc] = -m[i][f]
        basis.append(v)
    return basis


def solve_rational(rows, rhs):
    """One solution x of rows . x = rhs over Q, or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m, piv = rref(aug)
    n = len(rows[0])
    if n in piv:
        return None
    x = [Fraction(0)] * n
    for i, pc in enumerate(piv):
        x[pc] = m[i][n]
    return x


def det(rows):
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def transpose(rows):
    return [list(c) for c in zip(*rows)]


def matvec(rows, v):
    return [sum(a * b for a, b in zip(r, v)) for r in rows]


def column_echelon(matrix):
    """Unimodular column reduction of an integer m x n matrix.

    Returns (H, U) with matrix . U = H, U unimodular (n x n), and H in column
    echelon form: its nonzero columns come first, each with a positive pivot
    strictly below the previous pivot. The trailing columns of U whose H
    column is zero form a basis of the integer kernel.
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    # work on the transpose: rows of T are columns of matrix, augmented by I
    T = [[matrix[i][j] for i in range(m)] + [int(j == k) for k in range(n)] for j in range(n)]
    r = 0
    for c in range(m):
        while True:
            nz = [i for i in range(r, n) if T[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(T[i][c]))
            T[r], T[piv] = T[piv], T[r]
            if T[r][c] < 0:
                T[r] = [-x for x in T[r]]
            done = True
            for i in range(r + 1, n):
                if T[i][c] != 0:
                    q = T[i][c] // T[r][c]
                    T[i] = [a - q * b for a, b in zip(T[i], T[r])]
                    if T[i][c] != 0:
                        done = False
            if done:
                r += 1
                break
        if r == n:
            break
    H = [[T[j][i] for j in range(n)] for i in range(m)]
    U = [[T[j][m + i] for j in range(n)] for i in range(n)]
    return H, U, r


def integer_kernel(matrix, ncols=None):
    """A Z-basis of {x in Z^n : matrix . x = 0}, as row vectors."""
    if not matrix:
        n = ncols
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    H, U, r = column_echelon(matrix)
    n = len(U)
    return [tuple(U[i][j] for i in range(n)) for j in range(r, n)]


def integer_solve(matrix, rhs):
    """Particular integer solution of matrix . x = rhs plus a kernel basis.

    Returns (x0, kernel) or (None, kernel) when no integer solution exists.
    """
    H, U, r = column_echelon(matrix)
    m = len(matrix)
    n = len(U)
    # H has column echelon form on its first r columns; solve H s = rhs
    s = [0] * n
    residual = list(rhs)
    row = 0
    for j in range(r):
        while row < m and H[row][j] == 0:
            if residual[row] != 0:
                return None, [tuple(U[i][k] for i in range(n)) for k in range(r, n)]
            row += 1
        q, rem = divmod(residual[row], H[row][j])
        if rem:
            return None, [tuple(U[i][k] for i in range(n)) for k in range(r, n)]
        s[j] = q
        for i in range(m):
            residual[i] -= q * H[i][j]
    if any(residual):
        return None, [tuple(U[i][k] for i in range(n)) for k in range(r, n)]
    x0 = tuple(sum(U[i][k] * s[k] for k in range(n)) for i in range(n))
    return x0, [tuple(U[i][k] for i in range(n)) for k in range(r, n)]
