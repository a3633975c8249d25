"""Exact one-variable polynomials and truncated binomial sums.

A ``BinomialSum`` is sum_k c_k * C(X - s_k + r, r) where each binomial is read
as 0 for X < s_k. It agrees with its polynomial part once X >= max s_k - r.
"""

from fractions import Fraction
from math import comb, factorial

from .errors import BudgetExceeded, default_budget


class RationalPolynomial:
    """Polynomial with Fraction coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def x(cls):
        return cls([0, 1])

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPolynomial(self.coefficient(k) + other.coefficient(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if not self.coeffs or not other.coeffs:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalPolynomial([other])
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RationalPolynomial({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("N" if k == 1 else f"N^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}" + (f"*{mono}" if mono else "")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self):
        return [str(c) for c in self.coeffs]

    def is_integer_valued_on(self, values):
        return all(self(v).denominator == 1 for v in values)


def _lift(p):
    return p if isinstance(p, RationalPolynomial) else RationalPolynomial([p])


def binomial_poly(shift, r):
    """C(X - shift + r, r) as a polynomial in X."""
    p = RationalPolynomial([1])
    for i in range(1, r + 1):
        p = p * RationalPolynomial([i - shift, 1])
    return p * Fraction(1, factorial(r))


def truncated_binomial(N, shift, r):
    """C(N - shift + r, r), read as 0 when N < shift."""
    if N < shift:
        return 0
    return comb(N - shift + r, r)


class BinomialSum:
    """sum of c * C(X - s + r, r) over terms {s: c}, with the truncation rule."""

    __slots__ = ("terms", "r")

    def __init__(self, terms, r):
        self.terms = {s: c for s, c in sorted(terms.items()) if c != 0}
        self.r = r

    def evaluate(self, N):
        return sum(c * truncated_binomial(N, s, self.r) for s, c in self.terms.items())

    def polynomial(self):
        p = RationalPolynomial()
        for s, c in self.terms.items():
            p = p + binomial_poly(s, self.r) * c
        return p

    def validity_start(self):
        """First N from which evaluate(N) equals the polynomial, by construction."""
        if not self.terms:
            return 0
        return max(self.terms) - self.r

    def agreement_onset(self, floor_at=1):
        """Least N0 >= floor_at with evaluate == polynomial for every N >= N0."""
        p = self.polynomial()
        n = max(self.validity_start(), floor_at)
        while n > floor_at and self.evaluate(n - 1) == p(n - 1):
            n -= 1
        return n

    def __add__(self, other):
        if self.r != other.r:
            raise ValueError("binomial sums of different order")
        terms = dict(self.terms)
        for s, c in other.terms.items():
            terms[s] = terms.get(s, 0) + c
        return BinomialSum(terms, self.r)

    def to_json(self):
        return {"order": self.r, "terms": [[s, c] for s, c in self.terms.items()]}


def join_inclusion_exclusion(vectors, budget=None):
    """sum over subsets U of (-1)^|U| [join(U)], as a map join -> signed count.

    The join is the coordinatewise max; the empty subset contributes the zero
    vector. Computed by folding one vector at a time instead of 2^k subsets.
    """
    budget = default_budget() if budget is None else budget
    vectors = list(vectors)
    if not vectors:
        return {}
    zero = tuple(0 for _ in vectors[0])
    acc = {zero: 1}
    for u in vectors:
        nxt = dict(acc)
        for v, c in acc.items():
            w = tuple(max(a, b) for a, b in zip(v, u))
            nxt[w] = nxt.get(w, 0) - c
        acc = {v: c for v, c in nxt.items() if c}
        if len(acc) > budget:
            raise BudgetExceeded("inclusion-exclusion terms", budget)
    return acc


def useless_binomial_sum(members, ell, budget=None):
    """|NA| as a truncated binomial sum in the minimal useless vectors."""
    terms = {}
    if not members:
        terms[0] = 1
    else:
        for v, c in join_inclusion_exclusion(members, budget).items():
            s = sum(v)
            terms[s] = terms.get(s, 0) + c
    return BinomialSum(terms, ell - 1)


def useless_count(members, ell, N, budget=None):
    return useless_binomial_sum(members, ell, budget).evaluate(N)


def interpolate(points):
    """Unique polynomial of degree < len(points) through (x, y) pairs (Lagrange)."""
    points = [(Fraction(x), Fraction(y)) for x, y in points]
    total = RationalPolynomial()
    for i, (xi, yi) in enumerate(points):
        term = RationalPolynomial([yi])
        for j, (xj, _) in enumerate(points):
            if j != i:
                term = term * RationalPolynomial([-xj / (xi - xj), 1 / (xi - xj)])
        total = total + term
    return total


def minmax_alternating_sum(values):
    """sum over nonempty J of (-1)^|J| max_{j in J} a_j, by explicit subset enumeration."""
    k = len(values)
    total = 0
    for mask in range(1, 1 << k):
        sub = [values[j] for j in range(k) if mask >> j & 1]
        total += (-1) ** len(sub) * max(sub)
    return total
