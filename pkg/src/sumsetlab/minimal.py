"""Minimal-element systems.

* B-minimal elements S(A, B) and K(A, B);
* the Davenport constant D(G) and the constant k(G, H) of a finite abelian group;
* minimally useless exponent vectors of A.
"""

from dataclasses import dataclass
from math import gcd, log

from .errors import BudgetExceeded, IncompleteFamilyError, default_budget
from .points import PointSet, point_set
from .polynomial import useless_binomial_sum
from .sumset import _Packer, growth_leading_term, growth_table


@dataclass(frozen=True)
class BMinimalFamily:
    elements: tuple  # ((u, N_A(u)), ...) sorted by length then point
    basis_B: PointSet
    complete: bool
    cap: int

    def points(self):
        return [u for u, _ in self.elements]

    def max_length(self):
        return max(n for _, n in self.elements)


def b_minimal_elements(A, B, cap=64, budget=None):
    """S(A, B): points of P(A) none of whose shortest representations touch B ∪ {0}.

    Breadth-first over lengths. A B-minimal element of length N+1 is a
    B-minimal element of length N plus some a in A \\ (B ∪ {0}), so each layer
    is generated from the previous one; an empty layer proves the family is
    complete. Reaching ``cap`` with a nonempty layer returns complete=False.
    """
    A = point_set(A)
    B = point_set(B, A.dim)
    origin = (0,) * A.dim
    if origin not in A:
        raise ValueError("0 must belong to A")
    for b in B:
        if b not in A:
            raise ValueError(f"B must be a subset of A; {b} is not in A")
    budget = default_budget() if budget is None else budget
    packer = _Packer(A, cap + 1)
    gens = [packer.pack(a) for a in A]
    zero = packer.pack(origin)
    # codes of kA are offset by k * pack(origin); normalise every layer to offset 0
    steps = [g - zero for g in gens]
    b_steps = [packer.pack(b) - zero for b in B]
    free = [packer.pack(a) - zero for a in A if a != origin and a not in B]
    reach = {0}          # codes of N A (N = current length), which contains (N-1) A
    layer = {0}          # codes of B-minimal elements of length exactly N
    elements = [(origin, 0)]
    N = 0
    while layer:
        if N == cap:
            return BMinimalFamily(tuple(elements), B, False, cap)
        nxt_reach = {p + s for p in reach for s in steps}
        if len(nxt_reach) > budget:
            raise BudgetExceeded("sumset size", budget)
        new_layer = set()
        for s in layer:
            for a in free:
                c = s + a
                if c in new_layer or c in reach:
                    continue
                if any(c - b in reach for b in b_steps):
                    continue
                new_layer.add(c)
        N += 1
        reach = nxt_reach
        layer = new_layer
        for c in sorted(layer):
            elements.append((packer.unpack(c + N * zero, N), N))
    elements.sort(key=lambda e: (e[1], e[0]))
    return BMinimalFamily(tuple(elements), B, True, cap)


def K_of(A, B, cap=64, family=None):
    """K(A, B) = max N_A(u) over u in S(A, B); needs a complete family."""
    fam = family if family is not None else b_minimal_elements(A, B, cap)
    if not fam.complete:
        raise IncompleteFamilyError(
            f"S(A,B) not closed within {fam.cap} layers; K(A,B) is undefined or larger")
    return fam.max_length()


def davenport_upper_bound(G):
    """m (1 + log(|G| / m)) with m the exponent of G."""
    m = G.exponent
    return m * (1 + log(G.order / m))


class _GroupTables:
    """Addition table of a finite abelian group over element indices."""

    def __init__(self, G):
        self.G = G
        self.elements = G.elements()
        self.n = len(self.elements)
        self.shift = [[G.index(G.add(g, h)) for h in self.elements] for g in self.elements]

    def translate(self, mask, g):
        row = self.shift[g]
        out = 0
        m = mask
        while m:
            low = m & -m
            out |= 1 << row[low.bit_length() - 1]
            m ^= low
        return out


def davenport_constant(G, budget=None):
    """D(G): one more than the longest zero-sum-free sequence in G.

    Starting from the lower bound 1 + sum(d_i - 1), each round asks whether
    a zero-sum-free sequence of the current length exists. The state is the
    set M of subsums together with 0: appending g is allowed iff -g is not in
    M, and every append adds at least one element to M. Sequences are
    nondecreasing in element index and are normalised under x -> u x for
    units u mod the exponent, so every element's orbit minimum is at least
    the first element's index.
    """
    if G.order == 1:
        return 1
    budget = default_budget() if budget is None else budget
    T = _GroupTables(G)
    n = T.n
    neg = [T.shift[g].index(0) for g in range(n)]
    e = G.exponent

    def times(u, g):
        x = 0
        for _ in range(u):
            x = T.shift[x][g]
        return x

    units = [u for u in range(1, e) if gcd(u, e) == 1] or [1]
    orbit_min = [min(times(u, g) for u in units) for g in range(n)]
    failed = {}  # (M, last) -> smallest need known to fail
    nodes = 0

    def extendable(M, need, last, first):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded("zero-sum-free search nodes", budget,
                                 fallback=davenport_upper_bound(G))
        if need == 0:
            return True
        if bin(M).count("1") + need > n:
            return False
        if failed.get((M, last), need + 1) <= need:
            return False
        for g in range(last, n):
            if orbit_min[g] < first or M >> neg[g] & 1:
                continue
            if extendable(M | T.translate(M, g), need - 1, g, first):
                return True
        # allowed sets only shrink as `first` grows, so the entry stays valid
        failed[(M, last)] = need
        return False

    def exists(length):
        return any(extendable(1 | 1 << g, length - 1, g, g)
                   for g in range(1, n) if orbit_min[g] == g)

    length = sum(d - 1 for d in G.invariant_factors) + 1
    while exists(length):
        length += 1
    return length


def k_constant(G, H, budget=None):
    """k(G, H): longest sequence from H with no zero subsum and no subsum of length > 1 in H."""
    budget = default_budget() if budget is None else budget
    T = _GroupTables(G)
    idx = sorted({G.index(tuple(h)) for h in H})
    if 0 in idx:
        raise ValueError("H must not contain the identity")
    hmask = 0
    for i in idx:
        hmask |= 1 << i
    n = T.n
    best = 0
    seen = set()
    nodes = 0

    def dfs(mask, pos, length):
        # mask: all nonempty subsums so far
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded("k(G,H) search nodes", budget)
        if length > best:
            best = length
        if length + (n - 1 - bin(mask).count("1")) <= best:
            return
        key = (mask, pos, length)
        if key in seen:
            return
        seen.add(key)
        for p in range(pos, len(idx)):
            h = idx[p]
            longer = T.translate(mask, h)
            if longer & 1 or longer & hmask:
                continue
            dfs(mask | (1 << h) | longer, p, length + 1)

    dfs(0, 0, 0)
    return best


@dataclass(frozen=True)
class UselessFamily:
    minimal_useless: tuple
    ordering: PointSet      # A in canonical order; coordinate j refers to ordering[j]
    cap_used: int           # every member has l1 norm <= cap_used
    certified: bool


def _compositions(n, parts):
    """All vectors of ``parts`` nonnegative ints summing to n, in increasing lex order."""
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def useless_levels(A, cap):
    """Yield (n, useless vectors of l1 norm n) for n = 0..cap.

    x is useless when some y <_lex x has the same l1 norm and the same
    weighted sum; within a level that means x is not the lex-least vector of
    its weighted sum.
    """
    A = point_set(A)
    for n in range(cap + 1):
        first = {}
        useless = set()
        for x in _compositions(n, len(A)):
            key = tuple(sum(c * a[j] for c, a in zip(x, A)) for j in range(A.dim))
            if key in first:
                useless.add(x)
            else:
                first[key] = x
        yield n, useless


def minimal_useless(A, norm_cap, validate=True, budget=None):
    """Minimally useless exponent vectors of A with l1 norm <= norm_cap.

    Uselessness is closed upwards, so x is minimal exactly when every x - e_i
    is useful. ``certified`` records whether the count they induce matches
    |NA| on a window reaching dim + 2 past ``norm_cap`` and its polynomial has
    the degree and leading coefficient forced by the volume of H(A).
    """
    A = point_set(A)
    if len(A) == 0:
        raise ValueError("A must be nonempty")
    ell = len(A)
    members = []
    prev = set()
    for n, useless in useless_levels(A, norm_cap):
        for x in sorted(useless):
            if all(x[i] == 0 or tuple(c - (j == i) for j, c in enumerate(x)) not in prev
                   for i in range(ell)):
                members.append(x)
        prev = useless
    members = tuple(members)
    certified = False
    if validate:
        horizon = norm_cap + A.dim + 2
        sizes = growth_table(A, horizon, budget).sizes
        counts = useless_binomial_sum(members, ell, budget)
        poly = counts.polynomial()
        degree, lead = growth_leading_term(A)
        certified = (poly.degree == degree and poly.leading() == lead
                     and all(counts.evaluate(N) == sizes[N - 1] for N in range(1, horizon + 1)))
    return UselessFamily(members, A, norm_cap, certified)


def certified_useless_family(A, start_cap=2, max_cap=24, budget=None):
    """Raise the norm cap until the family validates, or give up at max_cap."""
    cap = start_cap
    fam = minimal_useless(A, cap, budget=budget)
    while not fam.certified and cap < max_cap:
        cap += 1
        fam = minimal_useless(A, cap, budget=budget)
    return fam
