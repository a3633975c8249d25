"""Integer points and canonical finite point sets in Z^d.

Points are plain tuples of Python ints, so arithmetic is exact at any size.
"""

from fractions import Fraction
from math import gcd


def as_point(p):
    """Coerce an int or an iterable of ints to a point tuple."""
    if isinstance(p, int):
        return (p,)
    pt = tuple(p)
    for c in pt:
        if not isinstance(c, int) or isinstance(c, bool):
            raise TypeError(f"coordinates must be integers, got {c!r}")
    return pt


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(k, v):
    return tuple(k * a for a in v)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def supnorm(v):
    return max((abs(c) for c in v), default=0)


def content(v):
    g = 0
    for c in v:
        g = gcd(g, c)
    return g


def primitive(v):
    """Divide an integer (or rational) vector by its content; zero stays zero."""
    if any(isinstance(c, Fraction) for c in v):
        den = 1
        for c in v:
            den = den * Fraction(c).denominator // gcd(den, Fraction(c).denominator)
        v = tuple(int(c * den) for c in v)
    g = content(v)
    if g == 0:
        return tuple(v)
    return tuple(c // g for c in v)


class PointSet:
    """A finite subset of Z^d, sorted lexicographically and deduplicated.

    Equality is representation equality; instances are hashable so they can
    key caches.
    """

    __slots__ = ("points", "dim", "_members", "_hash")

    def __init__(self, points, dim=None):
        pts = sorted({as_point(p) for p in points})
        if dim is None:
            if not pts:
                raise ValueError("empty point set needs an explicit dim")
            dim = len(pts[0])
        for p in pts:
            if len(p) != dim:
                raise ValueError(f"point {p} does not have dimension {dim}")
        self.points = tuple(pts)
        self.dim = dim
        self._members = None
        self._hash = None

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __contains__(self, p):
        if self._members is None:
            self._members = frozenset(self.points)
        return as_point(p) in self._members

    def __eq__(self, other):
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.dim == other.dim and self.points == other.points

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dim, self.points))
        return self._hash

    def __repr__(self):
        if self.dim == 1:
            body = ", ".join(str(p[0]) for p in self.points[:12])
        else:
            body = ", ".join(str(p) for p in self.points[:12])
        more = ", ..." if len(self.points) > 12 else ""
        return f"PointSet({{{body}{more}}}, dim={self.dim})"

    def translate(self, v):
        return PointSet((vadd(p, v) for p in self.points), self.dim)

    def reflect(self, b):
        """The set b - A."""
        b = as_point(b)
        return PointSet((vsub(b, p) for p in self.points), self.dim)

    def union(self, other):
        return PointSet(self.points + tuple(other), self.dim)

    def difference(self, other):
        other = other if isinstance(other, PointSet) else PointSet(other, self.dim)
        return PointSet((p for p in self.points if p not in other), self.dim)

    def to_list(self):
        return [list(p) for p in self.points]


def point_set(points, dim=None):
    if isinstance(points, PointSet):
        return points
    return PointSet(points, dim)
