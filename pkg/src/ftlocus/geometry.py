"""Exact planar geometry over rationals.

Points and covectors are both `Vec` (a pair of exact rationals); the pairing
between them is `dot`.  Convex sets are `ConvexRegion` values with an explicit
kind, always stored canonically so that regions produced by different
pipelines compare equal with `==`.  Half-plane intersection classifies its
result (empty / point / segment / polygon / unbounded-with-rays) exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from . import exactlp
from .errors import NotSymmetricError, OriginNotInteriorError, ZeroVectorError
from .rational import R0, R1, Rat, rat

EMPTY = "empty"
POINT = "point"
SEGMENT = "segment"
POLYGON = "polygon"
UNBOUNDED = "unbounded"


class Vec:
    """Exact rational 2-vector; doubles as point and covector."""

    __slots__ = ("x", "y")

    def __init__(self, x, y):
        self.x = rat(x)
        self.y = rat(y)

    def __add__(self, other):
        return Vec(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Vec(self.x - other.x, self.y - other.y)

    def __neg__(self):
        return Vec(-self.x, -self.y)

    def __mul__(self, k):
        k = rat(k)
        return Vec(self.x * k, self.y * k)

    __rmul__ = __mul__

    def dot(self, other) -> "Rat":
        return self.x * other.x + self.y * other.y

    def cross(self, other) -> "Rat":
        return self.x * other.y - self.y * other.x

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def perp(self) -> "Vec":
        """Rotate a quarter turn counterclockwise."""
        return Vec(-self.y, self.x)

    def primitive(self) -> "Vec":
        """Scale to the unique integer vector with coprime entries, same direction."""
        if self.is_zero():
            raise ZeroVectorError("zero vector has no direction")
        an, ad = int(self.x.numerator), int(self.x.denominator)
        bn, bd = int(self.y.numerator), int(self.y.denominator)
        lcm = ad // gcd(ad, bd) * bd
        a = an * (lcm // ad)
        b = bn * (lcm // bd)
        g = gcd(abs(a), abs(b))
        return Vec(a // g, b // g)

    def as_floats(self):
        return (float(self.x), float(self.y))

    def __eq__(self, other):
        return isinstance(other, Vec) and self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __repr__(self):
        return "Vec(%s, %s)" % (self.x, self.y)

    def __iter__(self):
        return iter((self.x, self.y))


ORIGIN = Vec(0, 0)


def vec(x, y) -> Vec:
    return Vec(x, y)


def orient(a: Vec, b: Vec, c: Vec) -> int:
    """Sign of the turn a -> b -> c: +1 left, -1 right, 0 collinear."""
    d = (b - a).cross(c - a)
    return (d > 0) - (d < 0)


@dataclass(frozen=True)
class Halfplane:
    """The closed half-plane {v : phi.v <= c}."""

    phi: Vec
    c: object

    def holds(self, v: Vec) -> bool:
        return self.phi.dot(v) <= self.c

    def boundary_holds(self, v: Vec) -> bool:
        return self.phi.dot(v) == self.c

    def normalized(self) -> "Halfplane":
        p = self.phi.primitive()
        # same scale factor applied to c: phi = t * p with t > 0
        if p.x != 0:
            t = self.phi.x / p.x
        else:
            t = self.phi.y / p.y
        return Halfplane(p, rat(self.c) / t)


def halfplane(phi: Vec, c) -> Halfplane:
    if phi.is_zero():
        raise ZeroVectorError("half-plane needs a nonzero covector")
    return Halfplane(phi, rat(c))


@dataclass(frozen=True)
class ConvexRegion:
    kind: str
    vertices: tuple = ()
    rays: tuple = ()  # extreme recession directions when unbounded
    halfplanes: tuple = field(default=(), compare=False, repr=False)

    @staticmethod
    def empty() -> "ConvexRegion":
        return ConvexRegion(EMPTY)

    @staticmethod
    def point(p: Vec) -> "ConvexRegion":
        return ConvexRegion(POINT, (p,))

    @staticmethod
    def segment(a: Vec, b: Vec) -> "ConvexRegion":
        if a == b:
            return ConvexRegion.point(a)
        lo, hi = sorted([a, b], key=lambda v: (v.x, v.y))
        return ConvexRegion(SEGMENT, (lo, hi))

    @staticmethod
    def polygon(verts) -> "ConvexRegion":
        """verts: CCW strictly convex vertex cycle; stored from the
        lexicographic minimum so equal polygons compare equal."""
        vs = list(verts)
        k = min(range(len(vs)), key=lambda i: (vs[i].x, vs[i].y))
        return ConvexRegion(POLYGON, tuple(vs[k:] + vs[:k]))

    def is_bounded(self) -> bool:
        return self.kind in (EMPTY, POINT, SEGMENT, POLYGON)

    def is_empty(self) -> bool:
        return self.kind == EMPTY

    def contains(self, p: Vec) -> bool:
        if self.kind == EMPTY:
            return False
        if self.kind == POINT:
            return p == self.vertices[0]
        if self.kind == SEGMENT:
            a, b = self.vertices
            e = b - a
            w = p - a
            return e.cross(w) == 0 and 0 <= e.dot(w) <= e.dot(e)
        if self.kind == POLYGON:
            vs = self.vertices
            n = len(vs)
            for i in range(n):
                e = vs[(i + 1) % n] - vs[i]
                if e.cross(p - vs[i]) < 0:
                    return False
            return True
        if not self.halfplanes:
            raise ValueError("unbounded region without stored half-planes")
        return all(h.holds(p) for h in self.halfplanes)

    def boundary_contains(self, p: Vec) -> bool:
        """Exact membership in the relative boundary (bounded kinds)."""
        if self.kind == POINT:
            return p == self.vertices[0]
        if self.kind == SEGMENT:
            return p in self.vertices
        if self.kind == POLYGON:
            if not self.contains(p):
                return False
            vs = self.vertices
            n = len(vs)
            return any((vs[(i + 1) % n] - vs[i]).cross(p - vs[i]) == 0 for i in range(n))
        return False

    def edge_list(self):
        """Edges of a polygon as (v_i, v_{i+1}) pairs, CCW."""
        vs = self.vertices
        n = len(vs)
        return [(vs[i], vs[(i + 1) % n]) for i in range(n)]


def convex_hull(points) -> ConvexRegion:
    """Strict convex hull; collinear middles are dropped."""
    pts = sorted(set(points), key=lambda v: (v.x, v.y))
    if not pts:
        return ConvexRegion.empty()
    if len(pts) == 1:
        return ConvexRegion.point(pts[0])

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and (out[-1] - out[-2]).cross(p - out[-2]) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    if len(lower) == 2 and len(upper) == 2:
        return ConvexRegion.segment(pts[0], pts[-1])
    return ConvexRegion.polygon(lower[:-1] + upper[:-1])


def _line_meet(h1: Halfplane, h2: Halfplane):
    det = h1.phi.cross(h2.phi)
    if det == 0:
        return None
    x = (h1.c * h2.phi.y - h2.c * h1.phi.y) / det
    y = (h1.phi.x * h2.c - h2.phi.x * h1.c) / det
    return Vec(x, y)


def _lp_feasible(hps) -> bool:
    # v = v+ - v- with a slack per row turns phi.v <= c into standard form
    m = len(hps)
    cols = []
    for sgn in (R1, -R1):
        for coord in (0, 1):
            col = []
            for i, h in enumerate(hps):
                a = h.phi.x if coord == 0 else h.phi.y
                if a != 0:
                    col.append((i, sgn * a))
            cols.append(col)
    for i in range(m):
        cols.append([(i, R1)])
    return exactlp.feasible(m, [h.c for h in hps], cols) is not None


def intersect_halfplanes(halfplanes_in) -> ConvexRegion:
    """Exact intersection of closed half-planes {phi.v <= c}.

    Returns a canonical ConvexRegion.  Unbounded results carry the extreme
    directions of the recession cone (one for a ray, two otherwise, as
    primitive integer vectors in lexicographic order) and keep the defining
    half-planes for membership tests.
    """
    hps = list(halfplanes_in)
    if not hps:
        raise ValueError("need at least one half-plane")
    best = {}
    for h in hps:
        if h.phi.is_zero():
            raise ZeroVectorError("half-plane with zero covector")
        hn = h.normalized()
        key = (hn.phi.x, hn.phi.y)
        if key not in best or hn.c < best[key].c:
            best[key] = hn
    hs = [best[k] for k in sorted(best, key=lambda t: (t[0], t[1]))]

    cands = set()
    for i in range(len(hs)):
        for j in range(i + 1, len(hs)):
            p = _line_meet(hs[i], hs[j])
            if p is not None and all(h.holds(p) for h in hs):
                cands.add(p)

    dirs = []
    seen = set()
    for h in hs:
        r = h.phi.perp()
        for d in (r, -r):
            dp = d.primitive()
            key = (dp.x, dp.y)
            if key in seen:
                continue
            if all(g.phi.dot(dp) <= 0 for g in hs):
                seen.add(key)
                dirs.append(dp)

    if not cands:
        if not dirs:
            return ConvexRegion.empty()
        if not _lp_feasible(hs):
            return ConvexRegion.empty()

    if dirs:
        # every boundary ray of the recession cone is a feasible +-perp of
        # some constraint, so dirs is exactly the 1 or 2 extreme directions
        assert len(dirs) <= 2
        dirs.sort(key=lambda d: (d.x, d.y))
        hull = convex_hull(cands) if cands else ConvexRegion.empty()
        return ConvexRegion(UNBOUNDED, hull.vertices, tuple(dirs), tuple(hs))

    hull = convex_hull(cands)
    return ConvexRegion(hull.kind, hull.vertices, (), tuple(hs))


def region_halfplanes(region: ConvexRegion):
    """A finite half-plane description of a region (any kind but empty)."""
    if region.kind == POINT:
        (p,) = region.vertices
        ex, ey = Vec(1, 0), Vec(0, 1)
        return [Halfplane(ex, p.x), Halfplane(-ex, -p.x), Halfplane(ey, p.y), Halfplane(-ey, -p.y)]
    if region.kind == SEGMENT:
        a, b = region.vertices
        e = b - a
        n = Vec(e.y, -e.x)
        return [
            Halfplane(n, n.dot(a)),
            Halfplane(-n, -n.dot(a)),
            Halfplane(-e, -e.dot(a)),
            Halfplane(e, e.dot(b)),
        ]
    if region.kind == POLYGON:
        out = []
        for a, b in region.edge_list():
            e = b - a
            phi = Vec(e.y, -e.x)
            out.append(Halfplane(phi, phi.dot(a)))
        return out
    if region.kind == UNBOUNDED and region.halfplanes:
        return list(region.halfplanes)
    raise ValueError("no half-plane description for %s region" % region.kind)


def intersect_regions(*regions) -> ConvexRegion:
    hps = []
    for r in regions:
        if r.is_empty():
            return ConvexRegion.empty()
        hps.extend(region_halfplanes(r))
    return intersect_halfplanes(hps)


def polar_dual(region: ConvexRegion) -> ConvexRegion:
    """Polar of a centrally symmetric polygon with the origin inside.

    Vertices map to edges and edges to vertices; applying this twice gives
    back the original polygon.
    """
    if region.kind != POLYGON:
        raise ValueError("polar dual needs a polygon")
    vs = region.vertices
    if set(vs) != {-v for v in vs}:
        raise NotSymmetricError("vertex set is not symmetric about the origin")
    for a, b in region.edge_list():
        if (b - a).cross(-a) <= 0:
            raise OriginNotInteriorError("origin is not interior to the polygon")
    duals = []
    for a, b in region.edge_list():
        det = a.cross(b)
        duals.append(Vec((b.y - a.y) / det, (a.x - b.x) / det))
    return ConvexRegion.polygon(duals)
