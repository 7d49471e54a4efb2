"""Norms on the plane: polygonal unit balls, exactly, and smooth Lp norms.

A PolyNorm is determined by a centrally symmetric convex polygon with the
origin inside.  Its dual ball is the polar polygon; evaluating the norm is a
support-function maximum over dual vertices, and the set of unit functionals
norming a vector is an exposed face of the dual ball (a vertex, or an edge
when the vector points at a ball vertex).  SmoothNorm covers the Lp family
1 < p < oo on the float path; there every nonzero vector has exactly one
norming functional.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ZeroVectorError
from .geometry import ConvexRegion, Vec, convex_hull, polar_dual
from .rational import R1, Rat

PARALLELOGRAM = "parallelogram"
AFFINE_REGULAR_HEXAGON = "affine_regular_hexagon"
OTHER_POLYGON = "other_polygon"


@dataclass(frozen=True)
class DualFace:
    """Exposed face of the dual ball: the norming functionals of a vector.

    One point for a vertex face, two CCW-adjacent dual vertices for an edge
    face (the segment between them).
    """

    points: tuple

    @property
    def is_vertex(self) -> bool:
        return len(self.points) == 1

    @property
    def is_edge(self) -> bool:
        return len(self.points) == 2

    def __neg__(self) -> "DualFace":
        return DualFace(tuple(-p for p in self.points))

    def endpoints(self):
        if self.is_vertex:
            return (self.points[0], self.points[0])
        return self.points

    def sample(self, t: "Rat") -> Vec:
        """Point of the face at parameter t in [0, 1]."""
        a, b = self.endpoints()
        return a + t * (b - a)


@dataclass(frozen=True)
class BallFace:
    """Proper exposed face of the unit ball itself.

    Vertex faces have one point and no functional of their own; edge faces
    carry the unique outward unit covector supporting them.
    """

    points: tuple
    functional: Vec | None = None

    @property
    def is_edge(self) -> bool:
        return len(self.points) == 2


class PolyNorm:
    """Norm whose unit ball is a symmetric convex polygon."""

    def __init__(self, ball: ConvexRegion):
        # polar_dual re-validates symmetry and the interior origin
        self.ball = ball
        self.dual = polar_dual(ball)
        self.vertices = ball.vertices
        self.dual_vertices = self.dual.vertices
        self._dual_norm = None

    @classmethod
    def from_ball_vertices(cls, points) -> "PolyNorm":
        vs = [p if isinstance(p, Vec) else Vec(p[0], p[1]) for p in points]
        return cls(convex_hull(vs))

    @classmethod
    def l1(cls) -> "PolyNorm":
        return cls(convex_hull([Vec(1, 0), Vec(0, 1), Vec(-1, 0), Vec(0, -1)]))

    @classmethod
    def linf(cls) -> "PolyNorm":
        return cls(convex_hull([Vec(1, 1), Vec(-1, 1), Vec(-1, -1), Vec(1, -1)]))

    @classmethod
    def parallelogram(cls, x: Vec, y: Vec) -> "PolyNorm":
        return cls(convex_hull([x, y, -x, -y]))

    @classmethod
    def hexagonal(cls, x: Vec = Vec(1, 0), y: Vec = Vec(0, 1)) -> "PolyNorm":
        """Ball spanned by consecutive vertices x, y: hull of +-x, +-y, +-(x-y)."""
        return cls(convex_hull([x, y, x - y, -x, -y, y - x]))

    def eval(self, v: Vec) -> "Rat":
        best = None
        for phi in self.dual_vertices:
            t = phi.dot(v)
            if best is None or t > best:
                best = t
        return best

    def dual_eval(self, psi: Vec) -> "Rat":
        best = None
        for v in self.vertices:
            t = psi.dot(v)
            if best is None or t > best:
                best = t
        return best

    def unit(self, v: Vec) -> Vec:
        if v.is_zero():
            raise ZeroVectorError("zero vector has no unit")
        return v * (R1 / self.eval(v))

    def _achievers(self, verts, functional: Vec):
        best = None
        idx = []
        for i, v in enumerate(verts):
            t = functional.dot(v)
            if best is None or t > best:
                best = t
                idx = [i]
            elif t == best:
                idx.append(i)
        return best, idx

    @staticmethod
    def _adjacent_pair(verts, idx):
        k = len(verts)
        assert len(idx) == 2, "support set of a strict polygon is a vertex or an edge"
        i, j = idx
        if j == i + 1:
            return (verts[i], verts[j])
        assert i == 0 and j == k - 1
        return (verts[j], verts[i])

    def norming_face(self, v: Vec) -> DualFace:
        """All unit functionals phi with phi(v) = ||v||, as a dual-ball face."""
        if v.is_zero():
            raise ZeroVectorError("zero vector has no norming face")
        _, idx = self._achievers(self.dual_vertices, v)
        if len(idx) == 1:
            return DualFace((self.dual_vertices[idx[0]],))
        return DualFace(self._adjacent_pair(self.dual_vertices, idx))

    def exposed_face_of(self, psi: Vec):
        """Ball vertices where the unit functional psi attains its maximum 1."""
        val, idx = self._achievers(self.vertices, psi)
        assert val == 1, "exposed face asked for a non-unit functional"
        if len(idx) == 1:
            return (self.vertices[idx[0]],)
        return self._adjacent_pair(self.vertices, idx)

    @staticmethod
    def edge_functional(a: Vec, b: Vec) -> Vec:
        """Unit covector equal to 1 on both endpoints of a ball edge."""
        det = a.cross(b)
        return Vec((b.y - a.y) / det, (a.x - b.x) / det)

    def exposed_faces(self):
        """Every proper exposed face of the ball, vertices then edges, CCW."""
        out = [BallFace((v,)) for v in self.vertices]
        k = len(self.vertices)
        for i in range(k):
            a, b = self.vertices[i], self.vertices[(i + 1) % k]
            out.append(BallFace((a, b), functional=self.edge_functional(a, b)))
        return out

    def shape_class(self) -> str:
        vs = self.vertices
        k = len(vs)
        if k == 4:
            return PARALLELOGRAM
        if k == 6 and all(vs[(i + 2) % 6] == vs[(i + 1) % 6] - vs[i] for i in range(6)):
            return AFFINE_REGULAR_HEXAGON
        return OTHER_POLYGON

    def dual_norm(self) -> "PolyNorm":
        """The norm whose ball is this norm's dual ball."""
        if self._dual_norm is None:
            self._dual_norm = PolyNorm(self.dual)
        return self._dual_norm

    def __eq__(self, other):
        return isinstance(other, PolyNorm) and self.ball == other.ball

    def __hash__(self):
        return hash(self.ball)

    def __repr__(self):
        return "PolyNorm(%d vertices)" % len(self.vertices)


@dataclass(frozen=True)
class SmoothNorm:
    """Lp norm for 1 < p < oo; float-valued, unique norming functionals."""

    p: float

    def __post_init__(self):
        if not 1.0 < self.p < float("inf"):
            raise ValueError("need 1 < p < oo, got %r" % self.p)

    @property
    def dual_exponent(self) -> float:
        return self.p / (self.p - 1.0)

    def eval(self, v) -> float:
        x, y = v
        if self.p == 2.0:
            return (x * x + y * y) ** 0.5
        return (abs(x) ** self.p + abs(y) ** self.p) ** (1.0 / self.p)

    def dual_eval(self, psi) -> float:
        x, y = psi
        q = self.dual_exponent
        return (abs(x) ** q + abs(y) ** q) ** (1.0 / q)

    def functional(self, v):
        """The unique unit functional norming v (nonzero floats)."""
        x, y = v
        r = self.eval(v)
        if r == 0.0:
            raise ZeroVectorError("zero vector has no norming functional")
        if self.p == 2.0:
            return (x / r, y / r)
        s = r ** (self.p - 1.0)

        def comp(t):
            return (abs(t) ** (self.p - 1.0) if t >= 0 else -(abs(t) ** (self.p - 1.0))) / s

        return (comp(x), comp(y))

    def unit(self, v):
        x, y = v
        r = self.eval(v)
        if r == 0.0:
            raise ZeroVectorError("zero vector has no unit")
        return (x / r, y / r)


def euclidean() -> SmoothNorm:
    return SmoothNorm(2.0)
