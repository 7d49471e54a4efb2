"""Critical and absorbing angles, pointedness, and the degree-3 criterion.

An angle at a vertex is critical when some pair of norming functionals of
its arms sums to a unit covector, and absorbing when the sum can be brought
inside the dual ball.  Over polygonal norms both reduce to asking whether 1
(or anything <= 1) lies in the exact range of ||phi1 + phi2|| as the phi
vary over the two norming faces.  That range is a closed interval: the face
product is connected, the norm is continuous and convex, so the image is an
interval whose max sits at endpoint pairs and whose min is a tiny LP.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateConfigError, ZeroArmError, ZeroVectorError
from .exactlp import OPTIMAL, feasible, solve_standard
from .geometry import Vec
from .norms import DualFace, PolyNorm, SmoothNorm
from .rational import R0, R1, Rat

SMOOTH_TOL = 1e-9


def _as_vec(p) -> Vec:
    if isinstance(p, Vec):
        return p
    return Vec(p[0], p[1])


def _as_floats(p):
    if isinstance(p, Vec):
        return p.as_floats()
    return (float(p[0]), float(p[1]))


def _exact_from_float(p) -> Vec:
    # floats are dyadic rationals, so this conversion is lossless
    return Vec(Rat(float(p[0])), Rat(float(p[1])))


@dataclass(frozen=True)
class AngleQuery:
    """An angle: vertex x0 with arms reaching to points x1 and x2."""

    norm: object
    vertex: object
    arm1: object
    arm2: object

    def directions(self):
        v = _as_vec(self.vertex)
        d1 = _as_vec(self.arm1) - v
        d2 = _as_vec(self.arm2) - v
        if d1.is_zero() or d2.is_zero():
            raise ZeroArmError("angle arm coincides with the vertex")
        return d1, d2

    def float_directions(self):
        vx, vy = _as_floats(self.vertex)
        ax, ay = _as_floats(self.arm1)
        bx, by = _as_floats(self.arm2)
        d1 = (ax - vx, ay - vy)
        d2 = (bx - vx, by - vy)
        if d1 == (0.0, 0.0) or d2 == (0.0, 0.0):
            raise ZeroArmError("angle arm coincides with the vertex")
        return d1, d2


def norm_range_over_segments(support, pts1, pts2):
    """Exact (min, max) of max_s s.(z1 + z2) for z1, z2 on two segments.

    support is the vertex set of a symmetric polygon; the maximum over it is
    the polyhedral norm being ranged.  pts1/pts2 hold one point (fixed) or
    two (segment endpoints).
    """

    def value(z):
        return max(s.dot(z) for s in support)

    hi = max(value(e1 + e2) for e1 in pts1 for e2 in pts2)
    free = []  # (direction vector) per segment face
    base = pts1[0] + pts2[0]
    for pts in (pts1, pts2):
        if len(pts) == 2:
            free.append(pts[1] - pts[0])
    if not free:
        return value(base), hi

    # min t  s.t.  s.base + sum_k s_k (s.d_k) <= t  for every support vector
    num_support = len(support)
    m = num_support + len(free)
    columns = []
    costs = []
    for k, d in enumerate(free):  # segment parameters s_k in [0, 1]
        col = [(i, s.dot(d)) for i, s in enumerate(support)]
        col.append((num_support + k, R1))
        columns.append([(i, v) for i, v in col if v != 0])
        costs.append(R0)
    columns.append([(i, -R1) for i in range(num_support)])  # t
    costs.append(R1)
    for i in range(m):  # slacks: support rows and the box rows
        columns.append([(i, R1)])
        costs.append(R0)
    b = [-s.dot(base) for s in support] + [R1] * len(free)
    res = solve_standard(m, b, columns, costs)
    assert res.status == OPTIMAL, "norm range LP cannot fail on segments"
    return res.value, hi


def sum_norm_range(norm: PolyNorm, f1: DualFace, f2: DualFace):
    """Range of the dual norm of phi1 + phi2 over two dual-ball faces."""
    return norm_range_over_segments(norm.vertices, f1.points, f2.points)


def is_critical(q: AngleQuery, tol: float = SMOOTH_TOL) -> bool:
    """Can the angle be completed by a third ray into a floating FT star?"""
    if isinstance(q.norm, SmoothNorm):
        d1, d2 = q.float_directions()
        p1 = q.norm.functional(d1)
        p2 = q.norm.functional(d2)
        s = q.norm.dual_eval((p1[0] + p2[0], p1[1] + p2[1]))
        return abs(s - 1.0) <= tol
    d1, d2 = q.directions()
    lo, hi = sum_norm_range(q.norm, q.norm.norming_face(d1), q.norm.norming_face(d2))
    return lo <= 1 <= hi


def is_absorbing(q: AngleQuery, tol: float = SMOOTH_TOL) -> bool:
    """Is the vertex an FT point of {vertex, arm1, arm2}?"""
    if isinstance(q.norm, SmoothNorm):
        d1, d2 = q.float_directions()
        p1 = q.norm.functional(d1)
        p2 = q.norm.functional(d2)
        return q.norm.dual_eval((p1[0] + p2[0], p1[1] + p2[1])) <= 1.0 + tol
    d1, d2 = q.directions()
    lo, _ = sum_norm_range(q.norm, q.norm.norming_face(d1), q.norm.norming_face(d2))
    return lo <= 1


def is_pointed(dirs) -> bool:
    """Does some covector see every direction strictly positively?

    Strictness is scale-free: a strictly positive covector can be scaled to
    give psi(d_i) >= 1, so the exact feasibility below decides it.
    """
    ds = [_as_vec(d) for d in dirs]
    for d in ds:
        if d.is_zero():
            raise ZeroVectorError("pointedness of a zero direction")
    m = len(ds)
    columns = []
    for sgn in (R1, -R1):
        columns.append([(i, sgn * d.x) for i, d in enumerate(ds) if d.x != 0])
        columns.append([(i, sgn * d.y) for i, d in enumerate(ds) if d.y != 0])
    for i in range(m):
        columns.append([(i, -R1)])
    return feasible(m, [R1] * m, columns) is not None


def is_floating_deg3(norm, x0, a1, a2, a3, tol: float = SMOOTH_TOL) -> bool:
    """Is x0 a floating FT point of the three arm endpoints?

    Holds exactly when the star is not pointed and all three pairwise
    angles are critical.
    """
    smooth = isinstance(norm, SmoothNorm)
    if smooth:
        pts = [_exact_from_float(p) for p in (x0, a1, a2, a3)]
    else:
        pts = [_as_vec(p) for p in (x0, a1, a2, a3)]
    v, arms = pts[0], pts[1:]
    ds = []
    for a in arms:
        d = a - v
        if d.is_zero():
            raise ZeroArmError("arm coincides with the vertex")
        ds.append(d)
    prims = [d.primitive() for d in ds]
    if len(set(prims)) < 3:
        raise DegenerateConfigError("coincident arm directions")
    if is_pointed(ds):
        return False
    for i in range(3):
        for j in range(i + 1, 3):
            if not is_critical(AngleQuery(norm, x0, (a1, a2, a3)[i], (a1, a2, a3)[j]), tol):
                return False
    return True
