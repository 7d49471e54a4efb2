"""Structural classification of site configurations.

Beyond computing the minimizing locus, a fair amount can be said about how
that locus sits relative to the sites themselves: whether it stays inside
their convex hull, which sites belong to their own locus, and when the
configuration decomposes into paired clusters whose difference directions
share a single face of the unit ball.  The predicates here compute those
structural facts exactly and double-check, on every call, the geometric
laws that connect them.  A violated law raises AssertionError rather than
returning quietly wrong structure.

Double cluster: an even set split into ordered pairs (x, y) whose unit
difference directions un(x - y) all lie in one proper exposed face of the
ball.  Pseudo double cluster: a double cluster, plus one point minimizing
the cluster's distance sum (the centre), plus one arbitrary extra point.

All of this is exact rational arithmetic over polygonal norms.
"""

from dataclasses import dataclass

from .certificates import FLOATING, select_functionals
from .engine import FTResult, d_segment, ft_locus
from .errors import DuplicateSitesError, OddCardinalityError
from .geometry import (
    ORIGIN,
    POINT,
    POLYGON,
    ConvexRegion,
    Vec,
    convex_hull,
    intersect_regions,
)
from .norms import AFFINE_REGULAR_HEXAGON, PARALLELOGRAM, BallFace, PolyNorm
from .rational import Rat

LOCUS_INSIDE_HULL = "locus_inside_hull"
LOCUS_TOUCHES_BOUNDARY = "locus_touches_boundary"
LOCUS_ESCAPES_HULL = "locus_escapes_hull"

# Perfect matchings are searched exhaustively up to this many points; above
# it a greedy sweep is used and results are marked non-exhaustive.
EXHAUSTIVE_PAIRING_LIMIT = 12


@dataclass(frozen=True)
class DoubleCluster:
    """Pairing of the sites and the ball face holding every pair direction.

    Each pair (x, y) is ordered so that un(x - y) lies in `face`.  When
    `exhaustive` is False the pairing search was greedy, so a returned
    None from the detector would not have been conclusive.
    """

    pairs: tuple
    face: BallFace
    exhaustive: bool


@dataclass(frozen=True)
class PseudoDoubleCluster:
    cluster: DoubleCluster
    centre: Vec
    extra: Vec


@dataclass(frozen=True)
class ClassificationReport:
    sites: tuple
    result: FTResult
    hull: ConvexRegion
    hull_relation: str
    a_cap_ft: tuple
    double_cluster: "DoubleCluster | None"
    pseudo_double_cluster: "PseudoDoubleCluster | None"
    ball_shape: str


def _check_distinct(sites):
    vs = list(sites)
    if len(set(vs)) != len(vs):
        raise DuplicateSitesError("sites must be pairwise distinct")
    return vs


def _on_closed_segment(p: Vec, a: Vec, b: Vec) -> bool:
    return (b - a).cross(p - a) == 0 and (p - a).dot(p - b) <= 0


def _face_holds_direction(face: BallFace, u: Vec) -> bool:
    # u is a unit vector; for an edge face membership is the closed segment
    if face.is_edge:
        return _on_closed_segment(u, face.points[0], face.points[1])
    return u == face.points[0]


def _match_exhaustive(adj, taken, i, n, out):
    while i < n and taken[i]:
        i += 1
    if i == n:
        return True
    taken[i] = True
    for j, oriented in adj[i]:
        if taken[j]:
            continue
        taken[j] = True
        out.append((i, j) if oriented else (j, i))
        if _match_exhaustive(adj, taken, i + 1, n, out):
            return True
        out.pop()
        taken[j] = False
    taken[i] = False
    return False


def _match_greedy(adj, n, out):
    taken = [False] * n
    for i in range(n):
        if taken[i]:
            continue
        for j, oriented in adj[i]:
            if not taken[j]:
                taken[i] = taken[j] = True
                out.append((i, j) if oriented else (j, i))
                break
        else:
            return False
    return True


def detect_double_cluster(norm: PolyNorm, sites) -> "DoubleCluster | None":
    """First face (ball vertices first, then edges, CCW) admitting a
    perfect pairing of the sites, or None.

    Raises OddCardinalityError for an odd number of sites.  On more than
    EXHAUSTIVE_PAIRING_LIMIT sites the per-face search degrades to a
    greedy sweep and any result carries exhaustive=False.
    """
    vs = _check_distinct(sites)
    n = len(vs)
    if n % 2:
        raise OddCardinalityError("double clusters have an even number of points")
    if n < 2:
        raise ValueError("need at least two sites")

    units = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            u = norm.unit(vs[i] - vs[j])
            units[i][j] = u
            units[j][i] = -u

    exhaustive = n <= EXHAUSTIVE_PAIRING_LIMIT
    for face in norm.exposed_faces():
        # at most one orientation of a pair can sit in a proper face
        adj = [[] for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                if _face_holds_direction(face, units[i][j]):
                    adj[i].append((j, True))
                    adj[j].append((i, True))
                elif _face_holds_direction(face, units[j][i]):
                    adj[i].append((j, False))
                    adj[j].append((i, False))
        out = []
        if exhaustive:
            ok = _match_exhaustive(adj, [False] * n, 0, n, out)
        else:
            ok = _match_greedy(adj, n, out)
        if ok:
            pairs = tuple((vs[i], vs[j]) for i, j in out)
            return DoubleCluster(pairs, face, exhaustive)
    return None


def _pseudo_with_centre(norm, vs, ci):
    for ei in range(len(vs)):
        if ei == ci:
            continue
        rest = [vs[k] for k in range(len(vs)) if k not in (ci, ei)]
        if len(rest) < 2:
            continue
        cluster = detect_double_cluster(norm, rest)
        if cluster is None:
            continue
        if ft_locus(norm, rest).locus.contains(vs[ci]):
            return PseudoDoubleCluster(cluster, vs[ci], vs[ei])
    return None


def detect_pseudo_double_cluster(norm: PolyNorm, sites) -> "PseudoDoubleCluster | None":
    """Decomposition into double cluster + its minimizer + one extra point.

    Centres and extras are tried in site order, so the result is
    deterministic.  Raises OddCardinalityError for odd input.
    """
    vs = _check_distinct(sites)
    if len(vs) % 2:
        raise OddCardinalityError("pseudo double clusters have an even number of points")
    for ci in range(len(vs)):
        hit = _pseudo_with_centre(norm, vs, ci)
        if hit is not None:
            return hit
    return None


def _hull_relation(hull: ConvexRegion, locus: ConvexRegion) -> str:
    if not all(hull.contains(v) for v in locus.vertices):
        return LOCUS_ESCAPES_HULL
    # contained locus meets the boundary iff one of its vertices does
    if any(hull.boundary_contains(v) for v in locus.vertices):
        return LOCUS_TOUCHES_BOUNDARY
    return LOCUS_INSIDE_HULL


def _assert_edge_law(norm, vs, locus, hull):
    # a minimizer interior to a hull edge and away from the sites forces
    # at least half the sites onto that edge; this needs the edge
    # direction to be a corner of the ball, with a whole segment of
    # functionals (smooth edge directions admit escaped loci that cross
    # an edge with only its two endpoints in the site set)
    if hull.kind != POLYGON:
        return
    for a, b in hull.edge_list():
        if not norm.norming_face(b - a).is_edge:
            continue
        inter = intersect_regions(locus, ConvexRegion.segment(a, b))
        if inter.is_empty():
            continue
        if inter.kind == POINT:
            z = inter.vertices[0]
            if z == a or z == b or z in vs:
                continue
        on_edge = sum(1 for s in vs if _on_closed_segment(s, a, b))
        assert 2 * on_edge >= len(vs)


def _assert_mutual_face_law(norm, a_cap_ft):
    # sites inside their own locus are hull vertices of that subset, and
    # from each one the directions to the others share a single ball face
    if not a_cap_ft:
        return
    sub_hull = convex_hull(a_cap_ft)
    faces = norm.exposed_faces()
    for p in a_cap_ft:
        assert p in sub_hull.vertices
        dirs = [norm.unit(q - p) for q in a_cap_ft if q != p]
        if dirs:
            assert any(
                all(_face_holds_direction(face, u) for u in dirs) for face in faces
            )


def classify_instance(norm: PolyNorm, sites) -> ClassificationReport:
    """Exact structural report for a configuration of at least three sites.

    Along the way every structural law relating the computed facts is
    checked; a violation is a bug and raises AssertionError.
    """
    vs = _check_distinct(sites)
    n = len(vs)
    if n < 3:
        raise ValueError("need at least three sites")

    res = ft_locus(norm, vs)
    locus = res.locus
    hull = convex_hull(vs)
    relation = _hull_relation(hull, locus)
    a_cap_ft = tuple(s for s in vs if locus.contains(s))

    cluster = detect_double_cluster(norm, vs) if n % 2 == 0 else None
    pseudo = detect_pseudo_double_cluster(norm, vs) if n % 2 == 0 else None

    # an escaping locus only happens for double clusters, and the locus
    # is the common region of the pair d-segments for the pairing read
    # off a balanced functional choice at an escaped point (an arbitrary
    # valid pairing would not do: its d-segments need a common point)
    if relation == LOCUS_ESCAPES_HULL:
        assert n % 2 == 0 and cluster is not None
        far = next(v for v in locus.vertices if not hull.contains(v))
        cert = select_functionals(norm, vs, far, FLOATING)
        assert cert is not None
        phis = [phi for _, phi in cert.functionals]
        phi = phis[0]
        pos = [i for i, f in enumerate(phis) if f == phi]
        neg = [i for i, f in enumerate(phis) if f == -phi]
        assert len(pos) == len(neg) == n // 2
        assert locus == intersect_regions(
            *[d_segment(norm, vs[i], vs[j]) for i, j in zip(pos, neg)]
        )
    if n % 2 == 1:
        assert relation != LOCUS_ESCAPES_HULL

    # an even set with a hull vertex inside the locus decomposes around it
    if n % 2 == 0:
        for v in hull.vertices:
            if v in a_cap_ft:
                assert _pseudo_with_centre(norm, vs, vs.index(v)) is not None

    _assert_edge_law(norm, vs, locus, hull)
    _assert_mutual_face_law(norm, a_cap_ft)

    # at most four sites can minimize, and three or four pin both the
    # ball shape and the locus itself
    assert len(a_cap_ft) <= 4
    if len(a_cap_ft) == 4:
        assert norm.shape_class() == PARALLELOGRAM
        assert locus == convex_hull(a_cap_ft)
    if len(a_cap_ft) == 3:
        assert norm.shape_class() == AFFINE_REGULAR_HEXAGON
        assert locus == convex_hull(a_cap_ft)

    return ClassificationReport(
        sites=tuple(vs),
        result=res,
        hull=hull,
        hull_relation=relation,
        a_cap_ft=a_cap_ft,
        double_cluster=cluster,
        pseudo_double_cluster=pseudo,
        ball_shape=norm.shape_class(),
    )


def _in_closed_angle(d1: Vec, d2: Vec, w: Vec) -> bool:
    # cone spanned by two arm directions; opposite arms are kept to their
    # common line, the only unambiguous part of a straight angle
    c = d1.cross(d2)
    if c != 0:
        a = w.cross(d2) / c
        b = d1.cross(w) / c
        return a >= 0 and b >= 0
    if d1.dot(d2) > 0:
        return d1.cross(w) == 0 and d1.dot(w) >= 0
    return d1.cross(w) == 0


def reflection_condition(norm, p0: Vec, sites) -> bool:
    """Whether every angle spanned at p0 by two sites catches some site's
    reflection through p0.

    When it does, p0 is forced to minimize for the sites together with p0
    itself; that consequence is asserted here for polygonal norms.
    """
    vs = _check_distinct(sites)
    if len(vs) < 2:
        raise ValueError("need at least two sites")
    if p0 in vs:
        raise ValueError("reflection centre must not be one of the sites")

    dirs = [s - p0 for s in vs]
    for i in range(len(dirs)):
        for j in range(i + 1, len(dirs)):
            if not any(_in_closed_angle(dirs[i], dirs[j], -d) for d in dirs):
                return False

    if isinstance(norm, PolyNorm):
        assert ft_locus(norm, [p0] + vs).locus.contains(p0)
    return True


def edge_interior_fixture(norm: PolyNorm, vertex_index: int = 0):
    """Six sites whose locus meets the interior of a hull edge at a
    non-site point.

    Built around ball vertex number `vertex_index`: four sites on its
    line through the origin plus the reflected midpoint of the ball edge
    arriving at the vertex and the midpoint of the edge leaving it.  The
    origin minimizes, sits inside the hull edge between the outer pair,
    and four of the six sites lie on that edge.
    """
    vbs = norm.vertices
    k = len(vbs)
    x0 = vbs[vertex_index % k]
    prev = vbs[(vertex_index - 1) % k]
    nxt = vbs[(vertex_index + 1) % k]
    half = Rat(1, 2)
    x2 = (prev + x0) * -half
    x3 = (x0 + nxt) * half
    sites = [x0 * -2, -x0, x0, x0 * 2, x2, x3]
    assert len(set(sites)) == 6
    assert select_functionals(norm, sites, ORIGIN, FLOATING) is not None
    return sites
