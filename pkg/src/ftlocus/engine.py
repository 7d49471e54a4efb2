"""Minimum-sum-of-distances solver and locus reconstruction.

The polygonal path is a single exact LP.  Writing the objective as
max-of-linear via the dual-ball vertices and dualizing the epigraph program
gives variables w_ij >= 0 (site i, dual vertex j) with

    sum_j w_ij = 1          (one convexity row per site)
    sum_ij w_ij phi_j = o   (two balance rows)
    minimize  - sum_ij w_ij (phi_j . x_i)

whose value is -V.  The balance-row multipliers recover an optimal point
p = -(y_n, y_n+1) (weak duality pins it: each convexity multiplier is at
most -|x_i + q| and they sum to -V).  Complementary slackness makes
psi_i = sum_j w_ij phi_j a norming functional of x_i - p at EVERY optimum,
so the whole locus is the intersection of the cones these functionals
expose, and every point of that intersection is optimal because the psi_i
sum to zero.  No re-solves, no sampling.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certificates import (
    ABSORBING,
    FLOATING,
    Certificate,
    _as_vec,
    _check_sites,
    verify_certificate,
)
from .errors import (
    CancelToken,
    CoincidentPointsError,
    DuplicateSitesError,
    MaxIterationsExceededError,
)
from .exactlp import OPTIMAL, solve_standard
from .geometry import (
    POINT,
    POLYGON,
    SEGMENT,
    ConvexRegion,
    Halfplane,
    Vec,
    convex_hull,
    intersect_halfplanes,
    intersect_regions,
)
from .norms import PolyNorm, SmoothNorm
from .rational import R0, R1, Rat

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Cone:
    """Apex plus one (ray) or two (wedge spanning less than a half-plane)
    extreme directions; the translate of the negated cone over a ball face."""

    apex: Vec
    directions: tuple


@dataclass(frozen=True)
class FTResult:
    locus: ConvexRegion
    value: object
    certificate: Certificate
    witness: object


def ft_objective(norm, sites, p):
    """Sum of distances from p to the sites; exact when everything is."""
    if isinstance(norm, SmoothNorm):
        px, py = (float(p.x), float(p.y)) if isinstance(p, Vec) else (float(p[0]), float(p[1]))
        return sum(norm.eval((float(s[0]) - px, float(s[1]) - py)) for s in sites)
    p = _as_vec(p)
    total = R0
    for s in sites:
        total += norm.eval(_as_vec(s) - p)
    return total


def ft_solution(norm: PolyNorm, sites, cancel: CancelToken | None = None):
    """Exact optimum: (point, value, norming functionals per site)."""
    vs = [_as_vec(s) for s in sites]
    duals = norm.dual_vertices
    n = len(vs)
    k = len(duals)
    m = n + 2
    columns = []
    costs = []
    for i, x in enumerate(vs):
        for phi in duals:
            col = [(i, R1)]
            if phi.x != 0:
                col.append((n, phi.x))
            if phi.y != 0:
                col.append((n + 1, phi.y))
            columns.append(col)
            costs.append(-phi.dot(x))
    b = [R1] * n + [R0, R0]
    res = solve_standard(m, b, columns, costs, cancel)
    assert res.status == OPTIMAL  # bounded below by -sum of max pairings
    value = -res.value
    p = Vec(-res.y[n], -res.y[n + 1])
    psis = []
    for i in range(n):
        acc = Vec(R0, R0)
        for j in range(k):
            w = res.x[i * k + j]
            if w != 0:
                acc = acc + w * duals[j]
        psis.append(acc)
    assert ft_objective(norm, vs, p) == value
    total = Vec(R0, R0)
    for psi in psis:
        total = total + psi
    assert total.is_zero()
    return p, value, psis


def ft_point(norm, sites, tol: float = DEFAULT_TOL, cancel: CancelToken | None = None):
    """One minimizer and the optimal value."""
    if not sites:
        raise ValueError("need at least one site")
    if isinstance(norm, SmoothNorm):
        pts = [(float(s[0]), float(s[1])) for s in sites]
        if len(set(pts)) != len(pts):
            raise DuplicateSitesError("sites must be pairwise distinct")
        if len(pts) == 1:
            return pts[0], 0.0
        p = weiszfeld(norm, pts, tol=tol)
        return p, ft_objective(norm, pts, p)
    vs = _check_sites(sites)
    if len(vs) == 1:
        return vs[0], R0
    p, value, _ = ft_solution(norm, vs, cancel)
    return p, value


def build_cone(norm: PolyNorm, site: Vec, psi: Vec) -> Cone:
    face = norm.exposed_face_of(psi)
    return Cone(site, tuple(-u for u in face))


def cone_halfplanes(cone: Cone):
    x = cone.apex
    if len(cone.directions) == 1:
        (d,) = cone.directions
        n1 = d.perp()
        return [
            Halfplane(n1, n1.dot(x)),
            Halfplane(-n1, -n1.dot(x)),
            Halfplane(-d, -d.dot(x)),
        ]
    d1, d2 = cone.directions
    if d1.cross(d2) < 0:
        d1, d2 = d2, d1
    # wedge between d1 and d2, counterclockwise, spanning under half a turn
    n1 = d1.perp()
    n2 = d2.perp()
    return [Halfplane(-n1, -n1.dot(x)), Halfplane(n2, n2.dot(x))]


def ft_locus(norm: PolyNorm, sites, cancel: CancelToken | None = None) -> FTResult:
    """The full set of minimizers, with certificate and witness."""
    vs = _check_sites(sites)
    if len(vs) < 2:
        raise ValueError("need at least two sites")
    p, value, psis = ft_solution(norm, vs, cancel)

    slack = [i for i, psi in enumerate(psis) if norm.dual_eval(psi) < 1]
    if slack:
        # a functional short of the dual sphere pins the optimum to its site
        j = slack[0]
        assert p == vs[j]
        cert = Certificate(
            ABSORBING,
            tuple((i, psis[i]) for i in range(len(vs)) if i != j),
            center=j,
        )
        assert verify_certificate(norm, vs, p, cert)
        return FTResult(ConvexRegion.point(p), value, cert, p)

    hs = []
    for x, psi in zip(vs, psis):
        hs.extend(cone_halfplanes(build_cone(norm, x, psi)))
    region = intersect_halfplanes(hs)
    assert region.kind in (POINT, SEGMENT, POLYGON)

    if region.kind == POINT:
        witness = region.vertices[0]
    else:
        total = Vec(R0, R0)
        for v in region.vertices:
            total = total + v
        witness = Rat(1, len(region.vertices)) * total
        assert witness not in vs  # sites inside the locus are extreme points
    assert region.contains(witness)

    j = next((i for i, s in enumerate(vs) if s == witness), None)
    if j is None:
        cert = Certificate(FLOATING, tuple(enumerate(psis)))
    else:
        cert = Certificate(
            ABSORBING,
            tuple((i, psis[i]) for i in range(len(vs)) if i != j),
            center=j,
        )
    assert verify_certificate(norm, vs, witness, cert)
    return FTResult(region, value, cert, witness)


def d_segment(norm: PolyNorm, a, b) -> ConvexRegion:
    """Points through which a shortest path from a to b can pass.

    A straight segment unless the direction's unit vector sits in the
    relative interior of a ball edge; then the full parallelogram spanned
    by that edge's endpoint directions with a and b opposite corners.
    """
    a = _as_vec(a)
    b = _as_vec(b)
    if a == b:
        raise CoincidentPointsError("need two distinct endpoints")
    d = b - a
    u = norm.unit(d)
    if u in norm.vertices:
        return ConvexRegion.segment(a, b)
    for i, v1 in enumerate(norm.vertices):
        v2 = norm.vertices[(i + 1) % len(norm.vertices)]
        e = v2 - v1
        if e.cross(u - v1) == 0 and (u - v1).dot(u - v2) < 0:
            det = v1.cross(v2)
            alpha = d.cross(v2) / det
            beta = v1.cross(d) / det
            assert alpha > 0 and beta > 0
            return convex_hull([a, a + alpha * v1, b, a + beta * v2])
    raise AssertionError("unit vector escaped every boundary face")


def d_concurrent_locus(norm: PolyNorm, pairs):
    """Common point set of the pairs' d-segments, or None when empty."""
    flat = []
    for a, b in pairs:
        flat.append(_as_vec(a))
        flat.append(_as_vec(b))
    if len(set(flat)) != len(flat):
        raise DuplicateSitesError("pair endpoints must be pairwise distinct")
    region = None
    for a, b in pairs:
        seg = d_segment(norm, a, b)
        region = seg if region is None else intersect_regions(region, seg)
        if region.is_empty():
            return None
    return region


@dataclass(frozen=True)
class DCollinearity:
    order: tuple  # indices into the input, endpoint to endpoint
    locus: ConvexRegion


def d_collinear_analyze(norm: PolyNorm, sites):
    """Order the sites along a metric line if possible, else None.

    The endpoints are the max-distance pair; interior points sort by
    distance from one endpoint; the order is valid when distances add up
    exactly along every triple.
    """
    vs = _check_sites(sites)
    n = len(vs)
    if n < 2:
        raise ValueError("need at least two sites")
    dist = [[R0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            dist[i][j] = dist[j][i] = norm.eval(vs[j] - vs[i])
    best = (0, 1)
    for i in range(n):
        for j in range(i + 1, n):
            if dist[i][j] > dist[best[0]][best[1]]:
                best = (i, j)
    start = best[0]
    order = sorted(range(n), key=lambda i: (dist[start][i], i))
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                i, j, k = order[a], order[b], order[c]
                if dist[i][k] != dist[i][j] + dist[j][k]:
                    return None
    if n % 2 == 1:
        locus = ConvexRegion.point(vs[order[n // 2]])
    else:
        locus = d_segment(norm, vs[order[n // 2 - 1]], vs[order[n // 2]])
    return DCollinearity(tuple(order), locus)


def weiszfeld(norm: SmoothNorm, sites, tol: float = DEFAULT_TOL, max_iter: int = 100000):
    """Iterative minimizer for smooth norms; stops on the dual residual test."""
    pts = [(float(s[0]), float(s[1])) for s in sites]
    if len(set(pts)) != len(pts):
        raise DuplicateSitesError("sites must be pairwise distinct")
    n = len(pts)
    if n == 1:
        return pts[0]
    if n == 2:
        return ((pts[0][0] + pts[1][0]) / 2, (pts[0][1] + pts[1][1]) / 2)

    scale = max(max(abs(c) for c in s) for s in pts) or 1.0
    snap = 1e-13 * scale
    spacing = min(
        norm.eval((pts[i][0] - pts[j][0], pts[i][1] - pts[j][1]))
        for i in range(n)
        for j in range(i + 1, n)
    )
    dual = SmoothNorm(norm.dual_exponent)
    px = sum(s[0] for s in pts) / n
    py = sum(s[1] for s in pts) / n

    for _ in range(max_iter):
        at = None
        for j, s in enumerate(pts):
            if abs(px - s[0]) <= snap and abs(py - s[1]) <= snap:
                at = j
                break
        rx = ry = 0.0
        for i, s in enumerate(pts):
            if i == at:
                continue
            phi = norm.functional((s[0] - px, s[1] - py))
            rx += phi[0]
            ry += phi[1]
        rn = norm.dual_eval((rx, ry))
        if at is not None:
            if rn <= 1.0 + tol:
                return pts[at]
            # not optimal at the site: step toward the residual's dual unit
            ux, uy = dual.functional((rx, ry))
            step = spacing / 4
            while ft_objective(norm, pts, (px + step * ux, py + step * uy)) >= ft_objective(norm, pts, (px, py)):
                step /= 2
                if step < snap:
                    break
            px += step * ux
            py += step * uy
            continue
        if rn <= tol:
            return (px, py)
        if norm.p == 2.0:
            num_x = num_y = den = 0.0
            for s in pts:
                d = norm.eval((s[0] - px, s[1] - py))
                num_x += s[0] / d
                num_y += s[1] / d
                den += 1.0 / d
            px, py = num_x / den, num_y / den
        else:
            # backtracking descent along the summed functionals
            f0 = ft_objective(norm, pts, (px, py))
            step = spacing
            while step > 1e-18 * scale:
                cand = (px + step * rx, py + step * ry)
                if ft_objective(norm, pts, cand) < f0 - 0.25 * step * (rx * rx + ry * ry):
                    px, py = cand
                    break
                step /= 2
            else:
                return (px, py)  # step size exhausted at float resolution
    raise MaxIterationsExceededError("residual still above tolerance")
