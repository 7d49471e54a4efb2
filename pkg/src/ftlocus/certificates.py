"""Subdifferential optimality certificates.

A point minimizes the sum of distances to the sites exactly when norming
functionals of the site directions can be chosen to sum to zero (floating
case) or, at a site itself, so that the others' sum has dual norm at most
one (absorbing case).  Both are linear conditions once each functional is
parameterized over its norming face, so selection is exact LP feasibility.
"""

from __future__ import annotations

from dataclasses import dataclass

from .angles import norm_range_over_segments
from .errors import (
    DuplicateSitesError,
    ModeMismatchError,
    PreconditionViolatedError,
)
from .exactlp import feasible
from .geometry import ORIGIN, Vec
from .norms import PolyNorm, SmoothNorm
from .rational import R0, R1, Rat

FLOATING = "floating"
ABSORBING = "absorbing"


def _as_vec(p) -> Vec:
    if isinstance(p, Vec):
        return p
    # binary floats convert exactly, so smooth-path inputs lose nothing
    x, y = p
    return Vec(Rat(x) if isinstance(x, float) else x, Rat(y) if isinstance(y, float) else y)


@dataclass(frozen=True)
class Certificate:
    """Optimality witness: chosen norming functionals per site.

    functionals holds (site index, covector) pairs; in absorbing mode the
    center site has no entry (its difference vector is zero).
    """

    mode: str
    functionals: tuple
    center: int | None = None

    @property
    def residual(self) -> Vec:
        total = ORIGIN
        for _, phi in self.functionals:
            total = total + _as_vec(phi)
        return total

    def functional_for(self, index: int):
        for i, phi in self.functionals:
            if i == index:
                return phi
        return None


def _check_sites(sites):
    vs = [_as_vec(s) for s in sites]
    if len(set(vs)) != len(vs):
        raise DuplicateSitesError("sites must be pairwise distinct")
    return vs


def _locate(p, sites):
    for j, s in enumerate(sites):
        if s == p:
            return j
    return None


def _check_mode(mode, p, sites, center=None):
    j = _locate(p, sites)
    if mode == FLOATING:
        if j is not None:
            raise ModeMismatchError("floating certificate at a site")
        return None
    if mode == ABSORBING:
        if j is None:
            raise ModeMismatchError("absorbing certificate away from all sites")
        if center is not None and center != j:
            raise ModeMismatchError("absorbing center does not match the point")
        return j
    raise ValueError("unknown certificate mode %r" % mode)


def verify_certificate(norm, sites, p, cert: Certificate, tol: float = 1e-9) -> bool:
    """Check a certificate against its instance; exact for polygonal norms."""
    vs = _check_sites(sites)
    p = _as_vec(p)
    center = _check_mode(cert.mode, p, vs, cert.center)
    expected = set(range(len(vs)))
    if center is not None:
        expected.discard(center)
    if sorted(i for i, _ in cert.functionals) != sorted(expected):
        return False
    if isinstance(norm, SmoothNorm):
        return _verify_smooth(norm, vs, p, cert, tol)
    for i, phi in cert.functionals:
        d = vs[i] - p
        if norm.dual_eval(phi) != 1 or phi.dot(d) != norm.eval(d):
            return False
    if cert.mode == FLOATING:
        return cert.residual == ORIGIN
    return norm.dual_eval(cert.residual) <= 1


def _verify_smooth(norm, vs, p, cert, tol):
    px, py = float(p.x), float(p.y)
    rx = ry = 0.0
    for i, phi in cert.functionals:
        sx, sy = float(vs[i].x), float(vs[i].y)
        dx, dy = sx - px, sy - py
        if isinstance(phi, Vec):
            fx, fy = float(phi.x), float(phi.y)
        else:
            fx, fy = float(phi[0]), float(phi[1])
        if abs(norm.dual_eval((fx, fy)) - 1.0) > tol:
            return False
        if abs(fx * dx + fy * dy - norm.eval((dx, dy))) > tol:
            return False
        rx += fx
        ry += fy
    if cert.mode == FLOATING:
        return norm.dual_eval((rx, ry)) <= tol
    return norm.dual_eval((rx, ry)) <= 1.0 + tol


def _face_params(norm, vs, p, skip=None):
    """Per-site face data: fixed part and, for edge faces, the free segment."""
    fixed = []
    frees = []  # (site index, u, w - u)
    for i, x in enumerate(vs):
        if i == skip:
            continue
        face = norm.norming_face(x - p)
        if face.is_vertex:
            fixed.append((i, face.points[0], None))
        else:
            u, w = face.points
            fixed.append((i, u, w - u))
            frees.append((i, w - u))
    return fixed, frees


def _build_certificate(mode, fixed, params, center=None):
    values = dict(params)
    out = []
    for i, u, d in fixed:
        phi = u if d is None else u + values.get(i, R0) * d
        out.append((i, phi))
    return Certificate(mode, tuple(out), center=center)


def select_functionals(norm, sites, p, mode: str, tol: float = 1e-9) -> Certificate | None:
    """Pick norming functionals meeting the sum condition, or None.

    Exact for polygonal norms.  The LP's first feasible vertex decides among
    a continuum of valid selections; the choice is arbitrary but
    deterministic.  Smooth norms have unique functionals, so selection
    degenerates to checking the sum condition within tol.
    """
    vs = _check_sites(sites)
    p = _as_vec(p)
    center = _check_mode(mode, p, vs, None)
    if isinstance(norm, SmoothNorm):
        out = []
        rx = ry = 0.0
        for i, x in enumerate(vs):
            if i == center:
                continue
            d = (float(x.x - p.x), float(x.y - p.y))
            phi = norm.functional(d)
            out.append((i, phi))
            rx += phi[0]
            ry += phi[1]
        ok = norm.dual_eval((rx, ry)) <= (tol if mode == FLOATING else 1.0 + tol)
        if not ok:
            return None
        return Certificate(mode, tuple(out), center=center)
    fixed, frees = _face_params(norm, vs, p, skip=center)
    base = ORIGIN
    for _, u, _d in fixed:
        base = base + u

    if mode == FLOATING:
        # sum over faces must hit the origin exactly
        if not frees:
            if base == ORIGIN:
                return _build_certificate(mode, fixed, [])
            return None
        m = 2 + len(frees)
        columns = []
        for k, (_i, d) in enumerate(frees):
            col = []
            if d.x != 0:
                col.append((0, d.x))
            if d.y != 0:
                col.append((1, d.y))
            col.append((2 + k, R1))
            columns.append(col)
        for k in range(len(frees)):  # box slacks s_k <= 1
            columns.append([(2 + k, R1)])
        b = [-base.x, -base.y] + [R1] * len(frees)
        sol = feasible(m, b, columns)
        if sol is None:
            return None
        params = [(frees[k][0], sol[k]) for k in range(len(frees))]
        return _build_certificate(mode, fixed, params)

    # absorbing: the sum must land inside the dual ball, i.e. its pairing
    # with every unit-ball vertex stays at most 1
    verts = norm.vertices
    nv = len(verts)
    m = nv + len(frees)
    columns = []
    for k, (_i, d) in enumerate(frees):
        col = [(r, d.dot(v)) for r, v in enumerate(verts) if d.dot(v) != 0]
        col.append((nv + k, R1))
        columns.append(col)
    for r in range(nv):  # slack per containment row
        columns.append([(r, R1)])
    for k in range(len(frees)):
        columns.append([(nv + k, R1)])
    b = [R1 - base.dot(v) for v in verts] + [R1] * len(frees)
    sol = feasible(m, b, columns)
    if sol is None:
        return None
    params = [(frees[k][0], sol[k]) for k in range(len(frees))]
    return _build_certificate(mode, fixed, params, center=center)


def _face_points(face):
    pts = tuple(face.points) if hasattr(face, "points") else tuple(face)
    assert 1 <= len(pts) <= 2
    return tuple(_as_vec(p) for p in pts)


def select_three(norm: PolyNorm, f1, f2, f3):
    """Pick one point from each unit-ball face so the three sum to zero.

    Preconditions (both checked): each face pair admits representatives
    whose sum has norm exactly 1, and the faces are not contained in one
    closed half-plane through the origin.
    """
    faces = [_face_points(f) for f in (f1, f2, f3)]
    anchors = [p for pts in faces for p in pts]
    for s in anchors:
        for sgn in (1, -1):
            if all(sgn * s.cross(t) >= 0 for t in anchors):
                raise PreconditionViolatedError(
                    "half-plane", "faces lie in one closed half-plane through o"
                )
    for a in range(3):
        for b in range(a + 1, 3):
            lo, hi = norm_range_over_segments(norm.dual_vertices, faces[a], faces[b])
            if not (lo <= 1 <= hi):
                raise PreconditionViolatedError(
                    "pairwise-sum",
                    "faces %d and %d admit no pair summing to norm 1" % (a + 1, b + 1),
                )

    base = ORIGIN
    frees = []
    for pts in faces:
        base = base + pts[0]
        frees.append(pts[1] - pts[0] if len(pts) == 2 else None)
    dirs = [(k, d) for k, d in enumerate(frees) if d is not None]
    if not dirs:
        return tuple(pts[0] for pts in faces) if base == ORIGIN else None
    m = 2 + len(dirs)
    columns = []
    for k, (_slot, d) in enumerate(dirs):
        col = []
        if d.x != 0:
            col.append((0, d.x))
        if d.y != 0:
            col.append((1, d.y))
        col.append((2 + k, R1))
        columns.append(col)
    for k in range(len(dirs)):
        columns.append([(2 + k, R1)])
    b = [-base.x, -base.y] + [R1] * len(dirs)
    sol = feasible(m, b, columns)
    if sol is None:
        return None
    values = {slot: sol[k] for k, (slot, _d) in enumerate(dirs)}
    out = []
    for k, pts in enumerate(faces):
        if frees[k] is None:
            out.append(pts[0])
        else:
            out.append(pts[0] + values[k] * frees[k])
    return tuple(out)
