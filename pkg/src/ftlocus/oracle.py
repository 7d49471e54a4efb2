"""Brute-force oracles and seeded property suites.

The exact engine is validated against a float minimizer that shares no
code with it: a coarse grid sweep plus a derivative-free refinement
(the objective is convex, so interval-shrinking line searches converge
globally).  The suite runner wraps the package-wide invariants into
named batches of seeded random trials whose reports are reproducible
byte for byte.
"""

import random
from dataclasses import dataclass

import numpy as np

from .certificates import FLOATING, select_functionals, verify_certificate
from .classify import classify_instance
from .engine import (
    d_collinear_analyze,
    d_segment,
    ft_locus,
    ft_objective,
)
from .errors import UnknownSuiteError
from .geometry import POLYGON, Vec, convex_hull, intersect_regions
from .kernels import (
    BACKEND,
    objective_batch_lp,
    objective_batch_poly,
    refine_nested_ternary_lp,
    refine_nested_ternary_poly,
)
from .angles import is_floating_deg3
from .norms import PolyNorm, SmoothNorm
from .rational import Rat

GRID_STEPS = 48
TERNARY_ITERS = 90
MS_PROBES = 8
MS_OUTER = 24
MS_INNER = 26
_CHUNK = 1 << 16


@dataclass(frozen=True)
class RandomInstance:
    """Seed-reproducible random norm plus site set."""

    seed: int
    norm: PolyNorm
    sites: tuple

    @classmethod
    def generate(cls, seed: int) -> "RandomInstance":
        rng = random.Random(seed)
        norm = random_norm(rng)
        sites = random_sites(rng, rng.randint(3, 8))
        return cls(seed, norm, tuple(sites))


def random_norm(rng: random.Random) -> PolyNorm:
    """Symmetric polygonal ball with 4 to 12 vertices, denominator 8."""
    while True:
        half = [
            Vec(Rat(rng.randint(-24, 24), 8), Rat(rng.randint(-24, 24), 8))
            for _ in range(rng.randint(2, 6))
        ]
        hull = convex_hull([p for p in half if not p.is_zero()] + [-p for p in half if not p.is_zero()])
        if hull.kind == POLYGON and len(hull.vertices) >= 4:
            return PolyNorm.from_ball_vertices(hull.vertices)


def random_sites(rng: random.Random, count: int):
    """Distinct rational points in [-10, 10]^2 with small denominators."""
    sites = []
    while len(sites) < count:
        den = rng.choice((1, 2, 3, 4))
        p = Vec(
            Rat(rng.randint(-10 * den, 10 * den), den),
            Rat(rng.randint(-10 * den, 10 * den), den),
        )
        if p not in sites:
            sites.append(p)
    return sites


def _xy(site):
    if isinstance(site, Vec):
        return float(site.x), float(site.y)
    x, y = site
    return float(x), float(y)


def _norm_arrays(norm, sites):
    sx = np.array([_xy(s)[0] for s in sites])
    sy = np.array([_xy(s)[1] for s in sites])
    if isinstance(norm, PolyNorm):
        dx = np.array([float(v.x) for v in norm.dual_vertices])
        dy = np.array([float(v.y) for v in norm.dual_vertices])
        return sx, sy, (dx, dy)
    return sx, sy, float(norm.p)


def default_bbox(norm, sites):
    """Box certain to contain every minimizer.

    Any minimizer lies within distance 2 * sum ||site|| of the origin, so
    the site box padded by that radius times the ball's coordinate reach
    is safe.
    """
    sx, sy, extra = _norm_arrays(norm, sites)
    if isinstance(extra, tuple):
        dx, dy = extra
        total = float((sx[:, None] * dx[None, :] + sy[:, None] * dy[None, :]).max(axis=1).sum())
        reach = max(max(abs(float(v.x)), abs(float(v.y))) for v in norm.vertices)
    else:
        total = float(((np.abs(sx) ** extra + np.abs(sy) ** extra) ** (1.0 / extra)).sum())
        reach = 1.0
    pad = 2.0 * total * reach + 1.0
    return (sx.min() - pad, sx.max() + pad, sy.min() - pad, sy.max() + pad)


def _multisection_inner(batch_eval, xs, ylo, yhi):
    """Lockstep 1-D multisection min over y for every x in xs.

    For a convex slice the first-argmin probe always brackets a
    minimizer, so shrinking to its two neighbours is safe even on flat
    valley floors.  Interval contracts by 2/(G+1) per sweep.
    """
    g = MS_PROBES
    offs = np.arange(1.0, g + 1.0) / (g + 1.0)
    m = len(xs)
    lo = np.full(m, float(ylo))
    hi = np.full(m, float(yhi))
    px = np.repeat(xs, g)
    for _ in range(MS_INNER):
        span = hi - lo
        py = (lo[:, None] + span[:, None] * offs[None, :]).ravel()
        vals = batch_eval(px, py).reshape(m, g)
        j = np.argmin(vals, axis=1)
        step = span / (g + 1.0)
        new_lo = lo + step * j
        hi = np.minimum(lo + step * (j + 2.0), hi)
        lo = new_lo
    ymid = 0.5 * (lo + hi)
    return ymid, batch_eval(xs, ymid)


def _multisection_min(batch_eval, xlo, xhi, ylo, yhi):
    """Nested multisection over the box; one batch call per sweep.

    Matches the nested ternary's depth: (2/9)^24 of the span is below
    1e-15, so the value error stays orders of magnitude under the 1e-6
    oracle tolerance even for skinny balls and wide boxes.
    """
    g = MS_PROBES
    offs = np.arange(1.0, g + 1.0) / (g + 1.0)
    lo, hi = float(xlo), float(xhi)
    for _ in range(MS_OUTER):
        xs = lo + (hi - lo) * offs
        _, fs = _multisection_inner(batch_eval, xs, ylo, yhi)
        i = int(np.argmin(fs))
        step = (hi - lo) / (g + 1.0)
        new_lo = lo + step * i
        hi = min(lo + step * (i + 2.0), hi)
        lo = new_lo
    x = 0.5 * (lo + hi)
    ys, fs = _multisection_inner(batch_eval, np.array([x]), ylo, yhi)
    return x, float(ys[0]), float(fs[0])


def brute_force_min(norm, sites, bbox=None, resolution=None):
    """Float minimizer of the distance sum, (point, value).

    Shares nothing with the exact LP path: a grid seeds a whole-box
    refinement, and the better of the two wins.  The compiled backend
    runs the scalar nested ternary kernel; the pure backend gets the
    same guarantee from batch multisection, which needs far fewer
    Python-level steps.
    """
    sites = list(sites)
    if len(sites) == 1:
        return _xy(sites[0]), 0.0
    if bbox is None:
        bbox = default_bbox(norm, sites)
    xlo, xhi, ylo, yhi = bbox

    sx, sy, extra = _norm_arrays(norm, sites)
    poly = isinstance(extra, tuple)

    if resolution is None:
        steps = GRID_STEPS
    else:
        span = max(xhi - xlo, yhi - ylo)
        steps = min(2000, max(2, int(span / resolution)))
    gx = np.linspace(xlo, xhi, steps + 1)
    gy = np.linspace(ylo, yhi, steps + 1)
    px, py = [a.ravel() for a in np.meshgrid(gx, gy)]
    best_val = None
    best_xy = None
    for lo in range(0, len(px), _CHUNK):
        cx = np.ascontiguousarray(px[lo : lo + _CHUNK])
        cy = np.ascontiguousarray(py[lo : lo + _CHUNK])
        if poly:
            vals = objective_batch_poly(cx, cy, sx, sy, *extra)
        else:
            vals = objective_batch_lp(cx, cy, sx, sy, extra)
        k = int(np.argmin(vals))
        if best_val is None or vals[k] < best_val:
            best_val = float(vals[k])
            best_xy = (float(cx[k]), float(cy[k]))

    if BACKEND == "compiled":
        if poly:
            x, y, val = refine_nested_ternary_poly(
                xlo, xhi, ylo, yhi, TERNARY_ITERS, sx, sy, *extra
            )
        else:
            x, y, val = refine_nested_ternary_lp(
                xlo, xhi, ylo, yhi, TERNARY_ITERS, sx, sy, extra
            )
    else:
        if poly:
            batch_eval = lambda bx, by: objective_batch_poly(bx, by, sx, sy, *extra)
        else:
            batch_eval = lambda bx, by: objective_batch_lp(bx, by, sx, sy, extra)
        x, y, val = _multisection_min(batch_eval, xlo, xhi, ylo, yhi)
    if val <= best_val:
        return (x, y), float(val)
    return best_xy, best_val


def _trial_optimality(seed):
    inst = RandomInstance.generate(seed)
    res = ft_locus(inst.norm, inst.sites)
    _, val = brute_force_min(inst.norm, inst.sites)
    assert abs(float(res.value) - val) <= 1e-6
    assert verify_certificate(inst.norm, inst.sites, res.witness, res.certificate)


def _trial_locus_equalities(seed):
    inst = RandomInstance.generate(seed)
    rng = random.Random(seed ^ 0x5EED)
    a, b = inst.sites[0], inst.sites[1]
    assert d_segment(inst.norm, a, b) == ft_locus(inst.norm, [a, b]).locus
    res = ft_locus(inst.norm, inst.sites)
    for _ in range(12):
        p = Vec(
            Rat(rng.randint(-70, 70), 6),
            Rat(rng.randint(-70, 70), 6),
        )
        f = ft_objective(inst.norm, inst.sites, p)
        if res.locus.contains(p):
            assert f == res.value
        else:
            assert f > res.value


def _trial_hull_relations(seed):
    inst = RandomInstance.generate(seed)
    rep = classify_instance(inst.norm, inst.sites)
    hull = rep.hull
    locus = rep.result.locus
    assert not intersect_regions(locus, hull).is_empty()
    if len(inst.sites) % 2 == 1:
        assert all(hull.contains(v) for v in locus.vertices)


def _trial_angles_deg3(seed):
    rng = random.Random(seed)
    norm = random_norm(rng)
    while True:
        arms = [
            Vec(Rat(rng.randint(-12, 12), 2), Rat(rng.randint(-12, 12), 2))
            for _ in range(3)
        ]
        if any(d.is_zero() for d in arms):
            continue
        parallel = any(
            arms[i].cross(arms[j]) == 0 and arms[i].dot(arms[j]) > 0
            for i in range(3)
            for j in range(i + 1, 3)
        )
        if not parallel and len(set(arms)) == 3:
            break
    predicted = is_floating_deg3(norm, Vec(0, 0), *arms)
    cert = select_functionals(norm, arms, Vec(0, 0), FLOATING)
    assert predicted == (cert is not None)


def _trial_classification(seed):
    inst = RandomInstance.generate(seed)
    rep = classify_instance(inst.norm, inst.sites)
    assert len(rep.a_cap_ft) <= 4


def _trial_dcollinear(seed):
    rng = random.Random(seed)
    norm = random_norm(rng)
    vs = norm.vertices
    i = rng.randrange(len(vs))
    a, b = vs[i], vs[(i + 1) % len(vs)]
    pts = [Vec(Rat(rng.randint(-8, 8), 2), Rat(rng.randint(-8, 8), 2))]
    for _ in range(rng.randint(3, 8)):
        lam = Rat(rng.randint(0, 4), 4)
        u = a + (b - a) * lam
        pts.append(pts[-1] + u * Rat(rng.randint(1, 4), 2))
    info = d_collinear_analyze(norm, pts)
    assert info is not None
    assert info.locus == ft_locus(norm, pts).locus


SUITES = {
    "optimality": _trial_optimality,
    "locus_equalities": _trial_locus_equalities,
    "hull_relations": _trial_hull_relations,
    "angles_deg3": _trial_angles_deg3,
    "classification": _trial_classification,
    "dcollinear": _trial_dcollinear,
}


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    lines: tuple
    passed: int
    failed: int

    def __str__(self):
        return "\n".join(self.lines)


def run_suite(name: str, trials: int, seed: int) -> SuiteReport:
    """Run `trials` seeded trials of a named suite.

    Each line of the report is `seed<TAB>suite<TAB>status<TAB>message`;
    a failing line carries the trial seed needed to reproduce it.
    """
    if name not in SUITES:
        raise UnknownSuiteError("no suite named %r" % name)
    fn = SUITES[name]
    master = random.Random(seed)
    lines = []
    passed = failed = 0
    for _ in range(trials):
        tseed = master.getrandbits(63)
        try:
            fn(tseed)
        except Exception as exc:
            failed += 1
            lines.append(
                "%d\t%s\tFAIL\t%s" % (tseed, name, type(exc).__name__)
            )
        else:
            passed += 1
            lines.append("%d\t%s\tPASS\tok" % (tseed, name))
    return SuiteReport(name, tuple(lines), passed, failed)
