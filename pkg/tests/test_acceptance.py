"""Acceptance gate: ten criteria, one test (and one reported line) each.

Run with -v to see the per-criterion pass/fail lines; each test also
prints its wall time, visible with -s.  Tolerances and budgets are
stated inline next to the assertion they bound.
"""

import math
import pathlib
import random
import time
from contextlib import contextmanager

from ftlocus.angles import AngleQuery, is_critical
from ftlocus.certificates import FLOATING, select_functionals, verify_certificate
from ftlocus.classify import classify_instance
from ftlocus.engine import d_segment, ft_locus, ft_point
from ftlocus.figures import FIGURES, build
from ftlocus.geometry import ConvexRegion, Vec
from ftlocus.norms import (
    AFFINE_REGULAR_HEXAGON,
    PARALLELOGRAM,
    PolyNorm,
    SmoothNorm,
)
from ftlocus.oracle import brute_force_min, run_suite
from ftlocus.rational import Rat
from ftlocus.svg import render_string

from support import V, rand_norm


@contextmanager
def criterion(num, label, budget=None):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        print("criterion %02d FAIL: %s" % (num, label))
        raise
    dt = time.perf_counter() - t0
    if budget is not None:
        assert dt < budget, "criterion %d blew its %gs budget: %.2fs" % (num, budget, dt)
    print("criterion %02d PASS: %s (%.2fs)" % (num, label, dt))


def test_criterion_01_square_sites_locus_is_their_hull():
    with criterion(1, "diamond ball, four half-unit sites, locus equals hull", budget=1.0):
        norm = PolyNorm.from_ball_vertices([V(1, 0), V(0, 1), V(-1, 0), V(0, -1)])
        h = Rat(1, 2)
        sites = [Vec(h, h), Vec(-h, -h), Vec(h, -h), Vec(-h, h)]
        result = ft_locus(norm, sites)
        assert result.locus == ConvexRegion.polygon(
            [Vec(-h, -h), Vec(h, -h), Vec(h, h), Vec(-h, h)]
        )  # exact rational equality, zero tolerance


def test_criterion_02_hexagon_triangle_locus_and_centroid_certificate():
    with criterion(2, "hexagonal ball, triangle sites, centroid certificate", budget=1.0):
        norm = PolyNorm.hexagonal()
        o, x, y = Vec(0, 0), Vec(1, 0), Vec(0, 1)
        result = ft_locus(norm, [o, x, y])
        assert result.locus == ConvexRegion.polygon([o, x, y])  # exact
        third = Rat(1, 3)
        centroid = Vec(third, third)
        cert = select_functionals(norm, [o, x, y], centroid, FLOATING)
        assert cert is not None and cert.mode == FLOATING
        assert verify_certificate(norm, [o, x, y], centroid, cert)


def _expected_pair_region(norm, a, b):
    """Closed form for the between-set of a pair: straight segment when
    the direction points at a ball vertex, the spanned parallelogram when
    it points into a ball edge."""
    face = norm.norming_face(b - a)
    if face.is_edge:
        # two functionals achieve the norm: direction hits a ball vertex
        return ConvexRegion.segment(a, b), "vertex"
    phi = face.points[0]
    e1, e2 = norm.exposed_face_of(phi)
    d = b - a
    det = e1.cross(e2)
    alpha = d.cross(e2) / det
    beta = e1.cross(d) / det
    assert alpha >= 0 and beta >= 0 and alpha + beta == norm.eval(d)
    if alpha == 0 or beta == 0:
        return ConvexRegion.segment(a, b), "vertex"
    corners = [a, a + e1 * alpha, b, a + e2 * beta]
    if (corners[1] - corners[0]).cross(corners[3] - corners[0]) < 0:
        corners = [corners[0], corners[3], corners[2], corners[1]]
    return ConvexRegion.polygon(corners), "edge"


def test_criterion_03_pair_between_set_law():
    with criterion(3, "200 random pairs: between-set equals pair locus, case split"):
        rng = random.Random(20260822)
        seen = {"vertex": 0, "edge": 0}
        for trial in range(200):
            norm = rand_norm(rng)
            a = V(Rat(rng.randint(-20, 20), 2), Rat(rng.randint(-20, 20), 2))
            if trial % 2 == 0:
                # aim along a ball vertex so the straight-segment case
                # is exercised reliably
                u = norm.vertices[rng.randrange(len(norm.vertices))]
                b = a + u * Rat(rng.randint(1, 6), 2)
            else:
                b = a + V(Rat(rng.randint(-9, 9), 3), Rat(rng.randint(-9, 9), 3))
            if a == b:
                continue
            seg = d_segment(norm, a, b)
            assert seg == ft_locus(norm, [a, b]).locus  # exact
            expected, kind = _expected_pair_region(norm, a, b)
            assert seg == expected
            seen[kind] += 1
        assert seen["vertex"] >= 40 and seen["edge"] >= 40, seen


def test_criterion_04_optimality_suite_500():
    with criterion(4, "optimality: 500 instances, oracle within 1e-6, certs verify", budget=60.0):
        report = run_suite("optimality", trials=500, seed=42)
        assert report.failed == 0, "\n".join(report.lines)


def test_criterion_05_hull_relation_suite_500():
    with criterion(5, "hull relations: 500 instances, containment and escape laws", budget=90.0):
        report = run_suite("hull_relations", trials=500, seed=7)
        assert report.failed == 0, "\n".join(report.lines)


def test_criterion_06_degree_three_equivalence_500():
    with criterion(6, "degree-3: 500 trials, angle test matches certificate test", budget=30.0):
        report = run_suite("angles_deg3", trials=500, seed=606)
        assert report.failed == 0, "\n".join(report.lines)


def _staircase(rng, n):
    """Monotone rectilinear chain: consecutive differences alternate
    between positive-x and positive-y steps, so the set lies on one
    metric line of the rectilinear norm."""
    x = Rat(rng.randint(-8, 8), 2)
    y = Rat(rng.randint(-8, 8), 2)
    pts = [Vec(x, y)]
    for k in range(n - 1):
        step = Rat(rng.randint(1, 5), 2)
        if k % 2 == 0:
            x = x + step
        else:
            y = y + step
        pts.append(Vec(x, y))
    return pts


def test_criterion_07_rectilinear_staircases():
    with criterion(7, "staircases 4..9: median pair between-set / median point"):
        norm = PolyNorm.l1()
        rng = random.Random(77)
        for n in range(4, 10):
            for _ in range(5):
                pts = _staircase(rng, n)
                locus = ft_locus(norm, pts).locus
                if n % 2 == 0:
                    lo, hi = pts[n // 2 - 1], pts[n // 2]
                    assert locus == d_segment(norm, lo, hi)  # exact
                else:
                    assert locus == ConvexRegion.point(pts[n // 2])  # exact


def test_criterion_08_at_most_four_sites_in_locus():
    with criterion(8, "site/locus overlap capped at 4; equality pins the ball shape"):
        # random side: the classification suite asserts the cap per trial
        report = run_suite("classification", trials=300, seed=88)
        assert report.failed == 0, "\n".join(report.lines)

        # adversarial hand-built attempts
        norm = PolyNorm.l1()
        crafted = [
            [V(1, 1), V(-1, 1), V(-1, -1), V(1, -1), V(0, 0)],
            [V(2, 0), V(0, 2), V(-2, 0), V(0, -2), V(1, 1), V(-1, -1)],
            [V(0, 0), V(1, 0), V(2, 0), V(3, 0), V(4, 0), V(5, 0), V(6, 0)],
        ]
        for sites in crafted:
            rep = classify_instance(norm, sites)
            assert len(rep.a_cap_ft) <= 4

        # equality at 4 requires a parallelogram ball
        rep4 = classify_instance(
            norm, [V(1, 1), V(-1, 1), V(-1, -1), V(1, -1)]
        )
        assert len(rep4.a_cap_ft) == 4
        assert rep4.ball_shape == PARALLELOGRAM

        # equality at 3 requires an affine regular hexagon ball
        rep3 = classify_instance(PolyNorm.hexagonal(), [V(0, 0), V(1, 0), V(0, 1)])
        assert len(rep3.a_cap_ft) == 3
        assert rep3.ball_shape == AFFINE_REGULAR_HEXAGON


def test_criterion_09_euclidean_sanity():
    with criterion(9, "euclidean: torricelli point, 120-degree boundary, uniqueness"):
        norm = SmoothNorm(2.0)
        tri = [(0.0, 0.0), (1.0, 0.0), (0.5, math.sqrt(3) / 2)]
        point, value = ft_point(norm, tri)
        assert abs(point[0] - 0.5) <= 1e-6 and abs(point[1] - math.sqrt(3) / 6) <= 1e-6

        # the critical transition must sit within 1e-9 radians of 120 deg
        def crit(delta):
            ang = 2.0 * math.pi / 3.0 + delta
            q = AngleQuery(norm, (0.0, 0.0), (1.0, 0.0), (math.cos(ang), math.sin(ang)))
            return is_critical(q, tol=1e-9)

        assert crit(0.0)
        assert crit(5e-10) and crit(-5e-10)
        assert not crit(3e-9) and not crit(-3e-9)

        # strict convexity: the minimizer is unique, so the independent
        # oracle must land on the same point (1e-6)
        rng = random.Random(909)
        checked = 0
        while checked < 10:
            pts = [
                (rng.uniform(-5, 5), rng.uniform(-5, 5))
                for _ in range(rng.randint(3, 6))
            ]
            (ax, ay), (bx, by) = pts[0], pts[1]
            if all(
                abs((bx - ax) * (y - ay) - (by - ay) * (x - ax)) < 1e-9
                for x, y in pts[2:]
            ):
                continue  # collinear sets may minimize on a segment
            p_solver, v_solver = ft_point(norm, pts)
            p_oracle, v_oracle = brute_force_min(norm, pts)
            assert abs(v_solver - v_oracle) <= 1e-6
            assert abs(p_solver[0] - p_oracle[0]) <= 1e-6
            assert abs(p_solver[1] - p_oracle[1]) <= 1e-6
            checked += 1


def test_criterion_10_golden_figures_byte_identical():
    with criterion(10, "six stock figures render byte-identically"):
        golden_dir = pathlib.Path(__file__).resolve().parent.parent / "figures"
        for name in sorted(FIGURES):
            first = render_string(build(name))
            second = render_string(build(name))
            assert first == second, name
            stored = (golden_dir / (name + ".svg")).read_text(encoding="utf-8")
            assert first == stored, name
