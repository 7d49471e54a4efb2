import math
import random

import pytest

from ftlocus.angles import (
    AngleQuery,
    is_absorbing,
    is_critical,
    is_floating_deg3,
    is_pointed,
    sum_norm_range,
)
from ftlocus.errors import DegenerateConfigError, ZeroArmError
from ftlocus.geometry import Vec
from ftlocus.norms import DualFace, PolyNorm, euclidean
from ftlocus.rational import Rat, rat
from support import V, rand_norm

O = Vec(0, 0)


def face(*pts):
    return DualFace(tuple(V(*p) for p in pts))


class TestSumNormRange:
    def test_two_adjacent_dual_edges(self):
        n = PolyNorm.l1()
        f1 = n.norming_face(V(1, 0))  # {1} x [-1,1]
        f2 = n.norming_face(V(0, 1))  # [-1,1] x {1}
        assert set(f1.points) == {V(1, -1), V(1, 1)}
        assert set(f2.points) == {V(-1, 1), V(1, 1)}
        assert sum_norm_range(n, f1, f2) == (0, 2)

    def test_opposite_singletons(self):
        n = PolyNorm.linf()
        assert sum_norm_range(n, face((1, 0)), face((-1, 0))) == (0, 0)

    def test_equal_singletons(self):
        n = PolyNorm.linf()
        assert sum_norm_range(n, face((1, 0)), face((1, 0))) == (2, 2)

    def test_sampled_sums_stay_in_range(self):
        rng = random.Random(7)
        done = 0
        while done < 30:
            n = rand_norm(rng)
            d1 = V(rng.randint(-5, 5), rng.randint(-5, 5))
            d2 = V(rng.randint(-5, 5), rng.randint(-5, 5))
            if d1.is_zero() or d2.is_zero():
                continue
            done += 1
            f1 = n.norming_face(d1)
            f2 = n.norming_face(d2)
            lo, hi = sum_norm_range(n, f1, f2)
            assert lo <= hi
            for t1 in (rat(0), Rat(1, 3), rat(1)):
                for t2 in (rat(0), Rat(2, 5), rat(1)):
                    a = f1.sample(t1) if f1.is_edge else f1.points[0]
                    b = f2.sample(t2) if f2.is_edge else f2.points[0]
                    assert lo <= n.dual_eval(a + b) <= hi


class TestCritical:
    def test_euclidean_120(self):
        e = euclidean()
        q = AngleQuery(e, (0.0, 0.0), (1.0, 0.0), (math.cos(2 * math.pi / 3), math.sin(2 * math.pi / 3)))
        assert is_critical(q)

    def test_euclidean_90(self):
        e = euclidean()
        assert not is_critical(AngleQuery(e, (0.0, 0.0), (1.0, 0.0), (0.0, 1.0)))

    def test_rectilinear_right_angle(self):
        q = AngleQuery(PolyNorm.l1(), O, V(1, 0), V(0, 1))
        assert is_critical(q)

    def test_zero_arm(self):
        with pytest.raises(ZeroArmError):
            is_critical(AngleQuery(PolyNorm.l1(), V(1, 1), V(1, 1), V(0, 1)))

    def test_straight_angle_segment_faces(self):
        # opposite arms along a ball vertex: faces are a segment pair F, -F
        n = PolyNorm.l1()
        assert is_critical(AngleQuery(n, O, V(1, 0), V(-1, 0)))

    def test_straight_angle_singleton_faces(self):
        # generic direction: singleton faces, sum is o, never critical
        n = PolyNorm.l1()
        assert not is_critical(AngleQuery(n, O, V(1, 2), V(-1, -2)))
        assert not is_critical(AngleQuery(euclidean(), (0.0, 0.0), (1.0, 0.0), (-1.0, 0.0)))


class TestAbsorbing:
    def test_euclidean_150(self):
        e = euclidean()
        a = 5 * math.pi / 6
        q = AngleQuery(e, (0.0, 0.0), (1.0, 0.0), (math.cos(a), math.sin(a)))
        assert is_absorbing(q)
        assert not is_critical(q)

    def test_euclidean_120(self):
        e = euclidean()
        a = 2 * math.pi / 3
        assert is_absorbing(AngleQuery(e, (0.0, 0.0), (1.0, 0.0), (math.cos(a), math.sin(a))))

    def test_euclidean_90(self):
        e = euclidean()
        assert not is_absorbing(AngleQuery(e, (0.0, 0.0), (1.0, 0.0), (0.0, 1.0)))

    def test_contains_critical_subangle_sweep(self):
        # absorbing iff some sub-angle with arms among {original arms,
        # ball-vertex directions inside the cone} is critical; faces only
        # change across ball-vertex rays, so the sweep is exhaustive
        rng = random.Random(23)
        checked = absorbed = 0
        while checked < 60:
            n = rand_norm(rng)
            d1 = V(rng.randint(-5, 5), rng.randint(-5, 5))
            d2 = V(rng.randint(-5, 5), rng.randint(-5, 5))
            if d1.is_zero() or d2.is_zero() or d1.cross(d2) == 0:
                continue
            checked += 1
            cands = [d1, d2]
            for u in n.vertices:
                s1, s2 = d1.cross(u), u.cross(d2)
                ref = d1.cross(d2)
                if (s1 > 0) == (ref > 0) and (s2 > 0) == (ref > 0):
                    cands.append(u)
            found = False
            for i in range(len(cands)):
                for j in range(i + 1, len(cands)):
                    if cands[i].cross(cands[j]) == 0:
                        continue
                    if is_critical(AngleQuery(n, O, cands[i], cands[j])):
                        found = True
                        break
                if found:
                    break
            absorbing = is_absorbing(AngleQuery(n, O, d1, d2))
            assert absorbing == found, (n.vertices, d1, d2)
            absorbed += absorbing
        assert absorbed > 0
        assert absorbed < checked

    def test_widening_preserves_absorbing(self):
        rng = random.Random(31)
        done = 0
        while done < 40:
            n = rand_norm(rng)
            d1 = V(rng.randint(-5, 5), rng.randint(-5, 5))
            d2 = V(rng.randint(-5, 5), rng.randint(-5, 5))
            if d1.is_zero() or d2.is_zero() or d1.cross(d2) == 0:
                continue
            if not is_absorbing(AngleQuery(n, O, d1, d2)):
                continue
            wide = d2 - Rat(1, 2) * d1
            if wide.is_zero() or d1.cross(wide) == 0:
                continue
            if (d1.cross(wide) > 0) != (d1.cross(d2) > 0):
                continue  # rotated past the straight angle; cone flipped
            done += 1
            assert is_absorbing(AngleQuery(n, O, d1, wide))


class TestPointed:
    def test_quarter_turn(self):
        assert is_pointed([V(1, 0), V(0, 1)])

    def test_opposite(self):
        assert not is_pointed([V(1, 0), V(-1, 0)])

    def test_positive_combination_of_origin(self):
        assert not is_pointed([V(1, 0), V(0, 1), V(-1, -1)])


class TestFloatingDeg3:
    def test_euclidean_tripod(self):
        e = euclidean()
        arms = [(math.cos(2 * math.pi * k / 3), math.sin(2 * math.pi * k / 3)) for k in range(3)]
        assert is_floating_deg3(e, (0.0, 0.0), *arms)

    def test_rectilinear_median(self):
        assert is_floating_deg3(PolyNorm.l1(), O, V(1, 0), V(0, 1), V(-1, -1))

    def test_pointed_fails(self):
        assert not is_floating_deg3(PolyNorm.l1(), O, V(1, 0), V(0, 1), V(1, 1))
        assert not is_floating_deg3(euclidean(), (0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0))

    def test_coincident_directions(self):
        with pytest.raises(DegenerateConfigError):
            is_floating_deg3(PolyNorm.l1(), O, V(1, 0), V(2, 0), V(0, 1))

    def test_scale_invariance(self):
        rng = random.Random(47)
        done = 0
        while done < 30:
            n = rand_norm(rng)
            arms = [V(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(3)]
            if any(a.is_zero() for a in arms):
                continue
            if any(arms[i].cross(arms[j]) == 0 and arms[i].dot(arms[j]) > 0 for i in range(3) for j in range(i + 1, 3)):
                continue
            done += 1
            scaled = [rat(rng.randint(1, 5)) * a for a in arms]
            assert is_floating_deg3(n, O, *arms) == is_floating_deg3(n, O, *scaled)
            q = AngleQuery(n, O, arms[0], arms[1])
            qs = AngleQuery(n, O, scaled[0], scaled[1])
            assert is_critical(q) == is_critical(qs)
            assert is_absorbing(q) == is_absorbing(qs)


class TestEuclideanCentroid:
    def test_critical_angle_support_triangle(self):
        # tangent lines to the unit circle at the three unit directions of a
        # critical configuration bound a triangle whose centroid is the vertex
        e = euclidean()
        u1 = (1.0, 0.0)
        u2 = (math.cos(2 * math.pi / 3), math.sin(2 * math.pi / 3))
        assert is_critical(AngleQuery(e, (0.0, 0.0), u1, u2))
        u3 = (-(u1[0] + u2[0]), -(u1[1] + u2[1]))
        assert abs(math.hypot(*u3) - 1.0) < 1e-12
        corners = []
        for a, b in ((u1, u2), (u2, u3), (u3, u1)):
            det = a[0] * b[1] - a[1] * b[0]
            corners.append(((b[1] - a[1]) / det, (a[0] - b[0]) / det))
        cx = sum(c[0] for c in corners) / 3
        cy = sum(c[1] for c in corners) / 3
        assert abs(cx) < 1e-9 and abs(cy) < 1e-9


def test_angle_query_direction_validation():
    with pytest.raises(ZeroArmError):
        AngleQuery(PolyNorm.l1(), V(2, 2), V(1, 0), V(2, 2)).directions()
