"""Norm layer: evaluation, duality, norming faces, shape classes."""

import math
import random

import pytest

from ftlocus.errors import ZeroVectorError
from ftlocus.geometry import Vec
from ftlocus.norms import (
    AFFINE_REGULAR_HEXAGON,
    OTHER_POLYGON,
    PARALLELOGRAM,
    PolyNorm,
    SmoothNorm,
    euclidean,
)
from ftlocus.rational import R1, Rat


def V(x, y):
    return Vec(x, y)


def rand_vec(rng, span=9):
    while True:
        v = V(rng.randint(-span, span), rng.randint(-span, span))
        if not v.is_zero():
            return v


def rand_norm(rng):
    half = [rand_vec(rng, 6) for _ in range(rng.randint(2, 5))]
    try:
        return PolyNorm.from_ball_vertices(half + [-p for p in half])
    except ValueError:
        return None


def test_presets_frozen():
    hexn = PolyNorm.hexagonal()
    assert set(hexn.vertices) == {V(1, 0), V(0, 1), V(-1, 1), V(-1, 0), V(0, -1), V(1, -1)}
    assert set(hexn.dual_vertices) == {V(1, 1), V(0, 1), V(-1, 0), V(-1, -1), V(0, -1), V(1, 0)}
    assert PolyNorm.l1().dual.vertices == PolyNorm.linf().ball.vertices
    assert PolyNorm.linf().dual.vertices == PolyNorm.l1().ball.vertices


def test_l1_linf_values():
    rng = random.Random(2)
    l1, linf = PolyNorm.l1(), PolyNorm.linf()
    for _ in range(80):
        v = rand_vec(rng)
        assert l1.eval(v) == abs(v.x) + abs(v.y)
        assert linf.eval(v) == max(abs(v.x), abs(v.y))
        # duality swaps the pair
        assert l1.dual_eval(v) == max(abs(v.x), abs(v.y))
        assert linf.dual_eval(v) == abs(v.x) + abs(v.y)


def test_norm_axioms_random():
    rng = random.Random(31)
    checked = 0
    while checked < 25:
        n = rand_norm(rng)
        if n is None:
            continue
        checked += 1
        for _ in range(20):
            a, b = rand_vec(rng), rand_vec(rng)
            assert n.eval(a) > 0
            assert n.eval(-a) == n.eval(a)
            assert n.eval(a + b) <= n.eval(a) + n.eval(b)
            k = Rat(rng.randint(1, 7)) / rng.randint(1, 4)
            assert n.eval(a * k) == k * n.eval(a)
        v = rand_vec(rng)
        assert n.eval(n.unit(v)) == 1


def test_ball_vertices_have_norm_one():
    rng = random.Random(43)
    for _ in range(30):
        n = rand_norm(rng)
        if n is None:
            continue
        for v in n.vertices:
            assert n.eval(v) == 1
        for phi in n.dual_vertices:
            assert n.dual_eval(phi) == 1


def test_norming_face_hexagonal():
    n = PolyNorm.hexagonal()
    f = n.norming_face(V(1, 1))
    assert f.is_vertex and f.points == (V(1, 1),)
    # a ball vertex is normed by a whole dual edge
    f = n.norming_face(V(1, 0))
    assert f.is_edge and set(f.points) == {V(1, 0), V(1, 1)}
    g = n.norming_face(V(-1, 0))
    assert (-f).points == tuple(-p for p in f.points)
    assert set(g.points) == {V(-1, 0), V(-1, -1)}


def test_norming_face_properties_random():
    rng = random.Random(57)
    for _ in range(40):
        n = rand_norm(rng)
        if n is None:
            continue
        v = rand_vec(rng)
        face = n.norming_face(v)
        r = n.eval(v)
        for phi in face.points:
            assert phi.dot(v) == r
            assert n.dual_eval(phi) == 1
        # no dual vertex beats the face value
        assert max(phi.dot(v) for phi in n.dual_vertices) == r
        if face.is_edge:
            a, b = face.points
            mid = a + Rat("1/2") * (b - a)
            assert mid.dot(v) == r
            assert face.sample(Rat("1/2")) == mid


def test_exposed_faces():
    n = PolyNorm.hexagonal()
    faces = n.exposed_faces()
    assert len(faces) == 12
    edges = [f for f in faces if f.is_edge]
    assert len(edges) == 6
    for f in edges:
        a, b = f.points
        phi = f.functional
        assert phi.dot(a) == 1 and phi.dot(b) == 1
        assert n.dual_eval(phi) == 1
    # dual vertex exposes the matching ball edge; an edge-interior unit
    # covector exposes a single ball vertex
    for phi in n.dual_vertices:
        face = n.exposed_face_of(phi)
        assert len(face) == 2
    k = len(n.dual_vertices)
    for i in range(k):
        a, b = n.dual_vertices[i], n.dual_vertices[(i + 1) % k]
        mid = a + Rat("1/2") * (b - a)
        face = n.exposed_face_of(mid)
        assert len(face) == 1


def test_shape_classes():
    assert PolyNorm.l1().shape_class() == PARALLELOGRAM
    assert PolyNorm.linf().shape_class() == PARALLELOGRAM
    assert PolyNorm.parallelogram(V(2, 1), V(-1, 3)).shape_class() == PARALLELOGRAM
    assert PolyNorm.hexagonal().shape_class() == AFFINE_REGULAR_HEXAGON
    assert PolyNorm.hexagonal(V(2, 1), V(-1, 2)).shape_class() == AFFINE_REGULAR_HEXAGON
    oct_half = [V(2, 1), V(1, 2), V(-1, 2), V(-2, 1)]
    octagon = PolyNorm.from_ball_vertices(oct_half + [-p for p in oct_half])
    assert octagon.shape_class() == OTHER_POLYGON
    # a hexagon that is not affinely regular
    hex_half = [V(3, 0), V(1, 1), V(-1, 1)]
    skew = PolyNorm.from_ball_vertices(hex_half + [-p for p in hex_half])
    assert len(skew.vertices) == 6
    assert skew.shape_class() == OTHER_POLYGON


def test_dual_norm():
    l1 = PolyNorm.l1()
    assert l1.dual_norm().ball == PolyNorm.linf().ball
    assert l1.dual_norm() is l1.dual_norm()  # cached
    rng = random.Random(71)
    for _ in range(20):
        n = rand_norm(rng)
        if n is None:
            continue
        assert n.dual_norm().dual_norm().ball == n.ball
        v = rand_vec(rng)
        assert n.dual_norm().eval(v) == n.dual_eval(v)


def test_zero_vector_rejected():
    n = PolyNorm.l1()
    assert n.eval(V(0, 0)) == 0
    with pytest.raises(ZeroVectorError):
        n.unit(V(0, 0))
    with pytest.raises(ZeroVectorError):
        n.norming_face(V(0, 0))


def test_smooth_norm_basics():
    e = euclidean()
    assert e.p == 2.0
    assert e.eval((3.0, 4.0)) == 5.0
    assert e.unit((3.0, 4.0)) == (0.6, 0.8)
    with pytest.raises(ValueError):
        SmoothNorm(1.0)
    with pytest.raises(ValueError):
        SmoothNorm(float("inf"))
    with pytest.raises(ZeroVectorError):
        e.functional((0.0, 0.0))


def test_smooth_norm_duality():
    rng = random.Random(5)
    for p in (1.5, 2.0, 3.0, 7.0):
        n = SmoothNorm(p)
        q = n.dual_exponent
        assert abs(1.0 / p + 1.0 / q - 1.0) < 1e-12
        for _ in range(40):
            v = (rng.uniform(-5, 5), rng.uniform(-5, 5))
            if n.eval(v) < 1e-9:
                continue
            phi = n.functional(v)
            # the functional norms v and sits on the dual sphere
            assert math.isclose(phi[0] * v[0] + phi[1] * v[1], n.eval(v), rel_tol=1e-12)
            assert math.isclose(n.dual_eval(phi), 1.0, rel_tol=1e-12)
            w = (rng.uniform(-5, 5), rng.uniform(-5, 5))
            assert phi[0] * w[0] + phi[1] * w[1] <= n.eval(w) + 1e-9
