"""Shared helpers for the test suite: rational vectors, random balls, sites."""

from ftlocus.geometry import Vec
from ftlocus.norms import PolyNorm
from ftlocus.rational import Rat, rat


def V(x, y):
    return Vec(rat(x), rat(y))


def rand_norm(rng, max_verts=6, denom=4, span=6):
    """Random symmetric polygonal ball; retries until the hull is 2D."""
    while True:
        half = [
            V(Rat(rng.randint(-span, span), rng.randint(1, denom)),
              Rat(rng.randint(-span, span), rng.randint(1, denom)))
            for _ in range(rng.randint(2, max_verts))
        ]
        pts = [p for p in half if not p.is_zero()]
        pts = pts + [-p for p in pts]
        try:
            return PolyNorm.from_ball_vertices(pts)
        except ValueError:
            continue


def distinct_sites(rng, k, span=5):
    out = []
    while len(out) < k:
        p = V(rng.randint(-span, span), rng.randint(-span, span))
        if p not in out:
            out.append(p)
    return out
