"""The six stock demonstration scenes, one builder per figure.

Each builder assembles the norm and sites, solves for the minimizer
region with the exact engine, and attaches any distance segments worth
outlining.  fig1/fig2 show loci equal to the site hull, fig3/fig4 show
concurrent distance segments, fig5 a locus escaping the hull, fig6 a
minimizer sitting inside a hull edge.
"""

from __future__ import annotations

from .classify import edge_interior_fixture
from .engine import d_segment, ft_locus
from .geometry import Vec
from .norms import PolyNorm
from .rational import Rat
from .svg import Scene

HALF = Rat(1, 2)


def _solve_scene(norm, sites, outlines=()):
    result = ft_locus(norm, sites)
    return Scene(norm, tuple(sites), result.locus, tuple(outlines))


def fig1() -> Scene:
    norm = PolyNorm.l1()
    sites = [
        Vec(HALF, HALF),
        Vec(-HALF, HALF),
        Vec(-HALF, -HALF),
        Vec(HALF, -HALF),
    ]
    return _solve_scene(norm, sites)


def fig2() -> Scene:
    norm = PolyNorm.hexagonal()
    sites = [Vec(0, 0), Vec(1, 0), Vec(0, 1)]
    return _solve_scene(norm, sites)


def fig3() -> Scene:
    norm = PolyNorm.hexagonal()
    vs = norm.vertices
    k = len(vs)
    mids = [(vs[i] + vs[(i + 1) % k]) * HALF for i in range(k)]
    # opposite edges give antipodal midpoints; their distance segments
    # share the central hexagon
    outlines = [d_segment(norm, mids[i], mids[i + k // 2]) for i in range(k // 2)]
    return _solve_scene(norm, mids, outlines)


def fig4() -> Scene:
    norm = PolyNorm.hexagonal()
    x1, x2, x3, x4 = Vec(-1, 1), Vec(-1, -1), Vec(1, -1), Vec(1, 1)
    outlines = [d_segment(norm, x1, x3), d_segment(norm, x2, x4)]
    return _solve_scene(norm, [x1, x2, x3, x4], outlines)


def fig5() -> Scene:
    norm = PolyNorm.l1()
    sites = [Vec(1, 0), Vec(0, 2), Vec(2, 1), Vec(-1, 3)]
    outlines = [
        d_segment(norm, sites[0], sites[1]),
        d_segment(norm, sites[2], sites[3]),
    ]
    return _solve_scene(norm, sites, outlines)


def fig6() -> Scene:
    norm = PolyNorm.l1()
    sites = edge_interior_fixture(norm, 0)
    return _solve_scene(norm, sites)


FIGURES = {
    "fig1": fig1,
    "fig2": fig2,
    "fig3": fig3,
    "fig4": fig4,
    "fig5": fig5,
    "fig6": fig6,
}


def build(name: str) -> Scene:
    try:
        builder = FIGURES[name]
    except KeyError:
        raise KeyError("unknown figure %r; have %s" % (name, ", ".join(sorted(FIGURES))))
    return builder()
