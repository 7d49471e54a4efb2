"""Scene rendering: determinism, golden figures, region kinds."""

import pathlib

import pytest

from ftlocus.figures import FIGURES, build
from ftlocus.geometry import ConvexRegion, Vec
from ftlocus.norms import PolyNorm, SmoothNorm
from ftlocus.svg import Scene, render_string, render_svg

from support import V

GOLDEN_DIR = pathlib.Path(__file__).resolve().parent.parent / "figures"


@pytest.mark.parametrize("name", sorted(FIGURES))
class TestGoldenFigures:
    def test_repeat_render_identical(self, name):
        assert render_string(build(name)) == render_string(build(name))

    def test_matches_checked_in_golden(self, name):
        golden = (GOLDEN_DIR / (name + ".svg")).read_text(encoding="utf-8")
        assert render_string(build(name)) == golden


class TestSceneKinds:
    def test_no_locus_draws_ball_and_sites_only(self):
        scene = Scene(PolyNorm.l1(), (V(0, 0), V(2, 1)))
        out = render_string(scene)
        assert 'id="ball"' in out and 'id="site-2"' in out
        assert 'id="locus"' not in out and 'id="outline-1"' not in out

    def test_empty_region_same_as_no_locus(self):
        scene = Scene(PolyNorm.l1(), (V(0, 0),), ConvexRegion.empty())
        assert 'id="locus"' not in render_string(scene)

    def test_point_locus_is_circle(self):
        scene = Scene(PolyNorm.l1(), (V(0, 0),), ConvexRegion.point(V(0, 0)))
        assert '<circle id="locus"' in render_string(scene)

    def test_segment_locus_is_line(self):
        scene = Scene(
            PolyNorm.l1(), (V(0, 0), V(2, 0)), ConvexRegion.segment(V(0, 0), V(2, 0))
        )
        assert '<line id="locus"' in render_string(scene)

    def test_smooth_ball_is_sampled_polygon(self):
        out = render_string(Scene(SmoothNorm(2.0), (V(0, 0),)))
        ball_line = next(l for l in out.splitlines() if 'id="ball"' in l)
        coords = ball_line.split('points="')[1].split('"')[0].split()
        assert len(coords) == 96

    def test_labels_enumerate_sites(self):
        out = render_string(Scene(PolyNorm.l1(), (V(0, 0), V(1, 1), V(2, 0))))
        assert ">p1<" in out and ">p3<" in out

    def test_render_svg_writes_file(self, tmp_path):
        target = tmp_path / "out.svg"
        render_svg(build("fig1"), target)
        data = target.read_text(encoding="utf-8")
        assert data.startswith("<svg ") and data.endswith("</svg>\n")

    def test_no_negative_zero_coordinates(self):
        for name in sorted(FIGURES):
            assert "-0.0000" not in render_string(build(name))
