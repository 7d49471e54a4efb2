"""Command-line front end.

Subcommands cover the exact pipeline (ft-point, ft-locus, d-segment,
classify, verify), the angle queries, the randomized suites, and SVG
rendering of stock or user-supplied scenes.  Results go to stdout as
JSON with rationals serialized as "a/b" strings; polygon-norm inputs
must likewise be exact strings, never floats.

Exit codes: 0 on success, 1 when the query itself concludes negatively
(a point fails verification, a suite has failing trials) with the reason
on stdout, 2 for malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .angles import AngleQuery, is_critical, is_floating_deg3
from .certificates import ABSORBING, FLOATING, select_functionals, verify_certificate
from .classify import classify_instance
from .engine import DEFAULT_TOL, d_segment, ft_locus, ft_objective, ft_point
from .errors import FtlocusError, UnknownSuiteError
from .figures import FIGURES, build
from .geometry import ConvexRegion, Vec
from .norms import PolyNorm, SmoothNorm
from .oracle import run_suite
from .rational import parse_rational, rat_str
from .svg import Scene, render_svg

INLINE_NORMS = {
    "l1": PolyNorm.l1,
    "linf": PolyNorm.linf,
    "hexagonal": PolyNorm.hexagonal,
    "euclid": lambda: SmoothNorm(2.0),
}


class InputError(Exception):
    """Problem with the invocation or input files; maps to exit 2."""


# ---------------------------------------------------------------------------
# problem files


def _rat_from_json(value, where: str):
    if isinstance(value, str):
        try:
            return parse_rational(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError("bad rational %r in %s: %s" % (value, where, exc))
    raise InputError(
        "%s must be an exact string like \"1/3\", got %r (floats would corrupt "
        "the exact pipeline)" % (where, value)
    )


def parse_norm_obj(obj):
    if not isinstance(obj, dict) or "type" not in obj:
        raise InputError("norm must be an object with a \"type\" field")
    if obj["type"] == "polygon":
        verts = obj.get("vertices")
        if not isinstance(verts, list) or len(verts) < 4:
            raise InputError("polygon norm needs a list of at least 4 vertices")
        pts = []
        for k, pair in enumerate(verts):
            if not isinstance(pair, list) or len(pair) != 2:
                raise InputError("norm vertex %d must be a [x, y] pair" % k)
            where = "norm vertex %d" % k
            pts.append(Vec(_rat_from_json(pair[0], where), _rat_from_json(pair[1], where)))
        try:
            return PolyNorm.from_ball_vertices(pts)
        except FtlocusError as exc:
            raise InputError("invalid unit ball: %s" % exc)
    if obj["type"] == "lp":
        p = obj.get("p")
        if not isinstance(p, (int, float)) or isinstance(p, bool):
            raise InputError("lp norm needs a numeric exponent \"p\"")
        try:
            return SmoothNorm(float(p))
        except FtlocusError as exc:
            raise InputError(str(exc))
    raise InputError("unknown norm type %r" % obj["type"])


def parse_problem(text: str, override=None):
    """Parse a problem file; `override` replaces its norm and decides the
    exactness rule for the points."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("problem file is not valid JSON: %s" % exc)
    if not isinstance(obj, dict):
        raise InputError("problem file must be a JSON object")
    norm = parse_norm_obj(obj["norm"]) if "norm" in obj else None
    if override is not None:
        norm = override
    raw_points = obj.get("points", [])
    if not isinstance(raw_points, list):
        raise InputError("\"points\" must be a list")
    exact_required = not isinstance(norm, SmoothNorm)
    points = []
    for k, pair in enumerate(raw_points):
        if not isinstance(pair, list) or len(pair) != 2:
            raise InputError("point %d must be a [x, y] pair" % k)
        where = "point %d" % k
        if exact_required:
            points.append(
                Vec(_rat_from_json(pair[0], where), _rat_from_json(pair[1], where))
            )
        else:
            coords = []
            for c in pair:
                if isinstance(c, str):
                    coords.append(float(parse_rational(c)))
                elif isinstance(c, (int, float)) and not isinstance(c, bool):
                    coords.append(float(c))
                else:
                    raise InputError("%s has a non-numeric entry %r" % (where, c))
            points.append((coords[0], coords[1]))
    return norm, points


def serialize_norm(norm) -> dict:
    if isinstance(norm, SmoothNorm):
        return {"type": "lp", "p": norm.p}
    return {
        "type": "polygon",
        "vertices": [[rat_str(v.x), rat_str(v.y)] for v in norm.vertices],
    }


_PAIR_SPLIT = re.compile(r"\[\n\s+([^\[\]\n]+),\n\s+([^\[\]\n]+)\n\s+\]")


def _dump(obj) -> str:
    # keep coordinate pairs on one line; purely textual, so determinism
    # is untouched
    return _PAIR_SPLIT.sub(r"[\1, \2]", json.dumps(obj, indent=2)) + "\n"


def serialize_problem(norm, points) -> str:
    obj = {"norm": serialize_norm(norm)}
    if isinstance(norm, SmoothNorm):
        obj["points"] = [[float(x), float(y)] for x, y in points]
    else:
        obj["points"] = [[rat_str(p.x), rat_str(p.y)] for p in points]
    return _dump(obj)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc))


def resolve_norm(spec: str):
    """--norm value: an inline name, lp:<p>, or a JSON file with a norm."""
    if spec in INLINE_NORMS:
        return INLINE_NORMS[spec]()
    if spec.startswith("lp:"):
        try:
            return SmoothNorm(float(spec[3:]))
        except (ValueError, FtlocusError) as exc:
            raise InputError("bad lp norm %r: %s" % (spec, exc))
    if not os.path.exists(spec):
        raise InputError(
            "unknown norm %r (use %s, lp:<p>, or a JSON file)"
            % (spec, ", ".join(sorted(INLINE_NORMS)))
        )
    try:
        obj = json.loads(_read_text(spec))
    except json.JSONDecodeError as exc:
        raise InputError("norm file %s is not valid JSON: %s" % (spec, exc))
    if isinstance(obj, dict) and "norm" in obj:
        obj = obj["norm"]
    return parse_norm_obj(obj)


def load_problem(problem: str | None, norm_spec: str | None):
    """Merge the problem file (if any) with --norm; the flag wins when
    both name a norm."""
    override = resolve_norm(norm_spec) if norm_spec else None
    norm, points = override, []
    if problem:
        norm, points = parse_problem(_read_text(problem), override)
    if norm is None:
        raise InputError("no norm given: supply one in the problem file or via --norm")
    return norm, points


# ---------------------------------------------------------------------------
# output helpers


def _coords(p) -> list:
    if isinstance(p, Vec):
        return [rat_str(p.x), rat_str(p.y)]
    return [float(p[0]), float(p[1])]


def _region_obj(region) -> dict:
    return {"kind": region.kind, "vertices": [_coords(v) for v in region.vertices]}


def _value_obj(value):
    return float(value) if isinstance(value, float) else rat_str(value)


def emit(obj) -> None:
    sys.stdout.write(_dump(obj))


def _parse_cli_pair(text: str, exact: bool, what: str):
    parts = text.strip().split(",")
    if len(parts) != 2:
        raise InputError("%s must be \"x,y\", got %r" % (what, text))
    try:
        qs = [parse_rational(p) for p in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError("bad coordinate in %s: %s" % (what, exc))
    if exact:
        return Vec(qs[0], qs[1])
    return (float(qs[0]), float(qs[1]))


# ---------------------------------------------------------------------------
# subcommands


def cmd_ft_point(args) -> int:
    norm, points = load_problem(args.problem, args.norm)
    if not points:
        raise InputError("problem has no points")
    point, value = ft_point(norm, points, tol=args.tol)
    emit({"point": _coords(point), "value": _value_obj(value)})
    return 0


def cmd_ft_locus(args) -> int:
    norm, points = load_problem(args.problem, args.norm)
    if not points:
        raise InputError("problem has no points")
    if isinstance(norm, SmoothNorm):
        raise InputError("ft-locus runs on the exact path; use a polygon norm")
    result = ft_locus(norm, points)
    out = _region_obj(result.locus)
    out["value"] = _value_obj(result.value)
    emit(out)
    return 0


def cmd_d_segment(args) -> int:
    norm, points = load_problem(args.problem, args.norm)
    if isinstance(norm, SmoothNorm):
        raise InputError("d-segment runs on the exact path; use a polygon norm")
    if len(points) != 2:
        raise InputError("d-segment needs exactly 2 points, got %d" % len(points))
    emit(_region_obj(d_segment(norm, points[0], points[1])))
    return 0


def cmd_classify(args) -> int:
    norm, points = load_problem(args.problem, args.norm)
    if isinstance(norm, SmoothNorm):
        raise InputError("classify runs on the exact path; use a polygon norm")
    report = classify_instance(norm, points)
    cluster = None
    if report.double_cluster is not None:
        cluster = {
            "pairs": [[_coords(x), _coords(y)] for x, y in report.double_cluster.pairs],
            "face": [_coords(p) for p in report.double_cluster.face.points],
            "exhaustive": report.double_cluster.exhaustive,
        }
    pseudo = None
    if report.pseudo_double_cluster is not None:
        pdc = report.pseudo_double_cluster
        pseudo = {
            "centre": _coords(pdc.centre),
            "extra": _coords(pdc.extra),
            "cluster_pairs": [[_coords(x), _coords(y)] for x, y in pdc.cluster.pairs],
        }
    emit(
        {
            "locus": _region_obj(report.result.locus),
            "value": _value_obj(report.result.value),
            "hull_relation": report.hull_relation,
            "sites_in_locus": [_coords(p) for p in report.a_cap_ft],
            "double_cluster": cluster,
            "pseudo_double_cluster": pseudo,
            "ball_shape": report.ball_shape,
        }
    )
    return 0


def cmd_angle(args) -> int:
    norm = resolve_norm(args.norm) if args.norm else SmoothNorm(2.0)
    exact = isinstance(norm, PolyNorm)
    vertex = _parse_cli_pair(args.vertex, exact, "--vertex")
    arms = [
        _parse_cli_pair(a, exact, "arm %d" % (k + 1)) for k, a in enumerate(args.arms)
    ]
    if len(arms) == 2:
        q = AngleQuery(norm, vertex, arms[0], arms[1])
        emit({"critical": is_critical(q, tol=args.tol)})
        return 0
    if len(arms) == 3:
        emit(
            {
                "floating": is_floating_deg3(
                    norm, vertex, arms[0], arms[1], arms[2], tol=args.tol
                )
            }
        )
        return 0
    raise InputError("--arms takes 2 endpoints (critical) or 3 (floating)")


def cmd_verify(args) -> int:
    norm, points = load_problem(args.problem, args.norm)
    if not points:
        raise InputError("problem has no points")
    exact = isinstance(norm, PolyNorm)
    p = _parse_cli_pair(args.point, exact, "--point")
    if not exact:
        best, value = ft_point(norm, points, tol=args.tol)
        got = ft_objective(norm, points, p)
        if got <= value + args.tol:
            emit({"optimal": True, "value": float(got)})
            return 0
        emit(
            {
                "optimal": False,
                "reason": "objective_above_optimum",
                "objective": float(got),
                "optimum": float(value),
                "gap": float(got - value),
            }
        )
        return 1
    result = ft_locus(norm, points)
    if result.locus.contains(p):
        mode = ABSORBING if p in points else FLOATING
        cert = select_functionals(norm, points, p, mode)
        assert cert is not None and verify_certificate(norm, points, p, cert)
        emit(
            {
                "optimal": True,
                "value": _value_obj(result.value),
                "mode": cert.mode,
                "functionals": [
                    [i, _coords(phi)] for i, phi in cert.functionals
                ],
            }
        )
        return 0
    emit(
        {
            "optimal": False,
            "reason": "objective_above_optimum",
            "objective": _value_obj(ft_objective(norm, points, p)),
            "optimum": _value_obj(result.value),
        }
    )
    return 1


def cmd_suite(args) -> int:
    try:
        report = run_suite(args.name, trials=args.trials, seed=args.seed)
    except UnknownSuiteError as exc:
        raise InputError(str(exc))
    sys.stdout.write(str(report) + "\n")
    sys.stdout.write(
        "suite %s: %d passed, %d failed\n" % (args.name, report.passed, report.failed)
    )
    return 0 if report.failed == 0 else 1


def cmd_render(args) -> int:
    if args.scene in FIGURES:
        scene = build(args.scene)
        default_out = args.scene + ".svg"
    else:
        norm, points = load_problem(args.scene, args.norm)
        if not points:
            raise InputError("problem has no points")
        if isinstance(norm, SmoothNorm):
            point, _ = ft_point(norm, points, tol=args.tol)
            locus = ConvexRegion.point(Vec(*[parse_rational(repr(c)) for c in point]))
        else:
            locus = ft_locus(norm, points).locus
        scene = Scene(norm, tuple(points), locus)
        stem = args.scene.rsplit("/", 1)[-1]
        default_out = (stem[:-5] if stem.endswith(".json") else stem) + ".svg"
    out = args.out or default_out
    try:
        render_svg(scene, out)
    except OSError as exc:
        raise InputError("cannot write %s: %s" % (out, exc))
    emit({"written": out})
    return 0


# ---------------------------------------------------------------------------
# argument plumbing

_NEG_PAIR = re.compile(r"^-[\d.].*,")


def _shield_negatives(argv):
    """Prefix a space to -x,y coordinate tokens so argparse keeps them as
    values; every consumer strips its input."""
    return [(" " + a) if _NEG_PAIR.match(a) else a for a in argv]


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="ftlocus",
        description="Exact minimum-distance-sum solver for polygonal-norm planes.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, problem=True):
        if problem:
            p.add_argument("problem", nargs="?", help="problem JSON file, or - for stdin")
        p.add_argument("--norm", help="l1 | linf | hexagonal | euclid | lp:<p> | file")
        p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="smooth-path tolerance")

    p = sub.add_parser("ft-point", help="one minimizer and the optimal value")
    common(p)
    p.set_defaults(func=cmd_ft_point)

    p = sub.add_parser("ft-locus", help="the full minimizer region, exactly")
    common(p)
    p.set_defaults(func=cmd_ft_locus)

    p = sub.add_parser("d-segment", help="points between a pair under the norm")
    common(p)
    p.set_defaults(func=cmd_d_segment)

    p = sub.add_parser("classify", help="structure report for a site set")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("angle", help="critical (2 arms) or floating (3 arms) query")
    common(p, problem=False)
    p.add_argument("--vertex", default="0,0", help="angle vertex, default origin")
    p.add_argument("--arms", nargs="+", required=True, help="arm endpoints x,y")
    p.set_defaults(func=cmd_angle)

    p = sub.add_parser("verify", help="check a candidate point for optimality")
    common(p)
    p.add_argument("--point", required=True, help="candidate x,y")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("suite", help="run a randomized property suite")
    p.add_argument("name", help="suite name")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("render", help="write an SVG scene")
    p.add_argument("scene", help="figure name (fig1..fig6) or problem JSON file")
    p.add_argument("--norm", help="norm override for problem files")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--out", help="output path, defaults next to the input name")
    p.set_defaults(func=cmd_render)

    return top


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_shield_negatives(argv))
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    except FtlocusError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
