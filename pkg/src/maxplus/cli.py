"""Command-line front end: JSON in, JSON (or SVG) out."""

from __future__ import annotations

import argparse
import json
import sys

from .cones import Cone, NotMember
from .convex_sets import ConvexSet, sets_equal
from .halfspaces import HalfSpace
from .linalg import DimensionMismatch, TropVector, vectors_equal
from .render import render_set_svg
from .semiring import ZERO

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_PRECONDITION = 2
EXIT_SELF_CHECK = 3


class ParseFailure(Exception):
    pass


def _load_json(path: str, what: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseFailure(f"cannot read {what} file {path!r}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseFailure(f"{what} file {path!r} is not valid JSON: {exc}") from None


def _load_cone(path: str) -> Cone:
    try:
        return Cone.from_json(_load_json(path, "cone"))
    except (ValueError, TypeError) as exc:
        raise ParseFailure(f"--cone: {exc}") from None


def _load_set(path: str) -> ConvexSet:
    try:
        return ConvexSet.from_json(_load_json(path, "set"))
    except (ValueError, TypeError) as exc:
        raise ParseFailure(f"--set: {exc}") from None


def _load_halfspace(path: str) -> HalfSpace:
    try:
        return HalfSpace.from_json(_load_json(path, "halfspace"))
    except (ValueError, TypeError) as exc:
        raise ParseFailure(f"--halfspace: {exc}") from None


def _parse_vector(text: str) -> TropVector:
    try:
        return TropVector.from_json(json.loads(text))
    except (ValueError, TypeError) as exc:
        raise ParseFailure(f"--x: {exc}") from None


def _emit(doc: dict, out: str | None) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _geometry(args, need_one=True):
    """Resolve --cone/--set into (cone, convex_set); exactly one may be given."""
    cone = _load_cone(args.cone) if getattr(args, "cone", None) else None
    cset = _load_set(args.set) if getattr(args, "set", None) else None
    if need_one and (cone is None) == (cset is None):
        raise ParseFailure("exactly one of --cone or --set is required")
    return cone, cset


def _cmd_member(args) -> int:
    cone, cset = _geometry(args)
    x = _parse_vector(args.x)
    try:
        if cone is not None:
            proj = cone.project(x)
            member = vectors_equal(proj, x, args.tolerance)
        else:
            lifted = cset.lifted_projection(x)
            proj = TropVector(list(lifted)[: cset.dim])
            target_matches = vectors_equal(proj, x, args.tolerance)
            member = target_matches and not lifted[cset.dim].is_zero and abs(
                lifted[cset.dim].as_float()
            ) <= args.tolerance
    except DimensionMismatch as exc:
        raise ParseFailure(f"--x: {exc}") from None
    _emit({"member": member, "projection": proj.to_json()}, args.out)
    return EXIT_OK


def _cmd_basis(args) -> int:
    cone = _load_cone(args.cone)
    _emit(cone.extract_basis().to_json(), args.out)
    return EXIT_OK


def _cmd_decompose(args) -> int:
    cone, cset = _geometry(args)
    x = _parse_vector(args.x)
    try:
        if cone is not None:
            dec = cone.decompose(x)
            ok = dec.recombine(cone) == x and len(dec.terms) <= cone.dim
            doc = dec.to_json()
        else:
            dec = cset.decompose(x)
            point_max = ZERO
            for _, coeff in dec.point_terms:
                point_max = point_max + coeff
            ok = (
                dec.recombine(cset) == x
                and len(dec.point_terms) + len(dec.ray_terms) <= cset.dim + 1
                and point_max.as_float() == 0.0
            )
            doc = dec.to_json()
    except DimensionMismatch as exc:
        raise ParseFailure(f"--x: {exc}") from None
    except NotMember as exc:
        _emit(
            {"error": "not a member", "projection": exc.projection.to_json()},
            args.out,
        )
        return EXIT_PRECONDITION
    if not ok:
        sys.stderr.write("internal error: decomposition failed self-verification\n")
        return EXIT_SELF_CHECK
    _emit(doc, args.out)
    return EXIT_OK


def _cmd_extreme_points(args) -> int:
    cset = _load_set(args.set)
    _emit({"extreme_points": [p.to_json() for p in cset.extreme_points()]}, args.out)
    return EXIT_OK


def _cmd_recession(args) -> int:
    cset = _load_set(args.set)
    _emit(cset.recession().to_json(), args.out)
    return EXIT_OK


def _cmd_homogenize(args) -> int:
    cset = _load_set(args.set)
    _emit(cset.homogenize().to_json(), args.out)
    return EXIT_OK


def _cmd_minkowski_verify(args) -> int:
    cset = _load_set(args.set)
    ext = cset.extreme_points()
    reconstructed = ConvexSet.from_vectors(ext, list(cset.recession().generators))
    holds = sets_equal(cset, reconstructed)
    _emit(
        {
            "holds": holds,
            "extreme_points": [p.to_json() for p in ext],
            "recession_basis": reconstructed.rays.to_json(),
        },
        args.out,
    )
    return EXIT_OK


def _cmd_halfspace_check(args) -> int:
    hs = _load_halfspace(args.halfspace)
    if args.x is not None and args.set is not None:
        raise ParseFailure("give either --x or --set, not both")
    try:
        if args.x is not None:
            x = _parse_vector(args.x)
            verdict = hs.contains(x, args.side, args.tolerance)
            _emit({"contains": verdict}, args.out)
        elif args.set is not None:
            cset = _load_set(args.set)
            verdict = hs.contains_set(cset, args.side, args.tolerance)
            _emit({"contains_set": verdict}, args.out)
        else:
            raise ParseFailure("one of --x or --set is required")
    except DimensionMismatch as exc:
        raise ParseFailure(f"--halfspace: {exc}") from None
    return EXIT_OK


def _cmd_render(args) -> int:
    cone, cset = _geometry(args)
    if cset is None:
        # a cone is the convex set generated by the zero point plus its rays
        cset = ConvexSet.from_vectors(
            [TropVector.zero(cone.dim)], list(cone.generators)
        )
    try:
        svg = render_set_svg(cset, grid=args.grid)
    except ValueError as exc:
        raise ParseFailure(str(exc)) from None
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxplus",
        description="Exact max-plus (tropical) convexity: membership, bases, "
        "extreme points and Minkowski-type decompositions over JSON files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **flags):
        p = sub.add_parser(name)
        if flags.get("cone"):
            p.add_argument("--cone", metavar="FILE")
        if flags.get("set"):
            p.add_argument("--set", metavar="FILE")
        if flags.get("x"):
            p.add_argument("--x", metavar="JSON-ARRAY", required=flags["x"] == "required")
        if flags.get("halfspace"):
            p.add_argument("--halfspace", metavar="FILE", required=True)
        if flags.get("side"):
            p.add_argument("--side", choices=["plus", "minus"], default="plus")
        if flags.get("grid"):
            p.add_argument("--grid", type=int, default=200)
        p.add_argument("--tolerance", type=float, default=0.0)
        p.add_argument("--out", metavar="FILE")
        p.set_defaults(fn=fn)
        return p

    add("member", _cmd_member, cone=True, set=True, x="required")
    add("basis", _cmd_basis, cone=True)
    add("decompose", _cmd_decompose, cone=True, set=True, x="required")
    add("extreme-points", _cmd_extreme_points, set=True)
    add("recession", _cmd_recession, set=True)
    add("homogenize", _cmd_homogenize, set=True)
    add("minkowski-verify", _cmd_minkowski_verify, set=True)
    add("halfspace-check", _cmd_halfspace_check, halfspace=True, set=True, x="optional", side=True)
    add("render", _cmd_render, cone=True, set=True, grid=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "basis" and args.cone is None:
            raise ParseFailure("--cone is required")
        if args.command in ("extreme-points", "recession", "homogenize", "minkowski-verify") and (
            args.set is None
        ):
            raise ParseFailure("--set is required")
        return args.fn(args)
    except ParseFailure as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
