"""``dg``: command-line front end over the world, theory and podgon file formats.

Exit codes: 0 success / property holds, 1 property fails, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import bisection, figures, lines, podgon, theory
from .enumeration import DEFAULT_MAX_POINTS, PREDICATES, SearchQuery, enumerate_worlds, search_worlds
from .errors import CyclicDependency, PointWorldError
from .world import World, format_world, parse_world

OK, FAIL, USAGE = 0, 1, 2


class InputError(Exception):
    """Raised for unreadable or malformed inputs; reported with exit code 2."""


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc


def _load_world(path: str) -> World:
    return parse_world(_read(path), source=path)


def _point(world: World, label: str, flag: str) -> str:
    if label not in world.points:
        raise InputError(f"{flag}: unknown point {label!r} in world {world.name}")
    return label


def cmd_lines(args, out) -> int:
    world = _load_world(args.world)
    if args.maximal:
        found = lines.maximal_lines(world)
        tag = "LINE"
    else:
        found = lines.straight_segments(world, args.kind)
        tag = "SEG"
    for w in found:
        out(f"{tag} {w} length={w.length}")
    out(f"COUNT {len(found)}")
    return OK


def cmd_bisect(args, out) -> int:
    world = _load_world(args.world)
    u = _point(world, args.source, "--from")
    v = _point(world, args.to, "--to")
    if u == v:
        raise InputError("--from and --to must differ: a single point is not an N-segment")
    segs = world.geodesics(u, v)
    if not segs:
        out(f"NO SEGMENT {u} {v}")
        return FAIL
    every = True
    for seg in segs:
        if args.definition == "A":
            mids = bisection.a_bisection_points(world, seg)
            detail = " ".join(f"{p}@{i}" for i, p in mids)
            every &= bool(mids)
            out(f"SEG {seg} A {'MIDPOINT ' + detail if mids else 'NONE'}")
        else:
            cuts = bisection.b_bisection_cuts(world, seg, args.halves)
            detail = " ".join(f"{seg.points[m]}|{seg.points[m + 1]}@{m}" for m in cuts)
            every &= bool(cuts)
            out(f"SEG {seg} B/{args.halves} {'CUT ' + detail if cuts else 'NONE'}")
    return OK if every else FAIL


def cmd_circle(args, out) -> int:
    world = _load_world(args.world)
    _point(world, args.center, "--center")
    spec = figures.CircleSpec(args.center, args.radius, "Z" if args.zero else "NZ")
    pts = sorted(figures.circle_points(world, spec))
    out(f"CIRCLE center={spec.center} radius={spec.radius} policy={spec.zero_policy.value}")
    out("POINTS " + " ".join(pts) if pts else "POINTS")
    out(f"COUNT {len(pts)}")
    return OK


def cmd_circles_through(args, out) -> int:
    world = _load_world(args.world)
    pair = [p.strip() for p in args.pair.split(",")]
    if len(pair) != 2 or pair[0] == pair[1]:
        raise InputError("--pair: expected two distinct points like D,F")
    u, v = (_point(world, p, "--pair") for p in pair)
    found = figures.circles_through(world, u, v)
    for c, r in found:
        out(f"CIRCLE center={c} radius={r}")
    out(f"COUNT {len(found)}")
    return OK if found else FAIL


def cmd_triangles(args, out) -> int:
    world = _load_world(args.world)
    fn = figures.equilateral_triangles if args.equilateral else figures.triangles
    found = fn(world, args.kind)
    for t in found:
        out(str(t))
    out(f"COUNT {len(found)}")
    return OK


def cmd_parity(args, out) -> int:
    world = _load_world(args.world)
    report = bisection.parity_report(world)
    for line in report.render().splitlines():
        out(line)
    return OK if report.passed else FAIL


def cmd_enumerate(args, out) -> int:
    count = 0
    for world in enumerate_worlds(args.points, args.up_to_iso, args.max_points):
        out(format_world(world))
        count += 1
    out(f"COUNT {count}")
    return OK


def cmd_search(args, out) -> int:
    query = SearchQuery(args.points, args.where, args.up_to_iso, args.max_points)
    count, worlds = search_worlds(query, workers=args.workers)
    out(f"COUNT {count}")
    for world in worlds:
        out("")
        out(format_world(world).rstrip("\n"))
    return OK


def cmd_theory(args, out) -> int:
    graph = theory.parse_theory(_read(args.file), source=args.file)
    if args.action == "check":
        cycles = theory.detect_cycles(graph)
        loose = theory.unjustified_claims(graph)
        for c in cycles:
            out("CYCLE " + " -> ".join(c + c[:1]))
        for sid in loose:
            out(f"UNJUSTIFIED {sid}")
        ok = not cycles and not loose
        out("OK" if ok else "FAIL")
        return OK if ok else FAIL
    if not args.claim:
        raise InputError(f"theory {args.action}: --claim is required")
    if args.claim not in graph.statements:
        raise InputError(f"--claim: unknown id {args.claim!r} in {args.file}")
    try:
        if args.action == "foundation":
            for sid in sorted(theory.foundation(graph, args.claim)):
                out(f"{sid} [{graph.kind(sid).value}]")
        else:
            for line in theory.render_tree(graph, args.claim).splitlines():
                out(line)
    except CyclicDependency as exc:
        out("CYCLE " + " -> ".join(exc.cycle + exc.cycle[:1]))
        return FAIL
    return OK


_ALIASES = {"A": podgon.DEFINITION_A, "B": podgon.DEFINITION_B}


def _definition(text: str | None, flag: str):
    if text is None:
        raise InputError(f"{flag} is required")
    try:
        return podgon.parse_definition(_ALIASES.get(text, text))
    except PointWorldError as exc:
        raise InputError(f"{flag}: {exc}") from exc


def cmd_podgon(args, out) -> int:
    bounds = podgon.Bounds()
    if args.bounds:
        try:
            bounds = podgon.parse_bounds(args.bounds)
        except ValueError as exc:
            raise InputError(f"--bounds: {exc}") from exc
    expr = _definition(args.definition, "--def")
    if args.action == "eval":
        if not args.shape:
            raise InputError("--shape is required")
        try:
            shape = podgon.parse_shape(args.shape)
        except ValueError as exc:
            raise InputError(f"--shape: {exc}") from exc
        verdict = podgon.evaluate(expr, shape)
        out(f"{podgon.format_shape(shape)} -> {'member' if verdict else 'nonmember'}")
        return OK if verdict else FAIL
    if args.action == "test":
        if not args.table:
            raise InputError("--table is required")
        try:
            table = podgon.parse_table(_read(args.table))
        except ValueError as exc:
            raise InputError(f"{args.table}: {exc}") from exc
        bad = podgon.consistent(expr, table)
        out("OK" if bad is None else str(bad))
        return OK if bad is None else FAIL
    other = _definition(args.definition2, "--def2")
    if args.action == "discriminate":
        shapes = podgon.discriminating_shapes(expr, other, bounds)
        for s in shapes:
            first = "member" if podgon.evaluate(expr, s) else "nonmember"
            second = "member" if podgon.evaluate(other, s) else "nonmember"
            out(f"SHAPE {podgon.format_shape(s)} def={first} def2={second}")
        out(f"COUNT {len(shapes)}")
        return OK
    holds, witness = podgon.entails(expr, other, bounds)
    out("ENTAILS" if holds else f"WITNESS {podgon.format_shape(witness)}")
    return OK if holds else FAIL


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D401
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dg", description="Geometry of finite point worlds.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("lines", help="straight segments or maximal lines")
    p.add_argument("world")
    p.add_argument("--kind", choices=["P", "N"], default="N")
    p.add_argument("--maximal", action="store_true")
    p.set_defaults(run=cmd_lines)

    p = sub.add_parser("bisect", help="bisect the segments between two points")
    p.add_argument("world")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", required=True)
    p.add_argument("--def", dest="definition", choices=["A", "B"], required=True)
    p.add_argument("--halves", choices=["P", "N"], default="P")
    p.set_defaults(run=cmd_bisect)

    p = sub.add_parser("circle", help="points of a circle")
    p.add_argument("world")
    p.add_argument("--center", required=True)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--zero", action="store_true", help="allow radius 0 (Z circles)")
    p.set_defaults(run=cmd_circle)

    p = sub.add_parser("circles-through", help="circles containing a pair of points")
    p.add_argument("world")
    p.add_argument("--pair", required=True)
    p.set_defaults(run=cmd_circles_through)

    p = sub.add_parser("triangles", help="triangles of a world")
    p.add_argument("world")
    p.add_argument("--kind", choices=["C", "NC"], required=True)
    p.add_argument("--equilateral", action="store_true")
    p.set_defaults(run=cmd_triangles)

    p = sub.add_parser("parity", help="bisection parity report")
    p.add_argument("world")
    p.set_defaults(run=cmd_parity)

    for name, fn in (("enumerate", cmd_enumerate), ("search", cmd_search)):
        p = sub.add_parser(name)
        p.add_argument("--points", type=int, required=True)
        p.add_argument("--up-to-iso", action="store_true")
        p.add_argument("--max-points", type=int, default=DEFAULT_MAX_POINTS)
        if name == "search":
            p.add_argument("--where", choices=list(PREDICATES), required=True)
            p.add_argument("--workers", type=int, default=1)
        p.set_defaults(run=fn)

    p = sub.add_parser("theory", help="check assumption-digging theory files")
    p.add_argument("action", choices=["check", "foundation", "render"])
    p.add_argument("file")
    p.add_argument("--claim")
    p.set_defaults(run=cmd_theory)

    p = sub.add_parser("podgon", help="podgon definition game")
    p.add_argument("action", choices=["eval", "test", "discriminate", "entails"])
    p.add_argument("--def", dest="definition")
    p.add_argument("--def2", dest="definition2")
    p.add_argument("--shape")
    p.add_argument("--table")
    p.add_argument("--bounds")
    p.set_defaults(run=cmd_podgon)
    return parser


def run(argv: Sequence[str], out: Callable[[str], None] | None = None) -> int:
    if out is None:
        out = print
    args = build_parser().parse_args(list(argv))
    try:
        return args.run(args, out)
    except (InputError, PointWorldError, ValueError) as exc:
        print(f"dg {args.verb}: {exc}", file=sys.stderr)
        return USAGE


def main(argv: Sequence[str] | None = None) -> None:
    try:
        code = run(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else USAGE
    except BrokenPipeError:
        sys.stderr.close()
        code = OK
    sys.exit(code)


if __name__ == "__main__":
    main()
