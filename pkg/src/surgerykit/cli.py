"""Command-line front end.

JSON goes to stdout and a short human summary to stderr.  Exit codes:
0 success, 1 usage error, 2 bad input, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Sequence

from . import viz
from .diagram import DiagramError, OrientedDiagram, emit_native, writhe
from .fpgroup import DEFAULT_BUDGET, abelianization
from .knots import builtin_file, builtin_names, builtin_text, load_diagram, unknot_with_kinks
from .surgery import (
    analyze_group,
    framed_unknot_surgery,
    lens_space_name,
    surgery_presentation,
    zero_surgery_group,
)
from .wirtinger import longitude_word, wirtinger_presentation
from .words import Presentation, WordSyntaxError

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class InvariantViolation(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _color(text: str, code: str) -> str:
    if os.environ.get("SURGERYKIT_NO_COLOR") or not sys.stderr.isatty():
        return text
    return f"\033[{code}m{text}\033[0m"


def _say(line: str) -> None:
    print(line, file=sys.stderr)


def _emit(data: dict) -> None:
    sys.stdout.write(json.dumps(data, indent=2, ensure_ascii=False) + "\n")


# --------------------------------------------------------------------------
# input


def _read_diagram(args) -> OrientedDiagram:
    if args.builtin:
        if args.input:
            raise UsageError("give either an input file or --builtin, not both")
        text = builtin_text(args.builtin)
        fmt = "pd" if builtin_file(args.builtin).endswith(".pd") else "native"
        if args.format == "pd" and fmt != "pd":
            raise UsageError(f"built-in {args.builtin!r} is not a PD code")
    else:
        if not args.input:
            raise UsageError("an input file ('-' for stdin) or --builtin is required")
        if args.input == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(args.input, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise DiagramError(f"cannot read {args.input}: {exc.strerror}") from None
        fmt = args.format
    return load_diagram(text, fmt, mirror_image=args.mirror)


def _diagram_summary(d: OrientedDiagram) -> dict:
    return {
        "input": emit_native(d),
        "crossings": d.n_crossings,
        "arcs": d.n_arcs,
        "writhe": writhe(d),
    }


# --------------------------------------------------------------------------
# commands


def cmd_parse(args) -> dict:
    d = _read_diagram(args)
    out = _diagram_summary(d)
    _say(_color("diagram ok", "32") + f": {d.n_crossings} crossings, {d.n_arcs} arcs, writhe {out['writhe']}")
    return out


def _check_report(report, label: str) -> None:
    table = report.table
    if table is not None and table.complete:
        if not (table.is_permutation_action() and table.relators_close(report.presentation.relators)):
            raise InvariantViolation(f"{label}: coset table fails its consistency checks")
        if report.abelian.free_rank:
            raise InvariantViolation(f"{label}: finite group with infinite abelianization")


def cmd_surgery(args) -> dict:
    timing: dict[str, float] = {}
    t0 = time.perf_counter()

    def lap(stage: str) -> None:
        nonlocal t0
        now = time.perf_counter()
        timing[stage] = round((now - t0) * 1000.0, 3)
        t0 = now

    lens = None
    if args.unknot_framing is not None:
        if args.input or args.builtin:
            raise UsageError("--unknot-framing replaces the input diagram")
        p = args.unknot_framing
        d = unknot_with_kinks(p)
        lens = framed_unknot_surgery(p)
    else:
        d = _read_diagram(args)
    lap("parse")
    knot = wirtinger_presentation(d)
    lam = longitude_word(d)
    surgered = surgery_presentation(d)
    lap("presentation")
    if lam.exponent_sum() != writhe(d):
        raise InvariantViolation("longitude exponent sum differs from the writhe")
    knot_ab = abelianization(knot)
    if d.n_crossings and (knot_ab.free_rank, knot_ab.torsion) != (1, ()):
        raise InvariantViolation(f"knot group abelianizes to {knot_ab}, expected Z")
    report = analyze_group(surgered, args.coset_budget, args.simplify_effort)
    lap("group")
    _check_report(report, "surgery")
    identification = report.identification
    if lens is not None:
        if abelianization(lens) != report.abelian:
            raise InvariantViolation("lens space presentation disagrees with the diagram route")
        identification = lens_space_name(args.unknot_framing)
    names = d.names
    out = _diagram_summary(d)
    out.update(
        {
            "knot_group": knot.to_dict(),
            "longitude": lam.format(names),
            "longitude_powers": lam.format_powers(names),
            "surgered_group": surgered.to_dict(),
            "simplified_group": report.simplified.to_dict(),
            "abelian_invariants": report.abelian.to_dict(),
            "abelian_invariants_text": str(report.abelian),
            "perfect": report.perfect,
            "order": report.order if report.order is not None else "unknown",
            "coset_status": report.coset_status,
            "identification": identification,
            "certificates": report.certificates,
        }
    )
    if lens is not None:
        out["lens_space"] = lens_space_name(args.unknot_framing)
        out["lens_presentation"] = lens.to_dict()
    if args.timing:
        out["timing_ms"] = timing
    _say(
        _color("surgery", "36")
        + f": longitude {out['longitude_powers'] or '1'}, H1 = {report.abelian}, "
        f"order {out['order']}, {identification}"
    )
    return out


def cmd_zero_surgery(args) -> dict:
    if args.count < 1:
        raise UsageError("--count must be at least 1")
    p = Presentation.trivial()
    for _ in range(args.count):
        p = zero_surgery_group(p)
    report = analyze_group(p, args.coset_budget, args.simplify_effort)
    if report.abelian.free_rank != args.count:
        raise InvariantViolation("free rank differs from the number of 0-surgeries")
    _say(_color("zero-surgery", "36") + f": {args.count} times, H1 = {report.abelian}, {report.identification}")
    return {
        "count": args.count,
        "surgered_group": p.to_dict(),
        "abelian_invariants": report.abelian.to_dict(),
        "abelian_invariants_text": str(report.abelian),
        "order": "unknown",
        "identification": report.identification,
        "certificates": report.certificates,
    }


_AXES = {"ell": "ell", "ell-prime": "ell_prime", "ell-circle": "ell_circle"}


def cmd_viz(args) -> dict | None:
    projection = "first" if args.projection == 1 else "second"
    axis = _AXES[args.axis] if args.axis else None
    if axis == "ell" and projection == "second":
        raise UsageError("in the second projection ell is a circle; use --axis ell-circle")
    if axis == "ell_circle" and projection == "first":
        raise UsageError("--axis ell-circle needs --projection 2")
    if args.segments < 8:
        raise UsageError("--segments must be at least 8")
    if not 0 < args.sweep <= 360:
        raise UsageError("--sweep must lie in (0, 360]")
    try:
        scene = viz.build_profile(projection, args.instance, args.clip)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    meshes = viz.scene_meshes(
        projection, args.surgery, args.instance, args.segments, args.clip, args.sweep, axis
    )
    for m in meshes:
        try:
            m.validate()
        except ValueError as exc:
            raise InvariantViolation(str(exc)) from None
    markers = [c for c in scene.curves if c.role == "marker"]
    text = viz.obj_text(meshes, markers)
    pieces = [
        {
            "label": m.label,
            "surface": m.surface,
            "closed": m.closed,
            "watertight": m.is_watertight(),
            "euler_characteristic": m.euler_characteristic(),
            "vertices": m.n_vertices,
            "triangles": m.n_triangles,
        }
        for m in meshes
    ]
    _say(
        _color("viz", "36")
        + f": {len(meshes)} pieces "
        + ", ".join(f"{p['label']} (chi {p['euler_characteristic']})" for p in pieces)
    )
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        return {"output": args.output, "pieces": pieces, "markers": [m.label for m in markers]}
    sys.stdout.write(text)
    return None


# --------------------------------------------------------------------------


def _input_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("input", nargs="?", help="diagram file, or '-' for stdin")
    sp.add_argument("--builtin", choices=builtin_names(), help="use a bundled diagram")
    sp.add_argument("--format", choices=("native", "pd"), default="native")
    sp.add_argument("--mirror", action="store_true", help="use the mirror image")


def _group_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--coset-budget", type=int, default=DEFAULT_BUDGET, metavar="N")
    sp.add_argument("--simplify-effort", type=int, default=1000, metavar="N")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="surgerykit", description="Fundamental groups of surgered 3-manifolds.")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    sp = sub.add_parser("parse", help="validate a diagram and report its writhe")
    _input_flags(sp)

    sp = sub.add_parser("surgery", help="surgery on S^3 along a blackboard-framed knot")
    _input_flags(sp)
    _group_flags(sp)
    sp.add_argument("--unknot-framing", type=int, metavar="P", help="unknot with P kinks")
    sp.add_argument("--timing", action="store_true", help="include stage timings")

    sp = sub.add_parser("zero-surgery", help="repeated 0-surgery on S^3")
    sp.add_argument("--count", type=int, default=1, metavar="N")
    _group_flags(sp)

    sp = sub.add_parser("viz", help="write OBJ meshes of a rotation picture")
    sp.add_argument("--projection", type=int, choices=(1, 2), default=1)
    sp.add_argument("--surgery", type=int, choices=(0, 1), default=0)
    sp.add_argument("--instance", choices=viz.INSTANCES, default="initial")
    sp.add_argument("--segments", type=int, default=32)
    sp.add_argument("--clip", type=float, default=viz.DEFAULT_CLIP)
    sp.add_argument("--sweep", type=float, default=180.0)
    sp.add_argument("--axis", choices=sorted(_AXES))
    sp.add_argument("--output", "-o", help="OBJ path (default: stdout)")
    return ap


_COMMANDS = {
    "parse": cmd_parse,
    "surgery": cmd_surgery,
    "zero-surgery": cmd_zero_surgery,
    "viz": cmd_viz,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "coset_budget", 1) < 1:
            raise UsageError("--coset-budget must be at least 1")
        if getattr(args, "simplify_effort", 0) < 0:
            raise UsageError("--simplify-effort must be non-negative")
        result = _COMMANDS[args.command](args)
    except UsageError as exc:
        _say(_color("usage error", "31") + f": {exc}")
        return EXIT_USAGE
    except (DiagramError, WordSyntaxError) as exc:
        _say(_color("input error", "31") + f": {exc}")
        return EXIT_INPUT
    except (InvariantViolation, AssertionError) as exc:
        _say(_color("internal error", "31") + f": {exc}")
        return EXIT_INTERNAL
    if result is not None:
        _emit(result)
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
