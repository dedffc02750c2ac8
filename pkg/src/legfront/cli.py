"""Command-line interface: `legfront <subcommand> <file> [options]`.

Domain verdicts (NotCertified, Inconclusive) are ordinary output with exit
code 0; malformed input or missing files exit 1; usage errors exit 2.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .codes import pd_text, to_generic_code
from .constructions import legendrianize, push_off, whitehead_double
from .errors import LegfrontError
from .front import FrontDiagram, OrientedFront, orient
from .invariants import linking, report
from .moves import fuzz
from .obstructions import genus_bound, slice_check, stein_check
from .oracles import kauffman_bracket, oracle_linking, oracle_writhe
from .render import RenderSpec, render
from .textio import (
    dump_json,
    invariants_json,
    parse_front,
    parse_grid,
    report_envelope,
    serialize_front,
)


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_front(path: str, choices=()) -> OrientedFront:
    return orient(parse_front(_read(path)), choices)


def _print_report(of: OrientedFront, out) -> None:
    rep = report(of)
    for k, c in enumerate(rep.components):
        out.write(
            f"component {k}: tb={c.tb} rot={c.rot} bb={c.bb} "
            f"right_cusps={c.right_cusps} "
            f"cusps(down/up)={c.down_cusps}/{c.up_cusps}\n"
        )
    n = rep.component_count
    for j in range(n):
        for k in range(j + 1, n):
            out.write(f"lk({j},{k}) = {rep.lk[j][k]}\n")


def cmd_invariants(args, out):
    of = _load_front(args.file, args.reverse or ())
    if args.json:
        out.write(invariants_json(of, report(of), str(of.diagram)))
    else:
        out.write(f"word: {of.diagram}\n")
        _print_report(of, out)
    return 0


def cmd_pushoff(args, out):
    of = _load_front(args.file)
    res = push_off(of, args.framing)
    rep = report(res.oriented)
    if args.json:
        out.write(
            dump_json(
                report_envelope(
                    "pushoff",
                    {
                        "word": str(res.front),
                        "framing": res.framing,
                        "knot": res.knot_index,
                        "companion": res.companion_index,
                        "stab_count": res.stab_count,
                        "lk": rep.lk[res.knot_index][res.companion_index],
                        "companion_tb": rep.components[res.companion_index].tb,
                        "report": rep.to_dict(),
                    },
                )
            )
        )
    else:
        out.write(serialize_front(res.front))
        out.write(
            f"framing {res.framing}: companion is component "
            f"{res.companion_index}, stab_count {res.stab_count}\n"
        )
        _print_report(res.oriented, out)
    return 0


def cmd_double(args, out):
    of = _load_front(args.file)
    result = whitehead_double(of, args.iterations)
    if args.json:
        rep = report(result)
        out.write(
            dump_json(
                report_envelope(
                    "double",
                    {
                        "word": str(result.diagram),
                        "iterations": args.iterations,
                        "report": rep.to_dict(),
                    },
                )
            )
        )
    else:
        out.write(serialize_front(result.diagram))
        _print_report(result, out)
    return 0


def cmd_legendrianize(args, out):
    grid = parse_grid(_read(args.file))
    front = legendrianize(grid)
    if args.json:
        rep = report(front)
        out.write(
            dump_json(
                report_envelope(
                    "legendrianize",
                    {"word": str(front.diagram), "report": rep.to_dict()},
                )
            )
        )
    else:
        out.write(serialize_front(front.diagram))
        _print_report(front, out)
    return 0


def cmd_slice_check(args, out):
    of = _load_front(args.file)
    cert = slice_check(of)
    if args.json:
        out.write(dump_json(report_envelope("slice-check", cert.to_dict())))
    else:
        out.write(f"{cert.verdict}: {cert.inequality}\n")
    return 0


def cmd_genus_bound(args, out):
    of = _load_front(args.file)
    gb = genus_bound(of, args.component, args.framing)
    if args.json:
        out.write(dump_json(report_envelope("genus-bound", gb.to_dict())))
    else:
        out.write(
            f"component {gb.component}, framing {gb.framing}: "
            f"genus >= {gb.bound} ({gb.slice_verdict})\n"
        )
    return 0


def cmd_stein_check(args, out):
    of = _load_front(args.file)
    framings = [int(tok) for tok in args.framings.split(",")]
    handles = list(enumerate(framings))
    rep = stein_check(of, handles)
    if args.json:
        out.write(dump_json(report_envelope("stein-check", rep.to_dict())))
    else:
        for h in rep.handles:
            extra = ""
            if h.status == "SteinAfterStabilizations":
                extra = f" after {h.stabilizations} stabilization(s)"
            if h.status == "NotCertified":
                extra = f" (deficit {h.deficit})"
            out.write(
                f"component {h.component} framing {h.framing} "
                f"(tb {h.tb}): {h.status}{extra}\n"
            )
        out.write(f"certified: {rep.certified}\n")
    return 0


def cmd_fuzz(args, out):
    d = parse_front(_read(args.file))
    before = report(orient(d))
    result = fuzz(d, args.steps, args.seed, allow_stab=args.allow_stab)
    after = report(orient(result))
    same = sorted((c.tb, c.rot) for c in before.components) == sorted(
        (c.tb, c.rot) for c in after.components
    ) and sorted(v for r in before.lk for v in r) == sorted(
        v for r in after.lk for v in r
    )
    verdict = "PASS" if same or args.allow_stab else "FAIL"
    if args.json:
        out.write(
            dump_json(
                report_envelope(
                    "fuzz",
                    {
                        "steps": args.steps,
                        "seed": args.seed,
                        "before": before.to_dict(),
                        "after": after.to_dict(),
                        "word": str(result.diagram),
                        "invariance": verdict,
                    },
                )
            )
        )
    else:
        out.write(f"before: {d}\n")
        out.write(f"after:  {result.diagram}\n")
        out.write(f"invariance: {verdict}\n")
    return 0 if verdict == "PASS" or args.allow_stab else 1


def cmd_render(args, out):
    of = _load_front(args.file)
    spec = RenderSpec(
        format=args.format,
        column_width=args.column_width,
        strand_spacing=args.strand_spacing,
        event_labels=args.labels,
        component_labels=args.labels,
    )
    out.write(render(of, spec))
    return 0


def cmd_verify(args, out):
    of = _load_front(args.file)
    code = to_generic_code(of)
    rep = report(of)
    lines = []
    ok = True
    for k, c in enumerate(rep.components):
        ow = oracle_writhe(code, k)
        match = ow == c.bb
        ok = ok and match
        lines.append(("writhe", k, c.bb, ow, match))
    n = rep.component_count
    for j in range(n):
        for k in range(j + 1, n):
            ol = oracle_linking(code, j, k)
            match = ol == rep.lk[j][k]
            ok = ok and match
            lines.append((f"lk({j},{k})", None, rep.lk[j][k], ol, match))
    if args.json:
        out.write(
            dump_json(
                report_envelope(
                    "verify",
                    {
                        "checks": [
                            {
                                "quantity": q,
                                "component": comp,
                                "value": v,
                                "oracle": o,
                                "match": m,
                            }
                            for q, comp, v, o, m in lines
                        ],
                        "pd": pd_text(code).strip().splitlines(),
                        "all_match": ok,
                    },
                )
            )
        )
    else:
        for q, comp, v, o, m in lines:
            where = f" component {comp}" if comp is not None else ""
            out.write(
                f"{q}{where}: value {v}, oracle {o}: "
                f"{'ok' if m else 'MISMATCH'}\n"
            )
        if code.crossing_count <= 12:
            out.write(f"bracket: {kauffman_bracket(code)}\n")
        out.write(pd_text(code))
        out.write(f"all checks: {'ok' if ok else 'MISMATCH'}\n")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="legfront",
        description="Legendrian front words: invariants, constructions, "
        "obstructions.",
    )
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        sp = sub.add_parser(name, **kw)
        sp.set_defaults(fn=fn)
        sp.add_argument("file", help="input file")
        sp.add_argument("--json", action="store_true", help="JSON output")
        return sp

    sp = add("invariants", cmd_invariants, help="tb, rot, writhe, linking")
    sp.add_argument(
        "--reverse",
        type=lambda s: [bool(int(b)) for b in s.split(",")],
        help="comma-separated orientation flip bits, e.g. 1,0",
    )
    sp = add("pushoff", cmd_pushoff, help="framed Legendrian push-off")
    sp.add_argument("--framing", type=int, default=0)
    sp = add("double", cmd_double, help="iterated positive Whitehead double")
    sp.add_argument("-n", "--iterations", type=int, default=1)
    add("legendrianize", cmd_legendrianize, help="grid diagram to front")
    add("slice-check", cmd_slice_check, help="one-sided slice obstruction")
    sp = add("genus-bound", cmd_genus_bound, help="framed genus lower bound")
    sp.add_argument("--framing", type=int, default=0)
    sp.add_argument("--component", type=int, default=0)
    sp = add("stein-check", cmd_stein_check, help="2-handle framing check")
    sp.add_argument(
        "--framings", required=True, help="comma-separated, one per component"
    )
    sp = add("fuzz", cmd_fuzz, help="randomized move invariance")
    sp.add_argument("--steps", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--allow-stab", action="store_true")
    sp = add("render", cmd_render, help="draw the front")
    sp.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    sp.add_argument("--column-width", type=int, default=12)
    sp.add_argument("--strand-spacing", type=int, default=10)
    sp.add_argument("--labels", action="store_true")
    add("verify", cmd_verify, help="cross-check against the oracles")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args, sys.stdout)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except LegfrontError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
