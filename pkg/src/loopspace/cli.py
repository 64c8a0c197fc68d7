"""Command-line front end.

Commands: validate, cells, boundary, check, homology, group, cover.
Complexes come from ``--builtin`` specs (sphere:n, wedge:r,
boundary-simplex:n, facets:<file>) or a complex-document path; models are
built on the edge-inverted extension.  ``--json`` switches every command
to machine-readable output; the exit status is nonzero iff a check fails
or the input is invalid.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chains import Ring, boundary_word
from .cubes import all_cells
from .fileformat import FormatError, parse_word, resolve_complex
from .homology import field_dimensions, homology
from .paths import cover_graph, covering_report, to_adjacency, to_dot
from .simplicial import SimplicialError, SimplicialPresentation
from .suites import SUITES
from .words import (
    WordError,
    compose,
    enumerate_words,
    invert,
    power_decompose,
)

DEFAULT_SEED = 0


class CliError(ValueError):
    pass


def _load(args) -> SimplicialPresentation:
    spec = getattr(args, "builtin", None) or getattr(args, "complex", None)
    if not spec:
        raise CliError("no complex given: pass a source or --builtin")
    zx = resolve_complex(spec)
    return zx if zx.op_pairs else zx.z_extension()


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, default=str))
    else:
        for line in lines:
            print(line)


def cmd_validate(args) -> int:
    zx = _load(args)
    report = zx.validate()
    _emit(args, {"complex": zx.name, "violations": report, "ok": not report},
          [f"{zx.name}: ok" if not report else f"{zx.name}: {len(report)} violation(s)"]
          + [f"  {r}" for r in report])
    return 1 if report else 0


def cmd_cells(args) -> int:
    if args.cube is not None:
        cells = all_cells(args.cube + (0 if args.aug else 1), augmented=args.aug)
        _emit(args,
              {"cube": args.cube, "augmented": args.aug,
               "cells": [{"label": str(c), "dim": c.dim} for c in cells]},
              [f"{str(c):<30} dim {c.dim}" for c in cells])
        return 0
    zx = _load(args)
    words = enumerate_words(zx, args.degree, args.max_len, zx.basepoint, zx.basepoint)
    _emit(args,
          {"complex": zx.name, "degree": args.degree, "max_length": args.max_len,
           "count": len(words), "cells": [str(w) for w in words]},
          [str(w) for w in words] + [f"# {len(words)} cell(s)"])
    return 0


def _ring(spec: str) -> Ring:
    if spec == "z":
        return Ring.integers()
    if spec == "q":
        return Ring.rationals()
    if spec.startswith("p:"):
        return Ring.prime_field(int(spec[2:]))
    raise CliError(f"unknown coefficient ring {spec!r} (use z, q, or p:<prime>)")


def cmd_boundary(args) -> int:
    zx = _load(args)
    w = parse_word(zx, args.word)
    ch = boundary_word(zx, _ring(args.coeff), w, args.variant)
    terms = sorted(((str(f), c) for f, c in ch.items()))
    rendered = " + ".join(
        (f"{c}*({f})" if c != 1 else f"({f})") for f, c in terms) or "0"
    _emit(args,
          {"complex": zx.name, "word": str(w), "variant": args.variant,
           "boundary": {f: c for f, c in terms}},
          [rendered])
    return 0


def cmd_check(args) -> int:
    zx = _load(args)
    suite = SUITES[args.suite]
    if args.suite == "cubical":
        report = suite(zx, samples=args.samples, seed=args.seed, cube_n=args.cube_n)
    elif args.suite in ("dsq", "leibniz"):
        report = suite(zx, samples=args.samples, seed=args.seed)
    elif args.suite == "theorem2":
        report = suite(zx, max_degree=args.degree, max_length=args.max_len or 4)
    else:  # covering
        report = suite(zx, max_length=args.max_len or 4)
    status = "pass" if report["ok"] else "fail"
    lines = [f"{zx.name} suite={args.suite}: {status}"]
    lines += [f"  {k}: {v}" for k, v in sorted(report["checks"].items())]
    lines += [f"  FAIL {f}" for f in report["failures"]]
    _emit(args, report, lines)
    return 0 if report["ok"] else 1


def cmd_homology(args) -> int:
    zx = _load(args)
    table = homology(zx, args.degree, args.variant, args.max_len)
    ring = _ring(args.coeff)
    rows = []
    payload = {"complex": zx.name, "variant": args.variant, "coefficients": ring.name,
               "max_length": args.max_len, "groups": []}
    dims = field_dimensions(table, ring)
    for g in table.groups:
        if ring.name == "Z":
            desc = str(g)
        else:
            d = dims[g.degree]
            desc = f"{ring.name}^{d}" if d else "0"
        rows.append(f"H_{g.degree:<2} = {desc}")
        payload["groups"].append(
            {"degree": g.degree, "free_rank": g.free_rank,
             "torsion": list(g.torsion), "rendered": desc})
    _emit(args, payload, rows)
    return 0


def cmd_group(args) -> int:
    zx = _load(args)
    out: dict[str, object] = {"complex": zx.name}
    lines = []
    if args.element:
        w = parse_word(zx, args.element)
        if w.degree != 0:
            raise CliError(f"{args.element!r} has degree {w.degree}, not a group element")
        out["element"] = str(w)
        lines.append(f"element: {w}")
        if args.power_detect:
            root, k = power_decompose(zx, w)
            out["root"], out["exponent"] = str(root), k
            lines.append(f"power: ({root})^{k}")
        if args.invert:
            iw = invert(zx, w)
            out["inverse"] = str(iw)
            lines.append(f"inverse: {iw}")
    if args.compose:
        u = parse_word(zx, args.compose[0])
        v = parse_word(zx, args.compose[1])
        w = compose(zx, u, v)
        out["composition"] = str(w)
        lines.append(f"composition: {w}")
    if args.count_length is not None:
        words = enumerate_words(zx, 0, args.count_length, zx.basepoint, zx.basepoint)
        out["count"] = len(words)
        lines.append(f"reduced words of length <= {args.count_length}: {len(words)}")
    if len(out) == 1:
        raise CliError("group: nothing to do (pass --element, --compose, or --count-length)")
    _emit(args, out, lines)
    return 0


def cmd_cover(args) -> int:
    zx = _load(args)
    graph = cover_graph(zx, args.max_len)
    report = covering_report(zx, graph)
    if args.out == "dot":
        body = to_dot(graph)
    elif args.out == "adj":
        body = "\n".join(f"{src} -> {' '.join(dsts)}"
                         for src, dsts in sorted(to_adjacency(graph).items()))
    else:
        body = (f"{zx.name}: {report['vertices']} vertices, {report['edges']} edges, "
                f"connected={report['connected']}, tree={report['tree']}, "
                f"covering={'ok' if report['ok'] else 'FAIL'}")
    payload = dict(report)
    payload["complex"] = zx.name
    if args.out in ("dot", "adj"):
        payload["export"] = body
    _emit(args, payload, [body])
    return 0 if report["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="loopspace",
                                description="Combinatorial loop- and path-space models.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp, complex_required=True):
        sp.add_argument("complex", nargs="?" if not complex_required else "?",
                        help="builtin spec or complex file")
        sp.add_argument("--builtin", help="sphere:n | wedge:r | boundary-simplex:n | facets:<file>")
        sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("validate", help="check the simplicial identities")
    add_common(sp)
    sp.set_defaults(fn=cmd_validate)

    sp = sub.add_parser("cells", help="list cube cells or loop-word cells")
    add_common(sp, complex_required=False)
    sp.add_argument("--cube", type=int, help="list the cells of the n-cube")
    sp.add_argument("--aug", action="store_true")
    sp.add_argument("--degree", type=int, default=0)
    sp.add_argument("--max-len", type=int)
    sp.set_defaults(fn=cmd_cells)

    sp = sub.add_parser("boundary", help="boundary of a word")
    add_common(sp)
    sp.add_argument("--word", required=True)
    sp.add_argument("--variant", choices=("de", "normalized", "norm"), default="de")
    sp.add_argument("--coeff", default="z")
    sp.set_defaults(fn=cmd_boundary)

    sp = sub.add_parser("check", help="run a property suite")
    add_common(sp)
    sp.add_argument("--suite", required=True, choices=sorted(SUITES))
    sp.add_argument("--degree", type=int, default=4)
    sp.add_argument("--max-len", type=int)
    sp.add_argument("--samples", type=int, default=120)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--cube-n", type=int, default=4)
    sp.set_defaults(fn=cmd_check)

    sp = sub.add_parser("homology", help="loop-space homology table")
    add_common(sp)
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--max-len", type=int)
    sp.add_argument("--coeff", default="z")
    sp.add_argument("--variant", choices=("de", "normalized", "norm"), default="normalized")
    sp.set_defaults(fn=cmd_homology)

    sp = sub.add_parser("group", help="operate on degree-0 words")
    add_common(sp)
    sp.add_argument("--element")
    sp.add_argument("--compose", nargs=2, metavar=("U", "V"))
    sp.add_argument("--invert", action="store_true")
    sp.add_argument("--power-detect", action="store_true")
    sp.add_argument("--count-length", type=int)
    sp.set_defaults(fn=cmd_group)

    sp = sub.add_parser("cover", help="covering graph of the 1-skeleton")
    add_common(sp)
    sp.add_argument("--max-len", type=int, required=True)
    sp.add_argument("--out", choices=("summary", "dot", "adj"), default="summary")
    sp.set_defaults(fn=cmd_cover)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "variant", None) == "norm":
        args.variant = "normalized"
    try:
        return args.fn(args)
    except (CliError, FormatError, SimplicialError, WordError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
