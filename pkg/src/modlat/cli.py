"""Command-line interface.

Subcommands: analyze (ring/module profiles), verify (corpus checks),
lattice (DOT export), info (caps, version, backend). Exit status: 0 on
success, 1 on verification failure, 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .config import active_caps
from .core import module_from_spec, ring_from_spec
from .dimension import dimension_profile, hollow_dimension
from .errors import CapExceeded, InputError, ModlatError, ValidationError
from .harness import (
    THEOREM_IDS,
    builtin_corpus,
    load_corpus_dir,
    normalize_theorem_id,
    report_body,
    report_ok,
    run_verification,
)
from .kernels import BACKEND
from .lattice import submodule_lattice
from .ringclass import classify


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}") from None


def _cmd_analyze(args) -> int:
    ring = ring_from_spec(_load_json(args.ring))
    out = {"ring": classify(ring).to_dict()}
    if args.module:
        module = module_from_spec(ring, _load_json(args.module))
        profile = dimension_profile(module)
        _, decomp = hollow_dimension(module)
        out["module"] = {
            "order": module.order,
            "side": module.side,
            "profile": profile.to_dict(),
            "hollow_family": [sorted(s.members()) for s in decomp.family],
            "hollow_intersection": sorted(decomp.intersection.members()),
        }
    if args.format == "json":
        print(json.dumps(out, indent=2, sort_keys=True))
        return 0
    ring_info = out["ring"]
    print(f"ring {ring_info['ring']} (order {ring_info['order']})")
    print(f"  jacobson radical: {ring_info['jacobson']}")
    print(f"  hdim left/right:  {ring_info['hdim_left']} / {ring_info['hdim_right']}")
    print(f"  length(R/J):      {ring_info['semisimple_quotient_length']}")
    print(f"  units:            {ring_info['units']}")
    print(f"  local:            {ring_info['local']}")
    print(f"  R/J von Neumann regular: {ring_info['vnr_quotient']}")
    if args.module:
        m = out["module"]
        p = m["profile"]
        print(f"module (order {m['order']}, {m['side']})")
        print(f"  radical: {p['radical']}")
        print(f"  socle:   {p['socle']}")
        print(f"  length {p['length']}, udim {p['udim']}, hdim {p['hdim']}")
        print(
            f"  semisimple {p['semisimple']}, hollow {p['hollow']}, uniform {p['uniform']}"
        )
        print(f"  hollow decomposition: {m['hollow_family']}")
        print(f"  intersection: {m['hollow_intersection']}")
    return 0


def _cmd_verify(args) -> int:
    if args.corpus == "builtin":
        corpus = builtin_corpus()
    else:
        corpus = load_corpus_dir(args.corpus)
    theorems = None
    if args.theorems and args.theorems != "all":
        theorems = [normalize_theorem_id(t) for t in args.theorems.split(",")]
    report = run_verification(corpus=corpus, theorems=theorems, jobs=args.jobs)
    for r in report["results"]:
        if args.quiet and r["status"] == "pass":
            continue
        line = f"[{r['status']:5s}] {r['theorem']:10s} {r['instance']}: {r['detail']}"
        print(line)
    s = report["summary"]
    print(
        f"summary: {s['pass']} pass, {s['fail']} fail, {s['skip']} skip, {s['error']} error"
        f" ({report['run']['elapsed_ms'] / 1000.0:.1f}s, jobs={report['run']['jobs']})"
    )
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(json.dumps(report, indent=1, sort_keys=True))
        print(f"report written to {args.out}")
    if args.body_out:
        with open(args.body_out, "w") as fh:
            fh.write(report_body(report))
        print(f"report body written to {args.body_out}")
    return 0 if report_ok(report) else 1


def _cmd_lattice(args) -> int:
    ring = ring_from_spec(_load_json(args.ring))
    module = module_from_spec(ring, _load_json(args.module))
    lat = submodule_lattice(module)
    dot = lat.to_dot()
    with open(args.dot, "w") as fh:
        fh.write(dot)
    print(f"{len(lat)} submodules, DOT written to {args.dot}")
    return 0


def _cmd_info(args) -> int:
    caps = active_caps()
    print(f"modlat {__version__} (kernel backend: {BACKEND})")
    print("caps:")
    for key, value in sorted(caps.__dict__.items()):
        print(f"  {key} = {value}")
    print(f"checks: {', '.join(THEOREM_IDS)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modlat",
        description="Exhaustive structure analysis of finite rings and modules.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="profile a ring (and optionally a module) from JSON specs")
    p.add_argument("ring", help="path to a ring spec JSON file")
    p.add_argument("--module", help="path to a module spec JSON file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("verify", help="run theorem checks over a corpus")
    p.add_argument("--corpus", default="builtin", help="'builtin' or a directory of entry JSON files")
    p.add_argument("--theorems", default="all", help="comma-separated check ids, or 'all'")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="write the full JSON report here")
    p.add_argument("--body-out", help="write the timing-stripped report body here")
    p.add_argument("--quiet", action="store_true", help="print only non-passing results")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("lattice", help="export a module's submodule lattice as DOT")
    p.add_argument("ring", help="path to a ring spec JSON file")
    p.add_argument("--module", required=True, help="path to a module spec JSON file")
    p.add_argument("--dot", required=True, help="output DOT path")
    p.set_defaults(func=_cmd_lattice)

    p = sub.add_parser("info", help="print version, backend, caps, and check ids")
    p.set_defaults(func=_cmd_info)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValidationError, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ModlatError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
