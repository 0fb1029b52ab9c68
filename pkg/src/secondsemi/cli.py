"""Command-line entry point.

Exit codes: 0 success (no counterexample), 1 at least one counterexample,
2 input or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import harness
from .catalog import builtin_catalog, extended_catalog
from .errors import StructureError
from .semiring import Semiring, enumerate_ideals
from .semimodule import Semimodule, enumerate_subsemimodules, whole_sub
from .second import maximal_second_subsemimodules, second_subsemimodules, socle, socle_subsemimodules
from .textio import parse, report_json, report_text, serialize

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load(args) -> list:
    if getattr(args, "catalog", None):
        return extended_catalog() if args.catalog == "extended" else builtin_catalog()
    if not getattr(args, "file", None):
        raise InputError("give a structure file or --catalog")
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {args.file}: {exc}") from None
    return parse(text)


def _find(structures: list, name: str):
    for s in structures:
        if s.name == name:
            return s
    raise InputError(f"no structure named {name!r}")


def cmd_validate(args) -> int:
    for s in _load(args):
        kind = "semiring" if isinstance(s, Semiring) else f"semimodule over {s.base.name}"
        print(f"ok  {s.name:<16} {kind}, {s.size} elements")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    s = _find(_load(args), args.name)
    what = args.what
    if what == "ideals":
        R = s if isinstance(s, Semiring) else s.base
        rows = [I.elements for I in enumerate_ideals(R)]
    else:
        if not isinstance(s, Semimodule):
            raise InputError(f"{s.name} is a semiring; --{what} needs a semimodule")
        if what == "subsemimodules":
            rows = [N.elements for N in enumerate_subsemimodules(s)]
        elif what == "seconds":
            rows = [N.elements for N in second_subsemimodules(s)]
        elif what == "maximal-seconds":
            rows = [N.elements for N in maximal_second_subsemimodules(s, whole_sub(s))]
        else:
            rows = {
                "sec(M)": socle(s, whole_sub(s)).elements,
                "socle_subsemimodules": [N.elements for N in socle_subsemimodules(s)],
            }
    if args.format == "json":
        print(json.dumps({"structure": s.name, what: rows}))
    elif isinstance(rows, dict):
        for k, v in rows.items():
            print(f"{k}: {v}")
    else:
        for r in rows:
            print(r)
    return EXIT_OK


def cmd_check(args) -> int:
    structures = _load(args)
    if args.all:
        ids = list(harness.ALL_IDS)
    else:
        if args.theorem not in harness.REGISTRY:
            raise InputError(f"unknown theorem {args.theorem!r}; known: {', '.join(harness.ALL_IDS)}")
        ids = [args.theorem]
    verdicts = harness.run_catalog(ids, structures, args.size_cap, args.hom_cap, args.jobs)
    render = report_json if args.format == "json" else report_text
    sys.stdout.write(render(verdicts, args.timings))
    return EXIT_COUNTEREXAMPLE if any(v.status == harness.COUNTEREXAMPLE for v in verdicts) else EXIT_OK


def cmd_catalog(args) -> int:
    structures = extended_catalog() if args.extended else builtin_catalog()
    if args.dump:
        sys.stdout.write(serialize(structures))
        return EXIT_OK
    for s in structures:
        kind = "semiring" if isinstance(s, Semiring) else f"semimodule over {s.base.name}"
        print(f"{s.name:<16} {kind}, {s.size} elements")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="secondsemi", description="Second subsemimodules of finite semimodules.")
    sub = ap.add_subparsers(dest="command", required=True)

    def source(p):
        p.add_argument("file", nargs="?", help="structure file")
        p.add_argument("--catalog", nargs="?", const="default", choices=["default", "extended"],
                       help="use the built-in catalog instead of a file")

    p = sub.add_parser("validate", help="parse and validate a structure file")
    source(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("enumerate", help="list ideals, subsemimodules, seconds, ...")
    source(p)
    g = p.add_mutually_exclusive_group(required=True)
    for what in ("ideals", "subsemimodules", "seconds", "maximal-seconds", "socle"):
        g.add_argument(f"--{what}", dest="what", action="store_const", const=what)
    p.add_argument("--name", required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", help="check propositions exhaustively")
    source(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--theorem")
    g.add_argument("--all", action="store_true")
    p.add_argument("--size-cap", type=int, default=harness.DEFAULT_SIZE_CAP)
    p.add_argument("--hom-cap", type=int, default=harness.DEFAULT_HOM_CAP,
                   help="largest |target|^|source| for which homomorphisms are enumerated")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--timings", action="store_true", help="fill elapsed_ms (makes output non-reproducible)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("catalog", help="show the built-in catalog")
    p.add_argument("--list", action="store_true", help="list structures (default)")
    p.add_argument("--dump", action="store_true", help="print the catalog in the structure-file format")
    p.add_argument("--extended", action="store_true")
    p.set_defaults(func=cmd_catalog)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (StructureError, InputError, harness.ArityMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
