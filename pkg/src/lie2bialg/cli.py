"""Command line: verify structure files, construct new ones, browse the catalog.

Exit status: 0 pass, 1 a verification or precondition failed, 2 bad input.
``LIE2_JOBS`` sets how many input files ``verify`` checks in parallel.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .bigbracket import big_bracket
from .catalog import CATALOG, catalog_names, export
from .classical import StructureMaps, decode, encode
from .coboundary import RMatrix, coboundary_triple, dual_crossed_module, general_cocycle_triple
from .fileio import (Cocycle, FileFormatError, SymmetricElement, dumps, from_file, read_file,
                     to_file)
from .report import REPORT_SCHEMA
from .structures import CrossedModule, ROUTES, semidirect_product
from .verify import KINDS, verify

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


class PreconditionError(Exception):
    pass


def _load(path):
    try:
        sf = read_file(path)
        return sf, from_file(sf)
    except FileFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


# -- verify -------------------------------------------------------------------------

def _verify_one(path, structure, route, fmt):
    """(exit code, rendered report) for one input; runs in a worker process."""
    try:
        sf, obj = _load(path)
        kind = structure or sf.structure
        try:
            report = verify(obj, kind, route)
        except (TypeError, ValueError) as exc:
            raise InputError(f"{path}: {exc}") from None
    except InputError as exc:
        if fmt == "machine":
            return EXIT_INPUT, json.dumps({"schema": REPORT_SCHEMA, "input": str(path),
                                           "verdict": "error", "error": str(exc)}, sort_keys=True)
        return EXIT_INPUT, f"error: {exc}"
    code = EXIT_PASS if report.passed else EXIT_FAIL
    if fmt == "machine":
        data = report.to_dict()
        data["input"] = str(path)
        data["structure"] = kind
        data["route"] = route
        return code, json.dumps(data, sort_keys=True)
    return code, f"{path} [{kind}]\n" + report.to_text()


def _jobs():
    raw = os.environ.get("LIE2_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def cmd_verify(args, out):
    jobs = min(_jobs(), len(args.input))
    tasks = [(p, args.structure, args.route, args.report) for p in args.input]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_verify_one, *zip(*tasks)))
    else:
        results = [_verify_one(*t) for t in tasks]
    for _, text in results:
        print(text, file=out)
    codes = {c for c, _ in results}
    if EXIT_INPUT in codes:
        return EXIT_INPUT
    return EXIT_FAIL if EXIT_FAIL in codes else EXIT_PASS


# -- construct ------------------------------------------------------------------------

def _expect(obj, types, what, path):
    if not isinstance(obj, types):
        raise InputError(f"{path}: expected {what}, got a {type(obj).__name__}")
    return obj


def _construct(args):
    sub = args.subcommand
    paths = args.input
    if sub == "bracket":
        if len(paths) not in (1, 2):
            raise InputError("bracket takes one or two --input files")
    elif len(paths) != 1:
        raise InputError(f"{sub} takes exactly one --input file")
    loaded = [_load(p) for p in paths]
    sf, obj = loaded[0]
    path = paths[0]

    if sub in ("from-r", "dual-module"):
        r = _expect(obj, RMatrix, "an r-matrix file", path)
        if sub == "from-r":
            triple = coboundary_triple(r)
            return to_file(triple.maps(), "lie2bialg", notes=["coboundary triple of r"])
        try:
            bcm = dual_crossed_module(r)
        except ValueError as exc:
            raise PreconditionError(str(exc)) from None
        return to_file(bcm, notes=["Lie bialgebra crossed module induced by r"])
    if sub == "from-cocycle":
        c = _expect(obj, Cocycle, "a cocycle file", path)
        try:
            triple = general_cocycle_triple(c.lam, c.cm)
        except ValueError as exc:
            raise PreconditionError(str(exc)) from None
        return to_file(triple.maps(), "lie2bialg", notes=["triple of a 1-cocycle"])
    if sub == "semidirect":
        cm = getattr(obj, "cm", obj)
        if isinstance(obj, RMatrix):
            cm = obj.cm
        cm = _expect(cm, CrossedModule, "a crossed-module file", path)
        try:
            lie = semidirect_product(cm, check=True)
        except ValueError as exc:
            raise PreconditionError(str(exc)) from None
        return to_file(lie, notes=["semidirect product g x theta"])
    if sub == "encode":
        if isinstance(obj, CrossedModule):
            maps, kind = obj.maps, "algebra"
        else:
            maps = _expect(obj, StructureMaps, "a lie2alg, lie2coalg or lie2bialg file", path)
            kind = {"lie2alg": "algebra", "lie2coalg": "coalgebra"}.get(sf.structure, "bialgebra")
        return to_file(SymmetricElement(maps.space, encode(maps, kind)),
                       notes=[f"{kind} element"])
    if sub == "decode":
        el = _expect(obj, SymmetricElement, "an selement file", path)
        try:
            maps = decode(el.element, el.space)
        except ValueError as exc:
            raise InputError(f"{path}: {exc}") from None
        return to_file(maps, "lie2bialg")
    if sub == "bracket":
        els = [_expect(o, SymmetricElement, "an selement file", p) for (_, o), p in zip(loaded, paths)]
        a, b = els[0], els[-1]
        if a.space != b.space:
            raise InputError("the two elements have different dimensions")
        return to_file(SymmetricElement(a.space, big_bracket(a.element, b.element)))
    raise InputError(f"unknown construction {sub!r}")


def _emit_file(sf, output, out):
    text = dumps(sf)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)


def cmd_construct(args, out):
    try:
        sf = _construct(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit_file(sf, args.output, out)
    return EXIT_PASS


# -- catalog ----------------------------------------------------------------------------

def cmd_catalog(args, out):
    if args.action == "list":
        width = max(len(n) for n in catalog_names())
        for name in catalog_names():
            e = CATALOG[name]
            print(f"{name:<{width}}  {e.structure:<16}  {e.description}", file=out)
        return EXIT_PASS
    if not args.name:
        print("error: export needs a catalog name", file=sys.stderr)
        return EXIT_INPUT
    try:
        sf = export(args.name)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_INPUT
    _emit_file(sf, args.output, out)
    return EXIT_PASS


# -- entry point ----------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="lie2", description="Exact verification of Lie 2-bialgebra structure constants.")
    subs = parser.add_subparsers(dest="command", required=True)

    v = subs.add_parser("verify", help="check a structure file")
    v.add_argument("--input", action="append", required=True, help="structure file (repeatable)")
    v.add_argument("--structure", choices=KINDS, help="defaults to the file's declared structure")
    v.add_argument("--route", choices=ROUTES, default="both")
    v.add_argument("--report", choices=("text", "machine"), default="text")

    c = subs.add_parser("construct", help="build a structure from another")
    c.add_argument("subcommand", choices=("from-r", "from-cocycle", "dual-module", "semidirect",
                                          "encode", "decode", "bracket"))
    c.add_argument("--input", action="append", required=True)
    c.add_argument("--output")

    k = subs.add_parser("catalog", help="list or export built-in examples")
    k.add_argument("action", choices=("list", "export"))
    k.add_argument("name", nargs="?")
    k.add_argument("--output")
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_PASS
    handler = {"verify": cmd_verify, "construct": cmd_construct, "catalog": cmd_catalog}
    return handler[args.command](args, out)


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
