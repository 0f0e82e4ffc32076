"""Command-line entry point: diophc <subcommand> ..."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import algebra
from .compiler import format_map, parse_map, translate, translate_system_coded
from .godel import MalformedCode, Numbering, SymbolError, decode_system, decode_term, encode_system, encode_term
from .lang import RING, DefinitionError, EvaluationError, LanguageError, validate
from .oracle import (Box, solution_set, solve_bounded, verify_automorphism_bounded, verify_set_equality,
                     verify_translation)
from .stdlib import UnknownMap, UnknownStructure, stdlib_listing, stdlib_map
from .structures import language_by_name, stdlib_interpretation
from .textformat import (ParseError, format_document, format_term, format_value, parse_document,
                         parse_term_text)

FAULTS = (ParseError, DefinitionError, LanguageError, EvaluationError, MalformedCode, SymbolError,
          algebra.NotApplicable, UnknownMap, UnknownStructure, ValueError, OSError)


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _interp(args):
    return stdlib_interpretation(args.interp) if getattr(args, "interp", None) else None


def _load_system(path: str, lang=None):
    return parse_document(_read(path), lang)[1]


def _map(name: str):
    p = Path(name)
    if p.suffix in (".map", ".dmap") or p.is_file():
        return parse_map(p.read_text())
    return stdlib_map(name)


def _codes(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").replace("(", " ").replace(")", " ").split()]
    except ValueError:
        raise ParseError("a code sequence is a list of natural numbers") from None


def _box(args, interp):
    return Box(interp, args.box, getattr(args, "exist_box", None))


# -- subcommands -------------------------------------------------------------

def cmd_check(args) -> int:
    interp = _interp(args)
    lang = interp.language if interp else RING
    lang, defn = parse_document(_read(args.system), lang)
    report = validate(lang, defn, interp, effective=args.effective)
    for line in report:
        print(line)
    if not report:
        print("ok")
    return 1 if report else 0


def cmd_algebra(args) -> int:
    interp = _interp(args)
    lang = interp.language if interp else None
    lang = lang or RING
    op = args.op
    if op == "finite-set":
        if interp is None:
            raise ValueError("finite-set needs --interp")
        pts = [tuple(int(v) for v in chunk.split()) for chunk in args.points.split(";") if chunk.strip()]
        out = algebra.finite_set(pts, interp)
    else:
        if not args.inputs:
            raise ValueError(f"{op} needs an input definition")
        defs = [_load_system(p, lang) for p in args.inputs]
        if op in ("intersect", "union", "product") and len(defs) != 2:
            raise ValueError(f"{op} takes two definitions")
        if op == "intersect":
            out = algebra.intersect(*defs)
        elif op == "product":
            out = algebra.product(*defs)
        elif op == "union":
            if interp is None:
                raise ValueError("union needs --interp for the structure's flags")
            out = algebra.union(defs[0], defs[1], interp)
        elif op == "project":
            out = algebra.project(defs[0], args.keep)
        elif op == "combine":
            if interp is None:
                raise ValueError("combine needs --interp")
            out = algebra.combine_single(defs[0], interp)
        elif op == "one-sided":
            if interp is None:
                raise ValueError("one-sided needs --interp")
            out = algebra.normalize_one_sided(defs[0], interp)
        elif op == "simplify":
            out = algebra.simplify(defs[0])
        else:  # pragma: no cover - argparse restricts choices
            raise ValueError(op)
    sys.stdout.write(format_document(out))
    return 0


def _language(args):
    if args.interp:
        return stdlib_interpretation(args.interp)
    return None


def cmd_encode(args) -> int:
    interp = _language(args)
    lang = interp.language if interp else language_by_name(args.lang)
    codec = interp.codec if interp else None
    num = Numbering(lang)
    if args.term is not None:
        print(encode_term(parse_term_text(args.term, lang), num, codec))
    else:
        _, defn = parse_document(_read(args.system), lang)
        print(" ".join(str(c) for c in encode_system(defn, num, codec)))
    return 0


def cmd_decode(args) -> int:
    interp = _language(args)
    lang = interp.language if interp else language_by_name(args.lang)
    codec = interp.codec if interp else None
    num = Numbering(lang)
    if args.code is not None:
        print(format_term(decode_term(int(args.code), num, codec)))
    else:
        text = args.codes if args.codes is not None else _read(args.system)
        sys.stdout.write(format_document(decode_system(_codes(text), num, codec, args.free)))
    return 0


def cmd_translate(args) -> int:
    spec = _map(args.map)
    src_codec = spec.source_interp.codec if spec.source_interp else None
    tgt_codec = spec.target_interp.codec if spec.target_interp else None
    if args.coded:
        text = args.codes if args.codes is not None else _read(args.system)
        source = _codes(text)
        codes = translate_system_coded(spec, source, src_codec, tgt_codec)
        if args.format == "codes":
            print(" ".join(str(c) for c in codes))
        else:
            free = decode_system(source, Numbering(spec.source), src_codec).free
            sys.stdout.write(format_document(decode_system(codes, Numbering(spec.target), tgt_codec, free)))
        return 0
    out = translate(spec, _load_system(args.system, spec.source))
    if args.format == "codes":
        print(" ".join(str(c) for c in encode_system(out, Numbering(spec.target), tgt_codec)))
    else:
        sys.stdout.write(format_document(out))
    return 0


def cmd_solve(args) -> int:
    interp = stdlib_interpretation(args.interp)
    defn = _load_system(args.system, interp.language)
    w = solve_bounded(defn, _box(args, interp), hints=args.hints)
    if w is None:
        print("exhausted")
    else:
        print("witness " + " ".join(format_value(v) for v in w))
    return 0


def cmd_points(args) -> int:
    interp = stdlib_interpretation(args.interp)
    defn = _load_system(args.system, interp.language)
    box = _box(args, interp)
    s = solution_set(defn, box, hints=args.hints)
    order = sorted(s.points, key=lambda t: [interp.carrier.index(v) for v in t])
    for t in order:
        print(" ".join(format_value(v) for v in t))
    print(f";; {len(order)} points, {s.frontier} frontier warnings")
    return 0


def cmd_verify(args) -> int:
    reports = []
    if args.map:
        spec = _map(args.map)
        if spec.source_interp is None or spec.target_interp is None:
            raise ValueError(f"map {args.map!r} has no structures attached; use a built-in map")
        sysd = _load_system(args.system, spec.source)
        tbox = args.target_box or args.box
        reports = verify_translation(spec, sysd, Box(spec.source_interp, args.box, args.exist_box),
                                     Box(spec.target_interp, tbox, args.exist_box), hints=args.hints)
    elif args.automorphism:
        f = stdlib_map(args.automorphism)
        g = stdlib_map(args.inverse or args.automorphism)
        reports = [verify_automorphism_bounded(f, g, Box(f.source_interp, args.box, args.exist_box))]
    elif args.against:
        interp = stdlib_interpretation(args.interp)
        d1 = _load_system(args.system, interp.language)
        d2 = _load_system(args.against, interp.language)
        reports = [verify_set_equality(d1, d2, Box(interp, args.box, args.exist_box), hints=args.hints)]
    else:
        raise ValueError("verify needs --map, --automorphism or --against")
    for r in reports:
        print(r.line())
    return 0 if all(reports) else 1


def cmd_stdlib(args) -> int:
    if args.action == "list":
        for kind, name, desc in stdlib_listing():
            print(f"{kind:9} {name:28} {desc}")
        return 0
    if not args.name:
        raise ValueError("stdlib show needs a map name")
    sys.stdout.write(format_map(stdlib_map(args.name)))
    return 0


# -- argument parsing ----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="diophc", description="Diophantine definitions: algebra, coding, "
                                "translation along maps, bounded verification.")
    sub = p.add_subparsers(dest="command", required=True)

    def boxed(sp, default=17):
        sp.add_argument("--box", type=int, default=default, help="elements per variable")
        sp.add_argument("--exist-box", type=int, default=None, help="elements per existential variable")
        sp.add_argument("--hints", action="store_true", help="let the solver search union parts separately")

    sp = sub.add_parser("check", help="validate a definition")
    sp.add_argument("--system", required=True)
    sp.add_argument("--interp")
    sp.add_argument("--effective", action="store_true", help="reject carrier elements used as coefficients")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("algebra", help="closure operations on definitions")
    sp.add_argument("op", choices=["intersect", "union", "product", "project", "combine", "one-sided",
                                   "finite-set", "simplify"])
    sp.add_argument("inputs", nargs="*")
    sp.add_argument("--interp")
    sp.add_argument("--keep", type=int, default=1)
    sp.add_argument("--points", default="", help='points as "0 1; 2 5"')
    sp.set_defaults(func=cmd_algebra)

    for name, fn in (("encode", cmd_encode), ("decode", cmd_decode)):
        sp = sub.add_parser(name, help=f"{name} terms and systems")
        sp.add_argument("--lang", default="LR")
        sp.add_argument("--interp", help="structure whose language and codec to use")
        g = sp.add_mutually_exclusive_group(required=True)
        if name == "encode":
            g.add_argument("--term")
            g.add_argument("--system")
        else:
            g.add_argument("--code")
            g.add_argument("--codes")
            g.add_argument("--system", help="file holding a code sequence")
            sp.add_argument("--free", type=int, default=None, help="number of free variables")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("translate", help="translate a system along a map")
    sp.add_argument("--map", required=True)
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--system")
    g.add_argument("--codes")
    sp.add_argument("--coded", action="store_true", help="input is a code sequence")
    sp.add_argument("--format", choices=["text", "codes"], default="text")
    sp.set_defaults(func=cmd_translate)

    for name, fn in (("solve", cmd_solve), ("points", cmd_points)):
        sp = sub.add_parser(name, help="bounded witness" if name == "solve" else "bounded solution set")
        sp.add_argument("--interp", required=True)
        sp.add_argument("--system", required=True)
        boxed(sp)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("verify", help="bounded verification reports")
    sp.add_argument("--map")
    sp.add_argument("--system")
    sp.add_argument("--against", help="second definition for a set-equality check")
    sp.add_argument("--interp")
    sp.add_argument("--automorphism")
    sp.add_argument("--inverse")
    sp.add_argument("--target-box", type=int, default=None)
    boxed(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("stdlib", help="built-in structures and maps")
    sp.add_argument("action", choices=["list", "show"])
    sp.add_argument("name", nargs="?")
    sp.set_defaults(func=cmd_stdlib)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "translate" and args.codes is not None:
        args.coded = True
    if args.command in ("verify",) and (args.map or args.against) and not args.system:
        parser.error("verify needs --system")
    try:
        return args.func(args)
    except FAULTS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except KeyError as exc:
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return 1


run = main

if __name__ == "__main__":
    sys.exit(main())
