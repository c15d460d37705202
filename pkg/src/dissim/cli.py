"""Command-line front end.

Exit codes: 0 success, 1 ``check`` found a family no class accepts,
2 not realizable, 64 malformed input, 65 input rejected by a precondition,
66 unreadable file, 70 internal verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classes import CLASSES, check_all, realize
from .errors import (
    Disconnected,
    NotRealizable,
    ParseError,
    PreconditionViolated,
    TooLarge,
    VerificationFailed,
    WrongN,
)
from .family import DissimilarityFamily
from .generate import NONE, GenerationFailed, generate_families
from .graph import decode, format_rational, to_dot
from .steiner import dissimilarity_vector, hat_vector

EXIT_OK = 0
EXIT_CHECK_NONE = 1
EXIT_NOT_REALIZABLE = 2
EXIT_PARSE = 64
EXIT_REJECTED = 65
EXIT_NO_INPUT = 66
EXIT_VERIFICATION = 70


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _read_families(path: str) -> list[DissimilarityFamily]:
    """One JSON document, or JSON lines (as written by ``gen``)."""
    text = _read(path)
    try:
        return [DissimilarityFamily.from_document(text)]
    except ParseError as first:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) <= 1:
            raise first
    out = []
    for no, line in enumerate(lines, start=1):
        try:
            out.append(DissimilarityFamily.from_document(line))
        except ParseError as exc:
            raise ParseError(str(exc), f"line {no}") from exc
    return out


def _emit(doc, fmt: str, out) -> None:
    if fmt == "pretty":
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(json.dumps(doc) + "\n")


def cmd_weights(args, out) -> int:
    g = decode(_read(args.graph))
    vec = dissimilarity_vector(g, args.k)
    _emit(vec.to_document(), args.format, out)
    return EXIT_OK


def _check_doc(f: DissimilarityFamily) -> dict:
    verdicts = check_all(f)
    return {
        "family": f.to_document(),
        "verdicts": {cls: {"pass": v.passed, "violations": v.violations} for cls, v in verdicts.items()},
    }


def cmd_check(args, out) -> int:
    families = _read_families(args.family)
    all_ok = True
    for f in families:
        doc = _check_doc(f)
        if not any(v["pass"] for v in doc["verdicts"].values()):
            all_ok = False
        if args.format == "pretty":
            vals = ", ".join(format_rational(v) for v in f)
            out.write(f"family ({vals})\n")
            for cls, v in doc["verdicts"].items():
                out.write(f"  {cls:<18} {'pass' if v['pass'] else 'fail'}\n")
                for line in v["violations"]:
                    out.write(f"      {line}\n")
        else:
            _emit(doc, "json", out)
    if len(families) > 1 and args.format == "pretty":
        passing = sum(1 for f in families if any(v.passed for v in check_all(f).values()))
        out.write(f"{passing}/{len(families)} families realizable in some class\n")
    return EXIT_OK if all_ok else EXIT_CHECK_NONE


def cmd_realize(args, out) -> int:
    families = _read_families(args.family)
    if len(families) != 1:
        raise ParseError(f"expected one family, got {len(families)}", args.family)
    f = families[0]
    try:
        r = realize(f, args.cls, split=args.split)
    except NotRealizable as exc:
        sys.stderr.write(f"not realizable as {args.cls}:\n")
        for line in exc.verdict.violations:
            sys.stderr.write(f"  {line}\n")
        return EXIT_NOT_REALIZABLE
    doc = r.to_document()
    doc["class"] = args.cls
    _emit(doc, args.format, out)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(to_dot(r.graph))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    families = _read_families(args.family)
    if len(families) != 1:
        raise ParseError(f"expected one family, got {len(families)}", args.family)
    f = families[0]
    g = decode(_read(args.graph))
    if g.n != f.n:
        _emit({"match": False, "reason": f"graph has {g.n} external vertices, family has n = {f.n}"}, args.format, out)
        return EXIT_CHECK_NONE
    got = hat_vector(g)
    match = got == f
    _emit({"match": match, "expected": f.to_document(), "got": got.to_document()}, args.format, out)
    return EXIT_OK if match else EXIT_CHECK_NONE


def cmd_gen(args, out) -> int:
    for f in generate_families(args.n, args.cls, seed=args.seed, count=args.count):
        out.write(json.dumps(f.to_document()) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dissim", description="k-weights of weighted graphs and realization of (n-1)-dissimilarity families")
    p.add_argument("--format", choices=("json", "pretty"), default="json")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("weights", help="k-dissimilarity vector of a graph document")
    s.add_argument("graph")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_weights)

    s = sub.add_parser("check", help="verdicts for all five classes")
    s.add_argument("family", help="hat-family document, JSON lines, or - for stdin")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("realize", help="build a verified witness graph")
    s.add_argument("family")
    s.add_argument("--class", dest="cls", choices=CLASSES, required=True)
    s.add_argument("--dot", metavar="PATH")
    s.add_argument("--split", type=int, default=1, help="caterpillar split size")
    s.set_defaults(func=cmd_realize)

    s = sub.add_parser("verify", help="does the graph realize the family exactly?")
    s.add_argument("family")
    s.add_argument("graph")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gen", help="seeded random families of a class, as JSON lines")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--class", dest="cls", choices=CLASSES + (NONE,), required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=1)
    s.set_defaults(func=cmd_gen)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except ParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except OSError as exc:
        sys.stderr.write(f"cannot read input: {exc}\n")
        return EXIT_NO_INPUT
    except (Disconnected, WrongN, PreconditionViolated, TooLarge, GenerationFailed, ValueError) as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return EXIT_REJECTED
    except VerificationFailed as exc:
        sys.stderr.write(f"internal error, witness failed verification: {exc}\n")
        return EXIT_VERIFICATION


if __name__ == "__main__":
    sys.exit(main())
