"""Command line front end.

JSON on stdout, one object per input; diagnostics on stderr.  Exit
status 0 on success (including negative verdicts like a non-real
matrix), 2 on argument or matrix syntax errors, 3 on domain errors
(wrong determinant, wrong trace kind, overflow caps).

Matrix arguments use the compact "a,b;c,d" grammar.  The subcommands
classify, cycle, real, and series-check also accept "-" to stream
JSONL matrices ([[a,b],[c,d]] rows of ints or decimal strings, or the
compact form as a JSON string) from standard input.  Integers in
output objects are decimal strings wherever they can grow without
bound; signs, traces, and flags stay plain JSON numbers.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from itertools import product
from typing import Iterator

from .classify import classify
from .errors import MatrixParseError, Sl2RealError
from .farey import Cycle, Word, cutting_cycle, series_crosscheck
from .mat2 import (
    IDENTITY,
    NEG_IDENTITY,
    ROT_2PI3,
    ROT_PI,
    Mat2,
    is_real_structure,
    v_pow,
)
from .oracle import brute_force_conjugator, brute_force_factor
from .realness import central_factorization, conjugacy_test, factor_real, is_real
from .render import render_farey

__all__ = ["main", "run"]


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _parse_stdin_line(line: str) -> Mat2:
    obj = json.loads(line)
    if isinstance(obj, str):
        return Mat2.from_text(obj)
    return Mat2.from_json_obj(obj)


def _input_matrices(arg: str) -> Iterator[Mat2]:
    if arg == "-":
        for line in sys.stdin:
            line = line.strip()
            if not line:
                continue
            try:
                yield _parse_stdin_line(line)
            except (json.JSONDecodeError, MatrixParseError) as exc:
                raise MatrixParseError(f"bad input line {line!r}: {exc}") from None
    else:
        yield Mat2.from_text(arg)


def _cmd_classify(args) -> int:
    for m in _input_matrices(args.matrix):
        print(_dumps(classify(m).to_json_obj()))
    return 0


def _cmd_cycle(args) -> int:
    for m in _input_matrices(args.matrix):
        cyc, sign, conj = cutting_cycle(m)
        recon = conj @ Word(cyc.exponents, "U").matrix() @ conj.inverse()
        if (recon if sign == 1 else -recon) != m:
            raise RuntimeError("cycle certificate failed verification")
        print(
            _dumps(
                {
                    "cycle": cyc.to_json_obj(),
                    "sign": sign,
                    "conjugator": conj.to_json_obj(),
                    "word": [str(e) for e in cyc.exponents],
                    "verified": True,
                }
            )
        )
    return 0


def _cmd_real(args) -> int:
    for m in _input_matrices(args.matrix):
        real = is_real(m)
        fac = None
        if real:
            fac = central_factorization(m) if m.is_central() else factor_real(m)
            if fac.matrix != m:
                raise RuntimeError("factorization certificate failed verification")
        print(
            _dumps(
                {
                    "is_real": real,
                    "factorization": None if fac is None else fac.to_json_obj(),
                }
            )
        )
    return 0


def _cmd_conjugate(args) -> int:
    a = Mat2.from_text(args.matrix_a)
    b = Mat2.from_text(args.matrix_b)
    verdict = conjugacy_test(a, b, args.group)
    print(_dumps({"conjugate": verdict, "group": args.group}))
    return 0


def _cmd_oracle(args) -> int:
    m = Mat2.from_text(args.matrix)
    if args.mode == "factor":
        pair = brute_force_factor(m, args.bound)
        if pair is None:
            witness = None
        else:
            j1, j2 = pair
            if j1 @ j2 != m or not (is_real_structure(j1) and is_real_structure(j2)):
                raise RuntimeError("oracle factor witness failed verification")
            witness = [j1.to_json_obj(), j2.to_json_obj()]
    else:
        q = brute_force_conjugator(m, args.bound)
        if q is None:
            witness = None
        else:
            if q.det != -1 or q @ m @ q.inverse() != m.inverse():
                raise RuntimeError("oracle conjugator witness failed verification")
            witness = q.to_json_obj()
    print(
        _dumps(
            {
                "query": args.mode,
                "matrix": m.to_json_obj(),
                "bound": args.bound,
                "witness": witness,
                "verified": True,
            }
        )
    )
    return 0


def _cmd_series_check(args) -> int:
    for m in _input_matrices(args.matrix):
        print(_dumps(series_crosscheck(m).to_json_obj()))
    return 0


def _atlas_representatives(max_entry: int) -> Iterator[Mat2]:
    yield IDENTITY
    yield NEG_IDENTITY
    yield ROT_PI
    yield ROT_2PI3
    yield -ROT_2PI3
    for n in range(1, max_entry + 1):
        yield v_pow(n)
        yield -v_pow(n)
    for length in range(2, 2 * max_entry + 1, 2):
        for exps in product(range(1, max_entry + 1), repeat=length):
            cyc = Cycle(exps)
            if cyc.canonical != exps:
                continue  # one representative per cyclic word
            w = Word(exps, "U").matrix()
            yield w
            yield -w


def _cmd_atlas(args) -> int:
    for rep in _atlas_representatives(args.max_entry):
        cls = classify(rep)
        real = is_real(rep)
        if args.real_only and not real:
            continue
        fac = None
        if real:
            fac = central_factorization(rep) if rep.is_central() else factor_real(rep)
        print(
            _dumps(
                {
                    "matrix": rep.to_json_obj(),
                    "class": cls.to_json_obj(),
                    "is_real": real,
                    "factorization": None if fac is None else fac.to_json_obj(),
                    "cycle": None if cls.cycle is None else cls.cycle.to_json_obj(),
                }
            )
        )
    return 0


def _cmd_svg(args) -> int:
    axis = None if args.axis is None else Mat2.from_text(args.axis)
    doc = render_farey(args.depth, axis)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(doc + "\n")
    else:
        print(doc)
    return 0


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sl2real",
        description=(
            "Conjugacy invariants of SL(2,Z) matrices, factorization into "
            "two orientation-reversing involutions, and Farey tessellation "
            "figures."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="trace trichotomy with invariants")
    p.add_argument("matrix", help='matrix "a,b;c,d", or - for JSONL on stdin')
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("cycle", help="cutting cycle of a hyperbolic matrix")
    p.add_argument("matrix", help='matrix "a,b;c,d", or - for JSONL on stdin')
    p.set_defaults(func=_cmd_cycle)

    p = sub.add_parser("real", help="factor into two real structures")
    p.add_argument("matrix", help='matrix "a,b;c,d", or - for JSONL on stdin')
    p.set_defaults(func=_cmd_real)

    p = sub.add_parser("conjugate", help="conjugacy test for two matrices")
    p.add_argument("matrix_a")
    p.add_argument("matrix_b")
    p.add_argument("--group", choices=("gl", "sl"), default="gl")
    p.set_defaults(func=_cmd_conjugate)

    p = sub.add_parser("oracle", help="bounded brute-force cross-checks")
    p.add_argument("matrix")
    p.add_argument("--bound", type=_nonneg_int, required=True)
    p.add_argument("--mode", choices=("factor", "conjugator"), default="factor")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("series-check", help="cycle vs continued-fraction period")
    p.add_argument("matrix", help='matrix "a,b;c,d", or - for JSONL on stdin')
    p.set_defaults(func=_cmd_series_check)

    p = sub.add_parser("atlas", help="JSONL atlas of conjugacy classes")
    p.add_argument("--max-entry", type=_positive_int, required=True)
    p.add_argument("--real-only", action="store_true")
    p.set_defaults(func=_cmd_atlas)

    p = sub.add_parser("svg", help="Farey tessellation figure")
    p.add_argument("--depth", type=_nonneg_int, required=True)
    p.add_argument("--axis", help='hyperbolic matrix "a,b;c,d" to overlay')
    p.add_argument("-o", "--output", help="write the SVG here instead of stdout")
    p.set_defaults(func=_cmd_svg)

    return parser


# Matrices like "-12,-5;-7,-3" would otherwise be eaten as option
# strings; a leading space hides them from argparse and is stripped by
# the matrix parser.
_MATRIXISH = re.compile(r"-\d+\s*,")


def _escape_matrix_args(argv: list[str]) -> list[str]:
    return [" " + tok if _MATRIXISH.match(tok) else tok for tok in argv]


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_escape_matrix_args(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except MatrixParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Sl2RealError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


run = main


if __name__ == "__main__":
    sys.exit(main())
