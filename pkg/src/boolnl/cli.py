"""Command-line front end.

Exit codes: 0 success, 2 parse or usage error, 3 size limit exceeded,
4 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from boolnl import __version__
from boolnl.bench import METHODS, format_growth, run_bench, write_csv
from boolnl.bfcore import (
    AffineCoeffs,
    TruthTable,
    affine_to_anf,
    brute_force_nonlinearity,
    coeffs_to_index,
)
from boolnl.errors import ParseError, SizeLimitError
from boolnl.formats import parse_function
from boolnl.ideal import (
    closest_affine_ideal,
    jtn_generators,
    monomial_variety,
    nonlinearity_ideal,
    symmetric_variety,
    variety_points,
    variety_witnesses,
    weight_ball,
)
from boolnl.nlp import nlp_butterfly, nlp_evaluate_all, nonlinearity_nlp
from boolnl.transforms import (
    algebraic_degree,
    closest_affine_fwt,
    mobius,
    nnf_from_tt,
    nonlinearity_fwt,
    walsh_spectrum,
)

EXIT_OK, EXIT_PARSE, EXIT_SIZE, EXIT_IO = 0, 2, 3, 4


def _read_function(args) -> TruthTable:
    if args.bin is not None:
        return parse_function(args.bin, "bin", args.n)
    if args.hex is not None:
        return parse_function(args.hex, "hex", args.n)
    return parse_function(args.anf, "anf", args.n)


def _sorted_affine(coeffs: set[AffineCoeffs]) -> list[AffineCoeffs]:
    return sorted(coeffs, key=coeffs_to_index)


def _affine_record(c: AffineCoeffs) -> dict:
    return {"coeffs": list(c), "anf": str(affine_to_anf(c))}


def _emit(obj) -> None:
    print(json.dumps(obj))


def _write_vector_csv(path: str, values: Sequence[int]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(("index", "value"))
        writer.writerows(enumerate(values))


def _nonlinearity(tt: TruthTable, method: str) -> tuple[int, set[AffineCoeffs]]:
    if method == "nlp":
        return nonlinearity_nlp(tt)
    if method == "fwt":
        return nonlinearity_fwt(tt), closest_affine_fwt(tt)
    if method == "ideal":
        return nonlinearity_ideal(tt), closest_affine_ideal(tt)
    return brute_force_nonlinearity(tt)


def cmd_nl(args) -> int:
    tt = _read_function(args)
    nl, closest = _nonlinearity(tt, args.method)
    ordered = _sorted_affine(closest)
    if args.json:
        rec = {"n": tt.n, "method": args.method, "nonlinearity": nl}
        if args.closest:
            rec["closest"] = [_affine_record(c) for c in ordered]
        if args.spectrum:
            rec["walsh"] = walsh_spectrum(tt).tolist()
        if args.coeffs:
            rec["nlp_coeffs"] = nlp_butterfly(tt).tolist()
        _emit(rec)
        return EXIT_OK
    print(nl)
    if args.closest:
        for c in ordered:
            print(f"{str(affine_to_anf(c)):<24} ({','.join(map(str, c))})")
    return EXIT_OK


def _vector_command(kind: str):
    def run(args) -> int:
        tt = _read_function(args)
        if kind == "anf":
            anf = mobius(tt)
            if args.json:
                _emit({"n": tt.n, "kind": kind, "anf": str(anf),
                       "monomials": [list(m) for m in anf.sorted_monomials()]})
            else:
                print(anf)
            return EXIT_OK
        if kind == "nnf":
            values = nnf_from_tt(tt.bits).tolist()
        elif kind == "walsh":
            values = walsh_spectrum(tt).tolist()
        elif kind == "nlp-coeffs":
            values = nlp_butterfly(tt).tolist()
        else:
            values = nlp_evaluate_all(nlp_butterfly(tt)).tolist()
        if args.csv:
            _write_vector_csv(args.csv, values)
        if args.json:
            _emit({"n": tt.n, "kind": kind, "values": values})
        elif not args.csv:
            print(json.dumps(values))
        return EXIT_OK

    return run


def _point_str(p: Sequence[int]) -> str:
    return "".join(map(str, p)) if max(p, default=0) < 10 else ",".join(map(str, p))


def cmd_ideal(args) -> int:
    tt = _read_function(args)
    if args.t is not None:
        if args.materialize:
            points = variety_points(jtn_generators(tt, args.t))
        else:
            points = variety_witnesses(tt, args.t)
        ordered = _sorted_affine(points)
        if args.json:
            _emit({"n": tt.n, "t": args.t, "empty": not ordered,
                   "points": [_affine_record(c) for c in ordered]})
        else:
            print(f"J_{args.t}: {'empty' if not ordered else f'{len(ordered)} point(s)'}")
            for c in ordered:
                print(f"  ({','.join(map(str, c))})  {affine_to_anf(c)}")
        return EXIT_OK

    nl = nonlinearity_ideal(tt)
    start = 1 if algebraic_degree(tt) <= 1 else 2
    closest = _sorted_affine(closest_affine_ideal(tt))
    if args.json:
        _emit({"n": tt.n, "nonlinearity": nl, "first_t": start,
               "closest": [_affine_record(c) for c in closest]})
        return EXIT_OK
    for t in range(start, nl + 1):
        print(f"J_{t}: empty")
    print(f"J_{nl + 1}: {len(closest)} point(s)")
    for c in closest:
        print(f"  ({','.join(map(str, c))})  {affine_to_anf(c)}")
    print(f"nonlinearity {nl}")
    return EXIT_OK


def cmd_sym_variety(args) -> int:
    s, t, q = args.s, args.t, args.q
    sym = symmetric_variety(s, t, q)
    mono = monomial_variety(s, t, q)
    ball = weight_ball(s, t - 1, q)
    if args.json:
        _emit({"s": s, "t": t, "q": q,
               "symmetric": [list(p) for p in sorted(sym)],
               "monomial": [list(p) for p in sorted(mono)],
               "symmetric_is_ball": sym == ball, "monomial_is_ball": mono == ball})
        return EXIT_OK
    print(f"symmetric: {{{', '.join(_point_str(p) for p in sorted(sym))}}}")
    print(f"monomial:  {{{', '.join(_point_str(p) for p in sorted(mono))}}}")
    verdict = "equal" if sym == mono else "different"
    print(f"verdict: {verdict}; symmetric {'=' if sym == ball else '!='} Q_{t - 1}, "
          f"monomial {'=' if mono == ball else '!='} Q_{t - 1} ({len(ball)} point(s))")
    return EXIT_OK


def cmd_bench(args) -> int:
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    records = run_bench(args.n_min, args.n_max, args.trials, args.seed, methods, args.backend)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            write_csv(records, fh)
    else:
        write_csv(records, sys.stdout)
    print()
    print(format_growth(records))
    return EXIT_OK


def _add_function_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--bin", help="binary truth table, leftmost character is point 0")
    src.add_argument("--hex", help="hex truth table, 4 points per nibble, MSB first")
    src.add_argument("--anf", help="ANF expression such as 'x1*x2+x3+1' (needs -n)")
    p.add_argument("-n", type=int, help="number of variables")
    p.add_argument("--json", action="store_true", help="machine-readable output")


def _u64(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError(f"{text} is not an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boolnl", description="Nonlinearity of Boolean functions via the nonlinearity polynomial."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nl", help="compute the nonlinearity")
    _add_function_args(p)
    p.add_argument("--method", choices=METHODS, default="nlp")
    p.add_argument("--closest", action="store_true", help="also list every closest affine function")
    p.add_argument("--spectrum", action="store_true", help="include the Walsh spectrum (with --json)")
    p.add_argument("--coeffs", action="store_true", help="include the polynomial coefficients (with --json)")
    p.set_defaults(func=cmd_nl)

    for kind, text in [
        ("anf", "algebraic normal form"),
        ("nnf", "numerical normal form coefficients"),
        ("walsh", "Walsh spectrum"),
        ("nlp-coeffs", "nonlinearity polynomial coefficients"),
        ("nlp-evals", "distances to every affine function"),
    ]:
        p = sub.add_parser(kind, help=text)
        _add_function_args(p)
        if kind != "anf":
            p.add_argument("--csv", help="write index,value rows to this file")
        p.set_defaults(func=_vector_command(kind))

    p = sub.add_parser("ideal", help="nonlinearity by variety enumeration")
    _add_function_args(p)
    p.add_argument("-t", type=int, help="report the variety of J_t only")
    p.add_argument("--materialize", action="store_true",
                   help="with -t, build the generators explicitly instead of the weight scan")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("sym-variety", help="varieties of symmetric and monomial ideals over F_q")
    p.add_argument("-s", type=int, required=True)
    p.add_argument("-t", type=int, required=True)
    p.add_argument("-q", type=int, default=2)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sym_variety)

    p = sub.add_parser("bench", help="timing and operation counts per method and size")
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=_u64, default=0)
    p.add_argument("--methods", default="fwt,nlp", help=f"comma list from {','.join(METHODS)}")
    p.add_argument("--backend", choices=("python", "numpy"), default="python")
    p.add_argument("--csv", help="write records here instead of stdout")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (ParseError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
