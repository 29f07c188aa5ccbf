"""Command-line entry point ``poset-ramsey``.

Every subcommand prints one JSON document on stdout.  Failures print a JSON
object ``{"error": ..., "message": ...}`` on stderr and exit with

* 2 for malformed input of any kind,
* 3 when a search would exceed its size cap,
* 4 when a certificate or witness fails verification.

Searches run on a single thread.  ``POSET_RAMSEY_THREADS`` is read and
echoed in ``ramsey`` output so scripted runs record it; values above 1 are
accepted but currently have no effect.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path
from typing import Any, Sequence

from . import kernels
from .bounds import ramsey_bounds
from .chain_lemma import run_chain_lemma, verify_certificate
from .errors import BudgetError, NoWitnessError, ParameterError, ParseError, PosetRamseyError, VerificationError
from .estimate import CountingParameters, counting_report, doubling_scan
from .expr import construct
from .lattice import ColoredLattice
from .params import dim2, parameters
from .parser import parse_poset_expression
from .permutations import (
    RestrictionEncoding,
    count_proper,
    count_proper_bruteforce,
    decode_restriction,
    encode_restriction,
    is_t_close,
    proper_profile,
    proper_restriction,
    window_overflow,
)
from .ramsey import ArrowInstance, Counterexample, decide_arrow, exact_ramsey, export_cnf
from .sd import sd_search
from .witnesses import thm4_layers, thm4_witness, thm5_layers, thm5_witness, verify_witness

THREADS_ENV = "POSET_RAMSEY_THREADS"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_VERIFY = 4

# Rows of the small-poset table whose values follow from the chain theorems.
TABLE_ROWS: tuple[tuple[str, str], ...] = (
    ("C(1)", "n+0"),
    ("C(2)", "n+1"),
    ("C(3)", "n+2"),
    ("CC(2,1)", "n+3"),
    ("C(4)", "n+3"),
    ("CC(2,2)", "n+3"),
    ("CC(3,1)", "n+4"),
    ("CC(2,1,1)", "n+4"),
)


class UsageError(PosetRamseyError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would print free text and exit 2
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _int_auto(text: str) -> int:
    try:
        return int(text, 0)
    except ValueError:
        raise UsageError(f"expected an integer (decimal, 0x or 0b), got {text!r}") from None


def _load_poset(text: str):
    ast = parse_poset_expression(text)
    return ast, construct(ast)


def _load_coloring(path: str) -> ColoredLattice:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read coloring file: {exc}") from None
    try:
        return ColoredLattice.from_json(text)
    except json.JSONDecodeError as exc:
        raise ParameterError(f"coloring file is not JSON: {exc}") from None


def _threads() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError(f"{THREADS_ENV} must be >= 1")
    return value


# -- subcommand handlers ------------------------------------------------------


def cmd_poset_info(args) -> tuple[dict, int]:
    ast, p = _load_poset(args.expr)
    out: dict[str, Any] = {"expression": ast.to_text(), "size": p.size}
    out.update(parameters(p).to_json_obj())
    try:
        out["dim2"] = dim2(p)
    except BudgetError:
        out["dim2"] = None
    out["relations"] = [list(pair) for pair in p.pairs()]
    return out, EXIT_OK


def cmd_ramsey_decide(args) -> tuple[dict, int]:
    ast, p = _load_poset(args.expr)
    inst = ArrowInstance(p, args.n, args.dim, args.symmetry)
    if args.cnf:
        Path(args.cnf).write_text(export_cnf(inst))
    outcome = decide_arrow(inst)
    out = {"expression": ast.to_text(), "n": args.n, "threads": _threads(), **outcome.to_json_obj()}
    if args.cnf:
        out["cnf"] = args.cnf
    if args.save and isinstance(outcome, Counterexample):
        Path(args.save).write_text(outcome.coloring.to_json() + "\n")
        out["saved"] = args.save
    return out, EXIT_OK


def cmd_ramsey_exact(args) -> tuple[dict, int]:
    ast, p = _load_poset(args.expr)
    value = exact_ramsey(p, args.n, args.max, args.symmetry)
    return {"expression": ast.to_text(), "n": args.n, "threads": _threads(), "value": value}, EXIT_OK


def cmd_witness(args) -> tuple[dict, int]:
    if args.kind == "thm4":
        if len(args.params) != 2:
            raise UsageError("witness thm4 takes <n> <t1>")
        n, t1 = args.params
        dim, layers = thm4_layers(n, t1)
        coloring = thm4_witness(n, t1)
        target = f"CC({t1},{t1})"
    else:
        if len(args.params) != 3:
            raise UsageError("witness thm5 takes <n> <t> <t'>")
        n, t, tp = args.params
        dim, layers = thm5_layers(n, t, tp)
        coloring = thm5_witness(n, t, tp)
        target = f"CC({t},{t - 1},{tp})"
    out: dict[str, Any] = {
        "kind": args.kind,
        "params": list(args.params),
        "N": dim,
        "blue_layers": sorted(layers),
        "coloring": coloring.to_json_obj(),
    }
    if args.verify is None:
        return out, EXIT_OK
    expr_text = target if args.verify == "" else args.verify
    ast, p = _load_poset(expr_text)
    qn = n if args.n is None else args.n
    report = verify_witness(coloring, p, qn)
    out["verification"] = {"expression": ast.to_text(), "n": qn, **report.to_json_obj()}
    return out, EXIT_OK if report.valid else EXIT_VERIFY


def cmd_chainlemma(args) -> tuple[dict, int]:
    coloring = _load_coloring(args.coloring)
    tau = _int_list(args.tau)
    res = run_chain_lemma(coloring, args.x, tau)
    ok = verify_certificate(res, coloring, args.x, tau)
    out = {"certificate": res.to_json_obj(), "verified": ok}
    return out, EXIT_OK if ok else EXIT_VERIFY


def cmd_perm_check(args) -> tuple[dict, int]:
    perm = _int_list(args.perm)
    profile = proper_profile(perm)
    out: dict[str, Any] = {
        "permutation": perm,
        "profile": profile,
        "min_r": max(profile, default=0),
        "restriction": proper_restriction(perm).to_json_obj(),
    }
    if args.r is not None:
        out["r"] = args.r
        out["r_proper"] = max(profile, default=0) <= args.r
    if args.t is not None:
        out["t"] = args.t
        out["t_close"] = is_t_close(perm, args.t)
        out["window_overflow"] = window_overflow(perm, args.t)
    return out, EXIT_OK


def cmd_perm_count(args) -> tuple[dict, int]:
    value = count_proper_bruteforce(args.k, args.r) if args.bruteforce else count_proper(args.k, args.r)
    method = "bruteforce" if args.bruteforce else kernels.BACKEND
    return {"k": args.k, "r": args.r, "count": value, "method": method}, EXIT_OK


def cmd_perm_encode(args) -> tuple[dict, int]:
    perm = _int_list(args.perm)
    rho = proper_restriction(perm)
    enc = encode_restriction(rho, args.r, len(perm))
    return {"permutation": perm, "restriction": rho.to_json_obj(), "vectors": enc.to_json_obj()}, EXIT_OK


def cmd_perm_decode(args) -> tuple[dict, int]:
    rho = decode_restriction(RestrictionEncoding(tuple(args.vectors)))
    return {"vectors": list(args.vectors), "restriction": rho.to_json_obj()}, EXIT_OK


def cmd_sd_search(args) -> tuple[dict, int]:
    coloring = _load_coloring(args.coloring)
    res = sd_search(coloring, args.n, args.k, args.t)
    return res.to_json_obj(), EXIT_OK


def cmd_estimate(args) -> tuple[dict, int]:
    c: Any = args.c
    log2_of = args.log2_of
    if args.diamond_t is not None:
        c, log2_of = 2 * args.diamond_t + 2, 2 * args.diamond_t + 2
    if c is None:
        raise UsageError("estimate needs --c or --diamond-t")
    if args.scan:
        lo, _, hi = args.scan.partition(":")
        rows = doubling_scan(c, log2_of, _int_auto(lo), _int_auto(hi))
        first = next((e for e, v in rows if v.value == "holds"), None)
        return {
            "c": str(c),
            "log2_of": log2_of,
            "scan": [{"exponent": e, "verdict": v.value} for e, v in rows],
            "first_holds_exponent": first,
        }, EXIT_OK
    if args.n is None:
        raise UsageError("estimate needs --n (or --scan)")
    report = counting_report(CountingParameters(args.n, c, log2_of=log2_of, k=args.k))
    return {"c": str(c), "log2_of": log2_of, **report.to_json_obj()}, EXIT_OK


def cmd_bounds(args) -> tuple[dict, int]:
    ast, p = _load_poset(args.expr)
    return {"expression": ast.to_text(), "n": args.n, **ramsey_bounds(p, args.n).to_json_obj()}, EXIT_OK


def cmd_table(args) -> tuple[dict, int]:
    rows = []
    status = EXIT_OK
    for text, formula in TABLE_ROWS:
        ast, p = _load_poset(text)
        report = ramsey_bounds(p, args.n)
        row: dict[str, Any] = {
            "poset": ast.to_text(),
            "formula": formula,
            "value": report.exact,
            "provenance": list(report.provenance),
        }
        if args.compute:
            try:
                computed = exact_ramsey(p, args.n, args.max)
            except BudgetError:
                computed = None
            row["computed"] = computed
            if computed is not None and computed != report.exact:
                status = EXIT_VERIFY
        rows.append(row)
    return {"n": args.n, "rows": rows}, status


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    # SUPPRESS keeps a subcommand's default from overwriting a flag given before it.
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS, help="indented, key-sorted JSON")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized choices")

    ap = _Parser(prog="poset-ramsey", description="Verification workbench for poset Ramsey numbers R(P, Q_n).",
                 parents=[common])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    poset = sub.add_parser("poset", parents=[common]).add_subparsers(dest="action", required=True,
                                                                     parser_class=_Parser)
    info = poset.add_parser("info", parents=[common], help="height, width, triviality and 2-dimension")
    info.add_argument("expr")
    info.set_defaults(func=cmd_poset_info)

    ramsey = sub.add_parser("ramsey", parents=[common]).add_subparsers(dest="action", required=True,
                                                                       parser_class=_Parser)
    decide = ramsey.add_parser("decide", parents=[common], help="decide the arrow relation at one N")
    decide.add_argument("expr")
    decide.add_argument("--n", type=int, required=True)
    decide.add_argument("--dim", type=int, required=True)
    decide.add_argument("--cnf", help="also write the DIMACS encoding to this file")
    decide.add_argument("--save", help="write a counterexample coloring to this file")
    decide.add_argument("--symmetry", action="store_true", help="add singleton-ordering clauses")
    decide.set_defaults(func=cmd_ramsey_decide)
    exact = ramsey.add_parser("exact", parents=[common], help="least N with the arrow relation")
    exact.add_argument("expr")
    exact.add_argument("--n", type=int, required=True)
    exact.add_argument("--max", type=int, default=6)
    exact.add_argument("--symmetry", action="store_true")
    exact.set_defaults(func=cmd_ramsey_exact)

    wit = sub.add_parser("witness", parents=[common], help="layered lower-bound colorings")
    wit.add_argument("kind", choices=["thm4", "thm5"])
    wit.add_argument("params", type=int, nargs="+", help="thm4: n t1; thm5: n t t'")
    wit.add_argument("--verify", nargs="?", const="", default=None, metavar="EXPR",
                     help="check for a blue EXPR (default: the matching chain composition) and a red Q_n")
    wit.add_argument("--n", type=int, default=None, help="cube size for --verify (default: the witness n)")
    wit.set_defaults(func=cmd_witness)

    cl = sub.add_parser("chainlemma", parents=[common], help="red cube or blue Y-chain certificate")
    cl.add_argument("--coloring", required=True)
    cl.add_argument("--x", type=_int_auto, required=True, help="bitmask of X (bit i-1 is element i)")
    cl.add_argument("--tau", required=True, help="ordering of Y, e.g. 3,5,4")
    cl.set_defaults(func=cmd_chainlemma)

    perm = sub.add_parser("perm", parents=[common]).add_subparsers(dest="action", required=True,
                                                                   parser_class=_Parser)
    check = perm.add_parser("check", parents=[common])
    check.add_argument("perm", help="one-line notation, e.g. 6,1,3,4,5,2")
    check.add_argument("--r", type=int)
    check.add_argument("--t", type=int)
    check.set_defaults(func=cmd_perm_check)
    count = perm.add_parser("count", parents=[common])
    count.add_argument("--k", type=int, required=True)
    count.add_argument("--r", type=int, required=True)
    count.add_argument("--bruteforce", action="store_true")
    count.set_defaults(func=cmd_perm_count)
    enc = perm.add_parser("encode", parents=[common])
    enc.add_argument("perm")
    enc.add_argument("--r", type=int, required=True)
    enc.set_defaults(func=cmd_perm_encode)
    dec = perm.add_parser("decode", parents=[common])
    dec.add_argument("vectors", nargs="+")
    dec.set_defaults(func=cmd_perm_decode)

    sd = sub.add_parser("sd", parents=[common]).add_subparsers(dest="action", required=True, parser_class=_Parser)
    search = sd.add_parser("search", parents=[common], help="subdivided diamond from endpoint classes")
    search.add_argument("--coloring", required=True)
    search.add_argument("--n", type=int, required=True)
    search.add_argument("--k", type=int, required=True)
    search.add_argument("--t", type=int, required=True)
    search.set_defaults(func=cmd_sd_search)

    est = sub.add_parser("estimate", parents=[common], help="rigorous factorial-versus-exponential check")
    est.add_argument("--n", type=_int_auto)
    est.add_argument("--c", help="decimal constant, enclosed outward")
    est.add_argument("--log2-of", type=int, default=0, help="add log2 of this integer to c")
    est.add_argument("--diamond-t", type=int, help="use c = 2t+2+log2(2t+2)")
    est.add_argument("--k", type=int, help="override the derived k")
    est.add_argument("--scan", metavar="LO:HI", help="doubling scan over n = 2^LO .. 2^HI")
    est.set_defaults(func=cmd_estimate)

    bnd = sub.add_parser("bounds", parents=[common], help="closed-form bounds with provenance")
    bnd.add_argument("expr")
    bnd.add_argument("--n", type=int, required=True)
    bnd.set_defaults(func=cmd_bounds)

    tab = sub.add_parser("table", parents=[common], help="small-poset table rows settled by the chain theorems")
    tab.add_argument("--n", type=int, required=True)
    tab.add_argument("--compute", action="store_true", help="also run exact_ramsey on each row")
    tab.add_argument("--max", type=int, default=6)
    tab.set_defaults(func=cmd_table)
    return ap


def _error_code(exc: BaseException) -> int:
    if isinstance(exc, BudgetError):
        return EXIT_BUDGET
    if isinstance(exc, (VerificationError, NoWitnessError)):
        return EXIT_VERIFY
    return EXIT_USAGE


def _fail(exc: BaseException) -> int:
    doc = {"error": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, ParseError):
        doc["offset"] = exc.offset
    print(json.dumps(doc), file=sys.stderr)
    return _error_code(exc)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return _fail(exc)
    if getattr(args, "seed", None) is not None:
        random.seed(args.seed)
    try:
        out, status = args.func(args)
    except PosetRamseyError as exc:
        return _fail(exc)
    if getattr(args, "pretty", False):
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        print(json.dumps(out))
    return status


if __name__ == "__main__":
    sys.exit(main())
