"""Command-line interface.

Exit codes: 0 on success, 1 on a domain error (improper star, missing
field capability, unsupported relator, bad word), 2 on usage or parse
errors.  Results go to stdout and diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .congruence import parse_relators, predicted_compatibility, shuffle_compatible
from .density import TrialConfig, density_experiment
from .errors import MultAutomataError
from .expression import ExpressionSyntaxError, compile_expression, expression_letters, parse_expression
from .reduction import equivalent, minimize, rank
from .semiring import semiring_from_tag
from .serialize import dumps, export_dot, loads
from .series import coefficient, truncate, words_up_to


class _UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str):
    try:
        return loads(_read(path))
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise _UsageError(f"{path}: not an automaton JSON document ({exc})") from None


def _cmd_compile(args, out):
    sr = semiring_from_tag(args.semiring)
    alphabet = args.alphabet or expression_letters(args.expression) or "a"
    expr = parse_expression(args.expression, alphabet, sr)
    rep = compile_expression(expr, alphabet, sr, allow_improper_star=args.allow_improper_star)
    print(dumps(rep), file=out)


def _cmd_eval(args, out):
    rep = _load(args.automaton)
    word = "" if args.word == "1" else args.word
    print(rep.semiring.format(coefficient(rep, word)), file=out)


def _cmd_coeffs(args, out):
    rep = _load(args.automaton)
    fmt = rep.semiring.format
    poly = truncate(rep, args.max_len)
    for w in words_up_to(rep.alphabet, args.max_len):
        print(f"{w or '1'}\t{fmt(poly[w])}", file=out)


def _cmd_rank(args, out):
    print(rank(_load(args.automaton)), file=out)


def _cmd_minimize(args, out):
    print(dumps(minimize(_load(args.automaton)).reduced), file=out)


def _cmd_equiv(args, out):
    print("yes" if equivalent(_load(args.first), _load(args.second)) else "no", file=out)


def _cmd_density(args, out):
    cfg = TrialConfig(
        operation=args.operation,
        dims=tuple(args.dims),
        alphabet=args.alphabet or "ab",
        entry_range=args.entry_range,
        trials=args.trials,
        seed=args.seed,
    )
    print(density_experiment(cfg).to_json(), file=out)


def _relators(args):
    try:
        return parse_relators(_read(args.relators), args.alphabet)
    except MultAutomataError:
        raise
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _cmd_compat(args, out):
    rel = _relators(args)
    ok = shuffle_compatible(rel, semiring_from_tag(args.semiring))
    print("compatible" if ok else "incompatible", file=out)


def _cmd_predict(args, out):
    rel = _relators(args)
    print(predicted_compatibility(rel, semiring_from_tag(args.semiring)), file=out)


def _cmd_dot(args, out):
    out.write(export_dot(_load(args.automaton)))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multautomata", description="Automata with multiplicities.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, semiring=False, alphabet=False):
        if semiring:
            p.add_argument("--semiring", default="rational", help="boolean, natural, integer, rational, zmod:<p>, tropical")
        if alphabet:
            p.add_argument("--alphabet", default=None, help="letters, e.g. 'ab'")

    p = sub.add_parser("compile", help="rational expression -> automaton JSON")
    p.add_argument("expression")
    p.add_argument("--allow-improper-star", action="store_true")
    common(p, semiring=True, alphabet=True)
    p.set_defaults(func=_cmd_compile)

    p = sub.add_parser("eval", help="coefficient of a word")
    p.add_argument("automaton")
    p.add_argument("word", help="the word; '1' or '' for the empty word")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("coeffs", help="table of coefficients up to a length")
    p.add_argument("automaton")
    p.add_argument("--max-len", type=int, default=3)
    p.set_defaults(func=_cmd_coeffs)

    for name, func, helptext in (
        ("rank", _cmd_rank, "rank of the recognized series"),
        ("minimize", _cmd_minimize, "minimal equivalent automaton"),
        ("export-dot", _cmd_dot, "Graphviz rendering"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("automaton")
        p.set_defaults(func=func)

    p = sub.add_parser("equiv", help="whether two automata have the same behaviour")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("density", help="Monte-Carlo minimality experiment")
    p.add_argument("--operation", choices=("sum", "cauchy", "star"), required=True)
    p.add_argument("--dims", type=int, nargs="+", required=True)
    p.add_argument("--entry-range", type=int, default=50)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    common(p, alphabet=True)
    p.set_defaults(func=_cmd_density)

    for name, func in (("compat", _cmd_compat), ("predict-compat", _cmd_predict)):
        p = sub.add_parser(name, help="shuffle compatibility of a relator file")
        p.add_argument("relators")
        common(p, semiring=True, alphabet=True)
        p.set_defaults(func=func)

    return parser


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except (ExpressionSyntaxError, _UsageError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    except (MultAutomataError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    except ValueError as exc:
        # malformed tags, configs and scalars
        print(f"error: {exc}", file=err)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
