"""``hyp`` command line interface.

Exit codes: 0 for success or a ProbablyHyperbolic verdict, 1 for a
NotHyperbolic verdict or a hard campaign failure, 2 for usage, parse or
rejected-input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from .campaign import (
    DEFAULT_S_SWEEP,
    fraction_str,
    fractions_json,
    recheck_document,
    render_report,
    sequence_to_json,
    verdict_to_json,
    verify_theorem_campaign,
)
from .hyperbolicity import DirectionError, SamplingConfig, Status, cone_member, test_hyperbolic
from .nuij import (
    CoeffSequence,
    OperatorWord,
    RestrictedSequence,
    build_Pas,
    build_Qa,
    expand_word,
    gns_check,
    verify_symbol_identity,
)
from .parsing import ParseError, max_variable_index, parse_poly
from .poly import render

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fractions(text: str) -> List[Fraction]:
    try:
        return [Fraction(part.strip()) for part in text.split(",") if part.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational list {text!r}: {exc}") from None


def _vector(text: Optional[str], n: int, default: Optional[List[Fraction]] = None) -> List[Fraction]:
    if text is None:
        if default is None:
            raise UsageError("missing vector")
        return default
    values = _fractions(text)
    if len(values) != n:
        raise UsageError(f"vector {text!r} needs {n} entries")
    return values


def _e_n(n: int) -> List[Fraction]:
    return [Fraction(0)] * (n - 1) + [Fraction(1)]


def _sampling(args: argparse.Namespace) -> SamplingConfig:
    return SamplingConfig(
        sample_count=args.samples,
        coordinate_bound=args.bound,
        include_grid=not args.no_grid,
        seed=_seed(args),
    )


def _seed(args: argparse.Namespace) -> int:
    env = os.environ.get("HYP_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"HYP_SEED must be an integer, got {env!r}") from None
    return args.seed


def _parse_sequence(text: str, n: int) -> CoeffSequence:
    """``a1;a2;...`` in the variables of the ambient ``n``-variable space."""
    entries = []
    for k, part in enumerate(text.split(";"), start=1):
        ak = parse_poly(part, n)
        try:
            entries.append(ak.drop_last())
        except ValueError:
            raise UsageError(f"a_{k} must not involve the distinguished variable x{n}") from None
    try:
        return CoeffSequence(len(entries), n, tuple(entries))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(args: argparse.Namespace, payload: Dict[str, Any], lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def _verdict_lines(verdict_json: Dict[str, Any]) -> List[str]:
    lines = [f"status: {verdict_json['status']}", f"samples checked: {verdict_json['samples_checked']}"]
    if verdict_json["rejection_reason"]:
        lines.append(f"rejected: {verdict_json['rejection_reason']}")
    w = verdict_json["witness"]
    if w:
        def show(values: List[str]) -> str:
            return ", ".join(str(Fraction(v)) for v in values)

        lines.append(f"witness base: ({show(w['base'])})")
        lines.append(f"witness direction: ({show(w['direction'])})")
        lines.append(f"witness restriction coefficients: [{show(w['restriction'])}]")
    return lines


def _status_exit(status: str) -> int:
    return {
        Status.PROBABLY_HYPERBOLIC.value: EXIT_OK,
        Status.NOT_HYPERBOLIC.value: EXIT_FAIL,
        Status.REJECTED.value: EXIT_USAGE,
    }[status]


def cmd_check(args: argparse.Namespace) -> int:
    p = parse_poly(args.poly, args.n)
    e = _vector(args.dir, args.n, _e_n(args.n))
    verdict = verdict_to_json(p, test_hyperbolic(p, e, _sampling(args)))
    payload = {"polynomial": render(p), "n": args.n, "direction": fractions_json(e), "verdict": verdict}
    _emit(args, payload, _verdict_lines(verdict))
    return _status_exit(verdict["status"])


def cmd_cone(args: argparse.Namespace) -> int:
    p = parse_poly(args.poly, args.n)
    e = _vector(args.dir, args.n)
    v = _vector(args.point, args.n)
    try:
        member = cone_member(p, e, v)
    except DirectionError as exc:
        raise UsageError(f"direction rejected: {exc.reason.value}") from None
    payload = {
        "polynomial": render(p),
        "direction": fractions_json(e),
        "point": fractions_json(v),
        "member": member,
    }
    _emit(args, payload, [f"member: {str(member).lower()}"])
    return EXIT_OK


def cmd_nuij_expand(args: argparse.Namespace) -> int:
    try:
        word = OperatorWord.parse(args.word, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    a = expand_word(word, args.m)
    rendered = sequence_to_json(a)
    payload = {"word": list(word.names()), "n": args.n, "m": a.m, "sequence": rendered}
    _emit(args, payload, [f"a{k} = {ak}" for k, ak in enumerate(rendered, start=1)])
    return EXIT_OK


def cmd_gns_check(args: argparse.Namespace) -> int:
    a = _parse_sequence(args.seq, args.n)
    q_a = build_Qa(a)
    verdict = verdict_to_json(q_a, gns_check(a, _sampling(args)))
    payload = {"sequence": sequence_to_json(a), "n": args.n, "m": a.m, "Q_a": render(q_a), "verdict": verdict}
    lines = [f"Q_a = {render(q_a)}"] + _verdict_lines(verdict)
    if verdict["status"] == Status.NOT_HYPERBOLIC.value:
        lines.append(f"counterexample: P = x{args.n}^{a.m}, s = 1 loses real-rootedness on the witness line")
    _emit(args, payload, lines)
    return _status_exit(verdict["status"])


def cmd_gns_apply(args: argparse.Namespace) -> int:
    n = args.n or max([2, max_variable_index(args.poly)] + [max_variable_index(t) for t in args.seq.split(";")])
    p = parse_poly(args.poly, n)
    a = _parse_sequence(args.seq, n)
    s = _fractions(args.s)
    if len(s) != 1:
        raise UsageError("--s takes a single rational")
    try:
        result = build_Pas(p, a, s[0])
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"polynomial": render(p), "sequence": sequence_to_json(a), "s": fraction_str(s[0]), "result": render(result)}
    _emit(args, payload, [render(result)])
    return EXIT_OK


def cmd_symbol_verify(args: argparse.Namespace) -> int:
    values = _fractions(args.seq_values)
    try:
        check = verify_symbol_identity(RestrictedSequence(len(values), tuple(values)), args.d)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {
        "values": fractions_json(values),
        "d": args.d,
        "holds": check.holds,
        "symbol": str(check.symbol),
        "shifted": str(check.shifted),
    }
    lines = [f"identity holds: {str(check.holds).lower()}", f"symbol: {check.symbol}"]
    if not check.holds:
        lines.append(f"q(z+w): {check.shifted}")
    _emit(args, payload, lines)
    return EXIT_OK if check.holds else EXIT_FAIL


def cmd_campaign(args: argparse.Namespace) -> int:
    s_values = _fractions(args.s_sweep) if args.s_sweep else list(DEFAULT_S_SWEEP)
    if args.m_max < 1 or args.n_max < 2 or args.trials < 0:
        raise UsageError("need --m-max >= 1, --n-max >= 2 and --trials >= 0")
    seed = _seed(args)
    cfg = SamplingConfig(args.samples, args.bound, not args.no_grid, seed)
    report = verify_theorem_campaign(args.trials, (1, args.m_max), (2, args.n_max), s_values, cfg, seed)
    text = render_report(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    summary = ", ".join(f"{k}={v}" for k, v in report.summary.items())
    print(summary, file=sys.stderr if not args.out else sys.stdout)
    return EXIT_FAIL if report.hard_failures else EXIT_OK


def cmd_recheck(args: argparse.Namespace) -> int:
    try:
        with open(args.report) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read report: {exc}") from None
    results = recheck_document(data)
    failed = [path for path, ok in results if not ok]
    payload = {"witnesses": len(results), "failed": failed}
    lines = [f"{path}: {'ok' if ok else 'FAILED'}" for path, ok in results]
    lines.append(f"{len(results) - len(failed)}/{len(results)} witnesses re-verified")
    _emit(args, payload, lines)
    return EXIT_FAIL if failed else EXIT_OK


def _add_sampling(parser: argparse.ArgumentParser) -> None:
    defaults = SamplingConfig()
    parser.add_argument("--samples", type=int, default=defaults.sample_count, help="random sample count")
    parser.add_argument("--bound", type=int, default=defaults.coordinate_bound, help="integer coordinate bound")
    parser.add_argument("--seed", type=int, default=defaults.seed)
    parser.add_argument("--no-grid", action="store_true", help="skip the {-2..2}^n grid pass")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyp", description="Hyperbolicity checks and Garding Nuij sequences.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test hyperbolicity of a polynomial")
    p.add_argument("--poly", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dir", help="direction e (default e_n)")
    _add_sampling(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("cone", help="hyperbolicity cone membership")
    p.add_argument("--poly", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dir", required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cone)

    nuij = sub.add_parser("nuij", help="Nuij operator words").add_subparsers(dest="action", required=True)
    p = nuij.add_parser("expand", help="coefficient sequence of a composed operator")
    p.add_argument("--word", required=True, help="letters such as x,x,y,y")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, help="pad the sequence to this degree")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_nuij_expand)

    gns = sub.add_parser("gns", help="Garding Nuij sequences").add_subparsers(dest="action", required=True)
    p = gns.add_parser("check", help="decide a sequence through Q_a")
    p.add_argument("--seq", required=True, help="a1;a2;...;am")
    p.add_argument("--n", type=int, required=True)
    _add_sampling(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gns_check)
    p = gns.add_parser("apply", help="build P_{a,s}")
    p.add_argument("--poly", required=True)
    p.add_argument("--seq", required=True)
    p.add_argument("--s", required=True)
    p.add_argument("--n", type=int, help="variable count (default: highest variable used)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gns_apply)

    symbol = sub.add_parser("symbol", help="operator symbol identity").add_subparsers(dest="action", required=True)
    p = symbol.add_parser("verify")
    p.add_argument("--seq-values", required=True, help="r1,...,rm")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_symbol_verify)

    p = sub.add_parser("campaign", help="randomized verification campaign")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--s-sweep", help="comma-separated rationals (default -2,-1,-1/2,1/2,1,2)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=SamplingConfig().sample_count)
    p.add_argument("--bound", type=int, default=SamplingConfig().coordinate_bound)
    p.add_argument("--no-grid", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_campaign)

    p = sub.add_parser("recheck", help="re-verify every witness in a JSON report")
    p.add_argument("--report", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_recheck)
    return parser


VALUE_OPTIONS = ("--poly", "--seq", "--s", "--s-sweep", "--seq-values", "--dir", "--point")


def _glue_values(argv: Sequence[str]) -> List[str]:
    """Turn ``--s-sweep -2,-1`` into ``--s-sweep=-2,-1`` so argparse does not read the value as a flag."""
    out: List[str] = []
    it = iter(argv)
    for arg in it:
        if arg in VALUE_OPTIONS:
            value = next(it, None)
            out.append(arg if value is None else f"{arg}={value}")
        else:
            out.append(arg)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_values(sys.argv[1:] if argv is None else argv))
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (UsageError, ParseError) as exc:
        print(f"hyp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"hyp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
