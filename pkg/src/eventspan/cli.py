"""Command-line entry point: ``eventspan classify|eval|filter|selftest``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from .logic import (LexiconError, builtin_lexicon, classify, evaluate, expand_expr,
                    frame_model)
from .spanning import render_set
from .syntax import ParseError, parse_expression, parse_lexicon, parse_model, render_model, \
    render_occurrence


def _names(text: Optional[str]) -> Optional[List[str]]:
    if text is None:
        return None
    return [t.strip() for t in text.split(",") if t.strip()]


def _warn(msg: str) -> None:
    print(f"warning: {msg}", file=sys.stderr)


def _load_model(args):
    model = parse_model(Path(args.model).read_text(), warn=_warn)
    return model if args.literal else frame_model(model)


def _load_lexicon(args):
    if args.lexicon:
        return parse_lexicon(Path(args.lexicon).read_text())
    return builtin_lexicon()


def cmd_classify(args) -> int:
    model = _load_model(args)
    lex = _load_lexicon(args)
    for occ in classify(model, lex, _names(args.events), _names(args.objects)):
        print(render_occurrence(occ.event, occ.args, occ.when, args.show_openness))
    return 0


def cmd_eval(args) -> int:
    model = _load_model(args)
    e = expand_expr(_load_lexicon(args), parse_expression(args.expr))
    print(render_set(evaluate(model, e), show_openness=args.show_openness))
    return 0


def cmd_filter(args) -> int:
    from .filter import filter_streams, parse_raw_streams

    model = filter_streams(parse_raw_streams(Path(args.raw).read_text()), args.window)
    Path(args.out).write_text(render_model(model))
    return 0


def cmd_selftest(args) -> int:
    from .oracle import EvalConfig, SuiteConfig, check_evaluator, operation_suite

    results = operation_suite(SuiteConfig(grid=args.grid, seed=args.seed))
    if args.eval_pairs:
        results.append(check_evaluator(EvalConfig(pairs=args.eval_pairs, seed=args.seed)))
    for r in results:
        print(r.summary())
    # degenerate-only extras are a known limit of the representation, not a fault
    unsound = [r for r in results if not r.sound or r.extra_nondegenerate]
    return 1 if unsound else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eventspan",
                                description="Event-logic inference over spanning intervals.")
    sub = p.add_subparsers(dest="command", required=True)

    def model_opts(sp):
        sp.add_argument("--model", required=True, help="model file of primitive occurrences")
        sp.add_argument("--lexicon", help="lexicon file replacing the built-in verbs")
        sp.add_argument("--literal", action="store_true",
                        help="read model intervals with the printed openness only")
        sp.add_argument("--show-openness", action="store_true",
                        help="print open endpoints with parentheses")

    c = sub.add_parser("classify", help="report every compound event occurrence")
    model_opts(c)
    c.add_argument("--events", help="comma-separated event names")
    c.add_argument("--objects", help="comma-separated object names")
    c.set_defaults(func=cmd_classify)

    e = sub.add_parser("eval", help="evaluate one expression")
    model_opts(e)
    e.add_argument("--expr", required=True)
    e.set_defaults(func=cmd_eval)

    f = sub.add_parser("filter", help="smooth raw per-frame streams into a model file")
    f.add_argument("--raw", required=True)
    f.add_argument("--out", required=True)
    f.add_argument("--window", type=int, default=5)
    f.set_defaults(func=cmd_filter)

    s = sub.add_parser("selftest", help="compare every operation with the reference semantics")
    s.add_argument("--grid", type=int, default=4)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--eval-pairs", type=int, default=0,
                   help="also check this many random model/expression pairs")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, LexiconError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
