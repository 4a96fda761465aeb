"""Command-line interface.

Exit statuses: 0 success (``entails``: valid), 1 countermodel found or
verification failures, 2 usage or parse error, 3 search budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import consequence as cq
from .consequence import BudgetExceeded, ConsequenceMode
from .formula import SignatureError, free_variables, is_propositional, signature_of
from .parser import ParseError, format_formula, format_sequent, parse_formula, parse_sequent
from .readings import KINDS, ReadingScheme, explain
from .structure import EvaluationError
from .threeval import ThreeValuedInterpretation
from .translation import run_first_order_theorem_suite, run_lemma_suites, run_propositional_theorem_suite
from .tuples import ClemensInterpretation

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

TUPLE_MODES = ("strict", "bossy", "tolerant", "st")
THREE_MODES = ("k3", "lp", "classical", "st")


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _mode(args) -> ConsequenceMode:
    semantics = args.semantics or "three"
    if args.mode is None:
        # bare invocation is classical; naming a semantics picks its tolerant relation
        args.mode = {None: "classical", "three": "lp", "tuple": "tolerant"}[args.semantics]
    if semantics == "tuple":
        if args.mode not in TUPLE_MODES:
            raise UsageError(f"mode {args.mode!r} needs --semantics three; tuple modes: {', '.join(TUPLE_MODES)}")
        if args.n < 1:
            raise UsageError("--n must be at least 1")
        return ConsequenceMode.tuple_mode(args.mode, args.n)
    if args.mode not in THREE_MODES:
        raise UsageError(f"mode {args.mode!r} needs --semantics tuple; three-valued modes: {', '.join(THREE_MODES)}")
    return ConsequenceMode.three_mode(args.mode)


def _add_mode_flags(p: argparse.ArgumentParser):
    p.add_argument("--semantics", choices=("tuple", "three"), default=None,
                   help="value space (default: three)")
    p.add_argument("--n", type=int, default=2, help="tuple width (default: 2)")
    p.add_argument("--mode", default=None,
                   help="strict|bossy|tolerant|st (tuple) or k3|lp|classical|st (three); "
                        "default classical, or tolerant/lp when --semantics is given")
    p.add_argument("--json", action="store_true", help="structured output")


def _print_parse_error(e: ParseError) -> None:
    print(f"error: {e}", file=sys.stderr)
    if e.text:
        print(e.caret(), file=sys.stderr)


# commands ----------------------------------------------------------------


def cmd_parse(args) -> int:
    text = args.text
    if "|-" in text or "⊢" in text:
        s = parse_sequent(text)
        out = {"sequent": format_sequent(s), "premises": [format_formula(f) for f in s.premises],
               "conclusion": format_formula(s.conclusion)}
        sig = s.signature()
        out["propositional"] = s.is_propositional()
        out["sentences"] = s.is_closed()
    else:
        f = parse_formula(text)
        out = {"formula": format_formula(f), "free_variables": sorted(free_variables(f)),
               "propositional": is_propositional(f)}
        sig = signature_of(f)
    out["signature"] = {"predicates": dict(sig.predicates), "constants": sorted(sig.constants)}
    if args.json:
        print(_dump(out))
    else:
        print(out.get("formula") or out["sequent"])
    return EXIT_OK


def _load_model(args):
    data = json.loads(Path(args.model).read_text())
    semantics = args.semantics or data.get("semantics", "three")
    if semantics == "tuple":
        return ClemensInterpretation.from_json(data, data.get("n", args.n)), "tuple"
    m = ThreeValuedInterpretation.from_json(data, classical=data.get("semantics") == "classical")
    return m, "three"


def _assignment_model(args):
    pairs = {}
    for item in args.assign:
        if "=" not in item:
            raise UsageError(f"--assign expects letter=value, got {item!r}")
        k, v = item.split("=", 1)
        pairs[k.strip()] = v.strip()
    if (args.semantics or "three") == "tuple":
        return ClemensInterpretation.propositional(pairs, args.n), "tuple"
    return ThreeValuedInterpretation.propositional(pairs), "three"


def cmd_eval(args) -> int:
    f = parse_formula(args.formula)
    if free_variables(f):
        raise UsageError(f"{format_formula(f)} has free variables {sorted(free_variables(f))}")
    if args.model:
        m, semantics = _load_model(args)
    else:
        m, semantics = _assignment_model(args)
    if semantics == "tuple":
        args.semantics, args.n = "tuple", m.width
    else:
        args.semantics = "three"
        if args.mode is None:
            args.mode = "classical" if m.is_two_valued else "lp"
    mode = _mode(args)
    value = mode.evaluate(f, m)
    des = {"premise": mode.designates(mode.premise, value),
           "conclusion": mode.designates(mode.conclusion, value)}
    if args.json:
        print(_dump({"formula": format_formula(f), "value": str(value), "mode": mode.kind,
                     "designated": des, "model": m.to_json()}))
    else:
        flag = "designated" if des["conclusion"] else "not designated"
        print(f"{format_formula(f)} = {value}  ({flag} under {mode})")
    return EXIT_OK


def cmd_table(args) -> int:
    f = parse_formula(args.formula)
    mode = _mode(args)
    rows = cq.designated_atoms_table(f, mode, atom_limit=args.atom_limit)
    letters = sorted(signature_of(f).predicates)
    text_f = format_formula(f)
    if args.json:
        print(_dump({
            "formula": text_f, "semantics": mode.semantics.value, "mode": mode.kind, "n": mode.n,
            "rows": [{"assignment": {k: str(v) for k, v in r.assignment.items()},
                      "value": str(r.value), "premise_designated": r.premise_designated,
                      "designated": r.conclusion_designated} for r in rows],
        }))
        return EXIT_OK
    header = letters + [text_f] + (["strict-des", "tolerant-des"] if mode.is_mixed else ["designated"])
    body = []
    for r in rows:
        line = [str(r.assignment[p]) for p in letters] + [str(r.value)]
        if mode.is_mixed:
            line += ["yes" if r.premise_designated else "no", "yes" if r.conclusion_designated else "no"]
        else:
            line.append("yes" if r.designated else "no")
        body.append(line)
    widths = [max(len(h), *(len(b[i]) for b in body)) for i, h in enumerate(header)]
    fmt = "  ".join("{:<%d}" % w for w in widths)
    print(fmt.format(*header).rstrip())
    print("  ".join("-" * w for w in widths))
    for line in body:
        print(fmt.format(*line).rstrip())
    return EXIT_OK


def cmd_entails(args) -> int:
    s = parse_sequent(args.sequent)
    mode = _mode(args)
    if args.max_domain < 1:
        raise UsageError("--max-domain must be at least 1")
    verdict = cq.check(s, mode, max_domain=args.max_domain)
    if args.json:
        print(_dump(verdict.to_json()))
    else:
        scope = "" if verdict.search_bound is None else f" (domains up to {verdict.search_bound})"
        if verdict.valid:
            print(f"valid under {mode}{scope}; {verdict.interpretations_checked} interpretations checked")
        else:
            print(f"invalid under {mode}: countermodel after {verdict.interpretations_checked} interpretations")
            cm = verdict.countermodel
            if verdict.search_bound is not None:
                print(f"  domain: {{{', '.join(str(d) for d in cm.domain)}}}")
                for c, d in cm.constants.items():
                    print(f"  {c} -> {d}")
            for p, table in cm.predicates.items():
                for key, v in table.items():
                    shown = p if not key else f"{p}({', '.join(map(str, key))})"
                    print(f"  {shown} = {v}")
            print("  formula values:")
            for text, v in verdict.formula_values.items():
                print(f"    {text} = {v}")
    return EXIT_OK if verdict.valid else EXIT_FAIL


def cmd_explain(args) -> int:
    from .tuples import TupleValue

    value = TupleValue.parse(args.value)
    labels = [x.strip() for x in args.labels.split(",")] if args.labels else None
    scheme = ReadingScheme.default(args.scheme, value.width, labels, args.predicate)
    try:
        text = explain(value, scheme)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.json:
        print(_dump({"value": str(value), "scheme": scheme.kind, "labels": list(scheme.labels),
                     "reading": text}))
    else:
        print(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n is not None and args.n < 2:
        raise UsageError("verification needs --n >= 2 (1/2 embeds as a width-n tuple ending in 0)")
    widths = [args.n] if args.n else [2, 3]
    if args.suite == "lemmas":
        reports = run_lemma_suites(samples=args.samples, seed=args.seed, widths=widths,
                                   max_domain=args.domains, max_depth=args.depth)
        payload = {"suite": "lemmas", "reports": [r.to_json() for r in reports]}
        lines = [f"lemma {r.lemma}: {r.checked} checked, {len(r.failures)} failures" for r in reports]
        ok = all(r.ok for r in reports)
    else:
        reports = [run_propositional_theorem_suite(n, depth=args.depth, atoms=args.atoms,
                                                   max_premises=args.premises) for n in widths]
        if args.fo_samples:
            reports.append(run_first_order_theorem_suite(args.fo_samples, seed=args.seed,
                                                         widths=widths, max_domain=args.domains))
        payload = {"suite": "theorems", "reports": [r.to_json() for r in reports]}
        lines = []
        for r in reports:
            for key, res in r.results.items():
                agree = 100.0 * (res["checked"] - res["disagreements"]) / max(res["checked"], 1)
                lines.append(f"{r.corpus} {key}: {res['checked']} sequents, "
                             f"{res['disagreements']} disagreements ({agree:.2f}% agreement)")
        ok = all(r.ok for r in reports)
    if args.report:
        Path(args.report).write_text(_dump(payload) + "\n")
    if args.json:
        print(_dump(payload))
    else:
        print("\n".join(lines))
        print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tupleval",
        description="n-tuple, three-valued and classical semantics with countermodel search",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse and normalise a formula or sequent")
    p.add_argument("text")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("eval", help="evaluate a sentence in a model or assignment")
    p.add_argument("formula")
    p.add_argument("--model", help="interpretation JSON file")
    p.add_argument("--assign", action="append", default=[], metavar="LETTER=VALUE")
    _add_mode_flags(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("table", help="truth table of a propositional formula")
    p.add_argument("formula")
    p.add_argument("--atom-limit", type=int, default=8)
    _add_mode_flags(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("entails", help="check a sequent")
    p.add_argument("sequent")
    p.add_argument("--max-domain", type=int, default=2)
    _add_mode_flags(p)
    p.set_defaults(func=cmd_entails)

    p = sub.add_parser("explain", help="read a tuple value in words")
    p.add_argument("value")
    p.add_argument("--scheme", choices=KINDS, default="clemens")
    p.add_argument("--labels", help="comma-separated label per position")
    p.add_argument("--predicate", default="P", help="predicate phrase for the respects reading")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_explain)

    p = sub.add_parser("verify", help="run the translation lemma or theorem suites")
    p.add_argument("suite", choices=("lemmas", "theorems"))
    p.add_argument("--n", type=int, default=None, help="width (default: both 2 and 3)")
    p.add_argument("--depth", type=int, default=2, help="formula depth")
    p.add_argument("--atoms", type=int, default=2, help="letters in the propositional corpus")
    p.add_argument("--premises", type=int, default=2, help="max premises per sequent")
    p.add_argument("--domains", type=int, default=2, help="max domain size")
    p.add_argument("--samples", type=int, default=10_000, help="random lemma samples")
    p.add_argument("--fo-samples", type=int, default=0, help="random first-order sequents")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except ParseError as e:
        _print_parse_error(e)
        return EXIT_USAGE
    except (UsageError, SignatureError, EvaluationError, cq.NotASentence,
            cq.NotPropositional, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
