"""Command-line front end; every command emits one JSON document.

Exit codes: 0 success, 1 domain error (error JSON on stdout), 2 usage
error; check-closed and graph-embeddable use 3 to signal "property fails"
for scripting.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import rules
from .cones import (
    LowerSet,
    UpperSet,
    closure_up,
    is_closed_lower,
    lower_cone,
    set_to_json,
    upper_cone,
)
from .errors import WordConesError
from .graphs import build_distance_table, embeddable_verdict, graph_from_json
from .poset import alphabet_from_json, classify
from .words import Word, higman_leq

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_PROPERTY = 3

# Word literals over sign-like alphabets start with "-", which argparse
# would read as an option.  Tokens following --words are escaped with a
# sentinel before parsing and unescaped by the option's type callable;
# any known flag ends the word list.
_FLAGS = {
    "--alphabet", "--graph", "--words", "--rules", "--max-gens", "--max-len",
    "--oracle", "--pretty", "--kind", "--all", "--verify",
}
_SENTINEL = "\x00"


def _escape_word_args(argv: list[str]) -> list[str]:
    out = []
    in_words = False
    for tok in argv:
        if tok in _FLAGS:
            in_words = tok == "--words"
            out.append(tok)
        elif in_words:
            out.append(_SENTINEL + tok)
        else:
            out.append(tok)
    return out


def _word_literal(token: str) -> str:
    return token[1:] if token.startswith(_SENTINEL) else token


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _emit(doc: dict, pretty: bool) -> None:
    if pretty:
        json.dump(doc, sys.stdout, indent=2, sort_keys=False, ensure_ascii=False)
    else:
        json.dump(doc, sys.stdout, sort_keys=False, ensure_ascii=False)
    sys.stdout.write("\n")


def _alphabet(args):
    return alphabet_from_json(_load_json(args.alphabet))


def _words(alphabet, literals):
    return [Word.parse(alphabet, lit) for lit in literals]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordcones",
        description="Exact cone, closure, and stability computations over ordered alphabets",
    )
    parser.add_argument("--pretty", action="store_true", help="indent the JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        return p

    p = add("classify", help="structural flags of an alphabet")
    p.add_argument("--alphabet", required=True)

    p = add("leq", help="compare two words in the Higman order")
    p.add_argument("--alphabet", required=True)
    p.add_argument("--words", nargs=2, required=True, type=_word_literal,
                   metavar=("LHS", "RHS"))

    p = add("cone", help="lower or upper cone of a finite word set")
    p.add_argument("--alphabet", required=True)
    p.add_argument("--kind", choices=["lower", "upper"], required=True)
    p.add_argument("--words", nargs="*", default=[], type=_word_literal)

    p = add("closure", help="Galois closure of a finite word set (upper-set side)")
    p.add_argument("--alphabet", required=True)
    p.add_argument("--words", nargs="*", default=[], type=_word_literal)
    p.add_argument("--oracle", action="store_true",
                   help="also saturate the four rules and assert agreement")

    p = add("check-closed", help="is the generated upper set closed? (exit 3 when not)")
    p.add_argument("--alphabet", required=True)
    p.add_argument("--words", nargs="+", required=True, type=_word_literal)
    p.add_argument("--verify", action="store_true",
                   help="cross-check the rule-subset decision against all four rules")

    p = add("check-lower-closed", help="is the generated lower set closed? (exit 3 when not)")
    p.add_argument("--alphabet", required=True)
    p.add_argument("--words", nargs="*", default=[], type=_word_literal)
    p.add_argument("--all", action="store_true", help="check the whole monoid instead")

    p = add("stable-closure", help="saturate a word set under the syntactic rules")
    p.add_argument("--alphabet", required=True)
    p.add_argument("--words", nargs="+", required=True, type=_word_literal)
    p.add_argument("--rules", nargs="*", default=list(rules.RULES_BASE),
                   choices=list(rules.RULES_BASE) + list(rules.RULES_DERIVED[:2]))
    p.add_argument("--oracle", action="store_true",
                   help="also compute the Galois closure and record agreement")

    p = add("is-stable", help="stability of an upper set under selected rules")
    p.add_argument("--alphabet", required=True)
    p.add_argument("--words", nargs="+", required=True, type=_word_literal)
    p.add_argument("--rules", nargs="*", default=list(rules.RULES_BASE),
                   choices=list(rules.RULES_BASE) + list(rules.RULES_DERIVED[:2]))

    p = add("conjecture-search", help="hunt for a stable-but-not-closed set on a conditional lattice")
    p.add_argument("--alphabet", required=True)
    p.add_argument("--max-gens", type=int, default=2)
    p.add_argument("--max-len", type=int, default=3)

    p = add("graph-distances", help="all ordered-pair distances of an oriented graph")
    p.add_argument("--graph", required=True)

    p = add("graph-embeddable", help="zigzag-product embeddability verdict (exit 3 when not)")
    p.add_argument("--graph", required=True)

    return parser


def run(args) -> int:
    cmd = args.command

    if cmd == "classify":
        alphabet = _alphabet(args)
        _emit({"alphabet": alphabet.to_json(), "class": classify(alphabet).to_json()}, args.pretty)
        return EXIT_OK

    if cmd == "leq":
        alphabet = _alphabet(args)
        lhs, rhs = _words(alphabet, args.words)
        _emit({"lhs": lhs.literal(), "rhs": rhs.literal(), "result": higman_leq(lhs, rhs)},
              args.pretty)
        return EXIT_OK

    if cmd == "cone":
        alphabet = _alphabet(args)
        ws = _words(alphabet, args.words)
        if args.kind == "lower":
            cone = lower_cone(ws, alphabet=alphabet)
        else:
            cone = upper_cone(ws, alphabet=alphabet)
        _emit({"input": args.words, "cone": set_to_json(cone)}, args.pretty)
        return EXIT_OK

    if cmd == "closure":
        alphabet = _alphabet(args)
        ws = _words(alphabet, args.words)
        closed = closure_up(ws, alphabet=alphabet)
        doc = {"input": args.words, "result": closed.literals()}
        if args.oracle:
            report = rules.stable_closure(ws, alphabet=alphabet, oracle_check=True)
            doc["agreement"] = report.agreement and report.result == closed
            if not doc["agreement"]:
                _emit(doc, args.pretty)
                return EXIT_DOMAIN
        _emit(doc, args.pretty)
        return EXIT_OK

    if cmd == "check-closed":
        alphabet = _alphabet(args)
        z = UpperSet(alphabet, _words(alphabet, args.words))
        report = rules.closedness_decision(z, verify=args.verify)
        _emit(report.to_json(), args.pretty)
        return EXIT_OK if report.closed else EXIT_PROPERTY

    if cmd == "check-lower-closed":
        alphabet = _alphabet(args)
        if args.all:
            low = LowerSet.all_words(alphabet)
        else:
            low = LowerSet(alphabet, _words(alphabet, args.words))
        closed = is_closed_lower(low)
        _emit({"input": set_to_json(low), "closed": closed}, args.pretty)
        return EXIT_OK if closed else EXIT_PROPERTY

    if cmd == "stable-closure":
        alphabet = _alphabet(args)
        ws = _words(alphabet, args.words)
        report = rules.stable_closure(ws, tuple(args.rules), alphabet=alphabet,
                                      oracle_check=args.oracle)
        _emit(report.to_json(), args.pretty)
        if args.oracle and report.agreement is False:
            return EXIT_DOMAIN
        return EXIT_OK

    if cmd == "is-stable":
        alphabet = _alphabet(args)
        z = UpperSet(alphabet, _words(alphabet, args.words))
        res = rules.is_stable(z, tuple(args.rules))
        if res is True:
            _emit({"gens": z.literals(), "stable": True}, args.pretty)
        else:
            rule, witness = res
            _emit({"gens": z.literals(), "stable": False, "rule": rule,
                   "witness": witness.literal()}, args.pretty)
        return EXIT_OK

    if cmd == "conjecture-search":
        alphabet = _alphabet(args)
        counter = rules.conjecture_search(alphabet, args.max_gens, args.max_len)
        doc = {
            "alphabet": alphabet.to_json(),
            "bounds": {"max_gens": args.max_gens, "max_len": args.max_len},
            "counterexample": None if counter is None else [w.literal() for w in counter],
        }
        if counter is None:
            doc["verdict"] = "no counterexample within bounds"
        else:
            doc["verdict"] = "counterexample found"
        _emit(doc, args.pretty)
        return EXIT_OK

    if cmd == "graph-distances":
        graph = graph_from_json(_load_json(args.graph))
        _emit(build_distance_table(graph).to_json(), args.pretty)
        return EXIT_OK

    if cmd == "graph-embeddable":
        graph = graph_from_json(_load_json(args.graph))
        report = embeddable_verdict(graph)
        _emit(report.to_json(), args.pretty)
        return EXIT_OK if report.embeddable else EXIT_PROPERTY

    raise AssertionError(f"unhandled command {cmd!r}")


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_escape_word_args(list(argv)))
    try:
        return run(args)
    except WordConesError as exc:
        _emit({"error": {"kind": type(exc).__name__, "detail": str(exc)}}, args.pretty)
        return EXIT_DOMAIN
    except (OSError, json.JSONDecodeError, ValueError, KeyError) as exc:
        _emit({"error": {"kind": type(exc).__name__, "detail": str(exc)}}, args.pretty)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
