"""Command-line entry point: ``unilyndon <command> ...``.

Exit status is 0 on success, 1 when the input is rejected (a word that is
not a ULW, a malformed word or script), and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import kernels
from .census import classify_ulws, enumerate_ulws
from .core import DomainError, Word, format_letters, lyndon_orders
from .jackson import (
    build_jackson_graph,
    enumerate_eulerian_cycles,
    jackson_ulw,
    word_from_cycle,
)
from .lexcode import (
    find_hamiltonian_cycle,
    lexcode_census,
    parse_script,
    refine_lex_code,
    sx_digraph,
    synthesize_ulw,
    validate_lex_code,
)
from .ulw import canonicalize, is_ulw, mt


def _threads(value: Optional[int]) -> int:
    if value is not None:
        return max(1, value)
    env = os.environ.get("ULW_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise DomainError(f"ULW_THREADS must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


def _progress(args):
    if not getattr(args, "progress", False):
        return None
    return lambda msg: print(msg, file=sys.stderr, flush=True)


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_verify(args) -> int:
    w = Word.parse(args.word, args.degree)
    report = is_ulw(w, args.mode)
    if args.json:
        payload = report.to_dict()
        payload["word"] = str(w)
        _emit(payload)
    elif report.is_ulw:
        print(f"ULW: yes (degree {w.degree})")
    else:
        wit = report.witness
        print(f"ULW: no (degree {w.degree}, mode {report.mode}, reason {wit.reason})")
        if wit.reason == "missing_letters":
            absent = [str(a) for a in range(1, w.degree + 1) if a not in w.alphabet]
            print(f"letters absent from the word: {', '.join(absent)}")
            return 1
        if wit.reason == "length":
            print(f"length {len(w)} is not {w.degree}! = {wit.expected_count}")
            return 1
        if wit.conjugate is not None:
            orders = "none" if not wit.lyndon_orders else " ".join(map(str, wit.lyndon_orders))
            print(f"witness conjugate {wit.conjugate_index}: {wit.conjugate} (Lyndon for: {orders})")
        if wit.factor is not None:
            print(f"factor {wit.factor} occurs {wit.factor_count} times, expected {wit.expected_count}")
    return 0 if report.is_ulw else 1


def cmd_orders(args) -> int:
    w = Word.parse(args.word, args.degree)
    orders = [str(o) for o in lyndon_orders(w)]
    if args.json:
        _emit({"word": str(w), "orders": orders})
    else:
        for o in orders:
            print(o)
    return 0


def cmd_mt(args) -> int:
    w = Word.parse(args.word, args.degree)
    report = is_ulw(w)
    if not report:
        print(f"error: {w} is not a universal Lyndon word", file=sys.stderr)
        return 1
    members = sorted(str(u) for u in mt(w))
    if args.json:
        _emit({"word": str(w), "mt": members})
    else:
        for u in members:
            print(u)
    return 0


def cmd_canon(args) -> int:
    w = Word.parse(args.word, args.degree)
    c = canonicalize(w, up_to_isomorphism=args.iso)
    if args.json:
        _emit({"word": str(w), "canonical": str(c), "iso": args.iso})
    else:
        print(c)
    return 0


def cmd_jackson(args) -> int:
    n = args.degree
    if args.dot:
        sys.stdout.write(build_jackson_graph(n).to_dot())
        return 0
    if not args.all:
        print(jackson_ulw(n))
        return 0
    if n <= 2:
        print(jackson_ulw(n))
        return 0
    progress = _progress(args)
    seen = set()
    for k, cycle in enumerate(enumerate_eulerian_cycles(build_jackson_graph(n)), start=1):
        seen.add(canonicalize(word_from_cycle(cycle, n)).canonical.letters)
        if progress and k % 1000 == 0:
            progress(f"{k} Eulerian cycles")
    for letters in sorted(seen):
        print(format_letters(letters, n))
    return 0


def cmd_lexcode_build(args) -> int:
    with open(args.script, encoding="utf-8") as fh:
        text = fh.read()
    n, steps = parse_script(text, args.degree)
    code = refine_lex_code(n, steps)
    report = validate_lex_code(code.words, n)
    cycle = None
    if args.check_hamiltonian or args.synthesize:
        cycle = find_hamiltonian_cycle(sx_digraph(code))
    synthesized = None
    if args.synthesize and cycle is not None:
        synthesized = synthesize_ulw(code, cycle)
    if args.json:
        payload = {
            "degree": n,
            "words": [format_letters(x, n) or "-" for x in code.sorted_words()],
            "valid": report.valid,
        }
        if args.check_hamiltonian or args.synthesize:
            payload["hamiltonian"] = cycle is not None
        if args.synthesize:
            payload["ulw"] = None if synthesized is None else str(synthesized)
        _emit(payload)
    else:
        sys.stdout.write(code.to_text())
        if args.check_hamiltonian or args.synthesize:
            print(f"hamiltonian: {'yes' if cycle is not None else 'no'}")
        if synthesized is not None:
            print(f"ulw: {synthesized}")
    if args.synthesize and cycle is None:
        print("error: lex-code is not Hamiltonian; nothing to synthesize", file=sys.stderr)
        return 1
    return 0


def cmd_lexcode_search(args) -> int:
    census = lexcode_census(args.degree, args.max_len, args.strategy, _progress(args))
    if args.json:
        _emit(
            {
                "degree": census.degree,
                "codes_examined": census.codes_examined,
                "hamiltonian_codes": census.hamiltonian_codes,
                "words": [str(w) for w in census.words],
            }
        )
    else:
        for w in census.words:
            print(w)
        print(
            f"codes={census.codes_examined} hamiltonian={census.hamiltonian_codes} "
            f"labeled={len(census.words)}"
        )
    return 0


def cmd_enumerate(args) -> int:
    census = enumerate_ulws(args.degree, workers=_threads(args.threads), progress=_progress(args))
    if args.jsonl:
        sys.stdout.write(census.to_jsonl())
        return 0
    if args.classify:
        split = classify_ulws(census)
        tag = " (by convention)" if split.by_convention else ""
        for label, group in (("jackson", split.jackson), ("non_jackson", split.non_jackson)):
            for w in group:
                print(f"{label}{tag} {w}")
    else:
        for w in census.words:
            print(w)
    print(census.summary_line())
    return 0


def _word_command(sub, name, func, help_text):
    p = sub.add_parser(name, help=help_text)
    p.add_argument("word", help="digit string, or comma-separated letters for degree >= 10")
    p.add_argument("--degree", type=int, help="alphabet size (default: largest letter)")
    p.add_argument("--json", action="store_true", help="emit one JSON object")
    p.set_defaults(func=func)
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unilyndon", description="Universal Lyndon words: verification, censuses, lex-codes."
    )
    parser.add_argument("--backend", action="store_true", help="print the search kernel in use and exit")
    sub = parser.add_subparsers(dest="command")

    p = _word_command(sub, "verify", cmd_verify, "check whether a word is a universal Lyndon word")
    p.add_argument(
        "--mode",
        default="counting",
        choices=["definitional", "order-defining", "counting"],
    )
    _word_command(sub, "orders", cmd_orders, "orders for which a word is Lyndon")
    _word_command(sub, "mt", cmd_mt, "shortest unrepeated prefixes of the conjugates")
    p = _word_command(sub, "canon", cmd_canon, "least rotation of a word")
    p.add_argument("--iso", action="store_true", help="also minimise over letter renamings")

    p = sub.add_parser("jackson", help="ULWs from Eulerian cycles of the Jackson graph")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--all", action="store_true", help="every Jackson ULW, up to rotation")
    p.add_argument("--dot", action="store_true", help="print the graph in DOT format")
    p.add_argument("--progress", action="store_true")
    p.add_argument("--threads", type=int)
    p.set_defaults(func=cmd_jackson)

    lex = sub.add_parser("lexcode", help="lex-code construction and search")
    lsub = lex.add_subparsers(dest="lexcode_command")
    p = lsub.add_parser("build", help="run a refinement script")
    p.add_argument("--script", required=True, help="file with 'x : a1,a2,...' lines")
    p.add_argument("--degree", type=int)
    p.add_argument("--check-hamiltonian", action="store_true")
    p.add_argument("--synthesize", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lexcode_build)
    p = lsub.add_parser("search", help="ULWs synthesised from every Hamiltonian lex-code")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--max-len", type=int)
    p.add_argument("--strategy", default="structural", choices=["structural", "exhaustive"])
    p.add_argument("--json", action="store_true")
    p.add_argument("--progress", action="store_true")
    p.add_argument("--threads", type=int)
    p.set_defaults(func=cmd_lexcode_search)
    lex.set_defaults(func=None, lexcode_parser=lex)

    p = sub.add_parser("enumerate", help="all ULWs of a degree, up to rotation")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--classify", action="store_true", help="list Jackson and non-Jackson classes")
    p.add_argument("--jsonl", action="store_true", help="one JSON object per word, then a summary")
    p.add_argument("--progress", action="store_true")
    p.add_argument("--threads", type=int, help="worker processes (default: ULW_THREADS or CPU count)")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.backend:
        print(kernels.BACKEND)
        return 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    if args.func is None:
        args.lexcode_parser.print_usage(sys.stderr)
        return 2
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
