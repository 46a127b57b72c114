"""Command-line front end.

Every command builds one structured document (rendered as JSON with
explicit nulls under ``--format structured``) and derives the text output
from the same document, so the two formats agree on every field.

Exit codes: 0 ok, 1 usage or parse error, 2 computation capped by a size
gate, 3 a proved bound was violated by a computed instance (a correctness
alarm).  Gates come from RESETLAB_* environment variables; randomized
sweeps take a seed that defaults to a fixed value and is always printed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import config, sweeps
from ._kernels import BACKEND
from .automaton import (
    Automaton,
    Word,
    augment_threshold,
    classify,
    exact_reset_threshold,
    greedy_reset_word,
    reachability,
    subset_witness_word,
    verify_bounds,
)
from .errors import DomainError, ParseError, ResetLabError, ScopeCappedError
from .fileformat import parse_automaton, render_automaton
from .groups import BLOCK_ORACLE, HIGMAN_SIMS, is_primitive, is_transitive, nontrivial_block_system
from .monoid import build_family, generate_monoid, lemma15_check, monoid_reset_threshold, monoid_stats, verify_theorem17
from .relations import is_strongly_connected, pi_chain
from .transform import StateSet

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAPPED = 2
EXIT_ALARM = 3


def _read_automaton(path: str) -> Automaton:
    if path == "-":
        return parse_automaton(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return parse_automaton(fh.read())


def _word_doc(word: Optional[Word]):
    return None if word is None else list(word.letters)


def _parse_state_set(spec: str, n: int) -> StateSet:
    body = spec.strip().strip("{}")
    if not body:
        return StateSet.empty(n)
    return StateSet.of(n, [int(tok) for tok in body.replace(",", " ").split()])


def _emit(doc: dict, lines: list[str], fmt: str):
    if fmt == "structured":
        print(json.dumps(doc, indent=2))
    else:
        for line in lines:
            print(line)


def _kv_lines(doc: dict) -> list[str]:
    out = []
    for key, value in doc.items():
        if isinstance(value, list):
            value = " ".join(str(v) for v in value) if value else "(empty)"
        out.append(f"{key}: {value}")
    return out


def _cmd_analyze(args) -> int:
    a = _read_automaton(args.input)
    c = classify(a)
    report = verify_bounds(a)
    rt = exact_reset_threshold(a)
    reach = reachability(a) if a.n <= 20 else None
    doc = {
        "command": "analyze",
        "n": a.n,
        "generators": list(a.names),
        "synchronizing": c.synchronizing,
        "transitive": c.transitive,
        "directable": c.directable,
        "one_point": c.one_point,
        "weakly_singular": c.weakly_singular,
        "rt": None if rt is None else rt[0],
        "reset_word": None if rt is None else _word_doc(rt[1]),
        "at": report.at,
        "msc": report.msc,
        "pi_strongly_connected": report.pi_strongly_connected,
        "group_transitive": report.group_transitive,
        "group_primitive": report.group_primitive,
        "reachable_images": None if reach is None else reach.count,
        "completely_reachable": None if reach is None else reach.completely_reachable,
        "greedy_word_length": report.greedy_word_length,
        "bounds_ok": report.all_ok,
        "notes": list(report.notes),
    }
    _emit(doc, _kv_lines(doc), args.format)
    return EXIT_OK if report.all_ok else EXIT_ALARM


def _cmd_rt(args) -> int:
    a = _read_automaton(args.input)
    rt = exact_reset_threshold(a)
    doc = {
        "command": "rt",
        "n": a.n,
        "rt": None if rt is None else rt[0],
        "reset_word": None if rt is None else _word_doc(rt[1]),
    }
    _emit(doc, _kv_lines(doc), args.format)
    return EXIT_OK


def _cmd_word(args) -> int:
    a = _read_automaton(args.input)
    rt = exact_reset_threshold(a)
    doc = {
        "command": "word",
        "n": a.n,
        "length": None if rt is None else rt[0],
        "word": None if rt is None else _word_doc(rt[1]),
    }
    if args.greedy:
        greedy = greedy_reset_word(a)
        doc["greedy_word"] = _word_doc(greedy)
        doc["greedy_length"] = None if greedy is None else len(greedy)
    _emit(doc, _kv_lines(doc), args.format)
    return EXIT_OK


def _cmd_at(args) -> int:
    a = _read_automaton(args.input)
    doc = {"command": "at", "n": a.n, "at": augment_threshold(a)}
    _emit(doc, _kv_lines(doc), args.format)
    return EXIT_OK


def _one_point_singular(a: Automaton):
    c = classify(a)
    if not c.one_point:
        raise DomainError("automaton is not one-point (need exactly one one-point singular generator)")
    return c.singular_part[0], c.permutation_part


def _cmd_msc(args) -> int:
    a = _read_automaton(args.input)
    f, Y = _one_point_singular(a)
    chain = pi_chain(f, Y)
    doc = {
        "command": "msc",
        "n": a.n,
        "msc": chain.msc,
        "pi_strongly_connected": is_strongly_connected(chain.closure),
    }
    _emit(doc, _kv_lines(doc), args.format)
    return EXIT_OK


def _cmd_pi(args) -> int:
    a = _read_automaton(args.input)
    f, Y = _one_point_singular(a)
    chain = pi_chain(f, Y)
    doc = {
        "command": "pi",
        "n": a.n,
        "levels": [sorted([s, t] for s, t in rel.pairs) for rel in chain.relations],
        "closure_size": len(chain.closure),
        "msc": chain.msc,
        "pi_strongly_connected": is_strongly_connected(chain.closure),
    }
    lines = [f"n: {a.n}"]
    for m, level in enumerate(doc["levels"]):
        rendered = " ".join(f"({s},{t})" for s, t in level)
        lines.append(f"pi_{m}: {rendered}")
    lines.append(f"closure_size: {doc['closure_size']}")
    lines.append(f"msc: {doc['msc']}")
    lines.append(f"pi_strongly_connected: {doc['pi_strongly_connected']}")
    _emit(doc, lines, args.format)
    return EXIT_OK


def _cmd_reach(args) -> int:
    a = _read_automaton(args.input)
    reach = reachability(a)
    doc = {
        "command": "reach",
        "n": a.n,
        "reachable_images": reach.count,
        "completely_reachable": reach.completely_reachable,
        "images": [list(sset.members()) for sset in reach.reachable_images] if a.n <= 6 else None,
    }
    lines = [
        f"n: {a.n}",
        f"reachable_images: {reach.count}",
        f"completely_reachable: {reach.completely_reachable}",
    ]
    if doc["images"] is not None:
        for members in doc["images"]:
            lines.append("image: {" + ",".join(map(str, members)) + "}")
    _emit(doc, lines, args.format)
    return EXIT_OK


def _cmd_witness(args) -> int:
    a = _read_automaton(args.input)
    target = _parse_state_set(args.target, a.n)
    word = subset_witness_word(a, target)
    doc = {
        "command": "witness",
        "n": a.n,
        "target": list(target.members()),
        "word": _word_doc(word),
        "reachable": word is not None,
    }
    _emit(doc, _kv_lines(doc), args.format)
    return EXIT_OK


def _cmd_primitive(args) -> int:
    a = _read_automaton(args.input)
    Y = classify(a).permutation_part
    hs = is_primitive(Y, HIGMAN_SIMS)
    block = is_primitive(Y, BLOCK_ORACLE)
    blocks = None if hs else nontrivial_block_system(Y)
    doc = {
        "command": "primitive",
        "n": a.n,
        "generators": list(Y.names),
        "transitive": is_transitive(Y),
        "primitive": hs,
        "methods_agree": hs == block,
        "blocks": None if blocks is None else [list(b.members()) for b in blocks],
    }
    lines = _kv_lines({k: v for k, v in doc.items() if k != "blocks"})
    if blocks is not None:
        lines.append("blocks: " + " ".join("{" + ",".join(map(str, b.members())) + "}" for b in blocks))
    _emit(doc, lines, args.format)
    return EXIT_OK if doc["methods_agree"] else EXIT_ALARM


def _cmd_monoid(args) -> int:
    if args.action == "thm17":
        if args.n is None:
            raise DomainError("monoid thm17 needs --n")
        report = verify_theorem17(args.n)
        doc = {
            "command": "monoid thm17",
            "n": report.n,
            "monoid_size": report.monoid_size,
            "inverse_monoid_size": report.inverse_monoid_size,
            "phi_is_isomorphism": report.phi_is_isomorphism,
            "rt": report.rt,
            "rt_expected": report.rt_expected,
        }
        _emit(doc, _kv_lines(doc), args.format)
        ok = report.phi_is_isomorphism and report.rt == report.rt_expected
        return EXIT_OK if ok else EXIT_ALARM
    a = _read_automaton(args.input)
    table = generate_monoid(a)
    if args.action == "stats":
        stats = monoid_stats(table)
        doc = {
            "command": "monoid stats",
            "n": a.n,
            "size": stats.size,
            "sr": stats.sr,
            "has_one_point_of_rank_sr": stats.has_one_point_of_rank_sr,
            "synchronizing": stats.synchronizing,
            "lemma15": lemma15_check(table) if table.size <= config.gate("genset_max") else None,
        }
        _emit(doc, _kv_lines(doc), args.format)
        return EXIT_OK if doc["lemma15"] is not False else EXIT_ALARM
    if args.action == "rt":
        value = monoid_reset_threshold(table)
        doc = {"command": "monoid rt", "n": a.n, "size": table.size, "monoid_rt": value}
        _emit(doc, _kv_lines(doc), args.format)
        return EXIT_OK
    raise DomainError(f"unknown monoid action {args.action!r}")


def _cmd_family(args) -> int:
    a = build_family(args.kind, args.n)
    sys.stdout.write(render_automaton(a))
    return EXIT_OK


def _cmd_bounds(args) -> int:
    a = _read_automaton(args.input)
    report = verify_bounds(a)
    doc = {
        "command": "bounds",
        "n": report.n,
        "synchronizing": report.synchronizing,
        "transitive": report.transitive,
        "directable": report.directable,
        "is_one_point": report.is_one_point,
        "group_transitive": report.group_transitive,
        "group_primitive": report.group_primitive,
        "pi_strongly_connected": report.pi_strongly_connected,
        "msc": report.msc,
        "msc_bound": report.msc_bound,
        "at": report.at,
        "at_bound": report.at_bound,
        "rt_exact": report.rt_exact,
        "rt_bound": report.rt_bound,
        "greedy_word_length": report.greedy_word_length,
        "lemma3_bound": report.lemma3_bound,
        "all_ok": report.all_ok,
        "notes": list(report.notes),
    }
    _emit(doc, _kv_lines(doc), args.format)
    return EXIT_OK if report.all_ok else EXIT_ALARM


def _sweep_docs(args) -> list[dict]:
    docs = []
    suites = [args.suite] if args.suite != "all" else ["one-point", "primitive", "equivalences", "monotonicity"]
    for suite in suites:
        if suite == "one-point":
            if args.n <= 5:
                r = sweeps.one_point_bounds_exhaustive(args.n)
                mode = "exhaustive"
            else:
                r = sweeps.one_point_bounds_sampled(args.n, args.samples, args.seed)
                mode = "sampled"
            docs.append(
                {
                    "suite": "one-point",
                    "mode": mode,
                    "n": r.n,
                    "y_sets": r.y_sets,
                    "y_transitive": r.y_transitive,
                    "instances": r.instances,
                    "qualifying": r.qualifying,
                    "violations": r.violations,
                }
            )
        elif suite == "primitive":
            r = sweeps.primitive_sweep(args.n)
            docs.append(
                {
                    "suite": "primitive",
                    "mode": "exhaustive",
                    "n": r.n,
                    "y_sets": r.y_sets,
                    "y_primitive": r.y_primitive,
                    "method_disagreements": r.method_disagreements,
                    "chain_closure_checks": r.chain_closure_checks,
                    "reachability_checks": r.reachability_checks,
                    "violations": r.violations,
                }
            )
        elif suite == "equivalences":
            if args.n <= 3:
                r = sweeps.equivalences_exhaustive(args.n)
                mode = "exhaustive"
            else:
                r = sweeps.equivalences_sampled(args.n, args.samples, args.seed)
                mode = "sampled"
            docs.append(
                {
                    "suite": "equivalences",
                    "mode": mode,
                    "n": r.n,
                    "instances": r.instances,
                    "directable": r.directable,
                    "violations": r.violations,
                }
            )
        elif suite == "monotonicity":
            r = sweeps.rt_monotonicity_sampled(args.n, min(args.samples, 10_000), args.seed)
            docs.append(
                {
                    "suite": "monotonicity",
                    "mode": "sampled",
                    "n": r.n,
                    "instances": r.instances,
                    "violations": r.violations,
                }
            )
        else:
            raise DomainError(f"unknown suite {suite!r}")
    return docs


def _cmd_sweep(args) -> int:
    docs = _sweep_docs(args)
    doc = {
        "command": "sweep",
        "backend": BACKEND,
        "seed": args.seed,
        "suites": docs,
    }
    lines = [f"backend: {BACKEND}", f"seed: {args.seed}"]
    total = 0
    for sub in docs:
        total += sub["violations"]
        detail = " ".join(f"{k}={v}" for k, v in sub.items() if k not in ("suite",))
        lines.append(f"{sub['suite']}: {detail}")
    lines.append(f"total_violations: {total}")
    doc["total_violations"] = total
    _emit(doc, lines, args.format)
    return EXIT_OK if total == 0 else EXIT_ALARM


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="resetlab",
        description="Synchronizing automata and transformation monoids: "
        "reset words, augment thresholds, pair chains, primitivity, and "
        "bound verification sweeps.",
    )
    parser.add_argument(
        "--format",
        choices=("text", "structured"),
        default="text",
        help="text output or one JSON document",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add_input(p):
        p.add_argument("input", help="automaton file, or - for stdin")

    p = sub.add_parser("analyze", help="full classification and bound report")
    add_input(p)
    p.set_defaults(func=_cmd_analyze)
    p = sub.add_parser("rt", help="exact reset threshold")
    add_input(p)
    p.set_defaults(func=_cmd_rt)
    p = sub.add_parser("word", help="shortest reset word (and optionally the greedy one)")
    p.add_argument("--greedy", action="store_true", help="also run the augmenting procedure")
    add_input(p)
    p.set_defaults(func=_cmd_word)
    p = sub.add_parser("at", help="exact augment threshold")
    add_input(p)
    p.set_defaults(func=_cmd_at)
    p = sub.add_parser("msc", help="first strongly connected chain level")
    add_input(p)
    p.set_defaults(func=_cmd_msc)
    p = sub.add_parser("pi", help="the full pair chain")
    add_input(p)
    p.set_defaults(func=_cmd_pi)
    p = sub.add_parser("reach", help="reachable image subsets")
    add_input(p)
    p.set_defaults(func=_cmd_reach)
    p = sub.add_parser("witness", help="a word whose image is the target subset")
    p.add_argument("--target", required=True, help="e.g. '2,3' or '{2,3}'")
    add_input(p)
    p.set_defaults(func=_cmd_witness)
    p = sub.add_parser("primitive", help="primitivity of the permutation part, both methods")
    add_input(p)
    p.set_defaults(func=_cmd_primitive)
    p = sub.add_parser("monoid", help="transition monoid computations")
    p.add_argument("action", choices=("stats", "rt", "thm17"))
    p.add_argument("input", nargs="?", default=None, help="automaton file (stats, rt)")
    p.add_argument("--n", type=int, default=None, help="state count (thm17)")
    p.set_defaults(func=_cmd_monoid)
    p = sub.add_parser("family", help="emit a built-in family in file format")
    p.add_argument("kind", choices=("cerny", "rn"))
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_family)
    p = sub.add_parser("bounds", help="bound verification report")
    add_input(p)
    p.set_defaults(func=_cmd_bounds)
    p = sub.add_parser("sweep", help="exhaustive/sampled verification suites")
    p.add_argument("--suite", choices=("one-point", "primitive", "equivalences", "monotonicity", "all"), default="all")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    p.set_defaults(func=_cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ScopeCappedError as exc:
        print(f"scope capped: {exc}", file=sys.stderr)
        return EXIT_CAPPED
    except ResetLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
