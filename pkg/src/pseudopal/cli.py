"""Command-line interface.

Exit codes: 0 success (verify: attractor valid), 1 verification failure or
conjecture violation, 2 malformed input or class mismatch, 3 length budget
exceeded. The environment variable ATTRACTOR_MAX_LEN overrides the default
generation budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterable

from . import attractor as attr
from . import directive, explorer
from .directive import DEFAULT_MAX_LEN
from .errors import BudgetExceededError, ClassMismatchError, ParseError, StepRangeError
from .words import ensure_binary

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

FAMILIES = ("sturmian", "pseudostandard", "rote")


def render_word(word: str, positions: Iterable[int]) -> str:
    """Word with attractor positions wrapped in square brackets."""
    marked = set(positions)
    return "".join(f"[{ch}]" if i in marked else ch for i, ch in enumerate(word))


def _env_max_len() -> int:
    raw = os.environ.get("ATTRACTOR_MAX_LEN")
    if raw is None:
        return DEFAULT_MAX_LEN
    try:
        value = int(raw)
    except ValueError:
        raise ParseError(f"ATTRACTOR_MAX_LEN must be an integer, got {raw!r}") from None
    if value < 1:
        raise ParseError(f"ATTRACTOR_MAX_LEN must be >= 1, got {value}")
    return value


def _parse_gamma(text: str, word_length: int) -> attr.Attractor:
    items = [chunk.strip() for chunk in text.split(",")] if text.strip() else []
    positions = []
    for chunk in items:
        if chunk == "":
            raise ParseError(f"empty index in gamma list {text!r}")
        try:
            positions.append(int(chunk))
        except ValueError:
            raise ParseError(f"gamma index {chunk!r} is not an integer") from None
    return attr.attractor_of(positions, word_length)


def cmd_generate(args: argparse.Namespace) -> int:
    bi = directive.parse(args.delta, args.theta)
    chain = directive.generate(bi, args.steps, args.max_len)
    if args.format == "json":
        print(chain.to_json())
    else:
        for step in chain.steps:
            print(f"w_{step.n} {step.word}")
    return EXIT_OK


def _verdict_obj(verdict: attr.MinimalityVerdict) -> dict:
    out = {
        "is_minimal": verdict.is_minimal,
        "size_class": verdict.size_class.value,
    }
    if verdict.size_two_attractor is not None:
        out["size_two_attractor"] = verdict.size_two_attractor.to_json_obj()
    return out


def cmd_verify(args: argparse.Namespace) -> int:
    ensure_binary(args.word)
    gamma = _parse_gamma(args.gamma, len(args.word))
    report = attr.verify(args.word, gamma)
    rendered = render_word(args.word, gamma.positions)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "valid": report.valid,
                    "witness": report.witness,
                    "word": args.word,
                    "gamma": gamma.to_json_obj(),
                    "rendered": rendered,
                }
            )
        )
    else:
        print("valid" if report.valid else "invalid")
        if report.witness is not None:
            print(f"witness {report.witness}")
        print(f"rendered {rendered}")
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_minimal(args: argparse.Namespace) -> int:
    gamma = attr.minimal_attractor(args.word)
    rendered = render_word(args.word, gamma.positions)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "word": args.word,
                    "gamma": gamma.to_json_obj(),
                    "size": len(gamma.positions),
                    "rendered": rendered,
                }
            )
        )
    else:
        print(f"size {len(gamma.positions)}")
        print(f"gamma {','.join(map(str, gamma.positions))}")
        print(f"rendered {rendered}")
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    bi = directive.parse(args.delta, args.theta)
    chain = directive.generate(bi, args.index, args.max_len)
    word = chain.word(args.index)
    verdict_extra: dict = {}
    if args.family == "sturmian":
        gamma = attr.sturmian_attractor(chain, args.index)
        is_minimal: bool | None = True
    elif args.family == "pseudostandard":
        verdict = attr.pseudostandard_attractor(chain, args.index)
        gamma = verdict.gamma
        is_minimal = verdict.is_minimal
        verdict_extra = _verdict_obj(verdict)
    else:
        gamma = attr.rote_attractor(chain, args.index)
        is_minimal = True
    rendered = render_word(word, gamma.positions)
    if args.format == "json":
        obj = {
            "family": args.family,
            "n": args.index,
            "word": word,
            "gamma": gamma.to_json_obj(),
            "size": len(gamma.positions),
            "is_minimal": is_minimal,
            "rendered": rendered,
        }
        obj.update(verdict_extra)
        print(json.dumps(obj))
    else:
        print(f"w_{args.index} {word}")
        print(f"gamma {','.join(map(str, gamma.positions))}")
        print(f"rendered {rendered}")
        print(f"size {len(gamma.positions)}")
        print(f"minimal {'unknown' if is_minimal is None else str(is_minimal).lower()}")
        if "size_class" in verdict_extra:
            print(f"size_class {verdict_extra['size_class']}")
        if "size_two_attractor" in verdict_extra:
            print(f"size_two_attractor {','.join(map(str, verdict_extra['size_two_attractor']))}")
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    sinks = []
    handles = []
    try:
        if args.out:
            fh = open(args.out, "w", encoding="utf-8")
            handles.append(fh)
            sinks.append(lambda rec, fh=fh: fh.write(explorer.record_to_json_line(rec) + "\n"))
        else:
            sinks.append(lambda rec: print(explorer.record_to_json_line(rec)))
        result = explorer.scan(
            args.max_steps,
            args.max_len,
            args.bound,
            checkpoint_path=args.checkpoint,
            max_leaves=args.max_leaves,
            time_budget_s=args.time_budget,
            on_record=lambda rec: [sink(rec) for sink in sinks],
        )
    finally:
        for fh in handles:
            fh.close()
    if args.csv:
        explorer.write_csv(result.records, args.csv)
    summary = {
        "leaves": result.leaf_count,
        "last_index": result.last_index,
        "records": len(result.records),
        "violations": result.violations,
        "truncated": result.truncated,
    }
    out = sys.stderr if not args.out else sys.stdout
    for key, value in summary.items():
        print(f"{key} {value}", file=out)
    return EXIT_INVALID if result.violations else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pseudopal",
        description="Pseudopalindromic-closure sequences and their string attractors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate the prefix chain of a directive")
    p.add_argument("--delta", required=True, help="letter directive, e.g. 01 or 0(1)")
    p.add_argument("--theta", required=True, help="closure directive, e.g. RE or (RE)")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check an attractor candidate")
    p.add_argument("--word", required=True)
    p.add_argument("--gamma", required=True, help="comma-separated 0-based positions")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("minimal", help="exact minimal attractor of a word")
    p.add_argument("--word", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_minimal)

    p = sub.add_parser("construct", help="closed-form attractor of a chain word")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--delta", required=True)
    p.add_argument("--theta", required=True)
    p.add_argument("--index", type=int, required=True, help="chain step n (1-based)")
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("scan", help="scan directive prefixes against the size bound")
    p.add_argument("--max-steps", type=int, default=5)
    p.add_argument("--max-len", type=int, default=60, help="maximum word length per record")
    p.add_argument("--bound", type=int, default=4)
    p.add_argument("--out", default=None, help="JSON-lines output path (default: stdout)")
    p.add_argument("--csv", default=None, help="optional CSV output path")
    p.add_argument("--checkpoint", default=None, help="resume file holding the last leaf index")
    p.add_argument("--max-leaves", type=int, default=None)
    p.add_argument("--time-budget", type=float, default=None, help="seconds before truncating")
    p.set_defaults(func=cmd_scan)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if hasattr(args, "max_len") and args.max_len is None and args.command in ("generate", "construct"):
            args.max_len = _env_max_len()
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, StepRangeError, ClassMismatchError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
