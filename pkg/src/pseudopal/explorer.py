"""Conjecture scanning: enumerate directive prefixes, generate their
chains, and record minimal attractor sizes against a bound.

Directive prefixes are ordered canonically by the paired alphabet
0R < 0E < 1R < 1E; distinct directives that generate the same word are
collapsed (the quantity under test is a property of the word).
"""

from __future__ import annotations

import csv
import json
import os
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .attractor import minimal_size, pseudostandard_attractor, rote_attractor, sturmian_attractor
from .directive import (
    ChainStep,
    DirectiveBiSequence,
    PrefixChain,
    SequenceFamily,
    is_rote_valid_prefix,
)
from .words import ClosureKind, closure

PAIR_ORDER: tuple[tuple[str, ClosureKind], ...] = (
    ("0", ClosureKind.R),
    ("0", ClosureKind.E),
    ("1", ClosureKind.R),
    ("1", ClosureKind.E),
)


@dataclass(frozen=True)
class ScanRecord:
    delta: str
    theta: str
    n: int
    length: int
    minimal_size: int
    theorem_size: int | None
    ok: bool

    def to_json_obj(self) -> dict:
        return {
            "delta": self.delta,
            "theta": self.theta,
            "n": self.n,
            "len": self.length,
            "minimal_size": self.minimal_size,
            "theorem_size": self.theorem_size,
            "ok": self.ok,
        }


@dataclass
class ScanResult:
    records: list[ScanRecord]
    truncated: bool
    last_index: int  # last completed canonical leaf index (-1 if none)
    leaf_count: int

    @property
    def violations(self) -> int:
        return sum(1 for r in self.records if not r.ok)


def _leaf_pairs(index: int, depth: int) -> list[tuple[str, ClosureKind]]:
    digits = []
    for _ in range(depth):
        digits.append(index % 4)
        index //= 4
    return [PAIR_ORDER[d] for d in reversed(digits)]


def _as_chain(pairs: list[tuple[str, ClosureKind]], words: list[str]) -> PrefixChain:
    steps = tuple(
        ChainStep(n=i + 1, delta=d, theta=t, word=w) for i, ((d, t), w) in enumerate(zip(pairs, words))
    )
    bi = DirectiveBiSequence(
        delta_pre="".join(d for d, _ in pairs),
        delta_per="",
        theta_pre=tuple(t for _, t in pairs),
        theta_per=(),
    )
    return PrefixChain(source=bi, steps=steps)


def theorem_size(chain: PrefixChain, n: int) -> int | None:
    """Size of the family construction's attractor at step n, if one applies."""
    thetas = chain.theta_prefix(n)
    if all(t is ClosureKind.R for t in thetas):
        return len(sturmian_attractor(chain, n).positions)
    if all(t is ClosureKind.E for t in thetas):
        return len(pseudostandard_attractor(chain, n).gamma.positions)
    if is_rote_valid_prefix(chain.delta_prefix(n), thetas):
        return len(rote_attractor(chain, n).positions)
    return None


def _leaf_words(pairs: list[tuple[str, ClosureKind]], max_word_len: int) -> list[str]:
    words = []
    word = ""
    for letter, kind in pairs:
        word = closure(word + letter, kind)
        if len(word) > max_word_len:
            break
        words.append(word)
    return words


def _scan_leaves(
    leaves: Iterable[list[tuple[str, ClosureKind]]],
    max_word_len: int,
    bound: int,
    seen: set[str],
    records: list[ScanRecord],
    on_record: Callable[[ScanRecord], None] | None,
) -> None:
    for pairs in leaves:
        words = _leaf_words(pairs, max_word_len)
        chain = _as_chain(pairs, words)
        for n, word in enumerate(words, start=1):
            if word in seen:
                continue
            seen.add(word)
            size = minimal_size(word)
            record = ScanRecord(
                delta=chain.delta_prefix(n),
                theta="".join(t.value for t in chain.theta_prefix(n)),
                n=n,
                length=len(word),
                minimal_size=size,
                theorem_size=theorem_size(chain, n),
                ok=size <= bound,
            )
            records.append(record)
            if on_record is not None:
                on_record(record)


def scan(
    max_steps: int,
    max_word_len: int,
    bound: int = 4,
    *,
    checkpoint_path: str | None = None,
    max_leaves: int | None = None,
    time_budget_s: float | None = None,
    on_record: Callable[[ScanRecord], None] | None = None,
) -> ScanResult:
    """Scan all 4**max_steps directive prefixes in canonical order.

    Budgets (`max_leaves`, `time_budget_s`) truncate the scan after whole
    leaves; the result then carries truncated=True and, if a checkpoint
    path is given, the last completed leaf index so a later call resumes
    where this one stopped. Resuming replays earlier leaves only to
    rebuild the dedup set, without re-searching attractors.
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    leaf_count = 4**max_steps
    start = 0
    seen: set[str] = set()
    if checkpoint_path and os.path.exists(checkpoint_path):
        with open(checkpoint_path, encoding="ascii") as fh:
            content = fh.read().strip()
        if content:
            start = int(content) + 1
            for index in range(start):
                for word in _leaf_words(_leaf_pairs(index, max_steps), max_word_len):
                    seen.add(word)
    records: list[ScanRecord] = []
    began = time.monotonic()
    processed = 0
    truncated = False
    last_index = start - 1
    for index in range(start, leaf_count):
        over_time = time_budget_s is not None and time.monotonic() - began > time_budget_s
        over_count = max_leaves is not None and processed >= max_leaves
        if processed > 0 and (over_time or over_count):
            truncated = True
            break
        _scan_leaves([_leaf_pairs(index, max_steps)], max_word_len, bound, seen, records, on_record)
        last_index = index
        processed += 1
        if checkpoint_path:
            with open(checkpoint_path, "w", encoding="ascii") as fh:
                fh.write(f"{index}\n")
    return ScanResult(records=records, truncated=truncated, last_index=last_index, leaf_count=leaf_count)


def _family_leaves(family: SequenceFamily, max_steps: int) -> Iterator[list[tuple[str, ClosureKind]]]:
    if family is SequenceFamily.STANDARD_STURMIAN:
        kinds: tuple[ClosureKind, ...] | None = (ClosureKind.R,) * max_steps
    elif family is SequenceFamily.PSEUDOSTANDARD:
        kinds = (ClosureKind.E,) * max_steps
    elif family is SequenceFamily.CS_ROTE_VALID:
        kinds = None
    else:
        raise ValueError(f"no family enumeration for {family}")
    if kinds is not None:
        for index in range(2**max_steps):
            letters = format(index, f"0{max_steps}b")
            yield [(letter, kind) for letter, kind in zip(letters, kinds)]
        return
    for index in range(4**max_steps):
        pairs = _leaf_pairs(index, max_steps)
        deltas = "".join(d for d, _ in pairs)
        thetas = tuple(t for _, t in pairs)
        if is_rote_valid_prefix(deltas, thetas):
            yield pairs


def family_report(
    family: SequenceFamily,
    max_steps: int,
    max_word_len: int,
    bound: int = 4,
    *,
    on_record: Callable[[ScanRecord], None] | None = None,
) -> ScanResult:
    """Scan restricted to one family; theorem_size is always populated."""
    records: list[ScanRecord] = []
    seen: set[str] = set()
    count = 0
    for pairs in _family_leaves(family, max_steps):
        _scan_leaves([pairs], max_word_len, bound, seen, records, on_record)
        count += 1
    return ScanResult(records=records, truncated=False, last_index=count - 1, leaf_count=count)


CSV_COLUMNS = ("delta", "theta", "n", "len", "minimal_size", "theorem_size", "ok")


def record_to_json_line(record: ScanRecord) -> str:
    return json.dumps(record.to_json_obj(), separators=(",", ":"))


def write_jsonl(records: Iterable[ScanRecord], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(record_to_json_line(record) + "\n")


def write_csv(records: Iterable[ScanRecord], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for r in records:
            writer.writerow(
                [r.delta, r.theta, r.n, r.length, r.minimal_size, "" if r.theorem_size is None else r.theorem_size, r.ok]
            )
