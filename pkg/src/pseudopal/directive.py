"""Directive bi-sequences and the prefix chains they generate.

A directive bi-sequence pairs a letter sequence with a closure-operator
sequence; step n appends letter n and closes under operator n, so that
each chain word extends the previous one as a pseudopalindrome. Directive
descriptions are either finite strings or eventually periodic in the form
``pre(period)``.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from typing import Iterator

from .errors import BudgetExceededError, ClassMismatchError, ParseError, StepRangeError
from .words import ClosureKind, closure, ensure_binary

DEFAULT_MAX_LEN = 10**6


@dataclass(frozen=True)
class DirectiveBiSequence:
    """Paired letter/closure description; empty period means finite."""

    delta_pre: str
    delta_per: str
    theta_pre: tuple[ClosureKind, ...]
    theta_per: tuple[ClosureKind, ...]

    def __post_init__(self) -> None:
        ensure_binary(self.delta_pre)
        ensure_binary(self.delta_per)

    @property
    def available_steps(self) -> int | None:
        """Number of defined steps; None when both descriptions are periodic."""
        limits = []
        if not self.delta_per:
            limits.append(len(self.delta_pre))
        if not self.theta_per:
            limits.append(len(self.theta_pre))
        return min(limits) if limits else None

    def delta_at(self, n: int) -> str:
        """Letter of step n (1-based)."""
        if n < 1:
            raise StepRangeError(f"step index must be >= 1, got {n}")
        if n <= len(self.delta_pre):
            return self.delta_pre[n - 1]
        if self.delta_per:
            return self.delta_per[(n - 1 - len(self.delta_pre)) % len(self.delta_per)]
        raise StepRangeError(f"letter sequence provides only {len(self.delta_pre)} steps, step {n} requested")

    def theta_at(self, n: int) -> ClosureKind:
        """Closure operator of step n (1-based)."""
        if n < 1:
            raise StepRangeError(f"step index must be >= 1, got {n}")
        if n <= len(self.theta_pre):
            return self.theta_pre[n - 1]
        if self.theta_per:
            return self.theta_per[(n - 1 - len(self.theta_pre)) % len(self.theta_per)]
        raise StepRangeError(f"closure sequence provides only {len(self.theta_pre)} steps, step {n} requested")

    @property
    def delta_text(self) -> str:
        return self.delta_pre + (f"({self.delta_per})" if self.delta_per else "")

    @property
    def theta_text(self) -> str:
        pre = "".join(k.value for k in self.theta_pre)
        per = "".join(k.value for k in self.theta_per)
        return pre + (f"({per})" if per else "")

    def __str__(self) -> str:
        return f"({self.delta_text}, {self.theta_text})"


def _split_description(text: str, allowed: str, label: str) -> tuple[str, str]:
    open_at = text.find("(")
    if open_at == -1:
        close_at = text.find(")")
        if close_at != -1:
            raise ParseError(f"{label}: unmatched ')' at position {close_at}", position=close_at)
        pre, per = text, ""
    else:
        second = text.find("(", open_at + 1)
        if second != -1:
            raise ParseError(f"{label}: second '(' at position {second}", position=second)
        close_at = text.find(")")
        if close_at != len(text) - 1:
            at = close_at if close_at != -1 else len(text)
            raise ParseError(f"{label}: expected ')' closing the period at position {len(text) - 1}", position=at)
        pre, per = text[:open_at], text[open_at + 1 : -1]
        if not per:
            raise ParseError(f"{label}: empty period at position {open_at + 1}", position=open_at + 1)
    for chunk, offset in ((pre, 0), (per, open_at + 1)):
        for i, ch in enumerate(chunk):
            if ch not in allowed:
                raise ParseError(
                    f"{label}: illegal character {ch!r} at position {offset + i}", position=offset + i
                )
    return pre, per


def parse(delta_text: str, theta_text: str) -> DirectiveBiSequence:
    """Parse ``pre`` / ``pre(period)`` descriptions, e.g. ("0(1)", "(RE)")."""
    delta_pre, delta_per = _split_description(delta_text, "01", "delta")
    theta_pre, theta_per = _split_description(theta_text, "RE", "theta")
    return DirectiveBiSequence(
        delta_pre=delta_pre,
        delta_per=delta_per,
        theta_pre=tuple(ClosureKind(ch) for ch in theta_pre),
        theta_per=tuple(ClosureKind(ch) for ch in theta_per),
    )


@dataclass(frozen=True)
class ChainStep:
    n: int
    delta: str
    theta: ClosureKind
    word: str


@dataclass(frozen=True)
class PrefixChain:
    """The words w_1..w_k produced by iterated closure (w_0 is empty)."""

    source: DirectiveBiSequence
    steps: tuple[ChainStep, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def word(self, n: int) -> str:
        if n == 0:
            return ""
        if not 1 <= n <= len(self.steps):
            raise StepRangeError(f"chain has {len(self.steps)} steps, step {n} requested")
        return self.steps[n - 1].word

    def delta_prefix(self, n: int) -> str:
        return "".join(step.delta for step in self.steps[:n])

    def theta_prefix(self, n: int) -> tuple[ClosureKind, ...]:
        return tuple(step.theta for step in self.steps[:n])

    def to_json_obj(self) -> list[dict]:
        return [
            {"n": s.n, "delta": s.delta, "theta": s.theta.value, "word": s.word, "length": len(s.word)}
            for s in self.steps
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def iter_chain(bi: DirectiveBiSequence, steps: int, max_len: int = DEFAULT_MAX_LEN) -> Iterator[ChainStep]:
    """Yield chain steps, stopping silently once a word would exceed `max_len`."""
    word = ""
    for n in range(1, steps + 1):
        letter = bi.delta_at(n)
        kind = bi.theta_at(n)
        word = closure(word + letter, kind)
        if len(word) > max_len:
            return
        yield ChainStep(n=n, delta=letter, theta=kind, word=word)


def generate(bi: DirectiveBiSequence, steps: int, max_len: int = DEFAULT_MAX_LEN) -> PrefixChain:
    """Generate w_1..w_steps; raises when the directive is too short or a word outgrows `max_len`."""
    if steps < 0:
        raise ValueError(f"steps must be >= 0, got {steps}")
    available = bi.available_steps
    if available is not None and steps > available:
        raise StepRangeError(f"directive {bi} provides only {available} steps, {steps} requested")
    out: list[ChainStep] = []
    for step in iter_chain(bi, steps, max_len):
        out.append(step)
    if len(out) < steps:
        n = len(out)
        raise BudgetExceededError(
            f"word length budget {max_len} exceeded at step {n + 1} (last completed step: {n})",
            last_completed=n,
        )
    return PrefixChain(source=bi, steps=tuple(out))


def is_aperiodic(bi: DirectiveBiSequence) -> bool | None:
    """Decide aperiodicity of the generated sequence; None for finite directives.

    The sequence is eventually periodic exactly when some bijection
    f: {R, E} -> {0, 1} satisfies f(theta_n) = delta_{n+1} for all large n;
    for eventually periodic descriptions it suffices to test one combined
    period past the preperiods.
    """
    if bi.available_steps is not None:
        return None
    start = max(len(bi.theta_pre) + 1, len(bi.delta_pre), 1)
    span = math.lcm(len(bi.theta_per), len(bi.delta_per))
    for mapping in ({ClosureKind.R: "0", ClosureKind.E: "1"}, {ClosureKind.R: "1", ClosureKind.E: "0"}):
        if all(mapping[bi.theta_at(n)] == bi.delta_at(n + 1) for n in range(start, start + span)):
            return False
    return True


def forbidden_pair(d1: str, t1: ClosureKind, d2: str, t2: ClosureKind) -> bool:
    """Length-2 directive factors that no standard CS Rote sequence admits."""
    if t1 is ClosureKind.E and t2 is ClosureKind.E:
        return True
    if t1 is ClosureKind.R and t2 is ClosureKind.R and d1 != d2:
        return True
    if t1 is ClosureKind.R and t2 is ClosureKind.E and d1 == d2:
        return True
    return False


def is_rote_valid_prefix(deltas: str, thetas: tuple[ClosureKind, ...]) -> bool:
    """Whether a directive prefix starts with R and avoids the forbidden factors."""
    if not deltas or len(deltas) != len(thetas):
        return False
    if thetas[0] is not ClosureKind.R:
        return False
    return not any(
        forbidden_pair(deltas[i], thetas[i], deltas[i + 1], thetas[i + 1]) for i in range(len(deltas) - 1)
    )


class SequenceFamily(enum.Enum):
    STANDARD_STURMIAN = "standard-sturmian"
    PSEUDOSTANDARD = "pseudostandard"
    CS_ROTE_VALID = "cs-rote-valid"
    OTHER = "other"


@dataclass(frozen=True)
class SequenceClass:
    """Family verdict; `provisional` marks prefix-only evidence from a finite directive."""

    family: SequenceFamily
    aperiodic: bool | None
    provisional: bool


def classify(bi: DirectiveBiSequence) -> SequenceClass:
    """Assign the directive to one of the recognised sequence families.

    Periodic descriptions are decided exactly. Finite directives can only
    be checked against the Rote validity conditions on the given prefix
    (aperiodicity stays unknown), every other family needs the tail.
    """
    aperiodic = is_aperiodic(bi)
    available = bi.available_steps
    if available is None:
        thetas = set(bi.theta_pre) | set(bi.theta_per)
        if thetas == {ClosureKind.R} and set(bi.delta_per) == {"0", "1"}:
            return SequenceClass(SequenceFamily.STANDARD_STURMIAN, aperiodic, provisional=False)
        if thetas == {ClosureKind.E}:
            return SequenceClass(SequenceFamily.PSEUDOSTANDARD, aperiodic, provisional=False)
        window = max(len(bi.delta_pre), len(bi.theta_pre)) + 2 * math.lcm(
            len(bi.delta_per), len(bi.theta_per)
        )
        deltas = "".join(bi.delta_at(n) for n in range(1, window + 1))
        thetas_seq = tuple(bi.theta_at(n) for n in range(1, window + 1))
        if aperiodic and is_rote_valid_prefix(deltas, thetas_seq):
            return SequenceClass(SequenceFamily.CS_ROTE_VALID, aperiodic, provisional=False)
        return SequenceClass(SequenceFamily.OTHER, aperiodic, provisional=False)
    deltas = "".join(bi.delta_at(n) for n in range(1, available + 1))
    thetas_seq = tuple(bi.theta_at(n) for n in range(1, available + 1))
    if is_rote_valid_prefix(deltas, thetas_seq):
        return SequenceClass(SequenceFamily.CS_ROTE_VALID, aperiodic, provisional=True)
    return SequenceClass(SequenceFamily.OTHER, aperiodic, provisional=True)


def pseudopalindromic_prefixes(
    bi: DirectiveBiSequence, steps: int, max_len: int = DEFAULT_MAX_LEN
) -> PrefixChain:
    """Generate the chain of a Rote-valid directive.

    For such directives the chain words are exactly the pseudopalindromic
    prefixes of the generated sequence, so this is `generate` plus a class
    gate.
    """
    verdict = classify(bi)
    if verdict.family is not SequenceFamily.CS_ROTE_VALID:
        raise ClassMismatchError(f"directive {bi} is not Rote-valid (classified {verdict.family.value})")
    return generate(bi, steps, max_len)
