"""String attractors: verification, exact minimal search, and the
closed-form constructions for the three directive families.

An attractor of w is a position set met by at least one occurrence of
every nonempty factor, where the occurrence of a factor at i is the index
set {i, ..., i + len - 1}.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import _backend
from .directive import PrefixChain, is_rote_valid_prefix
from .errors import ClassMismatchError
from .words import (
    ClosureKind,
    complement,
    ensure_binary,
    is_antipalindrome,
    is_palindrome,
    longest_pp_prefix_followed_by,
)


@dataclass(frozen=True)
class Attractor:
    """Strictly increasing 0-based positions inside a word of `word_length`."""

    positions: tuple[int, ...]
    word_length: int

    def __post_init__(self) -> None:
        if self.word_length < 1:
            raise ValueError("the empty word has no attractor")
        for prev, cur in zip((-1,) + self.positions, self.positions):
            if cur <= prev:
                raise ValueError(f"positions must be strictly increasing, got {self.positions}")
        if self.positions and not 0 <= self.positions[-1] < self.word_length:
            raise ValueError(
                f"position {self.positions[-1]} out of range for word length {self.word_length}"
            )
        if self.positions and self.positions[0] < 0:
            raise ValueError(f"position {self.positions[0]} out of range")

    def to_json_obj(self) -> list[int]:
        return list(self.positions)


def attractor_of(positions, word_length: int) -> Attractor:
    """Build an Attractor from any iterable of positions (sorted, deduplicated)."""
    return Attractor(tuple(sorted(set(positions))), word_length)


@dataclass(frozen=True)
class VerificationReport:
    """`witness` is a factor with no occurrence meeting the positions (None when valid)."""

    valid: bool
    witness: str | None

    def __post_init__(self) -> None:
        if self.valid == (self.witness is not None):
            raise ValueError("witness must be present exactly when verification fails")


def verify(word: str, gamma: Attractor) -> VerificationReport:
    """Check the attractor property for every distinct nonempty factor.

    On failure the witness is the shortest uncovered factor, ties broken
    lexicographically.
    """
    ensure_binary(word)
    if gamma.word_length != len(word):
        raise ValueError(f"attractor is for word length {gamma.word_length}, word has length {len(word)}")
    ok, start, length = _backend.verify_positions(word.encode("ascii"), gamma.positions)
    return VerificationReport(valid=ok, witness=None if ok else word[start : start + length])


def minimal_attractor(word: str) -> Attractor:
    """Minimum-cardinality attractor, lexicographically smallest among those.

    Exact search: distinct factors induce position-set constraints (union
    of occurrence intervals), pruned to the inclusion-minimal family, and
    a branch-and-bound hitting set runs per candidate size starting at the
    distinct-letter lower bound.
    """
    ensure_binary(word)
    if not word:
        raise ValueError("the empty word has no attractor")
    masks = _backend.occurrence_masks(word.encode("ascii"))
    positions = _backend.min_hitting_set(masks, len(word), len(set(word)))
    return Attractor(tuple(positions), len(word))


def minimal_size(word: str) -> int:
    return len(minimal_attractor(word).positions)


def mirror(gamma: Attractor) -> Attractor:
    """Positions reflected through the word's midpoint.

    For pseudopalindromic words this maps attractors to attractors.
    """
    return attractor_of((gamma.word_length - 1 - p for p in gamma.positions), gamma.word_length)


def _required_word(chain: PrefixChain, n: int) -> str:
    if not 1 <= n <= len(chain):
        raise ClassMismatchError(f"chain has {len(chain)} steps, step {n} requested")
    return chain.word(n)


def sturmian_attractor(chain: PrefixChain, n: int) -> Attractor:
    """Attractor of w_n for palindromic-closure-only chains.

    For each letter occurring in w_n, take the length of the longest
    palindromic prefix followed by that letter; the resulting set is a
    minimum-size attractor.
    """
    word = _required_word(chain, n)
    if any(step.theta is not ClosureKind.R for step in chain.steps[:n]):
        raise ClassMismatchError("chain is not generated by palindromic closures only")
    positions = set()
    for letter in sorted(set(word)):
        length = longest_pp_prefix_followed_by(word, letter, ClosureKind.R)
        assert length is not None  # every occurring letter follows some palindromic prefix
        positions.add(length)
    return attractor_of(positions, len(word))


class SizeClass(enum.Enum):
    TWO = "two"
    THREE = "three"
    NOT_MINIMAL_EXCEPTION = "not-minimal-exception"


@dataclass(frozen=True)
class MinimalityVerdict:
    """Constructed attractor plus its minimality classification.

    In the exceptional non-minimal case, `size_two_attractor` carries the
    known smaller attractor of the same word.
    """

    gamma: Attractor
    is_minimal: bool | None
    size_class: SizeClass
    size_two_attractor: Attractor | None = None


def pseudostandard_attractor(chain: PrefixChain, n: int) -> MinimalityVerdict:
    """Attractor of w_n for antipalindromic-closure-only chains.

    With e_a the longest antipalindromic-prefix length followed by letter a
    (falling back to the other letter's value when absent), the set
    {e_0, e_1, |w_n| - e_1 - 1} is an attractor. It is minimal except when
    the letter sequence starts first-letter then all-opposite, and it
    collapses to size two exactly when the letter sequence is constant so
    far. Chains starting with 1 are handled by complement symmetry, which
    leaves positions unchanged.
    """
    word = _required_word(chain, n)
    if any(step.theta is not ClosureKind.E for step in chain.steps[:n]):
        raise ClassMismatchError("chain is not generated by antipalindromic closures only")
    deltas = chain.delta_prefix(n)
    if deltas[0] == "1":
        word_v = complement(word)
        deltas = complement(deltas)
    else:
        word_v = word
    e0 = longest_pp_prefix_followed_by(word_v, "0", ClosureKind.E)
    e1 = longest_pp_prefix_followed_by(word_v, "1", ClosureKind.E)
    if e0 is None:
        e0 = e1
    if e1 is None:
        e1 = e0
    assert e0 is not None and e1 is not None  # word_v starts with 0, so e0 exists
    gamma = attractor_of({e0, e1, len(word) - e1 - 1}, len(word))
    starts_constant = deltas == "0" * n
    exceptional = n >= 2 and deltas == "0" + "1" * (n - 1)
    if starts_constant:
        size_class = SizeClass.TWO
    elif exceptional:
        size_class = SizeClass.NOT_MINIMAL_EXCEPTION
    else:
        size_class = SizeClass.THREE
    return MinimalityVerdict(
        gamma=gamma,
        is_minimal=not exceptional,
        size_class=size_class,
        size_two_attractor=Attractor((2, 4), len(word)) if exceptional else None,
    )


def rote_attractor(chain: PrefixChain, n: int) -> Attractor:
    """Size-two attractor of w_n for Rote-valid chains (size one if single-letter).

    Writing a for the letter with w_{n-1}·a a prefix of w_n and p for the
    length of the longest antipalindromic (case 1) or palindromic (case 2)
    prefix of w_n followed by the complement of a:

    1. w_n antipalindrome: {p, |w_{n-1}|};
    2. w_n palindrome, w_{n-1} antipalindrome: {p, |w_{n-1}|};
    3. both palindromes: the case-2 attractor of the earliest chain word
       w_m that starts the current palindromic run, reused for w_n.
    """
    word = _required_word(chain, n)
    if not is_rote_valid_prefix(chain.delta_prefix(n), chain.theta_prefix(n)):
        raise ClassMismatchError("chain prefix is not Rote-valid")
    if len(set(word)) == 1:
        return Attractor((0,), len(word))
    prev = chain.word(n - 1)
    follower = word[len(prev)]
    other = "1" if follower == "0" else "0"
    if is_antipalindrome(word):
        length = longest_pp_prefix_followed_by(word, other, ClosureKind.E)
        if length is None:  # pragma: no cover - impossible on Rote-valid chains
            raise RuntimeError("missing antipalindromic prefix in a Rote-valid chain")
        return attractor_of({length, len(prev)}, len(word))
    if is_antipalindrome(prev):
        length = longest_pp_prefix_followed_by(word, other, ClosureKind.R)
        if length is None:  # pragma: no cover - impossible on Rote-valid chains
            raise RuntimeError("missing palindromic prefix in a Rote-valid chain")
        return attractor_of({length, len(prev)}, len(word))
    # both w_{n-1} and w_n are palindromes: walk back to the run's start
    m = n
    while m >= 2 and is_palindrome(chain.word(m - 1)):
        m -= 1
    if m < 2:  # pragma: no cover - impossible on Rote-valid chains
        raise RuntimeError("palindromic run reaches the chain start")
    inner = rote_attractor(chain, m)
    return Attractor(inner.positions, len(word))
