"""Binary words and their pseudopalindromic structure.

Words are plain ``str`` values over the alphabet {'0', '1'}; positions are
0-based. The module provides the two antimorphisms (reversal and the
reverse-complement exchange), palindromic and antipalindromic closures,
the adjacent-sum derivative, and the extremal pseudopalindromic-prefix
query used by the attractor constructions.
"""

from __future__ import annotations

import enum

from . import _backend

ALPHABET = "01"

_COMPLEMENT = str.maketrans("01", "10")
_LETTERS = frozenset(ALPHABET)


class ClosureKind(enum.Enum):
    """The two pseudopalindromic closure operators."""

    R = "R"  # palindromic
    E = "E"  # antipalindromic

    def __str__(self) -> str:
        return self.value


def ensure_binary(word: str) -> None:
    """Raise ValueError (naming the position) unless `word` is over {0,1}."""
    if set(word) <= _LETTERS:
        return
    for i, ch in enumerate(word):
        if ch not in _LETTERS:
            raise ValueError(f"non-binary symbol {ch!r} at position {i}")


def ensure_letter(letter: str) -> None:
    if letter not in ("0", "1"):
        raise ValueError(f"expected a letter '0' or '1', got {letter!r}")


def complement(word: str) -> str:
    """Letterwise exchange 0 <-> 1."""
    ensure_binary(word)
    return word.translate(_COMPLEMENT)


def reverse(word: str) -> str:
    """Mirror image."""
    return word[::-1]


def exchange(word: str) -> str:
    """Reverse-complement: the composition of reversal and letter exchange."""
    ensure_binary(word)
    return word[::-1].translate(_COMPLEMENT)


def is_palindrome(word: str) -> bool:
    return word == word[::-1]


def is_antipalindrome(word: str) -> bool:
    """True iff the word equals its reverse-complement.

    The empty word qualifies; odd-length binary words never do (the middle
    letter would have to equal its own complement).
    """
    ensure_binary(word)
    return word == word[::-1].translate(_COMPLEMENT)


def is_pseudopalindrome(word: str, kind: ClosureKind) -> bool:
    return is_antipalindrome(word) if kind is ClosureKind.E else is_palindrome(word)


def palindromic_closure(word: str) -> str:
    """Shortest palindrome having `word` as a prefix.

    Equals v·x·reverse(v), where x is the longest palindromic suffix of
    `word` and word = v·x.
    """
    ensure_binary(word)
    keep = len(word) - _backend.pseudopal_suffix_len(word.encode("ascii"), False)
    return word + word[:keep][::-1]


def antipalindromic_closure(word: str) -> str:
    """Shortest antipalindrome having `word` as a prefix.

    Equals v·y·exchange(v), where y is the longest (possibly empty)
    antipalindromic suffix of `word` and word = v·y.
    """
    ensure_binary(word)
    keep = len(word) - _backend.pseudopal_suffix_len(word.encode("ascii"), True)
    return word + word[:keep][::-1].translate(_COMPLEMENT)


def closure(word: str, kind: ClosureKind) -> str:
    return antipalindromic_closure(word) if kind is ClosureKind.E else palindromic_closure(word)


def s_derivative(word: str) -> str:
    """Adjacent-sum word: result_i = (word_i + word_{i+1}) mod 2.

    One letter shorter than the input; the empty word is rejected.
    """
    ensure_binary(word)
    if not word:
        raise ValueError("s_derivative is undefined for the empty word")
    return "".join("0" if a == b else "1" for a, b in zip(word, word[1:]))


def pseudopalindromic_prefix_lengths(word: str, kind: ClosureKind) -> list[int]:
    """All prefix lengths of `word` that are pseudopalindromes of `kind`, longest first."""
    ensure_binary(word)
    return _backend.pseudopal_prefix_lengths(word.encode("ascii"), kind is ClosureKind.E)


def longest_pp_prefix_followed_by(word: str, letter: str, kind: ClosureKind) -> int | None:
    """Largest |p| with p a pseudopalindromic prefix of `kind` and p·letter a prefix of `word`.

    Returns None when no such prefix exists; even the empty prefix fails
    when `word` does not start with `letter`.
    """
    ensure_binary(word)
    ensure_letter(letter)
    n = len(word)
    for length in pseudopalindromic_prefix_lengths(word, kind):
        if length < n and word[length] == letter:
            return length
    return None
