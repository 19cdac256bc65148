"""Naive reference implementations, kept deliberately independent of the
package internals: factor tables by double loop, attractor checks by
set intersection, minimal attractors by subset enumeration, closures by
extension enumeration."""

from itertools import combinations, product


def occurrence_sets(word):
    """Every distinct factor mapped to the list of its occurrence index sets."""
    table = {}
    for i in range(len(word)):
        for j in range(i + 1, len(word) + 1):
            table.setdefault(word[i:j], []).append(set(range(i, j)))
    return table


def naive_is_attractor(positions, word):
    positions = set(positions)
    return all(any(positions & occ for occ in occs) for occs in occurrence_sets(word).values())


def naive_witness(positions, word):
    """Shortest factor with no occurrence meeting positions; lexicographic ties."""
    positions = set(positions)
    failing = [
        factor
        for factor, occs in occurrence_sets(word).items()
        if not any(positions & occ for occ in occs)
    ]
    if not failing:
        return None
    return min(failing, key=lambda f: (len(f), f))


def naive_minimal_attractor(word):
    """Lexicographically smallest minimum-size attractor by full enumeration."""
    table = occurrence_sets(word)
    for size in range(1, len(word) + 1):
        for candidate in combinations(range(len(word)), size):
            chosen = set(candidate)
            if all(any(chosen & occ for occ in occs) for occs in table.values()):
                return list(candidate)
    raise AssertionError("every word of positions has itself as attractor")


def naive_complement(word):
    return "".join("1" if ch == "0" else "0" for ch in word)


def naive_is_palindrome(word):
    return word == word[::-1]


def naive_is_antipalindrome(word):
    return word == naive_complement(word[::-1])


def naive_closure(word, anti):
    """Shortest pseudopalindrome with `word` as prefix, by trying every extension."""
    check = naive_is_antipalindrome if anti else naive_is_palindrome
    length = len(word)
    while True:
        for tail in product("01", repeat=length - len(word)):
            candidate = word + "".join(tail)
            if check(candidate):
                return candidate
        length += 1


def naive_longest_pp_prefix_followed_by(word, letter, anti):
    check = naive_is_antipalindrome if anti else naive_is_palindrome
    for length in range(len(word) - 1, -1, -1):
        if word[length] == letter and check(word[:length]):
            return length
    return None


def naive_pp_prefix_lengths(word, anti):
    check = naive_is_antipalindrome if anti else naive_is_palindrome
    return [length for length in range(len(word), -1, -1) if check(word[:length])]
