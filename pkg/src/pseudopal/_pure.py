"""Pure-Python kernels.

Three groups of primitives live here, mirrored one-to-one by the compiled
module `_speedups`:

* KMP scans for the longest palindromic/antipalindromic suffix and for the
  set of all palindromic/antipalindromic prefix lengths;
* attractor verification over a suffix automaton (per distinct factor, the
  occurrence structure is the automaton's end-position sets);
* an exact branch-and-bound minimum hitting set over position bitmasks,
  used by the minimal-attractor search.

`occurrence_masks` has no compiled twin; building the constraint masks is
cheap next to the search itself.
"""

from __future__ import annotations

from typing import Sequence

_COMPLEMENT = bytes.maketrans(b"01", b"10")


def _kmp_table(pattern: bytes) -> list[int]:
    table = [0] * len(pattern)
    k = 0
    for i in range(1, len(pattern)):
        c = pattern[i]
        while k and pattern[k] != c:
            k = table[k - 1]
        if pattern[k] == c:
            k += 1
        table[i] = k
    return table


def _longest_prefix_suffix(pattern: bytes, text: bytes) -> int:
    """Length of the longest prefix of `pattern` that is a suffix of `text`."""
    m = len(pattern)
    if m == 0 or not text:
        return 0
    table = _kmp_table(pattern)
    k = 0
    for c in text:
        while k and (k == m or pattern[k] != c):
            k = table[k - 1]
        if k < m and pattern[k] == c:
            k += 1
    return k


def _mirror_image(word: bytes, anti: bool) -> bytes:
    out = word[::-1]
    return out.translate(_COMPLEMENT) if anti else out


def pseudopal_suffix_len(word: bytes, anti: bool) -> int:
    """Length of the longest palindromic (antipalindromic if `anti`) suffix.

    A suffix of length L is a pseudopalindrome exactly when it equals the
    length-L prefix of the reversed (and complemented, for `anti`) word,
    which is a plain string-matching question.
    """
    return _longest_prefix_suffix(_mirror_image(word, anti), word)


def pseudopal_prefix_lengths(word: bytes, anti: bool) -> list[int]:
    """All L such that word[:L] is a palindrome (antipalindrome), longest first.

    These are the borders between `word` and its mirror image; the KMP
    failure chain enumerates them in one pass. 0 is always included.
    """
    n = len(word)
    if n == 0:
        return [0]
    table = _kmp_table(word)
    k = _longest_prefix_suffix(word, _mirror_image(word, anti))
    out = []
    while k:
        out.append(k)
        k = table[k - 1]
    out.append(0)
    return out


class _Sam:
    """Suffix automaton over {0,1} with flat transition arrays.

    `primary[j]` is the state whose end-position set gains j when the j-th
    symbol is added; `fpos[s]` is one end position of state s, usable to
    materialise any factor the state represents.
    """

    __slots__ = ("maxlen", "link", "t0", "t1", "fpos", "primary")

    def __init__(self, word: bytes):
        self.maxlen = [0]
        self.link = [-1]
        self.t0 = [-1]
        self.t1 = [-1]
        self.fpos = [-1]
        self.primary = [0] * len(word)
        maxlen, link, t0, t1, fpos = self.maxlen, self.link, self.t0, self.t1, self.fpos
        last = 0
        for j, byte in enumerate(word):
            t = t1 if byte & 1 else t0
            cur = len(maxlen)
            maxlen.append(maxlen[last] + 1)
            link.append(-1)
            t0.append(-1)
            t1.append(-1)
            fpos.append(j)
            self.primary[j] = cur
            p = last
            while p != -1 and t[p] == -1:
                t[p] = cur
                p = link[p]
            if p == -1:
                link[cur] = 0
            else:
                q = t[p]
                if maxlen[p] + 1 == maxlen[q]:
                    link[cur] = q
                else:
                    clone = len(maxlen)
                    maxlen.append(maxlen[p] + 1)
                    link.append(link[q])
                    t0.append(t0[q])
                    t1.append(t1[q])
                    fpos.append(fpos[q])
                    while p != -1 and t[p] == q:
                        t[p] = clone
                        p = link[p]
                    link[q] = clone
                    link[cur] = clone
            last = cur

    def states_longest_first(self) -> list[int]:
        # counting sort by maxlen; root excluded
        buckets: list[list[int]] = [[] for _ in range(max(self.maxlen) + 1)]
        for s in range(1, len(self.maxlen)):
            buckets[self.maxlen[s]].append(s)
        order = []
        for b in reversed(buckets):
            order.extend(b)
        return order


def verify_positions(word: bytes, positions: Sequence[int]) -> tuple[bool, int, int]:
    """Check whether `positions` is a string attractor of `word`.

    Returns (True, -1, -1) on success, otherwise (False, start, length) of
    the shortest failing factor, lexicographically smallest among ties.
    """
    n = len(word)
    if n == 0:
        raise ValueError("the empty word has no attractor")
    big = n + 1
    # d[j]: distance from end position j back to the nearest attractor
    # position <= j; a factor of length L ending at j crosses the attractor
    # iff L > d[j].
    d = [big] * n
    prev = -1
    idx = 0
    for j in range(n):
        while idx < len(positions) and positions[idx] <= j:
            prev = positions[idx]
            idx += 1
        if prev >= 0:
            d[j] = j - prev
    sam = _Sam(word)
    mind = [big] * len(sam.maxlen)
    for j, s in enumerate(sam.primary):
        if d[j] < mind[s]:
            mind[s] = d[j]
    order = sam.states_longest_first()
    link = sam.link
    for s in order:
        parent = link[s]
        if mind[s] < mind[parent]:
            mind[parent] = mind[s]
    best_len = -1
    best_start = -1
    for s in order:
        base = sam.maxlen[link[s]]
        if mind[s] > base:
            length = base + 1  # shortest factor represented by this state
            start = sam.fpos[s] - length + 1
            if (
                best_len == -1
                or length < best_len
                or (length == best_len and word[start : start + length] < word[best_start : best_start + length])
            ):
                best_len = length
                best_start = start
    if best_len == -1:
        return True, -1, -1
    return False, best_start, best_len


def _smear_left(mask: int, dist: int) -> int:
    """OR of mask >> t for t = 0..dist (interval growth toward lower bits)."""
    covered = 1
    while covered <= dist:
        step = min(covered, dist + 1 - covered)
        mask |= mask >> step
        covered += step
    return mask


def occurrence_masks(word: bytes) -> list[int]:
    """Inclusion-minimal constraint masks for the attractor property.

    One constraint per distinct factor: the set of positions covered by at
    least one of its occurrences. A position set is an attractor iff it
    intersects every constraint. Per automaton state only the shortest
    factor is kept (longer factors with the same end positions cover a
    superset), and dominated masks are dropped.
    """
    sam = _Sam(word)
    endpos = [0] * len(sam.maxlen)
    for j, s in enumerate(sam.primary):
        endpos[s] |= 1 << j
    order = sam.states_longest_first()
    for s in order:
        endpos[sam.link[s]] |= endpos[s]
    raw = set()
    for s in order:
        shortest = sam.maxlen[sam.link[s]] + 1
        raw.add(_smear_left(endpos[s], shortest - 1))
    kept: list[int] = []
    for m in sorted(raw, key=int.bit_count):
        if not any(m & k == k for k in kept):
            kept.append(m)
    return kept


def _hitting_set_exists(masks: list[int], k: int, allowed: int) -> bool:
    if not masks:
        return True
    if k <= 0:
        return False
    union = 0
    needed = 0
    best = 0
    best_count = 1 << 30
    for m in masks:
        c = m & allowed
        if c == 0:
            return False
        count = c.bit_count()
        if count < best_count:
            best_count = count
            best = c
        if not c & union:
            needed += 1
            if needed > k:
                return False
            union |= c
    c = best
    while c:
        bit = c & -c
        rest = [m for m in masks if not m & bit]
        if _hitting_set_exists(rest, k - 1, allowed & ~bit):
            return True
        c ^= bit
    return False


def min_hitting_set(masks: Sequence[int], length: int, lower_bound: int) -> list[int]:
    """Lexicographically smallest minimum-cardinality hitting set.

    `masks` are nonzero bitmasks over positions 0..length-1. The size is
    settled first (branch-and-bound decision per candidate size), then the
    positions are fixed greedily left to right.
    """
    pending = list(masks)
    if not pending:
        return []
    full = (1 << length) - 1
    k = min(max(lower_bound, 1), length)
    while k < length and not _hitting_set_exists(pending, k, full):
        k += 1
    chosen: list[int] = []
    lo = 0
    for remaining in range(k, 0, -1):
        for p in range(lo, length):
            bit = 1 << p
            rest = [m for m in pending if not m & bit]
            allowed = full & ~((bit << 1) - 1)
            if _hitting_set_exists(rest, remaining - 1, allowed):
                chosen.append(p)
                pending = rest
                lo = p + 1
                break
        else:  # pragma: no cover - the size-k decision guarantees a branch
            raise AssertionError("hitting set extension vanished")
    return chosen
