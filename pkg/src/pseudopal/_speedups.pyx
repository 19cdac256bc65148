# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled twins of the `_pure` kernels.

Same contracts as `_pure`: KMP pseudopalindrome scans, suffix-automaton
attractor verification, and the exact minimum hitting set. The hitting-set
kernel packs position sets into 64-bit words, so it only accepts words of
length at most 64; the backend dispatcher falls back to `_pure` beyond
that.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcmp

ctypedef long long i64
ctypedef unsigned long long u64

cdef extern from *:
    """
    static inline int pp_popcountll(unsigned long long x) {
        return __builtin_popcountll(x);
    }
    """
    int pp_popcountll(u64 x) nogil


cdef i64 *_alloc(Py_ssize_t count) except NULL:
    cdef i64 *ptr = <i64 *> malloc(count * sizeof(i64))
    if ptr == NULL:
        raise MemoryError()
    return ptr


cdef Py_ssize_t _longest_prefix_suffix(const unsigned char *pat, Py_ssize_t m,
                                       const unsigned char *txt, Py_ssize_t n,
                                       i64 *table) nogil:
    """Longest prefix of pat that is a suffix of txt; table is scratch of size m."""
    cdef Py_ssize_t k = 0, i
    if m == 0 or n == 0:
        return 0
    table[0] = 0
    for i in range(1, m):
        while k > 0 and pat[k] != pat[i]:
            k = table[k - 1]
        if pat[k] == pat[i]:
            k += 1
        table[i] = k
    k = 0
    for i in range(n):
        while k > 0 and (k == m or pat[k] != txt[i]):
            k = table[k - 1]
        if k < m and pat[k] == txt[i]:
            k += 1
    return k


cdef bytes _mirror_image(bytes word, bint anti):
    out = word[::-1]
    if anti:
        out = out.translate(bytes.maketrans(b"01", b"10"))
    return out


def pseudopal_suffix_len(bytes word, bint anti):
    """Length of the longest palindromic (antipalindromic if `anti`) suffix."""
    cdef bytes pat_obj = _mirror_image(word, anti)
    cdef const unsigned char *pat = pat_obj
    cdef const unsigned char *txt = word
    cdef Py_ssize_t n = len(word)
    if n == 0:
        return 0
    cdef i64 *table = _alloc(n)
    cdef Py_ssize_t k
    try:
        k = _longest_prefix_suffix(pat, n, txt, n, table)
    finally:
        free(table)
    return k


def pseudopal_prefix_lengths(bytes word, bint anti):
    """All L such that word[:L] is a palindrome (antipalindrome), longest first."""
    cdef bytes txt_obj = _mirror_image(word, anti)
    cdef const unsigned char *pat = word
    cdef const unsigned char *txt = txt_obj
    cdef Py_ssize_t n = len(word)
    if n == 0:
        return [0]
    cdef i64 *table = _alloc(n)
    cdef Py_ssize_t k
    out = []
    try:
        k = _longest_prefix_suffix(pat, n, txt, n, table)
        while k:
            out.append(k)
            k = table[k - 1]
    finally:
        free(table)
    out.append(0)
    return out


def verify_positions(bytes word, positions):
    """Attractor check; (True, -1, -1) or (False, start, len) of the witness."""
    cdef Py_ssize_t n = len(word)
    if n == 0:
        raise ValueError("the empty word has no attractor")
    cdef const unsigned char *w = word
    cdef i64 big = n + 1
    cdef Py_ssize_t cap = 2 * n + 4
    # layout: d | maxlen | link | t0 | t1 | fpos | primary | mind | cnt/order
    cdef i64 *d = _alloc(n)
    cdef i64 *maxlen = _alloc(cap)
    cdef i64 *link = _alloc(cap)
    cdef i64 *t0 = _alloc(cap)
    cdef i64 *t1 = _alloc(cap)
    cdef i64 *fpos = _alloc(cap)
    cdef i64 *primary = _alloc(n)
    cdef i64 *mind = _alloc(cap)
    cdef i64 *cnt = _alloc(n + 2)
    cdef i64 *order = _alloc(cap)
    cdef Py_ssize_t size, last, cur, clone, j, s, idx, parent
    cdef i64 prev, p, q, base, length, start, best_len, best_start
    cdef int c
    try:
        prev = -1
        idx = 0
        plist = list(positions)
        for j in range(n):
            while idx < len(plist) and <i64> plist[idx] <= j:
                prev = plist[idx]
                idx += 1
            d[j] = j - prev if prev >= 0 else big

        # suffix automaton
        maxlen[0] = 0
        link[0] = -1
        t0[0] = -1
        t1[0] = -1
        fpos[0] = -1
        size = 1
        last = 0
        for j in range(n):
            c = w[j] & 1
            cur = size
            size += 1
            maxlen[cur] = maxlen[last] + 1
            link[cur] = -1
            t0[cur] = -1
            t1[cur] = -1
            fpos[cur] = j
            primary[j] = cur
            p = last
            if c:
                while p != -1 and t1[p] == -1:
                    t1[p] = cur
                    p = link[p]
            else:
                while p != -1 and t0[p] == -1:
                    t0[p] = cur
                    p = link[p]
            if p == -1:
                link[cur] = 0
            else:
                q = t1[p] if c else t0[p]
                if maxlen[p] + 1 == maxlen[q]:
                    link[cur] = q
                else:
                    clone = size
                    size += 1
                    maxlen[clone] = maxlen[p] + 1
                    link[clone] = link[q]
                    t0[clone] = t0[q]
                    t1[clone] = t1[q]
                    fpos[clone] = fpos[q]
                    if c:
                        while p != -1 and t1[p] == q:
                            t1[p] = clone
                            p = link[p]
                    else:
                        while p != -1 and t0[p] == q:
                            t0[p] = clone
                            p = link[p]
                    link[q] = clone
                    link[cur] = clone
            last = cur

        # states in decreasing maxlen order, root excluded (counting sort)
        for j in range(n + 2):
            cnt[j] = 0
        for s in range(1, size):
            cnt[maxlen[s]] += 1
        for j in range(n, 0, -1):
            cnt[j - 1] += cnt[j]
        for s in range(1, size):
            cnt[maxlen[s]] -= 1
            order[cnt[maxlen[s]]] = s

        for s in range(size):
            mind[s] = big
        for j in range(n):
            s = primary[j]
            if d[j] < mind[s]:
                mind[s] = d[j]
        for j in range(size - 1):
            s = order[j]
            parent = link[s]
            if mind[s] < mind[parent]:
                mind[parent] = mind[s]

        best_len = -1
        best_start = -1
        for s in range(1, size):
            base = maxlen[link[s]]
            if mind[s] > base:
                length = base + 1
                start = fpos[s] - length + 1
                if best_len == -1 or length < best_len or (
                    length == best_len
                    and memcmp(w + start, w + best_start, length) < 0
                ):
                    best_len = length
                    best_start = start
    finally:
        free(d)
        free(maxlen)
        free(link)
        free(t0)
        free(t1)
        free(fpos)
        free(primary)
        free(mind)
        free(cnt)
        free(order)
    if best_len == -1:
        return True, -1, -1
    return False, <int> best_start, <int> best_len


cdef bint _hs_exists(u64 *masks, Py_ssize_t m, int k, u64 allowed, u64 *buf,
                     Py_ssize_t stride) nogil:
    cdef u64 union_ = 0, c, best = 0, bit
    cdef Py_ssize_t i, j
    cdef int needed = 0, count, best_count = 1 << 30
    if m == 0:
        return True
    if k <= 0:
        return False
    for i in range(m):
        c = masks[i] & allowed
        if c == 0:
            return False
        count = pp_popcountll(c)
        if count < best_count:
            best_count = count
            best = c
        if (c & union_) == 0:
            needed += 1
            if needed > k:
                return False
            union_ |= c
    c = best
    while c:
        bit = c & (~c + 1)
        j = 0
        for i in range(m):
            if (masks[i] & bit) == 0:
                buf[j] = masks[i]
                j += 1
        if _hs_exists(buf, j, k - 1, allowed & ~bit, buf + stride, stride):
            return True
        c ^= bit
    return False


def min_hitting_set(masks, int length, int lower_bound):
    """Lexicographically smallest minimum hitting set (length <= 64 only)."""
    cdef Py_ssize_t m = len(masks)
    if length > 64:
        raise ValueError("compiled hitting-set kernel handles at most 64 positions")
    if m == 0:
        return []
    cdef u64 full
    if length == 64:
        full = <u64> 0 - 1
    else:
        full = ((<u64> 1) << length) - 1
    cdef Py_ssize_t stride = m
    cdef u64 *pending = <u64 *> malloc(m * sizeof(u64))
    # DFS filter buffers: one stride per recursion level (depth <= length+1)
    cdef u64 *buf = <u64 *> malloc(stride * (length + 2) * sizeof(u64))
    cdef u64 *rest = <u64 *> malloc(m * sizeof(u64))
    if pending == NULL or buf == NULL or rest == NULL:
        free(pending)
        free(buf)
        free(rest)
        raise MemoryError()
    cdef Py_ssize_t i, j, pend_n = m
    cdef int k, remaining, p, lo
    cdef u64 bit, allowed
    chosen = []
    try:
        for i in range(m):
            pending[i] = <u64> masks[i]
        k = lower_bound if lower_bound > 1 else 1
        if k > length:
            k = length
        while k < length and not _hs_exists(pending, pend_n, k, full, buf, stride):
            k += 1
        lo = 0
        for remaining in range(k, 0, -1):
            for p in range(lo, length):
                bit = (<u64> 1) << p
                j = 0
                for i in range(pend_n):
                    if (pending[i] & bit) == 0:
                        rest[j] = pending[i]
                        j += 1
                allowed = full & ~(((bit << 1) if p < 63 else <u64> 0) - 1)
                if _hs_exists(rest, j, remaining - 1, allowed, buf, stride):
                    chosen.append(p)
                    for i in range(j):
                        pending[i] = rest[i]
                    pend_n = j
                    lo = p + 1
                    break
            else:
                raise AssertionError("hitting set extension vanished")
    finally:
        free(pending)
        free(buf)
        free(rest)
    return chosen
