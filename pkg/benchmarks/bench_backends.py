"""Compare the compiled and pure kernel backends on representative workloads.

Run from the repository root after installing the package:

    python benchmarks/bench_backends.py

Workloads: closure suffix scans while generating a long chain, attractor
verification on a multi-thousand-symbol prefix, the exact minimal-attractor
search on scan-sized words, and a batch of small verifications shaped like
the oracle-equivalence sweep.
"""

from __future__ import annotations

import time

from pseudopal import _pure
from pseudopal import attractor, directive

try:
    from pseudopal import _speedups
except ImportError:  # pragma: no cover
    _speedups = None


def _time(fn, repeat: int = 3) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def _workloads():
    rote = directive.generate(directive.parse("00(1100)", "RR(ERER)"), 24, max_len=300_000)
    long_word = rote.steps[-1].word.encode("ascii")
    mid = next(s.word for s in rote.steps if len(s.word) >= 3000)
    mid_gamma = attractor.rote_attractor(rote, next(s.n for s in rote.steps if len(s.word) >= 3000))
    scan_words = []
    for letters in ("0100101001", "0110011001", "0010010010"):
        chain = directive.generate(directive.parse(letters, "(E)"), 4, max_len=120)
        scan_words.append(chain.steps[-1].word[:60].encode("ascii"))
    small = [format(i, "010b").encode("ascii") for i in range(1 << 10)]
    return long_word, mid.encode("ascii"), tuple(mid_gamma.positions), scan_words, small


def main() -> None:
    long_word, mid_word, mid_gamma, scan_words, small = _workloads()
    masks_per_word = [(w, _pure.occurrence_masks(w)) for w in scan_words]

    cases = [
        (
            f"suffix scans, |w|={len(long_word)} (x20)",
            lambda impl: [impl.pseudopal_suffix_len(long_word, anti) for anti in (False, True) for _ in range(10)],
        ),
        (
            f"verify, |w|={len(mid_word)} (x20)",
            lambda impl: [impl.verify_positions(mid_word, mid_gamma) for _ in range(20)],
        ),
        (
            "minimal attractor search, 3 words of |w|<=60 (x5)",
            lambda impl: [
                impl.min_hitting_set(masks, len(w), 2) for _ in range(5) for w, masks in masks_per_word
            ],
        ),
        (
            "batch verify, all |w|=10 with {0,5} (x1)",
            lambda impl: [impl.verify_positions(w, (0, 5)) for w in small],
        ),
    ]

    print(f"{'workload':<48} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, work in cases:
        pure_t = _time(lambda: work(_pure))
        if _speedups is None:
            print(f"{name:<48} {pure_t * 1e3:>8.1f}ms {'n/a':>10} {'-':>8}")
            continue
        fast_t = _time(lambda: work(_speedups))
        print(f"{name:<48} {pure_t * 1e3:>8.1f}ms {fast_t * 1e3:>8.1f}ms {pure_t / fast_t:>7.1f}x")
    if _speedups is None:
        print("compiled backend not built; only pure timings shown")


if __name__ == "__main__":
    main()
