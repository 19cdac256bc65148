"""Kernel backend selection.

The compiled extension `_speedups` is preferred when importable; setting
the environment variable PSEUDOPAL_PURE (to anything non-empty) forces the
pure-Python kernels. The compiled hitting-set kernel packs positions into
a 64-bit word, so longer words always route to the pure implementation.
"""

from __future__ import annotations

import os
from typing import Sequence

from . import _pure

if os.environ.get("PSEUDOPAL_PURE"):
    _impl = _pure
    HAVE_SPEEDUPS = False
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]

        HAVE_SPEEDUPS = True
    except ImportError:  # pragma: no cover - depends on build environment
        _impl = _pure
        HAVE_SPEEDUPS = False


def backend_name() -> str:
    return "compiled" if HAVE_SPEEDUPS else "pure"


def pseudopal_suffix_len(word: bytes, anti: bool) -> int:
    return _impl.pseudopal_suffix_len(word, anti)


def pseudopal_prefix_lengths(word: bytes, anti: bool) -> list[int]:
    return _impl.pseudopal_prefix_lengths(word, anti)


def verify_positions(word: bytes, positions: Sequence[int]) -> tuple[bool, int, int]:
    return _impl.verify_positions(word, positions)


def min_hitting_set(masks: Sequence[int], length: int, lower_bound: int) -> list[int]:
    if HAVE_SPEEDUPS and length <= 64:
        return _impl.min_hitting_set(list(masks), length, lower_bound)
    return _pure.min_hitting_set(masks, length, lower_bound)


occurrence_masks = _pure.occurrence_masks
