"""Pure-Python cover kernels.

Masks are bitsets over the distractors still to be excluded: bit ``i`` of
``masks[j]`` is set when property ``j`` rules out distractor ``i``.
Property indices follow the caller's (lexicographic) property order, so
lowest index wins every tie.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence


def min_cover(masks: Sequence[int], target: int) -> tuple[int, ...] | None:
    """Lexicographically first smallest index set whose masks cover ``target``."""
    if not target:
        return ()
    union = 0
    for m in masks:
        union |= m
    if union & target != target:
        return None
    for k in range(1, len(masks) + 1):
        for combo in combinations(range(len(masks)), k):
            acc = 0
            for i in combo:
                acc |= masks[i]
            if acc & target == target:
                return combo
    return None  # unreachable: the full set covers


def greedy_cover(masks: Sequence[int], target: int) -> tuple[int, ...] | None:
    """Repeatedly take the unused index covering most of what is left."""
    remaining = target
    used = [False] * len(masks)
    chosen = []
    while remaining:
        best, best_count = -1, 0
        for i, m in enumerate(masks):
            if used[i]:
                continue
            c = (m & remaining).bit_count()
            if c > best_count:
                best, best_count = i, c
        if best < 0:
            return None
        used[best] = True
        chosen.append(best)
        remaining &= ~masks[best]
    return tuple(chosen)
