"""Exhaustive ground-truth solver, feasible only for short first inputs."""

from __future__ import annotations

from itertools import combinations

from .core import EMPTY_RESULT, CpsResult, InputTooLarge, embed_greedy

MAX_ORACLE_LEN = 20


def brute_force_lcps(x: bytes, y: bytes) -> CpsResult:
    """Longest common palindromic subsequence by trying every position subset of x.

    Any common subsequence is induced by some subset of x's positions, so
    enumerating one side suffices. Subsets are visited in decreasing size,
    which makes the first palindromic subset that also embeds into y maximal.
    The y embedding is the leftmost (greedy) one.
    """
    if len(x) > MAX_ORACLE_LEN:
        raise InputTooLarge(
            f"exhaustive search accepts at most {MAX_ORACLE_LEN} characters, got {len(x)}"
        )
    for size in range(min(len(x), len(y)), 0, -1):
        for subset in combinations(range(len(x)), size):
            z = bytes(x[p] for p in subset)
            if z != z[::-1]:
                continue
            y_emb = embed_greedy(z, y)
            if y_emb is not None:
                return CpsResult(size, z, tuple(p + 1 for p in subset), y_emb)
    return EMPTY_RESULT
