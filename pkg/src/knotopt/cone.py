"""Euclidean projection onto the monotone nonnegative cone.

The cone is M^n = {y : 0 <= y_1 <= ... <= y_n}.  The projection of v is the
unique minimiser of ||v - y||^2 over M^n and is computed in two exact steps:

1. pool-adjacent-violators (PAVA) isotonic regression, which yields the
   projection onto the larger cone {y_1 <= ... <= y_n}; violating adjacent
   blocks are merged left to right in a single stack pass, each merged block
   taking the mean of the inputs it covers, and
2. clamping negative block values to zero, which resolves the nonnegativity
   constraint because it can only bind on a prefix of the pooled blocks.

Both steps preserve monotonicity exactly (block members share one float), so
the output satisfies the cone constraints with no tolerance, and projecting
an already-feasible vector returns it unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ConeProjection:
    """Projection result with the pooled block structure for diagnostics."""

    input: np.ndarray
    output: np.ndarray
    blocks: list[tuple[int, int, float]]  # (start, stop, common value)


def project(v: np.ndarray) -> np.ndarray:
    """Project v onto {y : 0 <= y_1 <= ... <= y_n}.

    O(n) amortised: each element is pushed onto the block stack once and
    every merge removes a block.  Rejects empty or non-finite input.
    """
    v = np.asarray(v, dtype=float)
    if v.ndim != 1 or v.size == 0:
        raise ValueError("input must be a nonempty 1-d vector")
    if not np.all(np.isfinite(v)):
        raise ValueError("input must be finite")

    # stack of blocks as (total, count); invariant: nondecreasing means.
    # only strict violations are pooled: merging tied blocks would change
    # nothing mathematically but recomputing their mean can drift one ulp,
    # which would break exact idempotence
    sums = np.empty(v.size)
    counts = np.empty(v.size, dtype=np.intp)
    top = -1
    for x in v:
        top += 1
        sums[top] = x
        counts[top] = 1
        while top > 0 and sums[top - 1] * counts[top] > sums[top] * counts[top - 1]:
            sums[top - 1] += sums[top]
            counts[top - 1] += counts[top]
            top -= 1

    out = np.empty(v.size)
    pos = 0
    for i in range(top + 1):
        value = max(sums[i] / counts[i], 0.0)
        out[pos:pos + counts[i]] = value
        pos += counts[i]
    return out


def project_blocks(v: np.ndarray) -> ConeProjection:
    """Like ``project`` but also reports the pooled index ranges."""
    v = np.asarray(v, dtype=float)
    out = project(v)
    blocks = []
    start = 0
    for i in range(1, out.size + 1):
        if i == out.size or out[i] != out[start]:
            blocks.append((start, i, float(out[start])))
            start = i
    return ConeProjection(input=v.copy(), output=out, blocks=blocks)
