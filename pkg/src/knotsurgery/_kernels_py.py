"""Pure-Python counting and enumeration kernels.

Reference implementation of the compiled ``_kernels`` extension, used when
the extension is not built.  Both modules expose the same functions with
the same results.

The slice is the set of tuples c in (Z \\ 0)^d with sum c = d and
sum |c| <= m, listed in lexicographic order.
"""

from __future__ import annotations

import numpy as np


def min_abs_sum(k: int, target: int) -> int:
    """Smallest sum |v_i| over k nonzero integers v_i adding up to ``target``."""
    t = abs(target)
    if t >= k:
        return t
    return k + (k - t) % 2


def _walk(d: int, m: int):
    c = [0] * d

    def rec(i: int, budget: int, s: int):
        if i == d - 1:
            last = d - s
            if last != 0 and abs(last) <= budget:
                c[i] = last
                yield c
            return
        rest = d - 1 - i
        lim = budget - rest
        for v in range(-lim, lim + 1):
            if v == 0:
                continue
            b2 = budget - abs(v)
            if min_abs_sum(rest, d - s - v) <= b2:
                c[i] = v
                yield from rec(i + 1, b2, s + v)

    if d >= 1 and m >= 0:
        yield from rec(0, m, 0)


def count_slice(d: int, m: int) -> int:
    return sum(1 for _ in _walk(d, m))


def enumerate_slice(d: int, m: int) -> np.ndarray:
    rows = [tuple(c) for c in _walk(d, m)]
    out = np.array(rows, dtype=np.int32)
    return out.reshape(len(rows), d)


def count_compositions(m: int, p: int) -> int:
    """Positive compositions of m into p parts, by exhaustive search."""

    def rec(left: int, parts: int) -> int:
        if parts == 1:
            return 1 if left >= 1 else 0
        return sum(rec(left - a, parts - 1) for a in range(1, left - parts + 2))

    if p < 1 or m < p:
        return 0
    return rec(m, p)
