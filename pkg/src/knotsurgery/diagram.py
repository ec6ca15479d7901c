"""Planar diagrams for the Levine knots.

Layout.  Start from an unknot J drawn as the boundary of a band wound d
times around a horizontal axis, like a screw thread.  Seen from the
front, the band crosses the middle level 2d times; at each crossing one
edge (the inner one) lies near the axis.  A round circle around the axis
in the middle plane encloses exactly those 2d inner passages, d going up
and d going down.  Twisting J once along that circle is the central box.

Cutting along the disk bounded by J, the circle climbs d sheets and comes
back.  The arm of band section g (section g runs over the g-th hump of the
thread) sits one sheet above the arm of section g-1.  A box of c_k full
twists around the arms of sections 0..k-1 therefore links a lift of the
circle with its k-th translate c_k times, which yields the c_k(t^k + t^-k)
term and nothing else.

The box for c_k is a full twist of a 2k-strand bundle, so the diagram has
O(d^2 + sum_k k^2 |c_k|) crossings.
"""

from __future__ import annotations

from typing import Sequence

from .foxcalc import DiagramCode
from .tangle import SliceDiagram


def full_twist(sd: SliceDiagram, lo: int, n: int, sign: int) -> None:
    """One full twist of the ``n`` strands starting at position ``lo``."""
    over = "/" if sign > 0 else "\\"
    for _ in range(n):
        for i in range(lo, lo + n - 1):
            sd.cross(i, over)


def bundle_twist(sd: SliceDiagram, selected: Sequence[int], turns: int) -> None:
    """``turns`` full twists of the strands at ``selected``; the others pass over the box."""
    if not turns:
        return
    selected = sorted(selected)
    order = list(range(len(sd.ends)))
    moves = []
    base = selected[0]
    for k, label in enumerate(selected):
        cur = order.index(label)
        while cur > base + k:
            sd.cross(cur - 1, "/")
            moves.append(cur - 1)
            order[cur - 1], order[cur] = order[cur], order[cur - 1]
            cur -= 1
    for _ in range(abs(turns)):
        full_twist(sd, base, len(selected), turns)
    for i in reversed(moves):
        sd.cross(i, "\\")


def levine_diagram(c: Sequence[int], central: int = -1) -> DiagramCode:
    d = len(c)
    m = 2 * d  # passages through the middle level
    sd = SliceDiagram()

    # Minima.  The thread dips between back passage j (odd) and front
    # passage j+1; both ends of the band hang below the first and last
    # passages.  Outer edges enclose inner edges.
    sd.cup(0)
    pos = 2
    for _ in range(1, m - 1, 2):
        sd.cup(pos)
        sd.cup(pos + 1)
        pos += 4
    sd.cup(pos)
    # back passages: the inner edge is in front where the edges cross
    for j in range(1, m, 2):
        sd.cross(2 * j, "\\")

    # Middle level reads i0 o0 i1 o1 ...  Outer edges of front passages go
    # over the central box, those of back passages go under it.
    for j in range(m - 2, -1, -1):
        cur = 2 * j + 1
        for _ in range(m - 1 - j):
            sd.cross(cur, "/" if j % 2 == 0 else "\\")
            cur += 1
    full_twist(sd, 0, m, central)
    for j in range(m - 1):
        cur = m + j
        for _ in range(m - 1 - j):
            sd.cross(cur - 1, "\\" if j % 2 == 0 else "/")
            cur -= 1

    # front passages: the outer edge is in front
    for j in range(0, m, 2):
        sd.cross(2 * j, "\\")

    # Top level: hump g reads o_2g i_2g i_2g+1 o_2g+1.  Box k wraps the left
    # arms of humps 0..k-1.
    for k, ck in enumerate(c, start=1):
        arms = [p for g in range(k) for p in (4 * g, 4 * g + 1)]
        bundle_twist(sd, arms, ck)

    for j in range(m - 2, -1, -2):
        sd.cap(2 * j + 1)
        sd.cap(2 * j)
    return sd.code()
