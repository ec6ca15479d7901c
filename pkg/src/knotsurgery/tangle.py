"""Build knot diagram codes from a bottom-to-top sequence of slices.

A diagram is drawn as a stack of horizontal slices over a row of open
strand ends.  Three moves are available:

``cup(i)``
    a local minimum creating two new ends at positions ``i, i+1``;
``cross(i, over)``
    ends ``i`` and ``i+1`` swap; ``over`` is ``"/"`` when the strand
    moving from position ``i`` to ``i+1`` passes over, ``"\\"`` otherwise;
``cap(i)``
    a local maximum joining ends ``i`` and ``i+1``.

:meth:`SliceDiagram.code` orients the closed curve, splits it into
Wirtinger arcs and returns a :class:`~knotsurgery.foxcalc.DiagramCode`.
"""

from __future__ import annotations

from .errors import MalformedDiagramError
from .foxcalc import UNKNOT, Crossing, DiagramCode

# crossing slots; counterclockwise order around the crossing point
BR, TR, TL, BL = 0, 1, 2, 3
_OPPOSITE = {BL: TR, TR: BL, BR: TL, TL: BR}


class SliceDiagram:
    def __init__(self):
        self.ends: list[int] = []  # open end tokens, left to right
        self._parent: list[int] = []  # union-find over tokens
        self._port: dict[int, tuple[int, int]] = {}  # token -> (crossing, slot)
        self.over: list[str] = []  # per crossing: "/" or "\\"

    # -- union-find ---------------------------------------------------

    def _new(self) -> int:
        self._parent.append(len(self._parent))
        return len(self._parent) - 1

    def _find(self, x: int) -> int:
        while self._parent[x] != x:
            self._parent[x] = self._parent[self._parent[x]]
            x = self._parent[x]
        return x

    def _join(self, x: int, y: int) -> None:
        self._parent[self._find(x)] = self._find(y)

    # -- moves --------------------------------------------------------

    def cup(self, i: int) -> "SliceDiagram":
        if not 0 <= i <= len(self.ends):
            raise IndexError(f"cup position {i} out of range")
        u, v = self._new(), self._new()
        self._join(u, v)
        self.ends[i:i] = [u, v]
        return self

    def cap(self, i: int) -> "SliceDiagram":
        if not 0 <= i < len(self.ends) - 1:
            raise IndexError(f"cap position {i} out of range")
        u, v = self.ends[i], self.ends[i + 1]
        self._join(u, v)
        del self.ends[i:i + 2]
        return self

    def cross(self, i: int, over: str = "/") -> "SliceDiagram":
        if over not in ("/", "\\"):
            raise ValueError("over must be '/' or '\\\\'")
        if not 0 <= i < len(self.ends) - 1:
            raise IndexError(f"crossing position {i} out of range")
        k = len(self.over)
        self.over.append(over)
        for tok, slot in ((self.ends[i], BL), (self.ends[i + 1], BR)):
            pin = self._new()
            self._join(pin, tok)
            self._port[pin] = (k, slot)
        nl, nr = self._new(), self._new()
        self._port[nl] = (k, TL)
        self._port[nr] = (k, TR)
        self.ends[i], self.ends[i + 1] = nl, nr
        return self

    def twist(self, i: int, half_twists: int, over: str = "/") -> "SliceDiagram":
        for _ in range(abs(half_twists)):
            self.cross(i, over)
        return self

    # -- output -------------------------------------------------------

    def code(self) -> DiagramCode:
        if self.ends:
            raise MalformedDiagramError(f"{len(self.ends)} strand ends left open")
        n = len(self.over)
        if n == 0:
            return UNKNOT
        groups: dict[int, list[tuple[int, int]]] = {}
        for tok, port in self._port.items():
            groups.setdefault(self._find(tok), []).append(port)
        partner: dict[tuple[int, int], tuple[int, int]] = {}
        for ports in groups.values():
            if len(ports) != 2:
                raise MalformedDiagramError("edge with a free end")
            p, q = ports
            partner[p], partner[q] = q, p
        if len(partner) != 4 * n:
            raise MalformedDiagramError("closed component without crossings")

        # walk the curve: a pass enters crossing k at slot s
        passes = []
        start = (0, BL)
        k, s = start
        while True:
            passes.append((k, s))
            out = (k, _OPPOSITE[s])
            k, s = partner[out]
            if (k, s) == start:
                break
        if len(passes) != 2 * n:
            raise MalformedDiagramError("diagram has more than one component")

        def is_under(k: int, s: int) -> bool:
            over_is_slash = self.over[k] == "/"
            on_slash = s in (BL, TR)
            return on_slash != over_is_slash

        # rotate so the walk starts just after an under-pass
        last_under = max(i for i, (k, s) in enumerate(passes) if is_under(k, s))
        passes = passes[last_under + 1:] + passes[:last_under + 1]

        arc = 1
        over_arc: dict[int, int] = {}
        over_in: dict[int, int] = {}
        under: dict[int, tuple[int, int, int]] = {}  # k -> (slot, in arc, out arc)
        for k, s in passes:
            if is_under(k, s):
                nxt = arc % n + 1
                under[k] = (s, arc, nxt)
                arc = nxt
            else:
                over_arc[k] = arc
                over_in[k] = s
        crossings = []
        for k in range(n):
            s_in, a, c = under[k]
            b = over_arc[k]
            # slot d sits three steps counterclockwise from a
            d_slot = (s_in + 3) % 4
            sign = 1 if over_in[k] == d_slot else -1
            crossings.append(Crossing(sign, a, b, c, b))
        return DiagramCode(tuple(crossings), n)


def braid_closure(word: list[int], strands: int) -> DiagramCode:
    """Closure of a braid word; ``±i`` is the generator ``σ_i^{±1}`` (1-based)."""
    sd = SliceDiagram()
    for i in range(strands):
        sd.cup(i)
    for g in word:
        i = abs(g) - 1
        sd.cross(i, "/" if g > 0 else "\\")
    for i in reversed(range(strands)):
        sd.cap(i)
    return sd.code()
