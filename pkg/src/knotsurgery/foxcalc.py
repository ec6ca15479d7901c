"""Alexander polynomial oracles.

Two independent routes to Δ_K(t):

* Fox calculus on the Wirtinger presentation of a planar diagram code,
  with the (n-1)-minor of the Alexander matrix taken exactly;
* ``det(V - t V^T)`` for a Seifert matrix ``V``.

Diagram codes label Wirtinger arcs (maximal over-passing strands).  A
crossing ``X[s](a,b,c,d)`` lists arc labels counterclockwise starting at
the incoming under-arc ``a``; ``c`` is the outgoing under-arc and
``b == d`` is the over-arc.  The sign ``s`` is +1 when the over-arc
runs from the ``d`` slot to the ``b`` slot.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .errors import (
    DegenerateDeterminantError,
    InvalidSeifertMatrixError,
    MalformedDiagramError,
)
from .laurent import ONE, ZERO, LaurentPoly

Word = tuple[tuple[int, int], ...]  # (generator index, ±1) letters


@dataclass(frozen=True)
class Crossing:
    sign: int
    a: int
    b: int
    c: int
    d: int

    def to_text(self) -> str:
        s = "+1" if self.sign > 0 else "-1"
        return f"X[{s}]({self.a},{self.b},{self.c},{self.d})"


@dataclass(frozen=True)
class DiagramCode:
    crossings: tuple[Crossing, ...]
    arc_count: int

    def __post_init__(self):
        validate(self)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def writhe(self) -> int:
        return sum(x.sign for x in self.crossings)

    def to_text(self) -> str:
        if not self.crossings:
            return f"# unknot, arcs={self.arc_count}\n"
        return "".join(x.to_text() + "\n" for x in self.crossings)


def validate(pd: DiagramCode) -> None:
    n = len(pd.crossings)
    if pd.arc_count < 1:
        raise MalformedDiagramError("arc_count must be positive")
    if n == 0:
        if pd.arc_count != 1:
            raise MalformedDiagramError("a crossingless diagram has exactly one arc")
        return
    incoming: dict[int, int] = {}
    outgoing: dict[int, int] = {}
    for i, x in enumerate(pd.crossings):
        line = i + 1
        if x.sign not in (1, -1):
            raise MalformedDiagramError(f"sign must be +1 or -1, got {x.sign}", line)
        for lab in (x.a, x.b, x.c, x.d):
            if not 1 <= lab <= pd.arc_count:
                raise MalformedDiagramError(f"arc label {lab} outside 1..{pd.arc_count}", line)
        if x.b != x.d:
            raise MalformedDiagramError(
                f"over-arc slots disagree ({x.b} vs {x.d})", line)
        if x.a in incoming:
            raise MalformedDiagramError(
                f"arc {x.a} already ends at crossing {incoming[x.a] + 1}", line)
        if x.c in outgoing:
            raise MalformedDiagramError(
                f"arc {x.c} already starts at crossing {outgoing[x.c] + 1}", line)
        incoming[x.a] = i
        outgoing[x.c] = i
    for lab in range(1, pd.arc_count + 1):
        if lab not in incoming or lab not in outgoing:
            raise MalformedDiagramError(
                f"arc {lab} is missing an under-strand endpoint", n + 1)
    # arc-following traversal: the under-strands chain the arcs into cycles
    seen = set()
    lab = 1
    while lab not in seen:
        seen.add(lab)
        lab = pd.crossings[incoming[lab]].c
    if len(seen) != pd.arc_count:
        raise MalformedDiagramError(
            f"diagram has more than one component ({len(seen)} of {pd.arc_count} arcs reached)")


UNKNOT = DiagramCode((), 1)

_LINE = re.compile(
    r"^X\[\s*([+-]?1)\s*\]\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)$")


def parse_diagram(text: str) -> DiagramCode:
    """Parse the one-crossing-per-line text format.

    Blank lines and ``#`` comments are skipped; the arc count is the
    largest label seen (1 for an empty diagram).
    """
    crossings = []
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _LINE.match(line)
        if not m:
            raise MalformedDiagramError(f"cannot parse {raw.strip()!r}", lineno)
        s, a, b, c, d = (int(g) for g in m.groups())
        crossings.append(Crossing(s, a, b, c, d))
        lines.append(lineno)
    arc_count = max((max(x.a, x.b, x.c, x.d) for x in crossings), default=1)
    try:
        return DiagramCode(tuple(crossings), arc_count)
    except MalformedDiagramError as exc:
        # translate crossing index into the source line number
        if exc.line is not None and exc.line <= len(lines):
            raise MalformedDiagramError(str(exc).split(": ", 1)[1], lines[exc.line - 1]) from None
        if exc.line is not None:
            raise MalformedDiagramError(str(exc).split(": ", 1)[1],
                                        len(text.splitlines()) + 1) from None
        raise


# -- Wirtinger presentation and Fox calculus ------------------------------


@dataclass(frozen=True)
class WirtingerPresentation:
    generator_count: int
    relators: tuple[Word, ...]


def wirtinger(pd: DiagramCode) -> WirtingerPresentation:
    """One generator per arc (0-based), one relator ``b^s a b^-s c^-1`` per crossing."""
    rels = []
    for x in pd.crossings:
        a, b, c = x.a - 1, x.b - 1, x.c - 1
        s = x.sign
        rels.append(free_reduce(((b, s), (a, 1), (b, -s), (c, -1))))
    return WirtingerPresentation(pd.arc_count, tuple(rels))


def free_reduce(word: Sequence[tuple[int, int]]) -> Word:
    out: list[tuple[int, int]] = []
    for g, e in word:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def fox_derivative_abelian(word: Word, gen: int) -> LaurentPoly:
    """∂word/∂x_gen with every generator then sent to ``t``.

    Uses ∂(uv) = ∂u + u∂v, ∂x = 1, ∂x^-1 = -x^-1.
    """
    acc: dict[int, int] = {}
    prefix = 0  # exponent sum of the prefix, i.e. its image t**prefix
    for g, e in word:
        if e == 1:
            if g == gen:
                acc[prefix] = acc.get(prefix, 0) + 1
            prefix += 1
        else:
            prefix -= 1
            if g == gen:
                acc[prefix] = acc.get(prefix, 0) - 1
    return LaurentPoly(acc)


def alexander_matrix(pres: WirtingerPresentation) -> list[list[LaurentPoly]]:
    return [[fox_derivative_abelian(r, j) for j in range(pres.generator_count)]
            for r in pres.relators]


def fox_alexander(pd: DiagramCode, row: int | None = None, col: int | None = None,
                  raw: bool = False) -> LaurentPoly:
    """Alexander polynomial of a knot diagram.

    Deletes relator ``row`` and generator ``col`` (both default to the
    last) and takes the exact determinant of what is left.
    """
    if not pd.crossings:
        return ONE
    m = alexander_matrix(wirtinger(pd))
    n = len(m)
    row = n - 1 if row is None else row
    col = n - 1 if col is None else col
    minor = [[m[i][j] for j in range(n) if j != col] for i in range(n) if i != row]
    det = det_laurent(minor)
    if det.is_zero():
        raise DegenerateDeterminantError(
            "Alexander minor is zero; input is not a single knot diagram")
    return det if raw else det.canonicalize()


def seifert_alexander(V: Sequence[Sequence[int]]) -> LaurentPoly:
    """``canonicalize(det(V - t V^T))`` for an integer Seifert matrix."""
    n = len(V)
    if any(len(r) != n for r in V):
        raise InvalidSeifertMatrixError("Seifert matrix must be square")
    if n % 2:
        raise InvalidSeifertMatrixError("Seifert matrix must have even size")
    if n == 0:
        return ONE
    skew = [[LaurentPoly.const(V[i][j] - V[j][i]) for j in range(n)] for i in range(n)]
    if abs(det_laurent(skew).coeff(0)) != 1:
        raise InvalidSeifertMatrixError("det(V - V^T) must be ±1")
    t = LaurentPoly.monomial(1)
    M = [[LaurentPoly.const(V[i][j]) - t * V[j][i] for j in range(n)] for i in range(n)]
    return det_laurent(M).canonicalize()


# -- exact determinants ---------------------------------------------------

COFACTOR_MAX = 6


def det_laurent(M: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Exact determinant over Z[t, t^-1].

    Cofactor expansion up to 6x6; above that, unit pivots are eliminated
    first (no division needed) and the rest goes through Bareiss.
    """
    n = len(M)
    if any(len(r) != n for r in M):
        raise ValueError("matrix must be square")
    if n == 0:
        return ONE
    if n <= COFACTOR_MAX:
        return det_cofactor(M)
    return det_bareiss(M)


def det_cofactor(M: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    n = len(M)
    memo: dict[tuple[int, frozenset], LaurentPoly] = {}

    def rec(r: int, cols: frozenset) -> LaurentPoly:
        if r == n:
            return ONE
        key = (r, cols)
        if key in memo:
            return memo[key]
        total = ZERO
        for pos, j in enumerate(sorted(cols)):
            e = M[r][j]
            if e.is_zero():
                continue
            term = e * rec(r + 1, cols - {j})
            total = total - term if pos % 2 else total + term
        memo[key] = total
        return total

    return rec(0, frozenset(range(n)))


def det_permutation(M: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Leibniz formula; exponential, used only as a test oracle."""
    n = len(M)
    total = ZERO
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = ONE
        for i, j in enumerate(perm):
            term = term * M[i][j]
            if term.is_zero():
                break
        total = total - term if inv % 2 else total + term
    return total


def det_bareiss(M: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    rows = [dict((j, e) for j, e in enumerate(r) if not e.is_zero()) for r in M]
    n = len(rows)
    alive_rows = list(range(n))
    alive_cols = set(range(n))
    det = ONE

    # Phase 1: eliminate on unit pivots, preferring sparse rows and columns.
    while True:
        best = None
        col_load: dict[int, int] = {}
        for i in alive_rows:
            for j in rows[i]:
                col_load[j] = col_load.get(j, 0) + 1
        for i in alive_rows:
            r = rows[i]
            for j, e in r.items():
                if e.is_unit():
                    cost = (len(r) - 1) * (col_load[j] - 1)
                    if best is None or cost < best[0]:
                        best = (cost, i, j)
        if best is None:
            break
        _, pi, pj = best
        prow = rows[pi]
        pivot = prow[pj]
        # sign of the permutation that moves (pi, pj) to the top-left corner
        ri = alive_rows.index(pi)
        cj = sorted(alive_cols).index(pj)
        sign = -1 if (ri + cj) % 2 else 1
        det = det * pivot if sign > 0 else -(det * pivot)
        inv = pivot ** -1
        alive_rows.remove(pi)
        alive_cols.discard(pj)
        for i in alive_rows:
            r = rows[i]
            f = r.get(pj)
            if f is None:
                continue
            factor = f * inv
            del r[pj]
            for j, e in prow.items():
                if j == pj:
                    continue
                v = r.get(j, ZERO) - factor * e
                if v.is_zero():
                    r.pop(j, None)
                else:
                    r[j] = v
        if not alive_rows:
            return det

    cols = sorted(alive_cols)
    rest = [[rows[i].get(j, ZERO) for j in cols] for i in alive_rows]
    if any(not any(not e.is_zero() for e in r) for r in rest):
        return ZERO
    return det * _bareiss_dense(rest)


def _bareiss_dense(A: list[list[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free elimination; every division is exact in Z[t, t^-1]."""
    n = len(A)
    A = [list(r) for r in A]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if A[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not A[i][k].is_zero()), None)
            if swap is None:
                return ZERO
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            for j in range(k + 1, n):
                A[i][j] = (akk * A[i][j] - aik * A[k][j]).exact_div(prev)
            A[i][k] = ZERO
        prev = akk
    det = A[n - 1][n - 1]
    return det if sign > 0 else -det
