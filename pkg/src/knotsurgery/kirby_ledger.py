"""Complexity accounting for the Kirby diagram of the knot surgery manifold X(c).

The ledger does not draw a diagram.  It replays the construction stage by
stage and charges each stage a count of disks, strands and crossings,
written as a polynomial in a handful of quantities of the parameters:

=========  =============================================
``1``      constant
``d``      number of twist boxes (also ``d2 = d**2``, ``d3 = d**3``)
``S``      sum |c_k|
``P``      sum pair_count(c_k), the added 1/2-handle pairs
``absD``   |d - sum c_k|, half the writhe correction
``D2``     (d - sum c_k)**2
=========  =============================================

Every coefficient is a nonnegative integer, so each count is monotone in
each of these quantities.  Disks are exact; strands and crossings are
upper bounds read off the construction.  Domination by the shape
``A1 d^3 + A2 S + A3 D2`` is certified with four rules valid for every
d >= 1 and every integer tuple:

* ``1 <= d <= d2 <= d3``;
* ``P <= 2 S + d`` (each box adds at most 2|c_k| + 1 pairs);
* ``absD <= D2`` (integers);
* ``S`` and ``D2`` are kept.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import InfeasibleConstantsError
from .levine import LevineParams

Poly = dict[str, int]

MONOMIALS = ("1", "d", "d2", "d3", "S", "P", "absD", "D2")

VANISHING_CYCLES = 24
# strands / crossings charged to one vanishing cycle: it runs over the two
# feet of the fiber 1-handle and the doubling handle, once each way
CYCLE_STRANDS = 3
CYCLE_CROSSINGS = 6


def pair_count(ck: int) -> int:
    """1/2-handle pairs added to clear one twist box."""
    if ck > 0:
        return 2 * ck - 1
    if ck < 0:
        return 2 * -ck + 1
    return 0


def dotted_circles(params: LevineParams) -> int:
    # 2d from the thickened complement, one from doubling, plus the pairs
    return 2 * params.d + 1 + sum(pair_count(x) for x in params.c)


def disks(params: LevineParams) -> int:
    return 2 * dotted_circles(params)


def writhe_correction(params: LevineParams) -> int:
    return 2 * params.signed_sum - 2 * params.d


def variables(params: LevineParams) -> dict[str, int]:
    d = params.d
    D = d - params.signed_sum
    return {
        "1": 1,
        "d": d,
        "d2": d * d,
        "d3": d ** 3,
        "S": params.abs_sum,
        "P": sum(pair_count(x) for x in params.c),
        "absD": abs(D),
        "D2": D * D,
    }


@dataclass(frozen=True)
class StageRule:
    label: str
    step: str
    disks: Poly
    strands: Poly
    crossings: Poly


# Construction order.  Comments give the charge per item.
STAGES: tuple[StageRule, ...] = (
    StageRule(
        "doubled complement",
        "thickened knot complement (2d 1-handles) plus the doubling 1-handle",
        disks={"d": 4, "1": 2},
        # 2d-1 complement 2-handles, each over at most two dotted circles twice
        strands={"d": 8},
        # one clasp (2 crossings) between consecutive complement 2-handles
        crossings={"d": 4},
    ),
    StageRule(
        "doubling 2-handles",
        "one 2-handle per original 1-handle",
        disks={},
        # 2d handles, each under at most 2d+1 dotted circles
        strands={"d2": 4, "d": 2},
        crossings={},
    ),
    StageRule(
        "section handle",
        "-2 framed section handle along a longitude of K",
        disks={},
        # over each added pair twice, plus a pass through every hook
        strands={"P": 2, "d2": 2},
        # follows the twist boxes (2|c_k| each) and the hook region
        crossings={"S": 2, "d2": 2},
    ),
    StageRule(
        "vanishing cycles",
        "24 vanishing cycles of the K3 fibration",
        disks={},
        strands={"1": VANISHING_CYCLES * CYCLE_STRANDS},
        crossings={"1": VANISHING_CYCLES * CYCLE_CROSSINGS},
    ),
    StageRule(
        "twist boxes",
        "1/2 pairs clearing each twist box (2c_k - 1 or 2|c_k| + 1)",
        disks={"P": 2},
        # each meridian 2-handle crosses at most 3 strands
        strands={"P": 3},
        # key-shaped meridians: at most 4 crossings per pair
        crossings={"P": 4},
    ),
    StageRule(
        "writhe correction",
        "oval of writhe 2 sum c_k - 2d fixing the section framing",
        disks={},
        strands={},
        crossings={"absD": 2},
    ),
    StageRule(
        "hook stretching",
        "stretching the lowest d-1 hooks",
        disks={},
        # each hook is O(d) long; the d-1 stretched hooks also cross the
        # leftmost meridian once
        strands={"d2": 2, "d": 1},
        crossings={"d2": 4},
    ),
    StageRule(
        "1-handle conversion",
        "grouping over-crossings so dotted circles become 1-handles",
        disks={},
        strands={},
        # 2d+1 big 1-handles, each pushing <= 2d crossings past <= 2d strands;
        # 2 per small pair handle; far-left handle: writhe area squared and
        # its O(d) other crossings
        crossings={"d3": 8, "d2": 6, "P": 2, "D2": 2},
    ),
)


def evaluate(poly: Poly, env: dict[str, int]) -> int:
    return sum(coef * env[m] for m, coef in poly.items())


@dataclass(frozen=True)
class LedgerRow:
    label: str
    disks: int
    strands: int
    crossings: int

    @property
    def total(self) -> int:
        return self.disks + self.strands + self.crossings


@dataclass(frozen=True)
class ComplexityLedger:
    params: LevineParams
    stages: tuple[LedgerRow, ...]

    def __post_init__(self):
        for row in self.stages:
            if min(row.disks, row.strands, row.crossings) < 0:
                raise ValueError(f"negative count in stage {row.label!r}")

    @property
    def disks_total(self) -> int:
        return sum(r.disks for r in self.stages)

    @property
    def strands_total(self) -> int:
        return sum(r.strands for r in self.stages)

    @property
    def crossings_total(self) -> int:
        return sum(r.crossings for r in self.stages)

    @property
    def totals(self) -> tuple[int, int, int]:
        return self.disks_total, self.strands_total, self.crossings_total

    @property
    def bound_total(self) -> int:
        return sum(self.totals)

    def stage(self, label: str) -> LedgerRow:
        for r in self.stages:
            if r.label == label:
                return r
        raise KeyError(label)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["stage", "disks", "strands", "crossings"])
        for r in self.stages:
            w.writerow([r.label, r.disks, r.strands, r.crossings])
        w.writerow(["TOTAL", *self.totals])
        return buf.getvalue()


def build_ledger(params: LevineParams) -> ComplexityLedger:
    env = variables(params)
    rows = tuple(
        LedgerRow(s.label, evaluate(s.disks, env), evaluate(s.strands, env),
                  evaluate(s.crossings, env))
        for s in STAGES
    )
    return ComplexityLedger(params, rows)


# -- closed-form bounds in the theorem's shape -----------------------------


def _column(name: str) -> Poly:
    out: Poly = {}
    for s in STAGES:
        for m, coef in getattr(s, name).items():
            out[m] = out.get(m, 0) + coef
    return out


def reduce_poly(poly: Poly, keep: Iterable[str]) -> dict[str, Fraction]:
    """Push every monomial up to the ``keep`` set using the certification rules.

    ``keep`` is a subset of ``d3, d2, d, 1, S, D2`` closed upward (e.g.
    keeping ``d`` means ``d2`` and ``d3`` are kept too).
    """
    keep = set(keep)
    ladder = ["1", "d", "d2", "d3"]
    out: dict[str, Fraction] = {}

    def put(m: str, coef) -> None:
        if m in ladder:
            i = ladder.index(m)
            while ladder[i] not in keep:
                i += 1
                if i == len(ladder):
                    raise InfeasibleConstantsError(f"no slot for monomial {m}")
            m = ladder[i]
        elif m not in keep:
            raise InfeasibleConstantsError(f"no slot for monomial {m}")
        out[m] = out.get(m, Fraction(0)) + coef

    for m, coef in poly.items():
        if coef < 0:
            raise InfeasibleConstantsError(f"negative coefficient on {m}")
        if m == "P":
            put("S", 2 * coef)
            put("d", coef)
        elif m == "absD":
            put("D2", coef)
        elif m in ("1", "d", "d2", "d3", "S", "D2"):
            put(m, coef)
        else:
            raise InfeasibleConstantsError(f"monomial {m!r} not dominated by the theorem shape")
    return out


STRAND_SHAPE = ("d2", "S", "d", "1")
CROSSING_SHAPE = ("d3", "S", "D2", "d2", "1")


def strand_constants() -> tuple[int, int, int, int]:
    """(S_a, S_b, S_c, S_d) for S_a d^2 + S_b sum|c| + S_c d + S_d."""
    r = reduce_poly(_column("strands"), {"d2", "S", "d", "1"})
    return tuple(int(r.get(m, 0)) for m in STRAND_SHAPE)


def crossing_constants() -> tuple[int, int, int, int, int]:
    """(C_a, C_b, C_c, C_d, C_e) for C_a d^3 + C_b sum|c| + C_c D^2 + C_d d^2 + C_e."""
    r = reduce_poly(_column("crossings"), {"d3", "d2", "S", "D2", "1"})
    return tuple(int(r.get(m, 0)) for m in CROSSING_SHAPE)


def strands_bound(params: LevineParams) -> int:
    sa, sb, sc, sd = strand_constants()
    d = params.d
    return sa * d * d + sb * params.abs_sum + sc * d + sd


def crossings_bound(params: LevineParams) -> int:
    ca, cb, cc, cd, ce = crossing_constants()
    d = params.d
    D = d - params.signed_sum
    return ca * d ** 3 + cb * params.abs_sum + cc * D * D + cd * d * d + ce


# -- Theorem constants -----------------------------------------------------


@dataclass(frozen=True)
class TheoremConstants:
    A1: int
    A2: int
    A3: int

    def __post_init__(self):
        if min(self.A1, self.A2, self.A3) <= 0:
            raise ValueError("theorem constants must be positive")

    def to_json_dict(self) -> dict:
        return {"A1": self.A1, "A2": self.A2, "A3": self.A3}

    @classmethod
    def from_json_dict(cls, data: dict) -> "TheoremConstants":
        return cls(int(data["A1"]), int(data["A2"]), int(data["A3"]))


def theorem_bound(params: LevineParams, k: TheoremConstants) -> int:
    d = params.d
    D = d - params.signed_sum
    return k.A1 * d ** 3 + k.A2 * params.abs_sum + k.A3 * D * D


def total_poly() -> Poly:
    out: Poly = {}
    for name in ("disks", "strands", "crossings"):
        for m, coef in _column(name).items():
            out[m] = out.get(m, 0) + coef
    return out


def symbolic_constants() -> TheoremConstants:
    """Smallest constants the certification rules can prove for every d >= 1 and every c."""
    r = reduce_poly(total_poly(), {"d3", "S", "D2"})
    return TheoremConstants(*(max(1, math.ceil(r.get(m, 0))) for m in ("d3", "S", "D2")))


@dataclass(frozen=True)
class GridSpec:
    """Every tuple with 1 <= d <= d_max and |c_k| <= c_max (zeros included)."""

    d_max: int
    c_max: int

    def __post_init__(self):
        if self.d_max < 1 or self.c_max < 0:
            raise ValueError(f"empty grid: d<={self.d_max}, |c|<={self.c_max}")

    def __str__(self) -> str:
        return f"d<={self.d_max},|c|<={self.c_max}"

    @classmethod
    def parse(cls, spec: str) -> "GridSpec":
        """Read ``"d<=5,|c|<=6"``."""
        d_max = c_max = None
        for part in spec.replace(" ", "").split(","):
            if part.startswith("d<="):
                d_max = int(part[3:])
            elif part.startswith("|c|<="):
                c_max = int(part[5:])
            else:
                raise ValueError(f"cannot parse grid term {part!r}")
        if d_max is None or c_max is None:
            raise ValueError(f"grid needs both d<= and |c|<= terms: {spec!r}")
        return cls(d_max, c_max)

    def params(self):
        from itertools import product

        values = range(-self.c_max, self.c_max + 1)
        for d in range(1, self.d_max + 1):
            for c in product(values, repeat=d):
                yield LevineParams(c)

    def environments(self):
        """Distinct ledger inputs over the grid, found without listing every tuple.

        The ledger sees a tuple only through (d, sum|c|, sum pair_count, sum c),
        so a set-valued sweep over the boxes covers the grid exactly.
        """
        steps = {(abs(x), pair_count(x), x) for x in range(-self.c_max, self.c_max + 1)}
        layer = {(0, 0, 0)}
        for d in range(1, self.d_max + 1):
            layer = {(s + a, p + b, t + x) for s, p, t in layer for a, b, x in steps}
            for s, p, t in sorted(layer):
                D = d - t
                yield {"1": 1, "d": d, "d2": d * d, "d3": d ** 3, "S": s, "P": p,
                       "absD": abs(D), "D2": D * D}


def _theorem_value(env: dict[str, int], k: TheoremConstants) -> int:
    return k.A1 * env["d3"] + k.A2 * env["S"] + k.A3 * env["D2"]


def first_violation(k: TheoremConstants, grid) -> dict[str, int] | None:
    """The first grid point where the ledger total exceeds the theorem bound, if any."""
    total = total_poly()
    if isinstance(grid, GridSpec):
        envs = grid.environments()
    else:
        envs = (variables(p) for p in grid)
    for env in envs:
        if evaluate(total, env) > _theorem_value(env, k):
            return env
    return None


def fit_constants(grid) -> TheoremConstants:
    """Certified constants, checked against every grid point as a witness.

    ``grid`` is a :class:`GridSpec` or an iterable of parameters.
    """
    if not isinstance(grid, GridSpec):
        grid = list(grid)
        if not grid:
            raise ValueError("fitting grid is empty")
    k = symbolic_constants()
    bad = first_violation(k, grid)
    if bad is not None:
        raise InfeasibleConstantsError(f"certified constants fail on the grid at {bad}")
    return k


DEFAULT_GRID = "d<=5,|c|<=6"


def constants_document(k: TheoremConstants, grid_spec: str) -> str:
    doc = dict(k.to_json_dict())
    doc["grid"] = grid_spec
    doc["note"] = ("certified by monomial domination of the ledger stage polynomials; "
                   "grid checked as witness")
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


FROZEN_CONSTANTS = "constants.json"


def load_constants(path: str | None = None) -> TheoremConstants:
    """Constants from ``path``, or the frozen set shipped with the package."""
    if path is None:
        from importlib.resources import files

        text = files("knotsurgery").joinpath("data", FROZEN_CONSTANTS).read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return TheoremConstants.from_json_dict(json.loads(text))
