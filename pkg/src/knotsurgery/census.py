"""Counting smooth structures under a complexity budget.

The census works on the counting slice: tuples with every c_k != 0 and
sum c_k = d.  There d - sum c_k = 0, so the certified bound reduces to
A1 d^3 + A2 sum|c_k| and the budget n allows, for each d, all tuples with
sum|c_k| <= (n - A1 d^3) / A2.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Iterator

import numpy as np

from . import kernels
from .errors import BudgetInfeasibleError, BudgetTooSmallError, ChainViolationError
from .kirby_ledger import TheoremConstants, theorem_bound
from .laurent import LaurentPoly
from .levine import LevineParams, alexander_closed

DEFAULT_MAX_RECORDS = 10 ** 7


def binom(x: int, y: int) -> int:
    """Binomial coefficient, zero when x < y or y < 0."""
    if y < 0 or x < y:
        return 0
    return comb(x, y)


def compositions_count(m: int, p: int) -> int:
    return binom(m - 1, p - 1)


def _parts(total: int, p: int) -> int:
    # compositions of total into p positive parts, allowing p = 0
    if p == 0:
        return 1 if total == 0 else 0
    return binom(total - 1, p - 1)


def slice_count_exact(m: int, d: int) -> int:
    """#{c in (Z \\ 0)^d : sum c = d, sum|c| <= m}, in closed form.

    With j negative entries of total size N, the positive entries compose
    N + d into d - j parts and the negative ones compose N into j parts.
    """
    if d < 1 or m < d:
        return 0
    top = (m - d) // 2  # largest N
    total = 1  # j = 0: all entries equal 1
    for j in range(1, d):
        a, b = d - j - 1, j - 1
        # running values of C(N + d - 1, a) and C(N - 1, b), starting at N = j
        left, right = comb(j + d - 1, a), 1
        acc = 0
        for N in range(j, top + 1):
            acc += left * right
            left = left * (N + d) // (N + d - a)
            right = right * N // (N - b)
        total += comb(d, j) * acc
    return total


def tuple_count_lower(m, d: int) -> int:
    m = math.floor(m)
    h = d // 2
    return binom((m + d - 4) // 2, h) * binom((m - d - 4) // 2, d - h)


def martelli_band(n: int) -> tuple[int, int]:
    if n < 0:
        raise ValueError("budget must be nonnegative")
    return n * n // 4, 5 * n * n // 16


# -- census ------------------------------------------------------------------


@dataclass(frozen=True)
class CensusRecord:
    params: LevineParams
    complexity_bound: int
    poly: LaurentPoly

    @property
    def c(self) -> tuple[int, ...]:
        return self.params.c


def slice_budgets(n: int, k: TheoremConstants) -> dict[int, int]:
    """For each d with room on the slice, the largest allowed sum|c_k|."""
    out = {}
    d = 1
    while k.A1 * d ** 3 + k.A2 * d <= n:
        out[d] = (n - k.A1 * d ** 3) // k.A2
        d += 1
    return out


def projected_size(n: int, k: TheoremConstants, cap: int | None = None) -> int:
    """Census size at budget n; stops early once it passes ``cap``."""
    total = 0
    for d, m in slice_budgets(n, k).items():
        total += slice_count_exact(m, d)
        if cap is not None and total > cap:
            break
    return total


@dataclass
class Census:
    """All slice tuples within budget ``n``, stored as one int32 array per d."""

    n: int
    constants: TheoremConstants
    central: int = -1
    blocks: dict[int, np.ndarray] = field(default_factory=dict)

    def __len__(self) -> int:
        return sum(len(b) for b in self.blocks.values())

    def __iter__(self) -> Iterator[CensusRecord]:
        for d in sorted(self.blocks):
            for row in self.blocks[d]:
                p = LevineParams(tuple(int(x) for x in row), self.central)
                yield CensusRecord(p, theorem_bound(p, self.constants), alexander_closed(p))

    def tuples(self) -> set[tuple[int, ...]]:
        return {tuple(int(x) for x in row) for b in self.blocks.values() for row in b}

    def counts_by_d(self) -> dict[int, int]:
        return {d: len(b) for d, b in sorted(self.blocks.items())}


def enumerate_census(n: int, k: TheoremConstants, max_records: int = DEFAULT_MAX_RECORDS,
                     central: int = -1) -> Census:
    if n < 0:
        raise ValueError("budget must be nonnegative")
    budgets = slice_budgets(n, k)
    projected = projected_size(n, k, max_records)
    if projected > max_records:
        raise BudgetInfeasibleError(
            f"census at n={n} would exceed the cap of {max_records} records")
    census = Census(n, k, central)
    for d, m in budgets.items():
        block = kernels.enumerate_slice(d, m)
        if len(block):
            census.blocks[d] = block
    return census


def canonical_rows(block: np.ndarray, central: int = -1) -> np.ndarray:
    """Coefficient vectors (c_0, c_1, ..., c_d) of the canonical polynomials.

    Within one d the degree is fixed, so canonical form only fixes the sign
    of the top coefficient c_d.
    """
    block = np.asarray(block, dtype=np.int64)
    c0 = central - 2 * block.sum(axis=1)
    rows = np.column_stack([c0, block])
    sign = np.where(block[:, -1] < 0, -1, 1)
    return rows * sign[:, None]


def distinct_structure_count(records) -> int:
    """Number of distinct canonical Alexander polynomials."""
    if isinstance(records, Census):
        total = 0
        for d, block in records.blocks.items():
            rows = canonical_rows(block, records.central)
            # rows with different top coefficients differ; split there to keep sorts small
            order = np.argsort(rows[:, -1], kind="stable")
            rows = rows[order]
            cuts = np.flatnonzero(np.diff(rows[:, -1])) + 1
            for part in np.split(rows, cuts):
                total += len(np.unique(part, axis=0))
        return total
    return len({r.poly for r in records})


def largest_enumerable_n(k: TheoremConstants, max_records: int = DEFAULT_MAX_RECORDS) -> int:
    """Largest budget whose census fits under the cap (the size is monotone in n)."""
    lo, hi = 0, max(1, k.A1)
    while projected_size(hi, k, max_records) <= max_records:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if projected_size(mid, k, max_records) <= max_records:
            lo = mid
        else:
            hi = mid
    return lo


# -- growth chain --------------------------------------------------------------


def _icbrt(x: int) -> int:
    """Largest integer r with r**3 <= x, for x >= 0."""
    if x < 0:
        raise ValueError("negative cube root")
    r = int(round(x ** (1.0 / 3.0))) if x < 1 << 60 else 1 << ((x.bit_length() + 2) // 3)
    while r ** 3 > x:
        r -= 1
    while (r + 1) ** 3 <= x:
        r += 1
    return r


def _half_quarter(n: int, A1: int, denom: int) -> int:
    # largest q with (denom*q)^3 * A1 <= n, i.e. floor((n/A1)^(1/3) / denom)
    return _icbrt(n // (A1 * denom ** 3))


def optimal_d(n: int, k: TheoremConstants) -> int:
    d = 2 * _half_quarter(n, k.A1, 4)
    if d < 2:
        raise BudgetTooSmallError(f"budget n={n} gives d*={d} < 2")
    return d


@dataclass(frozen=True)
class GrowthChain:
    """The lower-bound chain at one budget; each stage is at most the previous one."""

    n: int
    d_star: int
    m_star: int
    slice_count: int
    product: int
    top: int
    k: int
    binomial_square: int

    @property
    def power_floor(self) -> int:
        """floor((top/k)^(2k))."""
        return self.top ** (2 * self.k) // self.k ** (2 * self.k)

    @property
    def lower_bound(self) -> int:
        return self.power_floor

    @property
    def count_step_holds(self) -> bool:
        """Whether the slice count at d* reaches the binomial product.

        Kept apart from :meth:`steps`: the product's lower indices are one
        larger than stars and bars gives, so it outgrows the slice count by
        roughly a factor m and this link fails for every large n.
        """
        return self.slice_count >= self.product

    def steps(self) -> list[tuple[str, bool]]:
        return [
            ("binomial product >= binomial square", self.product >= self.binomial_square),
            ("binomial square >= (N/k)^(2k)",
             self.binomial_square * self.k ** (2 * self.k) >= self.top ** (2 * self.k)),
            ("(N/k)^(2k) > 1", self.top > self.k),
        ]


def _chain_arguments(n: int, k: TheoremConstants):
    q = _half_quarter(n, k.A1, 4)
    kk = _half_quarter(n, k.A1, 5)
    d = 2 * q
    m = (n - k.A1 * d ** 3) // k.A2
    top = n // (3 * k.A2)
    return d, m, kk, top


def chain_applicable(n: int, k: TheoremConstants) -> bool:
    """True when every binomial argument in the chain is positive."""
    d, m, kk, top = _chain_arguments(n, k)
    h = d // 2
    return (h >= 1 and kk >= 1 and top >= 1
            and (m - d - 4) // 2 >= 1 and (m + d - 4) // 2 >= 1)


def chain_threshold(k: TheoremConstants) -> int:
    """Smallest budget at which the chain applies."""
    n = 125 * k.A1  # below this the inner binomial has k = 0
    while not chain_applicable(n, k):
        n += 1
    return n


def growth_chain(n: int, k: TheoremConstants) -> GrowthChain | None:
    """Evaluate the chain at n; None below the threshold.

    Raises ChainViolationError naming the first failing step.
    """
    if not chain_applicable(n, k):
        return None
    d, m, kk, top = _chain_arguments(n, k)
    chain = GrowthChain(
        n=n, d_star=d, m_star=m,
        slice_count=slice_count_exact(m, d),
        product=tuple_count_lower(m, d),
        top=top, k=kk,
        binomial_square=binom(top, kk) ** 2,
    )
    for name, ok in chain.steps():
        if not ok:
            raise ChainViolationError(name, n)
    return chain


def growth_lower_bound(n: int, k: TheoremConstants) -> int | None:
    chain = growth_chain(n, k)
    return None if chain is None else chain.lower_bound


def growth_exponent(lower: int, n: int) -> float:
    """log(lower) / (n^(1/3) log n); diagnostic only."""
    return math.log(lower) / (n ** (1.0 / 3.0) * math.log(n))


# -- reports -----------------------------------------------------------------


REPORT_COLUMNS = ("n", "d_star", "exact_count", "lower_bound", "growth_exponent",
                  "martelli_low", "martelli_high")


@dataclass(frozen=True)
class BoundReport:
    n: int
    d_star: int | None
    exact_count: int | None
    lower_bound: int | None
    growth_exponent: float | None
    martelli_low: int
    martelli_high: int

    @property
    def consistent(self) -> bool:
        """exact_count >= lower_bound whenever both are present."""
        if self.exact_count is None or self.lower_bound is None:
            return True
        return self.exact_count >= self.lower_bound

    def row(self) -> dict:
        def fmt(v):
            if v is None:
                return None
            if isinstance(v, float):
                return round(v, 9)
            return v

        return {name: fmt(getattr(self, name)) for name in REPORT_COLUMNS}


def exact_count(n: int, k: TheoremConstants, max_records: int = DEFAULT_MAX_RECORDS) -> int | None:
    """Census size by direct enumeration, or None when it would exceed the cap."""
    budgets = slice_budgets(n, k)
    if projected_size(n, k, max_records) > max_records:
        return None
    return sum(kernels.count_slice(d, m) for d, m in budgets.items())


def bound_report(n: int, k: TheoremConstants, max_records: int = DEFAULT_MAX_RECORDS) -> BoundReport:
    if n < 0:
        raise ValueError("budget must be nonnegative")
    try:
        d_star = optimal_d(n, k)
    except BudgetTooSmallError:
        d_star = None
    lower = growth_lower_bound(n, k)
    expo = growth_exponent(lower, n) if lower is not None and lower > 1 else None
    low, high = martelli_band(n)
    return BoundReport(n, d_star, exact_count(n, k, max_records), lower, expo, low, high)


def reports_to_csv(reports: Iterable[BoundReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(REPORT_COLUMNS)
    for r in reports:
        w.writerow(["NA" if v is None else (f"{v:.9f}" if isinstance(v, float) else v)
                    for v in r.row().values()])
    return buf.getvalue()


def reports_to_json(reports: Iterable[BoundReport]) -> str:
    return json.dumps([r.row() for r in reports], indent=2) + "\n"


def census_to_csv(census: Census) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["d", "c", "complexity_bound", "poly"])
    for r in census:
        w.writerow([r.params.d, " ".join(map(str, r.c)), r.complexity_bound, r.poly.to_json()])
    return buf.getvalue()


def census_to_json(census: Census) -> str:
    rows = [{"params": r.params.to_json_dict(), "complexity_bound": r.complexity_bound,
             "poly": r.poly.to_json_dict()} for r in census]
    return json.dumps(rows, separators=(",", ":")) + "\n"
