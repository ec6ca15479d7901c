"""The Levine knot family K(c_1, ..., c_d).

K(c) carries d two-strand twist boxes (c_k full twists each) and one
central twist box of sign ``central`` through which 2d strands pass,
half of them downward and half upward.  Its Alexander polynomial is

    c_0 + sum_k c_k (t^k + t^-k),   c_0 = central - 2 sum_k c_k.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParamsError
from .foxcalc import DiagramCode
from .laurent import LaurentPoly


@dataclass(frozen=True, order=True)
class LevineParams:
    c: tuple[int, ...]
    central: int = -1

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(int(x) for x in self.c))
        if len(self.c) < 1:
            raise ParamsError("need at least one twist box (d >= 1)")
        if self.central not in (-1, 1):
            raise ParamsError(f"central twist must be -1 or +1, got {self.central}")

    @property
    def d(self) -> int:
        return len(self.c)

    @property
    def abs_sum(self) -> int:
        return sum(abs(x) for x in self.c)

    @property
    def signed_sum(self) -> int:
        return sum(self.c)

    def require_nonzero(self) -> "LevineParams":
        if 0 in self.c:
            raise ParamsError(f"census parameters must be nonzero: {self.c}")
        return self

    def to_json_dict(self) -> dict:
        return {"c": list(self.c), "central": self.central}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @classmethod
    def parse(cls, c: str, central: str | int = -1) -> "LevineParams":
        """Read ``"2,3"`` and ``"-1"``/``"+1"`` as given on the command line."""
        try:
            values = tuple(int(x) for x in c.split(",") if x.strip())
        except ValueError:
            raise ParamsError(f"cannot parse twist list {c!r}") from None
        try:
            sign = int(central)
        except ValueError:
            raise ParamsError(f"cannot parse central twist {central!r}") from None
        return cls(values, sign)


def c_zero(params: LevineParams) -> int:
    return params.central - 2 * params.signed_sum


def alexander_raw(params: LevineParams) -> LaurentPoly:
    """The closed form before unit normalization; evaluates to ``central`` at t = 1."""
    coeffs = {0: c_zero(params)}
    for k, ck in enumerate(params.c, start=1):
        coeffs[k] = ck
        coeffs[-k] = ck
    return LaurentPoly(coeffs)


def alexander_closed(params: LevineParams) -> LaurentPoly:
    return alexander_raw(params).canonicalize()


def distinct_polynomials(tuples: Iterable[LevineParams]) -> bool:
    tuples = set(tuples)
    if len({p.central for p in tuples}) > 1:
        raise ParamsError("all tuples must share the central twist")
    for p in tuples:
        if p.c[-1] == 0:
            raise ParamsError(f"last twist parameter must be nonzero: {p.c}")
    polys = {alexander_closed(p) for p in tuples}
    return len(polys) == len(tuples)


def generate_diagram(params: LevineParams) -> DiagramCode:
    from .diagram import levine_diagram

    return levine_diagram(params.c, params.central)


def iter_params(d_max: int, c_values: Sequence[int], central: int = -1):
    """Every tuple of length 1..d_max over ``c_values``, in lexicographic order."""
    from itertools import product

    for d in range(1, d_max + 1):
        for c in product(c_values, repeat=d):
            yield LevineParams(c, central)
