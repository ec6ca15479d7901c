"""Exact integer Laurent polynomials in one variable ``t``.

A :class:`LaurentPoly` is an immutable map ``exponent -> coefficient`` with
zero coefficients never stored.  Coefficients are Python ints, so nothing
overflows.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping


class LaurentPoly:
    """Integer Laurent polynomial stored as ``{exponent: coefficient}``."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c: dict[int, int] = {}
        if coeffs:
            for k, v in coeffs.items():
                if v:
                    c[int(k)] = int(v)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict[int, int]) -> "LaurentPoly":
        # caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def const(cls, value: int) -> "LaurentPoly":
        return cls({0: value})

    @classmethod
    def from_coeff_list(cls, coeffs: Iterable[int], low: int = 0) -> "LaurentPoly":
        """Build from a dense coefficient list whose first entry sits at ``t**low``."""
        return cls({low + i: v for i, v in enumerate(coeffs)})

    # -- inspection -------------------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def coeff(self, k: int) -> int:
        return self._c.get(k, 0)

    @property
    def min_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return min(self._c)

    @property
    def max_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    @property
    def span(self) -> int:
        return self.max_degree - self.min_degree

    def is_unit(self) -> bool:
        """True for ``±t^k``, the units of Z[t, t^-1]."""
        return len(self._c) == 1 and abs(next(iter(self._c.values()))) == 1

    def is_symmetric(self) -> bool:
        return all(self._c.get(-k) == v for k, v in self._c.items())

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c = dict(self._c)
        for k, v in other._c.items():
            s = c.get(k, 0) + v
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._c, other._c
        if len(a) > len(b):
            a, b = b, a
        c: dict[int, int] = {}
        for i, x in a.items():
            for j, y in b.items():
                k = i + j
                c[k] = c.get(k, 0) + x * y
        return LaurentPoly._raw({k: v for k, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_unit():
                raise ValueError("only units have negative powers")
            (k, v), = self._c.items()
            return LaurentPoly._raw({k * n: v ** (-n)})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t**k``."""
        return LaurentPoly._raw({e + k: v for e, v in self._c.items()})

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Divide exactly in Z[t, t^-1]; raise ``ArithmeticError`` if the quotient is not integral."""
        if not other._c:
            raise ZeroDivisionError("division by zero polynomial")
        if not self._c:
            return ZERO
        a_lo, b_lo = self.min_degree, other.min_degree
        num = to_dense(self)
        den = to_dense(other)
        q = poly_exact_div(num, den)
        return LaurentPoly.from_coeff_list(q, a_lo - b_lo)

    def eval_at_one(self) -> int:
        return sum(self._c.values())

    def involute(self) -> "LaurentPoly":
        return LaurentPoly._raw({-k: v for k, v in self._c.items()})

    def canonicalize(self) -> "LaurentPoly":
        """Unit-normalized representative of ``{±t^k · self}``.

        Centres the exponent range so that the lowest exponent is
        ``-floor(span/2)`` (which makes any symmetric representative
        its own canonical form) and flips sign so the top coefficient
        is positive.
        """
        if not self._c:
            raise ValueError("cannot canonicalize the zero polynomial")
        lo, hi = self.min_degree, self.max_degree
        shift = -((hi - lo) // 2) - lo
        sign = 1 if self._c[hi] > 0 else -1
        return LaurentPoly._raw({k + shift: sign * v for k, v in self._c.items()})

    # -- protocol ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for k in sorted(self._c, reverse=True):
            v = self._c[k]
            mag = abs(v)
            if k == 0:
                body = str(mag)
            else:
                mono = "t" if k == 1 else f"t^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(body if v > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if v > 0 else f"- {body}")
        return " ".join(parts)

    # -- serialization ----------------------------------------------------

    def to_json_dict(self) -> dict[str, int]:
        return {str(k): self._c[k] for k in sorted(self._c)}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str | Mapping[str, int]) -> "LaurentPoly":
        data = json.loads(text) if isinstance(text, str) else text
        return cls({int(k): int(v) for k, v in data.items()})


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
T = LaurentPoly.monomial(1)


def to_dense(p: LaurentPoly) -> list[int]:
    """Coefficients from ``t**min_degree`` upward."""
    lo, hi = p.min_degree, p.max_degree
    out = [0] * (hi - lo + 1)
    for k, v in p.items():
        out[k - lo] = v
    return out


def poly_exact_div(num: list[int], den: list[int]) -> list[int]:
    """Exact quotient of dense integer polynomials (low degree first)."""
    while den and den[-1] == 0:
        den = den[:-1]
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    r = list(num)
    while r and r[-1] == 0:
        r.pop()
    if not r:
        return [0]
    db = len(den) - 1
    lead = den[-1]
    if len(r) - 1 < db:
        raise ArithmeticError("inexact polynomial division")
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        coef = r[i]
        if coef == 0:
            continue
        qc, rem = divmod(coef, lead)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        q[i - db] = qc
        for j in range(db + 1):
            r[i - db + j] -= qc * den[j]
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return q


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def eval_at_one(p: LaurentPoly) -> int:
    return p.eval_at_one()


def involute(p: LaurentPoly) -> LaurentPoly:
    return p.involute()


def canonicalize(p: LaurentPoly) -> LaurentPoly:
    return p.canonicalize()
