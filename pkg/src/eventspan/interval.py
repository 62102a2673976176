"""Concrete intervals with per-endpoint openness and the thirteen Allen relations.

Endpoints are exact: ints or ``fractions.Fraction`` for finite values, and
``math.inf`` / ``-math.inf`` for the two symbolic infinities.  Python compares
all of these exactly against each other, so no wrapper type is needed.

An interval is written ``[q,r]``, ``(q,r]``, ``[q,r)`` or ``(q,r)``.  A
degenerate interval ``[q,q]`` is a single point; any other interval with
``q >= r`` is empty and is never constructed.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import NamedTuple, Optional, Union

Endpoint = Union[int, Fraction, float]

INF = math.inf
NEG_INF = -math.inf


def is_finite(x: Endpoint) -> bool:
    return x != INF and x != NEG_INF


def leq_flag(q: Endpoint, r: Endpoint, flag: bool) -> bool:
    """``q < r``, or ``q == r`` when ``flag`` admits equality."""
    return q < r or (flag and q == r)


def geq_flag(q: Endpoint, r: Endpoint, flag: bool) -> bool:
    return q > r or (flag and q == r)


def format_endpoint(x: Endpoint) -> str:
    if x == INF:
        return "inf"
    if x == NEG_INF:
        return "-inf"
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        # decimals round-trip only when the denominator divides a power of ten
        d = x.denominator
        for p in (2, 5):
            while d % p == 0:
                d //= p
        if d == 1:
            digits = 1
            while (x * 10**digits).denominator != 1:
                digits += 1
            return f"{float(x):.{digits}f}"
        return f"{x.numerator}/{x.denominator}"
    return str(x)


class Interval(NamedTuple):
    lo: Endpoint
    hi: Endpoint
    lo_closed: bool = True
    hi_closed: bool = True

    def __str__(self) -> str:
        return "%s%s,%s%s" % (
            "[" if self.lo_closed else "(",
            format_endpoint(self.lo),
            format_endpoint(self.hi),
            "]" if self.hi_closed else ")",
        )

    def contains_point(self, x: Endpoint) -> bool:
        return leq_flag(self.lo, x, self.lo_closed) and leq_flag(x, self.hi, self.hi_closed)


class EmptyIntervalError(ValueError):
    pass


def make_interval(lo: Endpoint, hi: Endpoint, lo_closed: bool = True,
                  hi_closed: bool = True) -> Optional[Interval]:
    """Build a normalized interval, or return ``None`` when it denotes the empty set.

    Infinite endpoints raise ``ValueError``: concrete intervals are always bounded.
    """
    if not (is_finite(lo) and is_finite(hi)):
        raise ValueError(f"interval endpoints must be finite, got {lo!r}, {hi!r}")
    if not leq_flag(lo, hi, lo_closed and hi_closed):
        return None
    return Interval(lo, hi, bool(lo_closed), bool(hi_closed))


def interval(lo: Endpoint, hi: Endpoint, lo_closed: bool = True,
             hi_closed: bool = True) -> Interval:
    """Like :func:`make_interval` but raises on an empty result."""
    v = make_interval(lo, hi, lo_closed, hi_closed)
    if v is None:
        raise EmptyIntervalError(f"{'[' if lo_closed else '('}{lo},{hi}{']' if hi_closed else ')'} is empty")
    return v


class Allen(str, enum.Enum):
    EQUAL = "="
    BEFORE = "<"
    AFTER = ">"
    MEETS = "m"
    MET_BY = "mi"
    OVERLAPS = "o"
    OVERLAPPED_BY = "oi"
    STARTS = "s"
    STARTED_BY = "si"
    FINISHES = "f"
    FINISHED_BY = "fi"
    DURING = "d"
    CONTAINS = "di"

    def __str__(self) -> str:
        return self.value

    @property
    def inverse(self) -> "Allen":
        return _INVERSES[self]

    @classmethod
    def parse(cls, token: str) -> "Allen":
        try:
            return cls(token.strip())
        except ValueError:
            raise ValueError(f"unknown Allen relation {token!r}") from None


ALL_RELATIONS = tuple(Allen)

_INVERSES = {
    Allen.EQUAL: Allen.EQUAL,
    Allen.BEFORE: Allen.AFTER, Allen.AFTER: Allen.BEFORE,
    Allen.MEETS: Allen.MET_BY, Allen.MET_BY: Allen.MEETS,
    Allen.OVERLAPS: Allen.OVERLAPPED_BY, Allen.OVERLAPPED_BY: Allen.OVERLAPS,
    Allen.STARTS: Allen.STARTED_BY, Allen.STARTED_BY: Allen.STARTS,
    Allen.FINISHES: Allen.FINISHED_BY, Allen.FINISHED_BY: Allen.FINISHES,
    Allen.DURING: Allen.CONTAINS, Allen.CONTAINS: Allen.DURING,
}

# relations whose witnesses sit (non-strictly) inside the interval: the default for <>
OVERLAP_RELATIONS = frozenset({
    Allen.EQUAL, Allen.OVERLAPS, Allen.OVERLAPPED_BY, Allen.STARTS, Allen.STARTED_BY,
    Allen.FINISHES, Allen.FINISHED_BY, Allen.DURING, Allen.CONTAINS,
})


def inverse(r: Allen) -> Allen:
    return _INVERSES[Allen(r)]


def holds(a: Interval, r: Allen, b: Interval) -> bool:
    """Whether ``a r b`` for normalized intervals ``a`` and ``b``."""
    q1, r1, a1, b1 = a
    q2, r2, a2, b2 = b
    if r is Allen.EQUAL:
        return q1 == q2 and a1 == a2 and r1 == r2 and b1 == b2
    if r is Allen.BEFORE:
        return leq_flag(r1, q2, not b1 and not a2)
    if r is Allen.AFTER:
        return geq_flag(q1, r2, not a1 and not b2)
    if r is Allen.MEETS:
        return r1 == q2 and b1 != a2
    if r is Allen.MET_BY:
        return q1 == r2 and a1 != b2
    if r is Allen.OVERLAPS:
        return (leq_flag(q1, q2, a1 and not a2) and leq_flag(q2, r1, b1 and a2)
                and leq_flag(r1, r2, not b1 and b2))
    if r is Allen.OVERLAPPED_BY:
        return (geq_flag(r1, r2, b1 and not b2) and geq_flag(r2, q1, a1 and b2)
                and geq_flag(q1, q2, not a1 and a2))
    if r is Allen.STARTS:
        return q1 == q2 and a1 == a2 and leq_flag(r1, r2, not b1 and b2)
    if r is Allen.STARTED_BY:
        return q1 == q2 and a1 == a2 and geq_flag(r1, r2, b1 and not b2)
    if r is Allen.FINISHES:
        return geq_flag(q1, q2, not a1 and a2) and r1 == r2 and b1 == b2
    if r is Allen.FINISHED_BY:
        return leq_flag(q1, q2, a1 and not a2) and r1 == r2 and b1 == b2
    if r is Allen.DURING:
        return geq_flag(q1, q2, not a1 and a2) and leq_flag(r1, r2, not b1 and b2)
    if r is Allen.CONTAINS:
        return leq_flag(q1, q2, a1 and not a2) and geq_flag(r1, r2, b1 and not b2)
    raise ValueError(f"not an Allen relation: {r!r}")


def allen_relate(a: Interval, b: Interval) -> Allen:
    """The unique Allen relation holding from ``a`` to ``b``."""
    found = [r for r in ALL_RELATIONS if holds(a, r, b)]
    assert len(found) == 1, (a, b, found)
    return found[0]


def span_intervals(a: Interval, b: Interval) -> Interval:
    """Smallest interval covering both ``a`` and ``b``."""
    q1, r1, a1, b1 = a
    q2, r2, a2, b2 = b
    lo_closed = (a1 and q1 <= q2) or (a2 and q1 >= q2)
    hi_closed = (b1 and r1 >= r2) or (b2 and r1 <= r2)
    return Interval(min(q1, q2), max(r1, r2), lo_closed, hi_closed)
