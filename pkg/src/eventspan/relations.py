"""Relational images of spanning intervals.

``d_map(r, s)`` covers every interval ``w`` such that ``v r w`` for some ``v``
in the extension of ``s``.  ``i_map(a, r, b)`` covers the spans of every
``r``-related pair drawn from ``a`` and ``b``; it is what a conjunction with
an Allen-relation constraint evaluates to.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .interval import INF, NEG_INF, Allen
from .spanning import (SpanningInterval, SpanningSet, canonical_union, intersect_one,
                       normalize_one, span_spanning)

_FLAGS = (True, False)


def _d_raw(r: Allen, s: SpanningInterval, a2: bool, b2: bool) -> SpanningInterval:
    """Un-normalized image of ``s`` under ``r`` for result openness ``(a2, b2)``."""
    i, j, k, l, a, b, g, d, e, z = s
    if r is Allen.BEFORE:
        return SpanningInterval(k, INF, NEG_INF, INF, a2, b2,
                                not b and not a2 and e, True, True, True)
    if r is Allen.AFTER:
        return SpanningInterval(NEG_INF, INF, NEG_INF, j, a2, b2,
                                True, True, True, not a and not b2 and d)
    if r is Allen.MEETS:
        return SpanningInterval(k, l, NEG_INF, INF, not b, b2, e, z, True, True)
    if r is Allen.MET_BY:
        return SpanningInterval(NEG_INF, INF, i, j, a2, not a, True, True, g, d)
    if r is Allen.OVERLAPS:
        return SpanningInterval(i, l, k, INF, a2, b2,
                                a and not a2 and g, b and a2 and z,
                                not b and b2 and e, True)
    if r is Allen.OVERLAPPED_BY:
        return SpanningInterval(NEG_INF, j, i, l, a2, b2,
                                True, not a and a2 and d,
                                a and b2 and g, b and not b2 and z)
    if r is Allen.STARTS:
        return SpanningInterval(i, j, k, INF, a, b2, g, d, not b and b2 and e, True)
    if r is Allen.STARTED_BY:
        return SpanningInterval(i, j, NEG_INF, l, a, b2, g, d, True, b and not b2 and z)
    if r is Allen.FINISHES:
        return SpanningInterval(NEG_INF, j, k, l, a2, b, True, not a and a2 and d, e, z)
    if r is Allen.FINISHED_BY:
        return SpanningInterval(i, INF, k, l, a2, b, a and not a2 and g, True, e, z)
    if r is Allen.DURING:
        return SpanningInterval(NEG_INF, j, k, INF, a2, b2,
                                True, not a and a2 and d, not b and b2 and e, True)
    if r is Allen.CONTAINS:
        return SpanningInterval(i, INF, NEG_INF, l, a2, b2,
                                a and not a2 and g, True, True, b and not b2 and z)
    raise ValueError(f"not an Allen relation: {r!r}")


def d_map(r: Allen, s: SpanningInterval) -> SpanningSet:
    return _d_map(Allen(r), s)


@lru_cache(maxsize=1 << 16)
def _d_map(r: Allen, s: SpanningInterval) -> SpanningSet:
    if r is Allen.EQUAL:
        return (s,)
    out = []
    for a2, b2 in product(_FLAGS, _FLAGS):
        n = normalize_one(_d_raw(r, s, a2, b2))
        if n is not None:
            out.append(n)
    return canonical_union(out)


# Endpoint variables of the two related intervals: v comes from the left
# argument and w from the right.
_QV, _RV, _QW, _RW = "qv", "rv", "qw", "rw"


def _order_constraints(r: Allen, a1: bool, b1: bool, a2: bool, b2: bool):
    """``(x, y, strict)`` triples meaning ``x <= y`` (``x < y`` when strict) for ``v r w``.

    Returns ``None`` when the openness flags alone rule the relation out.
    """
    def le(x, y, flag):
        return (x, y, not flag)

    def eq(x, y):
        return [(x, y, False), (y, x, False)]

    if r is Allen.EQUAL:
        return eq(_QV, _QW) + eq(_RV, _RW) if (a1 == a2 and b1 == b2) else None
    if r is Allen.BEFORE:
        return [le(_RV, _QW, not b1 and not a2)]
    if r is Allen.AFTER:
        return [le(_RW, _QV, not a1 and not b2)]
    if r is Allen.MEETS:
        return eq(_RV, _QW) if b1 != a2 else None
    if r is Allen.MET_BY:
        return eq(_QV, _RW) if a1 != b2 else None
    if r is Allen.OVERLAPS:
        return [le(_QV, _QW, a1 and not a2), le(_QW, _RV, b1 and a2), le(_RV, _RW, not b1 and b2)]
    if r is Allen.OVERLAPPED_BY:
        return [le(_RW, _RV, b1 and not b2), le(_QV, _RW, a1 and b2), le(_QW, _QV, not a1 and a2)]
    if r is Allen.STARTS:
        return eq(_QV, _QW) + [le(_RV, _RW, not b1 and b2)] if a1 == a2 else None
    if r is Allen.STARTED_BY:
        return eq(_QV, _QW) + [le(_RW, _RV, b1 and not b2)] if a1 == a2 else None
    if r is Allen.FINISHES:
        return [le(_QW, _QV, not a1 and a2)] + eq(_RV, _RW) if b1 == b2 else None
    if r is Allen.FINISHED_BY:
        return [le(_QV, _QW, a1 and not a2)] + eq(_RV, _RW) if b1 == b2 else None
    if r is Allen.DURING:
        return [le(_QW, _QV, not a1 and a2), le(_RV, _RW, not b1 and b2)]
    if r is Allen.CONTAINS:
        return [le(_QV, _QW, a1 and not a2), le(_RW, _RV, b1 and not b2)]
    raise ValueError(f"not an Allen relation: {r!r}")


def _range_constraints(s: SpanningInterval, lo_var: str, hi_var: str):
    out = [(s.lo_lo, lo_var, not s.lo_lo_closed), (lo_var, s.lo_hi, not s.lo_hi_closed),
           (s.hi_lo, hi_var, not s.hi_lo_closed), (hi_var, s.hi_hi, not s.hi_hi_closed),
           (lo_var, hi_var, not (s.lo_closed and s.hi_closed))]
    return out


def _is_var(x) -> bool:
    return type(x) is str


def _eliminate(constraints, var):
    """Drop ``var`` keeping exactly the implied constraints on the rest (dense order).

    Returns ``None`` if the system is unsatisfiable.
    """
    lower, upper, rest = [], [], []
    for x, y, strict in constraints:
        if x == var and y == var:
            if strict:
                return None
        elif y == var:
            lower.append((x, strict))
        elif x == var:
            upper.append((y, strict))
        else:
            rest.append((x, y, strict))
    for x, s1 in lower:
        for y, s2 in upper:
            rest.append((x, y, s1 or s2))
    return _simplify(rest)


def _simplify(constraints):
    out = []
    for x, y, strict in constraints:
        if not _is_var(x) and not _is_var(y):
            if not (x < y or (x == y and not strict)):
                return None
            continue
        if x == y:
            if strict:
                return None
            continue
        # bounds against infinities are vacuous or impossible
        if not _is_var(y) and y == INF or not _is_var(x) and x == NEG_INF:
            continue
        if not _is_var(y) and y == NEG_INF or not _is_var(x) and x == INF:
            return None
        out.append((x, y, strict))
    return out


def _tightest(constraints, var):
    """Tightest constant lower and upper bounds on ``var`` as ``(value, closed)`` pairs."""
    lo, lo_closed, hi, hi_closed = NEG_INF, False, INF, False
    for x, y, strict in constraints:
        if y == var and not _is_var(x):
            if x > lo or (x == lo and strict):
                lo, lo_closed = x, not strict
        elif x == var and not _is_var(y):
            if y < hi or (y == hi and strict):
                hi, hi_closed = y, not strict
    return lo, lo_closed, hi, hi_closed


def _split_diagonal(s: SpanningInterval):
    """Members for the closed-closed intervals of ``s`` with ``lo < hi`` strictly.

    Exact when the two ranges share at most one point; otherwise the strict
    constraint is not expressible and ``s`` itself is returned.
    """
    if s.lo_hi < s.hi_lo or (s.lo_hi == s.hi_lo and not (s.lo_hi_closed and s.hi_lo_closed)):
        return [s]
    if s.lo_hi == s.hi_lo:
        return [n for n in (normalize_one(s._replace(lo_hi_closed=False)),
                            normalize_one(s._replace(hi_lo_closed=False))) if n is not None]
    return [s]


@lru_cache(maxsize=1 << 16)
def related_span(a: SpanningInterval, r: Allen, b: SpanningInterval) -> SpanningSet:
    """Spans of the pairs ``(v, w)`` from ``a`` and ``b`` with ``v r w``."""
    a1, b1, a2, b2 = a.lo_closed, a.hi_closed, b.lo_closed, b.hi_closed
    rel = _order_constraints(r, a1, b1, a2, b2)
    if rel is None:
        return ()
    base = rel + _range_constraints(a, _QV, _RV) + _range_constraints(b, _QW, _RW)
    out = []
    # which argument supplies each end of the span, and with what openness
    lower_cases = ((_QV, a1, [(_QV, _QW, True)]),
                   (_QV, a1 or a2, [(_QV, _QW, False), (_QW, _QV, False)]),
                   (_QW, a2, [(_QW, _QV, True)]))
    upper_cases = ((_RW, b2, [(_RV, _RW, True)]),
                   (_RV, b1 or b2, [(_RV, _RW, False), (_RW, _RV, False)]),
                   (_RV, b1, [(_RW, _RV, True)]))
    for lo_var, lo_closed, lo_extra in lower_cases:
        for hi_var, hi_closed, hi_extra in upper_cases:
            system = _simplify(base + lo_extra + hi_extra)
            for var in (_QV, _RV, _QW, _RW):
                if system is None:
                    break
                if var not in (lo_var, hi_var):
                    system = _eliminate(system, var)
            if system is None:
                continue
            i, g, j, d = _tightest(system, lo_var)
            k, e, l, z = _tightest(system, hi_var)
            strict = any(x == lo_var and y == hi_var and st for x, y, st in system)
            if strict:
                # lo < hi <= l forces lo < l, and symmetrically for hi
                if l <= j:
                    j, d = l, False
                if i >= k:
                    k, e = i, False
            n = normalize_one(SpanningInterval(i, j, k, l, lo_closed, hi_closed, g, d, e, z))
            if n is None:
                continue
            backward = [st for x, y, st in system if x == hi_var and y == lo_var]
            if backward:
                # the two ends must coincide: only degenerate intervals qualify
                if strict or any(backward) or not (lo_closed and hi_closed):
                    continue
                n = intersect_one(n, n._replace(lo_lo=n.hi_lo, lo_lo_closed=n.hi_lo_closed,
                                                hi_hi=n.lo_hi, hi_hi_closed=n.lo_hi_closed))
                if n is None:
                    continue
                out.append(n)
            elif strict and lo_closed and hi_closed:
                out.extend(_split_diagonal(n))
            else:
                out.append(n)
    return canonical_union(out)


def i_map(a: SpanningInterval, r: Allen, b: SpanningInterval) -> SpanningSet:
    """Spans of ``r``-related pairs drawn from ``a`` and ``b``.

    Both sides are first cut down to the members that take part in some
    ``r``-related pair at all; the spans of the surviving pairs are then
    projected from the exact endpoint-order constraints of ``r``.
    """
    r = Allen(r)
    lefts = [x for x in (intersect_one(t, a) for t in d_map(r.inverse, b)) if x is not None]
    if not lefts:
        return ()
    rights = [y for y in (intersect_one(t, b) for t in d_map(r, a)) if y is not None]
    if not rights:
        return ()
    return related_span(a, r, b)


def i_map_composed(a: SpanningInterval, r: Allen, b: SpanningInterval) -> SpanningSet:
    """The textbook composition: span every pair of the cut-down sides.

    Sound but loose: it also spans pairs that are not ``r``-related.  Kept for
    comparison with :func:`i_map`.
    """
    r = Allen(r)
    lefts = [x for x in (intersect_one(t, a) for t in d_map(r.inverse, b)) if x is not None]
    if not lefts:
        return ()
    rights = [y for y in (intersect_one(t, b) for t in d_map(r, a)) if y is not None]
    out = []
    for x in lefts:
        for y in rights:
            out.extend(span_spanning(x, y))
    return canonical_union(out)
