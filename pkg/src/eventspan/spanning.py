"""Spanning intervals: finite descriptions of (possibly infinite) sets of intervals.

A spanning interval fixes the openness of the intervals it describes and
constrains their lower endpoint to one range and their upper endpoint to
another.  In the bracket notation ``α[γ[i,j]δ, ε[k,l]ζ]β`` the outer markers
give interval openness and the inner markers give range openness.

Only *normalized* spanning intervals escape this module.  A normalized
spanning interval is either the unique tightest description of its extension
or (when the extension is empty) not constructed at all.  Everything that
returns a set returns a ``SpanningSet``: a tuple of normalized members in
canonical order.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, NamedTuple, Optional

from .interval import INF, NEG_INF, Endpoint, Interval, format_endpoint, leq_flag


class SpanningInterval(NamedTuple):
    lo_lo: Endpoint
    lo_hi: Endpoint
    hi_lo: Endpoint
    hi_hi: Endpoint
    lo_closed: bool = True
    hi_closed: bool = True
    lo_lo_closed: bool = True
    lo_hi_closed: bool = True
    hi_lo_closed: bool = True
    hi_hi_closed: bool = True

    def sort_key(self):
        # closed sorts before open
        return (not self.lo_closed, not self.hi_closed,
                self.lo_lo, not self.lo_lo_closed, self.lo_hi, not self.lo_hi_closed,
                self.hi_lo, not self.hi_lo_closed, self.hi_hi, not self.hi_hi_closed)

    def __str__(self) -> str:
        return render_spanning(self)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, Interval) and member(v, self)

    @property
    def lower_range(self) -> tuple:
        return self.lo_lo, self.lo_hi, self.lo_lo_closed, self.lo_hi_closed

    @property
    def upper_range(self) -> tuple:
        return self.hi_lo, self.hi_hi, self.hi_lo_closed, self.hi_hi_closed


SpanningSet = tuple  # tuple[SpanningInterval, ...], canonical order

EMPTY: SpanningSet = ()


def spanning(lo_range, hi_range, lo_closed=True, hi_closed=True,
             range_flags=(True, True, True, True)) -> SpanningInterval:
    """Convenience constructor from ``(i, j)`` and ``(k, l)`` pairs.  Not normalized."""
    (i, j), (k, l) = lo_range, hi_range
    g, d, e, z = range_flags
    return SpanningInterval(i, j, k, l, lo_closed, hi_closed, g, d, e, z)


def singleton(v: Interval) -> SpanningInterval:
    """The spanning interval whose extension is exactly ``{v}``."""
    return SpanningInterval(v.lo, v.lo, v.hi, v.hi, v.lo_closed, v.hi_closed,
                            True, True, True, True)


def member(v: Interval, s: SpanningInterval) -> bool:
    q, r, a, b = v
    return (a == s.lo_closed and b == s.hi_closed
            and leq_flag(s.lo_lo, q, s.lo_lo_closed) and leq_flag(q, s.lo_hi, s.lo_hi_closed)
            and leq_flag(s.hi_lo, r, s.hi_lo_closed) and leq_flag(r, s.hi_hi, s.hi_hi_closed))


def set_member(v: Interval, ss: Iterable[SpanningInterval]) -> bool:
    return any(member(v, s) for s in ss)


def normalize_one(s: SpanningInterval) -> Optional[SpanningInterval]:
    """Tightest equivalent spanning interval, or ``None`` for an empty extension."""
    i, j, k, l, a, b, g, d, e, z = s
    ab = a and b
    lo_hi = j if j < l else l
    hi_lo = k if k > i else i
    # the lower endpoint can reach the upper range's bound only through a degenerate interval
    if j < l:
        d2 = d
    elif j > l:
        d2 = z and ab
    else:
        d2 = d and z and ab
    d2 = d2 and lo_hi != INF
    if k > i:
        e2 = e
    elif k < i:
        e2 = g and ab
    else:
        e2 = e and g and ab
    e2 = e2 and hi_lo != NEG_INF
    g2 = g and i != NEG_INF
    z2 = z and l != INF
    if i == INF or lo_hi == NEG_INF or hi_lo == INF or l == NEG_INF:
        return None
    if not (i <= lo_hi and hi_lo <= l):
        return None
    if i == lo_hi and not (g2 and d2):
        return None
    if hi_lo == l and not (e2 and z2):
        return None
    if i == l and not ab:
        return None
    return SpanningInterval(i, lo_hi, hi_lo, l, bool(a), bool(b), bool(g2), bool(d2), bool(e2), bool(z2))


def normalize(s: SpanningInterval) -> SpanningSet:
    n = normalize_one(s)
    return EMPTY if n is None else (n,)


def is_normalized(s: SpanningInterval) -> bool:
    """Check the eight normalization criteria field by field."""
    i, j, k, l, a, b, g, d, e, z = s
    return (i != INF and j != NEG_INF and k != INF and l != NEG_INF
            and not (i == NEG_INF and g) and not (j == INF and d)
            and not (k == NEG_INF and e) and not (l == INF and z)
            and j <= l and k >= i and i <= j and k <= l
            and (i != j or (g and d)) and (k != l or (e and z))
            and (i != l or (a and b))
            and not (j == l and not z and d) and not (k == i and not g and e)
            and not (j == l and not (a and b) and d) and not (k == i and not (a and b) and e))


def _max_bound(x1, f1, x2, f2):
    """Tighter of two lower bounds: larger value, flags conjoined on a tie."""
    if x1 > x2:
        return x1, f1
    if x1 < x2:
        return x2, f2
    return x1, f1 and f2


def _min_bound(x1, f1, x2, f2):
    if x1 < x2:
        return x1, f1
    if x1 > x2:
        return x2, f2
    return x1, f1 and f2


def intersect_one(s1: SpanningInterval, s2: SpanningInterval) -> Optional[SpanningInterval]:
    if s1.lo_closed != s2.lo_closed or s1.hi_closed != s2.hi_closed:
        return None
    i, g = _max_bound(s1.lo_lo, s1.lo_lo_closed, s2.lo_lo, s2.lo_lo_closed)
    j, d = _min_bound(s1.lo_hi, s1.lo_hi_closed, s2.lo_hi, s2.lo_hi_closed)
    k, e = _max_bound(s1.hi_lo, s1.hi_lo_closed, s2.hi_lo, s2.hi_lo_closed)
    l, z = _min_bound(s1.hi_hi, s1.hi_hi_closed, s2.hi_hi, s2.hi_hi_closed)
    return normalize_one(SpanningInterval(i, j, k, l, s1.lo_closed, s1.hi_closed, g, d, e, z))


def intersect(s1: SpanningInterval, s2: SpanningInterval) -> SpanningSet:
    n = intersect_one(s1, s2)
    return EMPTY if n is None else (n,)


def universal_member(lo_closed: bool, hi_closed: bool) -> SpanningInterval:
    return SpanningInterval(NEG_INF, INF, NEG_INF, INF, lo_closed, hi_closed,
                            False, False, False, False)


def universal() -> SpanningSet:
    """Every interval: one all-infinite member per openness combination."""
    return tuple(universal_member(a, b) for a, b in product((True, False), repeat=2))


def complement(s: SpanningInterval) -> SpanningSet:
    """Spanning intervals covering exactly the intervals outside ``s``."""
    i, j, k, l, a, b, g, d, e, z = s
    raw = (
        SpanningInterval(NEG_INF, INF, NEG_INF, k, a, b, True, True, True, not e),
        SpanningInterval(NEG_INF, INF, l, INF, a, b, True, True, not z, True),
        SpanningInterval(NEG_INF, i, NEG_INF, INF, a, b, True, not g, True, True),
        SpanningInterval(j, INF, NEG_INF, INF, a, b, not d, True, True, True),
        universal_member(not a, b),
        universal_member(a, not b),
        universal_member(not a, not b),
    )
    return canonical_union([n for n in map(normalize_one, raw) if n is not None], prune=False)


def span_spanning(s1: SpanningInterval, s2: SpanningInterval) -> SpanningSet:
    """Spanning intervals covering the spans of every pair drawn from ``s1`` and ``s2``.

    One candidate per choice of which argument supplies the lower end and
    which the upper end.  The supplier of an end must not be beaten by the
    other argument, and a tie between an open and a closed end goes to the
    closed one, which fixes the range flags at shared bounds.
    """
    out = []
    for low, other_low in ((s1, s2), (s2, s1)):
        # low's lower end must not exceed other_low's; on a tie the closed end wins
        tie_lo = low.lo_closed or not other_low.lo_closed
        j, d = _min_bound(low.lo_hi, low.lo_hi_closed,
                          other_low.lo_hi, tie_lo and other_low.lo_hi_closed)
        for high, other_high in ((s1, s2), (s2, s1)):
            tie_hi = high.hi_closed or not other_high.hi_closed
            k, e = _max_bound(high.hi_lo, high.hi_lo_closed,
                              other_high.hi_lo, tie_hi and other_high.hi_lo_closed)
            n = normalize_one(SpanningInterval(
                low.lo_lo, j, k, high.hi_hi, low.lo_closed, high.hi_closed,
                low.lo_lo_closed, d, e, high.hi_hi_closed))
            if n is not None:
                out.append(n)
    return canonical_union(out, prune=False)


def _range_within(inner_lo, inner_lo_c, inner_hi, inner_hi_c, outer_lo, outer_lo_c,
                  outer_hi, outer_hi_c) -> bool:
    """Whether the (nonempty) range inner is contained in range outer."""
    lo_ok = inner_lo > outer_lo or (inner_lo == outer_lo and (outer_lo_c or not inner_lo_c))
    hi_ok = inner_hi < outer_hi or (inner_hi == outer_hi and (outer_hi_c or not inner_hi_c))
    return lo_ok and hi_ok


def subsumes(outer: SpanningInterval, inner: SpanningInterval) -> bool:
    """Whether every interval of normalized ``inner`` is in ``outer``.

    Range containment suffices because a normalized spanning interval realizes
    every endpoint value of both its ranges.
    """
    if outer.lo_closed != inner.lo_closed or outer.hi_closed != inner.hi_closed:
        return False
    return (_range_within(inner.lo_lo, inner.lo_lo_closed, inner.lo_hi, inner.lo_hi_closed,
                          outer.lo_lo, outer.lo_lo_closed, outer.lo_hi, outer.lo_hi_closed)
            and _range_within(inner.hi_lo, inner.hi_lo_closed, inner.hi_hi, inner.hi_hi_closed,
                              outer.hi_lo, outer.hi_lo_closed, outer.hi_hi, outer.hi_hi_closed))


def canonical_union(*sets: Iterable[SpanningInterval], prune: bool = True) -> SpanningSet:
    """Union of spanning sets, deduplicated and canonically ordered.

    With ``prune`` set, members subsumed by another member are dropped.
    Accepts any number of iterables of normalized spanning intervals.
    """
    seen = set()
    for ss in sets:
        seen.update(ss)
    members = sorted(seen, key=SpanningInterval.sort_key)
    if prune and len(members) > 1:
        kept = []
        for idx, s in enumerate(members):
            if not any(t is not s and subsumes(t, s) for t in members):
                kept.append(s)
        members = kept
    return tuple(members)


def extension_intervals(ss: Iterable[SpanningInterval]) -> Iterable[Interval]:
    """Enumerate the extension when it is finite (every range is a single point)."""
    for s in ss:
        if s.lo_lo == s.lo_hi and s.hi_lo == s.hi_hi:
            yield Interval(s.lo_lo, s.hi_lo, s.lo_closed, s.hi_closed)
        else:
            raise ValueError(f"{render_spanning(s)} has an infinite extension")


def _ob(closed: bool) -> str:
    return "[" if closed else "("


def _cb(closed: bool) -> str:
    return "]" if closed else ")"


def render_spanning(s: SpanningInterval, shorthand: bool = True,
                    show_openness: bool = True) -> str:
    """Text form ``[[i,j],[k,l]]`` with brackets marking openness.

    ``[[i:j]]`` is used for the all-closed case where both ranges equal ``[i,j]``.
    With ``show_openness`` off every bracket prints closed, which loses
    information but matches the compact listings used for reports.
    """
    f = format_endpoint
    i, j, k, l, a, b, g, d, e, z = s
    if not show_openness:
        a = b = g = d = e = z = True
    if shorthand and a and b and g and d and e and z and i == k and j == l:
        return f"[[{f(i)}:{f(j)}]]"
    return (f"{_ob(a)}{_ob(g)}{f(i)},{f(j)}{_cb(d)},"
            f"{_ob(e)}{f(k)},{f(l)}{_cb(z)}{_cb(b)}")


def render_set(ss: Iterable[SpanningInterval], shorthand: bool = True,
               show_openness: bool = True) -> str:
    parts = []
    for s in ss:
        text = render_spanning(s, shorthand, show_openness)
        if text not in parts:
            parts.append(text)
    return "{" + ", ".join(parts) + "}"


__all__ = [
    "SpanningInterval", "SpanningSet", "EMPTY", "spanning", "singleton", "member",
    "set_member", "normalize", "normalize_one", "is_normalized", "intersect",
    "intersect_one", "complement", "span_spanning", "subsumes", "canonical_union",
    "universal", "universal_member", "render_spanning", "render_set",
    "extension_intervals",
]
