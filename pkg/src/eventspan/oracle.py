"""Brute-force reference semantics over finite universes of intervals.

Every interval set that can arise here is invariant under order-preserving
maps of the time line that fix the model's constants.  An interval set is
therefore determined by its *order type* relative to the constants: which
constant each endpoint equals, or which gap between constants it sits in,
and whether two endpoints share a gap.  A grid holding every constant plus
two points per gap (and two past either end) realizes every type, so the
reference semantics can quantify over finite grids and still be exact over
the reals.  Quantifying over the integer grid alone is not exact: the
interval ``(1,2)`` has subintervals but no integer-endpoint ones.

``DenseOracle`` keeps node values as boolean vectors over the *type grid*
(the constants refined once) and searches witnesses on the grid refined
twice, which has enough room for every configuration of a probe and its
witnesses.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Sequence, Set

import numpy as np

from .interval import ALL_RELATIONS, Allen, Interval, holds, make_interval, span_intervals
from .logic import EQUALITY, And, Diamond, Model, Not, Or, Prim, subexpressions
from .relations import d_map, i_map
from .spanning import (SpanningInterval, complement, intersect, member, normalize_one,
                       span_spanning)


class GridUniverse:
    """All normalized intervals with endpoints in a finite list of values."""

    def __init__(self, values: Iterable):
        vals = sorted(set(Fraction(v) for v in values))
        self.values = tuple(vals)
        out = []
        for lo, hi in itertools.combinations_with_replacement(self.values, 2):
            for a, b in itertools.product((True, False), repeat=2):
                v = make_interval(_num(lo), _num(hi), a, b)
                if v is not None:
                    out.append(v)
        self.intervals = tuple(out)
        self.index = {v: n for n, v in enumerate(out)}

    @classmethod
    def integers(cls, n: int) -> "GridUniverse":
        return cls(range(n + 1))

    def __len__(self):
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def refine(self) -> "GridUniverse":
        """Two extra points inside every gap and two past either end."""
        vals = list(self.values)
        pts = set(vals)
        if vals:
            pts.update((vals[0] - Fraction(2, 3), vals[0] - Fraction(1, 3)))
            pts.update((vals[-1] + Fraction(1, 3), vals[-1] + Fraction(2, 3)))
        for x, y in zip(vals, vals[1:]):
            step = (y - x) / 3
            pts.update((x + step, x + 2 * step))
        return GridUniverse(pts)

    @cached_property
    def lo(self) -> np.ndarray:
        return np.array([float(v.lo) for v in self.intervals])

    @cached_property
    def hi(self) -> np.ndarray:
        return np.array([float(v.hi) for v in self.intervals])

    @cached_property
    def lo_closed(self) -> np.ndarray:
        return np.array([v.lo_closed for v in self.intervals], dtype=bool)

    @cached_property
    def hi_closed(self) -> np.ndarray:
        return np.array([v.hi_closed for v in self.intervals], dtype=bool)

    def mask(self, ss: Iterable[SpanningInterval]) -> np.ndarray:
        """Boolean vector: which grid intervals lie in the extension of ``ss``."""
        out = np.zeros(len(self), dtype=bool)
        lo, hi = self.lo, self.hi
        for s in ss:
            i, j, k, l = (float(x) for x in s[:4])
            m = (self.lo_closed == s.lo_closed) & (self.hi_closed == s.hi_closed)
            m &= (i < lo) | ((i == lo) & s.lo_lo_closed)
            m &= (lo < j) | ((lo == j) & s.lo_hi_closed)
            m &= (k < hi) | ((k == hi) & s.hi_lo_closed)
            m &= (hi < l) | ((hi == l) & s.hi_hi_closed)
            out |= m
        return out

    def to_set(self, mask: np.ndarray) -> Set[Interval]:
        return {self.intervals[n] for n in np.flatnonzero(mask)}


def _num(x: Fraction):
    return x.numerator if x.denominator == 1 else x


def grid_extension(ss: Iterable[SpanningInterval], u: GridUniverse) -> Set[Interval]:
    return {v for v in u if any(member(v, s) for s in ss)}


def _leq(x, y, flag):
    return (x < y) | ((x == y) & flag)


def _geq(x, y, flag):
    return (x > y) | ((x == y) & flag)


def holds_matrix(rows: GridUniverse, r: Allen, cols: GridUniverse) -> np.ndarray:
    """``M[a, b] = holds(rows[a], r, cols[b])``, vectorized."""
    q1, r1 = rows.lo[:, None], rows.hi[:, None]
    a1, b1 = rows.lo_closed[:, None], rows.hi_closed[:, None]
    q2, r2 = cols.lo[None, :], cols.hi[None, :]
    a2, b2 = cols.lo_closed[None, :], cols.hi_closed[None, :]
    if r is Allen.EQUAL:
        return (q1 == q2) & (a1 == a2) & (r1 == r2) & (b1 == b2)
    if r is Allen.BEFORE:
        return _leq(r1, q2, ~b1 & ~a2)
    if r is Allen.AFTER:
        return _geq(q1, r2, ~a1 & ~b2)
    if r is Allen.MEETS:
        return (r1 == q2) & (b1 != a2)
    if r is Allen.MET_BY:
        return (q1 == r2) & (a1 != b2)
    if r is Allen.OVERLAPS:
        return _leq(q1, q2, a1 & ~a2) & _leq(q2, r1, b1 & a2) & _leq(r1, r2, ~b1 & b2)
    if r is Allen.OVERLAPPED_BY:
        return _geq(r1, r2, b1 & ~b2) & _geq(r2, q1, a1 & b2) & _geq(q1, q2, ~a1 & a2)
    if r is Allen.STARTS:
        return (q1 == q2) & (a1 == a2) & _leq(r1, r2, ~b1 & b2)
    if r is Allen.STARTED_BY:
        return (q1 == q2) & (a1 == a2) & _geq(r1, r2, b1 & ~b2)
    if r is Allen.FINISHES:
        return _geq(q1, q2, ~a1 & a2) & (r1 == r2) & (b1 == b2)
    if r is Allen.FINISHED_BY:
        return _leq(q1, q2, a1 & ~a2) & (r1 == r2) & (b1 == b2)
    if r is Allen.DURING:
        return _geq(q1, q2, ~a1 & a2) & _leq(r1, r2, ~b1 & b2)
    if r is Allen.CONTAINS:
        return _leq(q1, q2, a1 & ~a2) & _geq(r1, r2, b1 & ~b2)
    raise ValueError(r)


# The relations where span(v, u) takes v's lower end and u's upper end and
# the two inner endpoints are free; conjunction is a matrix chain for these.
_CHAIN = {Allen.BEFORE, Allen.MEETS, Allen.OVERLAPS}
# u = span(v, u) for these, so conjunction reduces to a diamond.
_RIGHT_CONTAINS = {Allen.EQUAL, Allen.STARTS, Allen.FINISHES, Allen.DURING}


class DenseOracle:
    """Exact reference semantics for sets determined by a finite set of constants.

    Values are boolean vectors over ``self.types``.  Any interval set built
    from model atoms whose endpoints are among ``constants`` by the event
    logic connectives is represented exactly.
    """

    def __init__(self, constants: Iterable):
        base = GridUniverse(constants)
        self.constants = base.values
        self.types = base.refine()
        self.witnesses = self.types.refine()
        self._holds: Dict[Allen, np.ndarray] = {}
        pts = np.array([float(p) for p in self.witnesses.values])
        self._points = pts
        self._type_point_idx = np.searchsorted(pts, [float(p) for p in self.types.values])

    def __len__(self):
        return len(self.types)

    # -- type projection

    def project(self, grid: GridUniverse) -> np.ndarray:
        """For each interval of ``grid``, the type-grid index of its representative.

        ``grid`` must contain the constants.
        """
        consts = [float(c) for c in self.constants]
        tv = self.types.values
        reps = {}
        for c in range(len(consts) + 1):
            lo = consts[c - 1] if c > 0 else -np.inf
            hi = consts[c] if c < len(consts) else np.inf
            inside = [x for x in tv if lo < float(x) < hi]
            reps[c] = _num(inside[0]), _num(inside[1])
        cset = set(consts)
        out = np.empty(len(grid), dtype=np.int64)
        idx = self.types.index
        for n, v in enumerate(grid.intervals):
            q, r = float(v.lo), float(v.hi)
            cq = int(np.searchsorted(consts, q))
            cr = int(np.searchsorted(consts, r))
            q_const, r_const = q in cset, r in cset
            tq = v.lo if q_const else reps[cq][0]
            if r_const:
                tr = v.hi
            elif not q_const and cq == cr and q == r:
                tr = reps[cr][0]
            else:
                tr = reps[cr][1]
            out[n] = idx[Interval(tq, tr, v.lo_closed, v.hi_closed)]
        return out

    @cached_property
    def projection(self) -> np.ndarray:
        return self.project(self.witnesses)

    @cached_property
    def _self_projection(self) -> np.ndarray:
        return self.project(self.types)

    def canonical(self, mask: np.ndarray) -> np.ndarray:
        """Make a type-grid vector constant on each order type."""
        return mask[self._self_projection]

    def lift(self, mask: np.ndarray) -> np.ndarray:
        """Extend a type-grid vector to the witness grid."""
        return mask[self.projection]

    def holds_packed(self, r: Allen) -> np.ndarray:
        h = self._holds.get(r)
        if h is None:
            h = np.packbits(holds_matrix(self.witnesses, r, self.types), axis=1)
            self._holds[r] = h
        return h

    # -- connectives

    def atom(self, ss: Iterable[SpanningInterval]) -> np.ndarray:
        return self.types.mask(ss)

    def everything(self) -> np.ndarray:
        return np.ones(len(self.types), dtype=bool)

    def nothing(self) -> np.ndarray:
        return np.zeros(len(self.types), dtype=bool)

    def diamond(self, body: np.ndarray, rels: Iterable[Allen]) -> np.ndarray:
        """Intervals ``w`` with ``v r w`` for some ``v`` in ``body`` and ``r`` in ``rels``."""
        rows = np.flatnonzero(self.lift(body))
        out = self.nothing()
        if rows.size == 0:
            return out
        n = len(self.types)
        for r in rels:
            hit = np.bitwise_or.reduce(self.holds_packed(Allen(r))[rows], axis=0)
            out |= np.unpackbits(hit, count=n).astype(bool)
        return out

    def conjoin(self, left: np.ndarray, right: np.ndarray, rels: Iterable[Allen]) -> np.ndarray:
        """Spans of pairs ``(v, u)`` with ``v`` in left, ``u`` in right and ``v r u``."""
        out = self.nothing()
        for r in rels:
            r = Allen(r)
            if r in _RIGHT_CONTAINS:
                out |= right & self.diamond(left, [r])
            elif r.inverse in _RIGHT_CONTAINS:
                out |= left & self.diamond(right, [r.inverse])
            elif r in _CHAIN:
                out |= self._chain(left, right, r)
            else:
                out |= self._chain(right, left, r.inverse)
        return out

    @cached_property
    def _grid_tables(self):
        w = self.witnesses
        pidx = {float(p): n for n, p in enumerate(w.values)}
        qi = np.array([pidx[x] for x in w.lo])
        ri = np.array([pidx[x] for x in w.hi])
        t = self.types
        tq = np.array([pidx[x] for x in t.lo])
        tr = np.array([pidx[x] for x in t.hi])
        return qi, ri, tq, tr

    def _point_matrices(self, mask: np.ndarray):
        """Witness-grid value as four point matrices keyed by (lo_closed, hi_closed)."""
        lifted = self.lift(mask)
        qi, ri, _, _ = self._grid_tables
        w = self.witnesses
        npts = len(self._points)
        mats = {}
        for a, b in itertools.product((True, False), repeat=2):
            m = np.zeros((npts, npts), dtype=np.float64)
            sel = lifted & (w.lo_closed == a) & (w.hi_closed == b)
            m[qi[sel], ri[sel]] = 1.0
            mats[a, b] = m
        return mats

    def _chain(self, left: np.ndarray, right: np.ndarray, r: Allen) -> np.ndarray:
        # v = (q, x) from left, u = (y, s) from right; span is (q, s) with v's and u's outer flags
        lm = self._point_matrices(left)
        rm = self._point_matrices(right)
        p = self._points
        tp = self._type_point_idx
        X = p[:, None]
        Y = p[None, :]
        t = self.types
        _, _, tq, tr = self._grid_tables
        out = self.nothing()
        inv = {int(v): n for n, v in enumerate(tp)}
        for a1, b1, a2, b2 in itertools.product((True, False), repeat=4):
            L = lm[a1, b1][tp, :]       # q over type points, x over all
            R = rm[a2, b2][:, tp]       # y over all, s over type points
            if not L.any() or not R.any():
                continue
            if r is Allen.BEFORE:
                K = _leq(X, Y, (not b1) and (not a2)).astype(np.float64)   # x <= y
                res = L @ K @ R
            elif r is Allen.MEETS:
                if b1 == a2:
                    continue
                res = L @ R
            else:
                # q <= y (a1 & ~a2), y <= x (b1 & a2), x <= s (~b1 & b2)
                Qy = _leq(p[tp][:, None], Y, a1 and not a2).astype(np.float64)     # [q, y]
                Yx = _leq(X, Y, b1 and a2).astype(np.float64)                      # [y, x]: y <= x
                Xs = _leq(X, p[tp][None, :], (not b1) and b2).astype(np.float64)   # [x, s]
                # batch over y: (L * Yx[y]) @ (Xs * R[y]), then weight by Qy
                left_y = L[None, :, :] * Yx[:, None, :]
                right_y = Xs[None, :, :] * R[:, None, :]
                res = np.einsum("qy,yqs->qs", Qy, np.matmul(left_y, right_y))
            hit = res > 0
            sel = (t.lo_closed == a1) & (t.hi_closed == b2)
            rows = np.array([inv[v] for v in tq[sel]])
            cols = np.array([inv[v] for v in tr[sel]])
            out[np.flatnonzero(sel)] |= hit[rows, cols]
        return out

    # -- expressions

    def evaluate(self, model: Model, e) -> np.ndarray:
        memo: Dict[object, np.ndarray] = {}

        def go(x):
            if x in memo:
                return memo[x]
            if isinstance(x, Prim):
                if x.name == EQUALITY and len(x.args) == 2:
                    v = self.everything() if x.args[0] == x.args[1] else self.nothing()
                else:
                    v = self.atom(model.lookup(x.name, x.args))
            elif isinstance(x, Not):
                v = ~go(x.body)
            elif isinstance(x, Or):
                v = go(x.left) | go(x.right)
            elif isinstance(x, And):
                v = self.conjoin(go(x.left), go(x.right), x.rels)
            elif isinstance(x, Diamond):
                v = self.diamond(go(x.body), x.rels)
            else:
                raise TypeError(x)
            memo[x] = v
            return v

        return go(e)

    def restrict(self, mask: np.ndarray, u: GridUniverse) -> Set[Interval]:
        """The members of ``u`` (a grid inside the type grid) selected by ``mask``."""
        idx = self.types.index
        return {v for v in u if mask[idx[v]]}


def model_constants(model: Model) -> List[Fraction]:
    out = set()
    for atom in model:
        for s in model[atom]:
            for x in s[:4]:
                if x not in (np.inf, -np.inf):
                    out.add(Fraction(x))
    return sorted(out)


def oracle_eval(model: Model, e, u: GridUniverse) -> Set[Interval]:
    """Intervals of ``u`` over which ``e`` occurs, by direct set semantics."""
    consts = set(u.values) | set(model_constants(model))
    oracle = DenseOracle(consts)
    return oracle.restrict(oracle.evaluate(model, e), u)


def naive_conjoin(u: GridUniverse, left: Set[Interval], right: Set[Interval],
                  rels: Iterable[Allen]) -> Set[Interval]:
    """Pairwise enumeration inside ``u``; only for checking the oracle itself."""
    rels = [Allen(r) for r in rels]
    return {span_intervals(v, w) for v in left for w in right
            if any(holds(v, r, w) for r in rels)}


def naive_diamond(left: Set[Interval], u: GridUniverse, rels: Iterable[Allen]) -> Set[Interval]:
    rels = [Allen(r) for r in rels]
    return {w for w in u for v in left if any(holds(v, r, w) for r in rels)}




# --------------------------------------------------------------------------- equivalence suite
#
# Each check compares an engine operation with the reference semantics on the
# probe grid and counts disagreements in both directions.  A check is exact
# when both counts are zero and sound when nothing is missing.


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    missing: int = 0
    extra: int = 0
    extra_nondegenerate: int = 0
    seconds: float = 0.0
    examples: List[str] = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return self.missing == 0 and self.extra == 0

    @property
    def sound(self) -> bool:
        return self.missing == 0

    def add(self, label: str, engine: np.ndarray, reference: np.ndarray, u: "GridUniverse"):
        self.cases += 1
        miss = reference & ~engine
        extra = engine & ~reference
        if miss.any() or extra.any():
            self.missing += int(miss.sum())
            self.extra += int(extra.sum())
            self.extra_nondegenerate += int((extra & (u.lo != u.hi)).sum())
            if len(self.examples) < 3:
                shown = [str(u.intervals[n]) for n in np.flatnonzero(miss | extra)[:4]]
                self.examples.append(f"{label}: {' '.join(shown)}")

    def summary(self) -> str:
        status = "exact" if self.exact else ("sound" if self.sound else "UNSOUND")
        return (f"{self.name}: {status}, {self.cases} cases, {self.missing} missing, "
                f"{self.extra} extra ({self.extra_nondegenerate} non-degenerate), "
                f"{self.seconds:.1f}s")


@dataclass(frozen=True)
class SuiteConfig:
    grid: int = 4
    seed: int = 0
    intersect_pairs: int = 3000
    span_pairs: int = 600
    d_map_inputs: int = 600
    i_map_pairs: int = 200


def spanning_pool(values: Iterable) -> List[SpanningInterval]:
    """Every normalized spanning interval with endpoints in ``values`` or infinite."""
    ends = [-math.inf] + sorted(values) + [math.inf]
    seen = set()
    for i, j, k, l in itertools.product(ends, repeat=4):
        for flags in itertools.product((True, False), repeat=6):
            n = normalize_one(SpanningInterval(i, j, k, l, *flags))
            if n is not None:
                seen.add(n)
    return sorted(seen, key=SpanningInterval.sort_key)


def raw_spanning(values: Iterable) -> Iterator[SpanningInterval]:
    """Every spanning interval, normalized or not, over ``values`` and the infinities."""
    ends = [-math.inf] + sorted(values) + [math.inf]
    for i, j, k, l in itertools.product(ends, repeat=4):
        for flags in itertools.product((True, False), repeat=6):
            yield SpanningInterval(i, j, k, l, *flags)


def _raw_member_matrix(raws: Sequence[SpanningInterval], u: "GridUniverse") -> np.ndarray:
    """Literal membership of each probe interval in each (possibly unnormalized) input."""
    arr = np.array([[float(x) for x in s[:4]] for s in raws])
    flags = np.array([s[4:] for s in raws], dtype=bool)
    i, j, k, l = (arr[:, n, None] for n in range(4))
    a, b, g, d, e, z = (flags[:, n, None] for n in range(6))
    lo, hi = u.lo[None, :], u.hi[None, :]
    return ((u.lo_closed[None, :] == a) & (u.hi_closed[None, :] == b)
            & _leq(i, lo, g) & _leq(lo, j, d) & _leq(k, hi, e) & _leq(hi, l, z))


def _timed(fn):
    def run(*args, **kw):
        t = time.perf_counter()
        res = fn(*args, **kw)
        res.seconds = time.perf_counter() - t
        return res
    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


@_timed
def check_normalize(cfg: SuiteConfig) -> CheckResult:
    u = GridUniverse.integers(cfg.grid)
    res = CheckResult("normalize")
    raws = list(raw_spanning(range(cfg.grid)))
    want = _raw_member_matrix(raws, u)
    for s, ref in zip(raws, want):
        n = normalize_one(s)
        res.add(str(s), u.mask(() if n is None else (n,)), ref, u)
    return res


@_timed
def check_intersect(cfg: SuiteConfig, pool=None) -> CheckResult:
    u = GridUniverse.integers(cfg.grid)
    pool = pool or spanning_pool(range(cfg.grid))
    rng = random.Random(cfg.seed)
    res = CheckResult("intersect")
    for _ in range(cfg.intersect_pairs):
        a, b = rng.choice(pool), rng.choice(pool)
        res.add(f"{a} & {b}", u.mask(intersect(a, b)), u.mask((a,)) & u.mask((b,)), u)
    return res


@_timed
def check_complement(cfg: SuiteConfig, pool=None) -> CheckResult:
    u = GridUniverse.integers(cfg.grid)
    pool = pool or spanning_pool(range(cfg.grid))
    res = CheckResult("complement")
    for s in pool:
        res.add(f"~{s}", u.mask(complement(s)), ~u.mask((s,)), u)
    return res


def _dense(cfg: SuiteConfig):
    u = GridUniverse.integers(cfg.grid)
    oracle = DenseOracle(u.values)
    at = np.array([oracle.types.index[v] for v in u])
    return u, oracle, at


@_timed
def check_span(cfg: SuiteConfig, pool=None) -> CheckResult:
    u, oracle, at = _dense(cfg)
    pool = pool or spanning_pool(range(cfg.grid))
    rng = random.Random(cfg.seed + 1)
    res = CheckResult("span")
    for _ in range(cfg.span_pairs):
        a, b = rng.choice(pool), rng.choice(pool)
        ref = oracle.conjoin(oracle.atom((a,)), oracle.atom((b,)), ALL_RELATIONS)
        res.add(f"span {a} {b}", u.mask(span_spanning(a, b)), ref[at], u)
    return res


@_timed
def check_d_map(cfg: SuiteConfig, r: Allen, pool=None) -> CheckResult:
    u, oracle, at = _dense(cfg)
    pool = pool or spanning_pool(range(cfg.grid))
    rng = random.Random(cfg.seed + 2)
    res = CheckResult(f"d_map {r.value}")
    for s in rng.sample(pool, min(cfg.d_map_inputs, len(pool))):
        ref = oracle.diamond(oracle.atom((s,)), [r])
        res.add(f"D({r.value}, {s})", u.mask(d_map(r, s)), ref[at], u)
    return res


@_timed
def check_i_map(cfg: SuiteConfig, r: Allen, pool=None) -> CheckResult:
    u, oracle, at = _dense(cfg)
    pool = pool or spanning_pool(range(cfg.grid))
    rng = random.Random(cfg.seed + 3)
    res = CheckResult(f"i_map {r.value}")
    for _ in range(cfg.i_map_pairs):
        a, b = rng.choice(pool), rng.choice(pool)
        ref = oracle.conjoin(oracle.atom((a,)), oracle.atom((b,)), [r])
        res.add(f"I({a}, {r.value}, {b})", u.mask(i_map(a, r, b)), ref[at], u)
    return res


def operation_suite(cfg: SuiteConfig = SuiteConfig()) -> List[CheckResult]:
    """Every spanning-interval operation against the reference on the probe grid."""
    pool = spanning_pool(range(cfg.grid))
    out = [check_normalize(cfg), check_intersect(cfg, pool), check_complement(cfg, pool),
           check_span(cfg, pool)]
    out += [check_d_map(cfg, r, pool) for r in ALL_RELATIONS]
    out += [check_i_map(cfg, r, pool) for r in ALL_RELATIONS]
    return out


@dataclass(frozen=True)
class EvalConfig:
    pairs: int = 1000
    grid: int = 6
    atoms: int = 3
    depth: int = 4
    members: int = 2
    seed: int = 0


def random_model(rng: random.Random, cfg: EvalConfig) -> Model:
    """Up to ``cfg.atoms`` nullary atoms, each with a few random spanning intervals."""
    records = []
    for n in range(rng.randint(1, cfg.atoms)):
        members = []
        while len(members) < rng.randint(1, cfg.members):
            i, j = sorted(rng.randint(0, cfg.grid) for _ in range(2))
            k, l = sorted(rng.randint(i, cfg.grid) for _ in range(2))
            flags = [rng.random() < 0.5 for _ in range(6)]
            s = normalize_one(SpanningInterval(i, j, k, l, *flags))
            if s is not None:
                members.append(s)
        records.append(((f"P{n}", ()), members))
    return Model.from_records(records)


def _random_rels(rng: random.Random):
    while True:
        rels = [r for r in ALL_RELATIONS if rng.random() < 0.5]
        if rels:
            return frozenset(rels)


def random_expression(rng: random.Random, names: Sequence[str], depth: int):
    if depth <= 1 or rng.random() < 0.25:
        return Prim(rng.choice(names))
    kind = rng.choice(("not", "or", "and", "diamond"))
    if kind == "not":
        return Not(random_expression(rng, names, depth - 1))
    if kind == "diamond":
        return Diamond(random_expression(rng, names, depth - 1), _random_rels(rng))
    left = random_expression(rng, names, depth - 1)
    right = random_expression(rng, names, depth - 1)
    return Or(left, right) if kind == "or" else And(left, right, _random_rels(rng))


def random_cases(cfg: EvalConfig):
    rng = random.Random(cfg.seed)
    for _ in range(cfg.pairs):
        model = random_model(rng, cfg)
        yield model, random_expression(rng, [name for name, _ in model], cfg.depth)


def check_evaluator(cfg: EvalConfig = EvalConfig()) -> CheckResult:
    """Engine evaluation against the reference on seeded random models and expressions."""
    from .logic import evaluate

    t = time.perf_counter()
    u = GridUniverse.integers(cfg.grid)
    oracle = DenseOracle(u.values)
    at = np.array([oracle.types.index[v] for v in u])
    res = CheckResult("evaluator")
    for model, e in random_cases(cfg):
        res.add(repr(e), u.mask(evaluate(model, e)), oracle.evaluate(model, e)[at], u)
    res.seconds = time.perf_counter() - t
    return res


def local_discrepancies(model: Model, e, oracle: DenseOracle):
    """Per-node comparison of the engine with the reference applied to the engine's inputs.

    Global disagreements can be inherited from a subexpression; this isolates
    the node where each one first appears.  Yields ``(node, missing, extra,
    extra_nondegenerate)`` counts over the type grid for nodes that disagree.
    """
    from .logic import Evaluator

    ev = Evaluator(model)
    ev(e)
    t = oracle.types
    proper = t.lo != t.hi
    seen = set()

    def value(x):
        return oracle.atom(ev(x))

    for node in subexpressions(e):
        if node in seen:
            continue
        seen.add(node)
        got = value(node)
        if isinstance(node, Prim):
            continue
        if isinstance(node, Not):
            want = ~value(node.body)
        elif isinstance(node, Or):
            want = value(node.left) | value(node.right)
        elif isinstance(node, And):
            want = oracle.conjoin(value(node.left), value(node.right), node.rels)
        else:
            want = oracle.diamond(value(node.body), node.rels)
        miss, extra = want & ~got, got & ~want
        if miss.any() or extra.any():
            yield node, int(miss.sum()), int(extra.sum()), int((extra & proper).sum())


__all__ = [
    "GridUniverse", "DenseOracle", "grid_extension", "oracle_eval", "holds_matrix",
    "naive_conjoin", "naive_diamond", "model_constants", "CheckResult", "SuiteConfig",
    "spanning_pool", "raw_spanning", "check_normalize", "check_intersect",
    "check_complement", "check_span", "check_d_map", "check_i_map", "operation_suite",
    "EvalConfig", "random_model", "random_expression", "random_cases", "check_evaluator",
    "local_discrepancies",
]
