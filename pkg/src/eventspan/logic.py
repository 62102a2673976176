"""Event-logic expressions, models, lexicon expansion and the evaluator.

An expression is built from primitive atoms with negation, disjunction,
relation-constrained conjunction and the relation-constrained diamond.
Evaluating an expression against a model yields a spanning set covering
exactly the intervals over which the expression occurs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .interval import ALL_RELATIONS, OVERLAP_RELATIONS, Allen
from .relations import d_map, i_map
from .spanning import (EMPTY, SpanningInterval, SpanningSet, canonical_union, complement,
                       intersect_one, normalize_one, universal)

EQUALITY = "="

Relations = frozenset  # frozenset[Allen]


def relation_set(rels: Iterable) -> Relations:
    out = frozenset(Allen(r) for r in rels)
    if not out:
        raise ValueError("relation set must be nonempty")
    return out


COINCIDE = frozenset({Allen.EQUAL})
SEQUENCE = frozenset({Allen.MEETS})
OVERLAP = frozenset(OVERLAP_RELATIONS)


class _Node:
    # structural hash, cached: subexpressions are shared heavily after expansion
    __slots__ = ()

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((type(self).__name__,) + tuple(getattr(self, f) for f in self._fields))
            object.__setattr__(self, "_hash", h)
        return h


@dataclass(frozen=True, eq=True)
class Prim(_Node):
    name: str
    args: Tuple[str, ...] = ()
    _fields = ("name", "args")

    __hash__ = _Node.__hash__


@dataclass(frozen=True, eq=True)
class Not(_Node):
    body: "Expr"
    _fields = ("body",)

    __hash__ = _Node.__hash__


@dataclass(frozen=True, eq=True)
class Or(_Node):
    left: "Expr"
    right: "Expr"
    _fields = ("left", "right")

    __hash__ = _Node.__hash__


@dataclass(frozen=True, eq=True)
class And(_Node):
    left: "Expr"
    right: "Expr"
    rels: Relations = COINCIDE
    _fields = ("left", "right", "rels")

    __hash__ = _Node.__hash__

    def __post_init__(self):
        if not self.rels:
            raise ValueError("relation set must be nonempty")


@dataclass(frozen=True, eq=True)
class Diamond(_Node):
    body: "Expr"
    rels: Relations = OVERLAP
    _fields = ("body", "rels")

    __hash__ = _Node.__hash__

    def __post_init__(self):
        if not self.rels:
            raise ValueError("relation set must be nonempty")


Expr = (Prim, Not, Or, And, Diamond)


def seq(*parts) -> "And":
    """Left-nested ``a ; b ; c``."""
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p, SEQUENCE)
    return out


def conj(*parts):
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p, COINCIDE)
    return out


def subexpressions(e) -> Iterator:
    yield e
    if isinstance(e, (Not, Diamond)):
        yield from subexpressions(e.body)
    elif isinstance(e, (Or, And)):
        yield from subexpressions(e.left)
        yield from subexpressions(e.right)


# --------------------------------------------------------------------------- models

Atom = Tuple[str, Tuple[str, ...]]


class Model(Mapping):
    """Map from ground atoms ``(name, args)`` to canonical spanning sets.  Immutable."""

    def __init__(self, entries: Optional[Mapping[Atom, Iterable[SpanningInterval]]] = None):
        merged: Dict[Atom, SpanningSet] = {}
        for (name, args), ss in (entries or {}).items():
            key = (name, tuple(args))
            merged[key] = canonical_union(merged.get(key, ()), ss)
        self._entries = {k: v for k, v in merged.items() if v}

    @classmethod
    def from_records(cls, records: Iterable[Tuple[Atom, Iterable[SpanningInterval]]]) -> "Model":
        acc: Dict[Atom, list] = {}
        for (name, args), ss in records:
            acc.setdefault((name, tuple(args)), []).extend(ss)
        return cls(acc)

    def __getitem__(self, atom: Atom) -> SpanningSet:
        return self._entries[atom]

    def __iter__(self):
        return iter(sorted(self._entries))

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if isinstance(other, Model):
            return self._entries == other._entries
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._entries.items()))

    def __repr__(self):
        return f"Model({len(self)} atoms)"

    def lookup(self, name: str, args: Sequence[str] = ()) -> SpanningSet:
        return self._entries.get((name, tuple(args)), EMPTY)

    def constants(self) -> List[str]:
        """Argument symbols in order of first appearance."""
        seen: Dict[str, None] = {}
        for _, args in self._entries:
            for a in args:
                seen.setdefault(a, None)
        return list(seen)

    def map_sets(self, fn) -> "Model":
        return Model({k: fn(v) for k, v in self._entries.items()})


def any_openness(ss: Iterable[SpanningInterval]) -> SpanningSet:
    """Widen each member to all four endpoint-openness combinations.

    Frame samples say nothing about whether an interval includes its boundary
    instants, so a run over frames a..b supports both closed and open readings.
    Without this, two closed runs can never meet.
    """
    out = []
    for s in ss:
        for lo_closed, hi_closed in itertools.product((True, False), repeat=2):
            n = normalize_one(s._replace(lo_closed=lo_closed, hi_closed=hi_closed))
            if n is not None:
                out.append(n)
    return canonical_union(out)


def frame_model(model: "Model") -> "Model":
    """``model`` with every entry widened by :func:`any_openness`."""
    return model.map_sets(any_openness)


# --------------------------------------------------------------------------- lexicon


class LexiconError(ValueError):
    pass


class UndefinedName(LexiconError):
    pass


class ArityMismatch(LexiconError):
    pass


class CyclicDefinition(LexiconError):
    pass


@dataclass(frozen=True)
class Definition:
    name: str
    params: Tuple[str, ...]
    body: object


@dataclass
class Lexicon:
    definitions: Dict[str, Definition] = field(default_factory=dict)

    def define(self, name: str, params: Sequence[str], body) -> None:
        if name in self.definitions:
            raise LexiconError(f"{name} is already defined")
        self.definitions[name] = Definition(name, tuple(params), body)

    def __contains__(self, name: str) -> bool:
        return name in self.definitions

    def __getitem__(self, name: str) -> Definition:
        try:
            return self.definitions[name]
        except KeyError:
            raise UndefinedName(f"{name} is not defined") from None

    def names(self) -> List[str]:
        return list(self.definitions)

    def merged(self, other: "Lexicon") -> "Lexicon":
        """A copy where ``other``'s definitions replace same-named ones."""
        out = Lexicon(dict(self.definitions))
        out.definitions.update(other.definitions)
        return out

    def check_acyclic(self) -> None:
        state: Dict[str, int] = {}

        def visit(name, path):
            if state.get(name) == 2:
                return
            if state.get(name) == 1:
                raise CyclicDefinition(" -> ".join(path + [name]))
            state[name] = 1
            for sub in subexpressions(self.definitions[name].body):
                if isinstance(sub, Prim) and sub.name in self.definitions:
                    visit(sub.name, path + [name])
            state[name] = 2

        for n in self.definitions:
            visit(n, [])


def _substitute(e, env: Mapping[str, str]):
    if isinstance(e, Prim):
        return Prim(e.name, tuple(env.get(a, a) for a in e.args))
    if isinstance(e, Not):
        return Not(_substitute(e.body, env))
    if isinstance(e, Diamond):
        return Diamond(_substitute(e.body, env), e.rels)
    if isinstance(e, Or):
        return Or(_substitute(e.left, env), _substitute(e.right, env))
    if isinstance(e, And):
        return And(_substitute(e.left, env), _substitute(e.right, env), e.rels)
    raise TypeError(f"not an expression: {e!r}")


def expand(lex: Lexicon, name: str, args: Sequence[str] = ()):
    """Inline ``name(args)`` and every definition it references.

    ``name`` itself must be defined; names it references that are not are
    taken to be primitives.
    """
    lex[name]
    return _expand(lex, Prim(name, tuple(args)), (), {})


def expand_expr(lex: Lexicon, e):
    """Inline every defined name occurring in ``e``."""
    return _expand(lex, e, (), {})


def _expand(lex, e, stack, memo):
    if isinstance(e, Prim):
        if e.name not in lex:
            return e
        if e.name in stack:
            raise CyclicDefinition(" -> ".join(stack + (e.name,)))
        if e in memo:
            return memo[e]
        d = lex[e.name]
        if len(d.params) != len(e.args):
            raise ArityMismatch(f"{e.name} takes {len(d.params)} arguments, got {len(e.args)}")
        body = _substitute(d.body, dict(zip(d.params, e.args)))
        out = _expand(lex, body, stack + (e.name,), memo)
        memo[e] = out
        return out
    if isinstance(e, Not):
        return Not(_expand(lex, e.body, stack, memo))
    if isinstance(e, Diamond):
        return Diamond(_expand(lex, e.body, stack, memo), e.rels)
    if isinstance(e, Or):
        return Or(_expand(lex, e.left, stack, memo), _expand(lex, e.right, stack, memo))
    if isinstance(e, And):
        return And(_expand(lex, e.left, stack, memo), _expand(lex, e.right, stack, memo), e.rels)
    raise TypeError(f"not an expression: {e!r}")


# --------------------------------------------------------------------------- evaluation


def negate(ss: SpanningSet) -> SpanningSet:
    """Spanning set covering every interval outside ``ss``."""
    acc = universal()
    for s in ss:
        comp = complement(s)
        nxt = []
        for x in acc:
            for c in comp:
                y = intersect_one(x, c)
                if y is not None:
                    nxt.append(y)
        acc = canonical_union(nxt)
        if not acc:
            break
    return acc


def conjoin(left: SpanningSet, right: SpanningSet, rels: Iterable[Allen]) -> SpanningSet:
    if not left or not right:
        return EMPTY
    out = []
    for r in sorted(rels, key=ALL_RELATIONS.index):
        for a in left:
            for b in right:
                out.extend(i_map(a, r, b))
    return canonical_union(out)


def diamond(body: SpanningSet, rels: Iterable[Allen]) -> SpanningSet:
    out = []
    for r in sorted(rels, key=ALL_RELATIONS.index):
        for s in body:
            out.extend(d_map(r, s))
    return canonical_union(out)


class Evaluator:
    """Evaluates expressions against one model, memoizing shared subexpressions."""

    def __init__(self, model: Model):
        self.model = model
        self._memo: Dict[object, SpanningSet] = {}

    def __call__(self, e) -> SpanningSet:
        hit = self._memo.get(e)
        if hit is not None:
            return hit
        out = self._eval(e)
        self._memo[e] = out
        return out

    def _eval(self, e) -> SpanningSet:
        if isinstance(e, Prim):
            if e.name == EQUALITY and len(e.args) == 2:
                return universal() if e.args[0] == e.args[1] else EMPTY
            return self.model.lookup(e.name, e.args)
        if isinstance(e, Not):
            return negate(self(e.body))
        if isinstance(e, Or):
            return canonical_union(self(e.left), self(e.right))
        if isinstance(e, And):
            left = self(e.left)
            if not left:
                return EMPTY
            return conjoin(left, self(e.right), e.rels)
        if isinstance(e, Diamond):
            return diamond(self(e.body), e.rels)
        raise TypeError(f"not an expression: {e!r}")


def evaluate(model: Model, e) -> SpanningSet:
    return Evaluator(model)(e)


# --------------------------------------------------------------------------- classification


@dataclass(frozen=True)
class Occurrence:
    event: str
    args: Tuple[str, ...]
    when: SpanningSet


def classify(model: Model, lex: Lexicon, event_names: Optional[Sequence[str]] = None,
             objects: Optional[Sequence[str]] = None) -> List[Occurrence]:
    """Every ground instance of the named events with a nonempty occurrence set.

    Instances use ordered tuples of distinct objects.  Events default to the
    built-in verbs the lexicon defines, or to every lexicon entry if it
    defines none of them.  Results are sorted by event name, then arguments.
    """
    if event_names is None:
        event_names = [n for n in EVENT_NAMES if n in lex] or lex.names()
    names = list(event_names)
    objs = list(objects) if objects is not None else model.constants()
    ev = Evaluator(model)
    memo: Dict[object, object] = {}
    found = []
    for name in names:
        arity = len(lex[name].params)
        for args in itertools.permutations(objs, arity):
            e = _expand(lex, Prim(name, args), (), memo)
            when = ev(e)
            if when:
                found.append(Occurrence(name, tuple(args), when))
    found.sort(key=lambda o: (o.event, o.args))
    return found


EVENT_NAMES = ("PICK-UP", "PUT-DOWN", "STACK", "UNSTACK", "MOVE", "ASSEMBLE", "DISASSEMBLE")


def builtin_lexicon(disassemble: str = "agent") -> Lexicon:
    """The shipped block-world lexicon (``data/verbs.lex``).

    ``disassemble="patient"`` swaps in the DISASSEMBLE variant whose final
    pick-up is performed by the unstacked block rather than the agent.
    """
    from importlib.resources import files

    from .syntax import parse_lexicon

    data = files("eventspan").joinpath("data")
    lex = parse_lexicon(data.joinpath("verbs.lex").read_text())
    if disassemble == "patient":
        lex = lex.merged(parse_lexicon(data.joinpath("disassemble_printed.lex").read_text()))
        lex.check_acyclic()
    elif disassemble != "agent":
        raise ValueError(f"unknown DISASSEMBLE reading {disassemble!r}")
    return lex
