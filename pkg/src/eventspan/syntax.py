"""Text formats: model files, event-logic expressions and lexicons.

Model files hold one record per atom::

    (SUPPORTS? GREEN RED)@{[[0:14]]}
    (ATTACHED? RED GREEN)@{[[1,6],(6,9]], ([2:3])}   ; comment

``[[a:b]]`` is shorthand for the spanning interval whose two ranges are both
``[a,b]``; the full form gives both ranges.  Any bracket may be replaced by
its round counterpart to make that position open.  Endpoints are integers,
decimals, ``inf`` or ``-inf``.

Expressions use ``!``/``NOT``, ``|``/``OR``, ``&``/``AND`` (optionally with a
relation set, ``&{<,m}``), ``;`` for ``&{m}`` and ``<>`` (optionally
``<>{d}``).  Negation and diamonds bind tightest, then the conjunction
family (left associative), then disjunction.  ``x = y`` compares constants.

Lexicon files are a sequence of ``DEFINE NAME(p, ...) = expression``; ``#``
starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from .interval import ALL_RELATIONS, INF, NEG_INF, Allen
from .logic import (COINCIDE, EQUALITY, OVERLAP, SEQUENCE, And, Diamond, Lexicon, Model,
                    Not, Or, Prim, relation_set)
from .spanning import SpanningInterval, normalize_one, render_set, render_spanning


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int = 0):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"line {line}, column {col}: {message}")
        self.line, self.column = line, col


def parse_number(token: str):
    t = token.strip()
    low = t.lower()
    if low in ("inf", "+inf"):
        return INF
    if low == "-inf":
        return NEG_INF
    if "/" in t:
        # exact rationals, as printed for non-decimal fractions
        try:
            f = Fraction(t)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not a number: {token!r}") from None
        return f.numerator if f.denominator == 1 else f
    try:
        d = Decimal(t)
    except InvalidOperation:
        raise ValueError(f"not a number: {token!r}") from None
    if not d.is_finite():
        raise ValueError(f"not a number: {token!r}")
    f = Fraction(d)
    return f.numerator if f.denominator == 1 else f


# --------------------------------------------------------------------------- model files

_NUM = r"[-+]?(?:inf|\d+/\d+|\d+(?:\.\d*)?|\.\d+)"
_OB, _CB = r"[\[(]", r"[\])]"
_SHORT = re.compile(rf"({_OB})\s*({_OB})\s*({_NUM})\s*:\s*({_NUM})\s*({_CB})\s*({_CB})")
_FULL = re.compile(
    rf"({_OB})\s*({_OB})\s*({_NUM})\s*,\s*({_NUM})\s*({_CB})\s*,"
    rf"\s*({_OB})\s*({_NUM})\s*,\s*({_NUM})\s*({_CB})\s*({_CB})")
_NAME = re.compile(r"[^\s()\[\]{}@,;]+")


def parse_spanning(text: str) -> SpanningInterval:
    """One spanning interval in either bracket form.  Not normalized."""
    m = _FULL.fullmatch(text.strip())
    if m:
        a, g, i, j, d, e, k, l, z, b = m.groups()
        return SpanningInterval(parse_number(i), parse_number(j), parse_number(k),
                                parse_number(l), a == "[", b == "]", g == "[", d == "]",
                                e == "[", z == "]")
    m = _SHORT.fullmatch(text.strip())
    if m:
        a, g, i, j, d, b = m.groups()
        lo, hi = parse_number(i), parse_number(j)
        return SpanningInterval(lo, hi, lo, hi, a == "[", b == "]", g == "[", d == "]",
                                g == "[", d == "]")
    raise ValueError(f"not a spanning interval: {text!r}")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str) -> ParseError:
        return ParseError(msg, self.text, self.pos)

    def skip(self) -> None:
        text, n = self.text, len(self.text)
        while self.pos < n:
            c = text[self.pos]
            if c.isspace():
                self.pos += 1
            elif c == ";":
                end = text.find("\n", self.pos)
                self.pos = n if end < 0 else end
            else:
                break

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos:self.pos + 1]

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.text[self.pos:self.pos + 1] or "end of input"
            raise self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def name(self) -> str:
        self.skip()
        m = _NAME.match(self.text, self.pos)
        if not m:
            raise self.error("expected a name")
        self.pos = m.end()
        return m.group()

    def match(self, pattern: re.Pattern) -> Optional[re.Match]:
        self.skip()
        m = pattern.match(self.text, self.pos)
        if m:
            self.pos = m.end()
        return m


def parse_model_records(text: str, warn=None) -> List[Tuple[Tuple[str, Tuple[str, ...]], list]]:
    """Raw records in file order, spanning intervals normalized.

    Spanning intervals that normalize to nothing are dropped with a call to
    ``warn(message)``.
    """
    sc = _Scanner(text)
    out = []
    while sc.peek():
        sc.expect("(")
        name = sc.name()
        args = []
        while sc.peek() != ")":
            if not sc.peek():
                raise sc.error("unterminated atom")
            args.append(sc.name())
        sc.expect(")")
        sc.expect("@")
        sc.expect("{")
        members = []
        while True:
            sc.skip()
            here = sc.pos
            m = sc.match(_FULL) or sc.match(_SHORT)
            if not m:
                sc.pos = here
                raise sc.error("expected a spanning interval")
            raw = parse_spanning(m.group())
            n = normalize_one(raw)
            if n is None:
                if warn is not None:
                    line = text.count("\n", 0, here) + 1
                    warn(f"line {line}: {m.group()} is empty; skipped")
            else:
                members.append(n)
            if sc.peek() == ",":
                sc.pos += 1
                continue
            sc.expect("}")
            break
        out.append(((name, tuple(args)), members))
    return out


def parse_model(text: str, warn=None) -> Model:
    """Parse a model file.  Records for the same atom are merged."""
    return Model.from_records(parse_model_records(text, warn))


def render_model(model: Model) -> str:
    lines = []
    for atom in model:
        name, args = atom
        head = " ".join((name,) + tuple(args))
        body = ", ".join(render_spanning(s) for s in model[atom])
        lines.append(f"({head})@{{{body}}}")
    return "\n".join(lines) + ("\n" if lines else "")


# --------------------------------------------------------------------------- expressions

_TOKEN = re.compile(r"""
    (?P<ws>\s+|\#[^\n]*)
  | (?P<diamond><>)
  | (?P<relset>\{[^}]*\})
  | (?P<punct>[()\[\],|&;!=])
  | (?P<name>[A-Za-z0-9_?.\-+*/']+)
""", re.VERBOSE)

_KEYWORDS = {"NOT": "!", "OR": "|", "AND": "&"}


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> List[_Tok]:
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind != "ws":
            tok = m.group()
            if kind == "name" and tok in _KEYWORDS:
                out.append(_Tok("punct", _KEYWORDS[tok], pos))
            elif kind == "name" and tok == "DEFINE":
                out.append(_Tok("define", tok, pos))
            else:
                out.append(_Tok(kind, tok, pos))
        pos = m.end()
    out.append(_Tok("eof", "", len(text)))
    return out


class _ExprParser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, msg: str, tok: Optional[_Tok] = None) -> ParseError:
        return ParseError(msg, self.text, (tok or self.tok).pos)

    def take(self, text: Optional[str] = None, kind: Optional[str] = None) -> _Tok:
        t = self.tok
        if (text is not None and t.text != text) or (kind is not None and t.kind != kind):
            want = text or kind
            raise self.error(f"expected {want!r}, found {t.text or 'end of input'!r}")
        self.i += 1
        return t

    def at(self, text: str) -> bool:
        return self.tok.kind == "punct" and self.tok.text == text

    def relset(self, default):
        if self.tok.kind != "relset":
            return default
        t = self.take()
        body = t.text[1:-1]
        items = [x.strip() for x in body.split(",") if x.strip()]
        if not items:
            raise self.error("empty relation set", t)
        try:
            return relation_set(Allen.parse(x) for x in items)
        except ValueError as exc:
            raise self.error(str(exc), t) from None

    def disjunction(self):
        left = self.conjunction()
        while self.at("|"):
            self.take()
            left = Or(left, self.conjunction())
        return left

    def conjunction(self):
        left = self.unary()
        while True:
            if self.at("&"):
                self.take()
                rels = self.relset(COINCIDE)
            elif self.at(";"):
                self.take()
                rels = SEQUENCE
            else:
                return left
            left = And(left, self.unary(), rels)

    def unary(self):
        if self.at("!"):
            self.take()
            return Not(self.unary())
        if self.tok.kind == "diamond":
            self.take()
            rels = self.relset(OVERLAP)
            return Diamond(self.unary(), rels)
        return self.primary()

    def primary(self):
        if self.at("("):
            self.take()
            e = self.disjunction()
            self.take(")")
            return e
        if self.at("["):
            self.take()
            e = self.disjunction()
            self.take("]")
            return e
        if self.at("="):
            self.take()
            args = self.arguments()
            if len(args) != 2:
                raise self.error("= takes two arguments")
            return Prim(EQUALITY, args)
        if self.tok.kind != "name":
            raise self.error(f"expected an expression, found {self.tok.text or 'end of input'!r}")
        name = self.take().text
        args: Tuple[str, ...] = ()
        if self.at("("):
            args = self.arguments()
        if self.at("=") and not args:
            self.take()
            other = self.take(kind="name").text
            return Prim(EQUALITY, (name, other))
        return Prim(name, args)

    def arguments(self) -> Tuple[str, ...]:
        self.take("(")
        args = []
        if not self.at(")"):
            args.append(self.take(kind="name").text)
            while self.at(","):
                self.take()
                args.append(self.take(kind="name").text)
        self.take(")")
        return tuple(args)


def parse_expression(text: str):
    p = _ExprParser(text)
    e = p.disjunction()
    if p.tok.kind != "eof":
        raise p.error(f"unexpected {p.tok.text!r}")
    return e


def parse_lexicon(text: str, lexicon: Optional[Lexicon] = None) -> Lexicon:
    """Parse ``DEFINE`` entries into ``lexicon`` (a new one by default)."""
    lex = lexicon if lexicon is not None else Lexicon()
    p = _ExprParser(text)
    while p.tok.kind != "eof":
        start = p.take(kind="define")
        name = p.take(kind="name").text
        params = p.arguments() if p.at("(") else ()
        p.take("=")
        body = p.disjunction()
        if name in lex:
            raise p.error(f"{name} is already defined", start)
        lex.define(name, params, body)
    lex.check_acyclic()
    return lex


def _rels_text(rels) -> str:
    return ",".join(r.value for r in ALL_RELATIONS if r in rels)


_PREC = {Or: 1, And: 2}


def render_expression(e, _need: int = 0) -> str:
    if isinstance(e, Prim):
        if e.name == EQUALITY and len(e.args) == 2:
            text, prec = f"{e.args[0]} = {e.args[1]}", 3
        elif e.args:
            text, prec = f"{e.name}({','.join(e.args)})", 3
        else:
            text, prec = e.name, 3
    elif isinstance(e, Not):
        text, prec = "!" + render_expression(e.body, 3), 3
    elif isinstance(e, Diamond):
        op = "<>" if e.rels == OVERLAP else "<>{" + _rels_text(e.rels) + "}"
        text, prec = op + render_expression(e.body, 3), 3
    elif isinstance(e, Or):
        text = render_expression(e.left, 1) + " | " + render_expression(e.right, 2)
        prec = 1
    elif isinstance(e, And):
        if e.rels == COINCIDE:
            op = " & "
        elif e.rels == SEQUENCE:
            op = " ; "
        else:
            op = " &{" + _rels_text(e.rels) + "} "
        text = render_expression(e.left, 2) + op + render_expression(e.right, 3)
        prec = 2
    else:
        raise TypeError(f"not an expression: {e!r}")
    return f"({text})" if prec < _need else text


def render_lexicon(lex: Lexicon) -> str:
    out = []
    for d in lex.definitions.values():
        out.append(f"DEFINE {d.name}({', '.join(d.params)}) =\n    {render_expression(d.body)}\n")
    return "\n".join(out)


# --------------------------------------------------------------------------- occurrences


def render_occurrence(event: str, args: Iterable[str], when, show_openness: bool = False) -> str:
    """``(EVENT A B)@{...}``.  Openness is dropped unless asked for."""
    head = " ".join((event,) + tuple(args))
    return f"({head})@{render_set(when, show_openness=show_openness)}"


__all__ = [
    "ParseError", "parse_number", "parse_spanning", "parse_model", "parse_model_records",
    "render_model", "parse_expression", "render_expression", "parse_lexicon",
    "render_lexicon", "render_occurrence",
]
