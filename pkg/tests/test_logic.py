import pytest
from hypothesis import given, strategies as st

from eventspan.interval import ALL_RELATIONS, OVERLAP_RELATIONS, Allen
from eventspan.logic import (EVENT_NAMES, And, ArityMismatch, CyclicDefinition, Diamond,
                             Lexicon, Model, Not, Or, Prim, UndefinedName, any_openness,
                             builtin_lexicon, classify, evaluate, expand, frame_model, negate)
from eventspan.oracle import EvalConfig, GridUniverse, grid_extension, random_cases
from eventspan.spanning import spanning, universal
from eventspan.syntax import parse_expression, parse_lexicon, parse_model

from conftest import FIXTURES

P, Q = Prim("P", ("c",)), Prim("Q", ("c",))


def model(**entries):
    return Model({(name, ("c",)): ss for name, ss in entries.items()})


def test_primitive_lookup():
    m = model(P=[spanning((0, 22), (0, 22))])
    assert evaluate(m, P) == (spanning((0, 22), (0, 22)),)
    assert evaluate(m, Q) == ()


def test_negating_nothing_is_everything():
    assert evaluate(Model(), Not(P)) == universal()
    assert negate(()) == universal()
    assert negate(universal()) == ()


def test_equality_atoms():
    assert evaluate(Model(), Prim("=", ("a", "a"))) == universal()
    assert evaluate(Model(), Prim("=", ("a", "b"))) == ()


def test_duplicate_atoms_merge():
    m = Model.from_records([(("P", ("c",)), [spanning((0, 2), (0, 2))]),
                            (("P", ("c",)), [spanning((0, 1), (0, 1)), spanning((5, 6), (5, 6))])])
    assert m.lookup("P", ("c",)) == (spanning((0, 2), (0, 2)), spanning((5, 6), (5, 6)))


def test_any_openness_adds_open_variants():
    got = any_openness([spanning((0, 2), (0, 2))])
    assert {(s.lo_closed, s.hi_closed) for s in got} == {(True, True), (True, False),
                                                         (False, True), (False, False)}


def test_sequence_needs_open_boundaries():
    m = model(P=[spanning((0, 5), (0, 5))], Q=[spanning((5, 9), (5, 9))])
    seq = And(P, Q, frozenset({Allen.MEETS}))
    assert evaluate(m, seq) == ()
    assert evaluate(frame_model(m), seq)


def _nodes(depth):
    leaf = st.sampled_from([Prim("P0"), Prim("P1")])
    rels = st.frozensets(st.sampled_from(ALL_RELATIONS), min_size=1)
    return st.recursive(leaf, lambda kids: st.one_of(
        st.builds(Not, kids), st.builds(Or, kids, kids), st.builds(And, kids, kids, rels),
        st.builds(Diamond, kids, rels)), max_leaves=depth)


def _model(seed):
    m, _ = next(iter(random_cases(EvalConfig(pairs=1, grid=4, seed=seed))))
    return m


@given(st.integers(0, 10_000), _nodes(4))
def test_double_negation(seed, e):
    m, u = _model(seed), GridUniverse.integers(4)
    assert grid_extension(evaluate(m, Not(Not(e))), u) == grid_extension(evaluate(m, e), u)


@given(st.integers(0, 10_000), _nodes(3), _nodes(3), _nodes(3))
def test_or_laws(seed, a, b, c):
    m, u = _model(seed), GridUniverse.integers(4)
    ext = lambda e: grid_extension(evaluate(m, e), u)
    assert ext(Or(a, b)) == ext(Or(b, a))
    assert ext(Or(Or(a, b), c)) == ext(Or(a, Or(b, c)))


@given(st.integers(0, 10_000), _nodes(3), _nodes(3),
       st.frozensets(st.sampled_from(ALL_RELATIONS), min_size=1),
       st.frozensets(st.sampled_from(ALL_RELATIONS), min_size=1))
def test_and_monotone_in_relations(seed, a, b, r1, r2):
    m, u = _model(seed), GridUniverse.integers(4)
    small = grid_extension(evaluate(m, And(a, b, r1)), u)
    big = grid_extension(evaluate(m, And(a, b, r1 | r2)), u)
    assert small <= big


def test_default_diamond_relations():
    assert parse_expression("<>A").rels == OVERLAP_RELATIONS


# -- lexicon


def test_expand_substitutes_parameters():
    lex = parse_lexicon("DEFINE TOUCH(x, y) = CONTACTS?(x, y) | CONTACTS?(y, x)")
    assert expand(lex, "TOUCH", ("A", "B")) == Or(Prim("CONTACTS?", ("A", "B")),
                                                  Prim("CONTACTS?", ("B", "A")))


def test_expand_move_inlines_both_halves():
    lex = builtin_lexicon()
    e = expand(lex, "MOVE", ("w", "x", "y", "z"))
    assert isinstance(e, And) and e.rels == frozenset({Allen.EQUAL})
    assert e.left == Not(Diamond(Prim("=", ("y", "z")), OVERLAP_RELATIONS))
    assert e.right.rels == frozenset({Allen.MEETS})
    assert e.right.left == expand(lex, "PICK-UP", ("w", "x", "y"))
    assert e.right.right == expand(lex, "PUT-DOWN", ("w", "x", "z"))
    names = {n.name for n in _walk(e)}
    assert not names & set(lex.names())


def _walk(e):
    from eventspan.logic import subexpressions
    return [n for n in subexpressions(e) if isinstance(n, Prim)]


def test_lexicon_errors():
    with pytest.raises(CyclicDefinition):
        parse_lexicon("DEFINE A = B\nDEFINE B = A")
    lex = parse_lexicon("DEFINE A(x) = P(x)")
    with pytest.raises(ArityMismatch):
        expand(lex, "A", ("a", "b"))
    with pytest.raises(UndefinedName):
        expand(lex, "NOPE", ())


def test_builtin_lexicon_has_seven_verbs():
    lex = builtin_lexicon()
    assert set(EVENT_NAMES) <= set(lex.names())
    alt = builtin_lexicon("patient")
    assert alt["DISASSEMBLE"].body != lex["DISASSEMBLE"].body
    with pytest.raises(ValueError):
        builtin_lexicon("other")


def test_classify_empty_model():
    assert classify(Model(), builtin_lexicon()) == []


def test_classify_defaults_to_builtin_verbs():
    lex = builtin_lexicon()
    m = frame_model(parse_model((FIXTURES / "fig05b.model").read_text()))
    occ = classify(m, lex)
    assert [(o.event, o.args) for o in occ] == [("PUT-DOWN", ("MOVING", "RED", "GREEN"))]


def test_classify_custom_lexicon_and_objects():
    lex = parse_lexicon("DEFINE HOLDS(x) = P(x)")
    m = Model({("P", ("a",)): [spanning((0, 1), (0, 1))], ("P", ("b",)): [spanning((2, 3), (2, 3))]})
    assert [o.args for o in classify(m, lex)] == [("a",), ("b",)]
    assert [o.args for o in classify(m, lex, objects=["b"])] == [("b",)]
