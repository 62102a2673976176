import numpy as np
import pytest

from eventspan.interval import ALL_RELATIONS, Allen, interval
from eventspan.logic import And, Diamond, Model, Not, Prim
from eventspan.oracle import (DenseOracle, EvalConfig, GridUniverse, grid_extension,
                              local_discrepancies, naive_conjoin, naive_diamond, oracle_eval,
                              random_cases)
from eventspan.spanning import spanning, universal


def test_grid_universe_counts():
    u = GridUniverse.integers(3)
    # 6 proper pairs with 4 openness choices, plus 4 points
    assert len(u) == 6 * 4 + 4
    assert len(set(u)) == len(u)


def test_grid_extension_examples():
    u = GridUniverse([0, 1, 2, 3])
    assert grid_extension((), u) == set()
    assert grid_extension(universal(), u) == set(u)
    assert grid_extension([spanning((1, 2), (1, 2))], u) == {interval(1, 1), interval(1, 2),
                                                              interval(2, 2)}


def test_oracle_matches_naive_enumeration():
    """On the witness grid itself, the vectorized connectives equal pairwise enumeration."""
    oracle = DenseOracle([0])
    types, wit = oracle.types, oracle.witnesses
    rng = np.random.default_rng(1)
    for _ in range(3):
        a = oracle.canonical(rng.random(len(types)) < 0.3)
        b = oracle.canonical(rng.random(len(types)) < 0.3)
        lift_a = {wit.intervals[n] for n in np.flatnonzero(oracle.lift(a))}
        lift_b = {wit.intervals[n] for n in np.flatnonzero(oracle.lift(b))}
        for r in ALL_RELATIONS:
            want = {v for v in naive_conjoin(wit, lift_a, lift_b, [r]) if v in types.index}
            assert oracle.restrict(oracle.conjoin(a, b, [r]), types) == want
            assert oracle.restrict(oracle.diamond(a, [r]), types) == naive_diamond(lift_a, types, [r])


def test_integer_grid_alone_is_not_enough():
    # the subintervals of (1,2) all have non-integer endpoints
    m = Model({("P", ()): [spanning((1, 1), (2, 2), False, False)]})
    inside = Diamond(Prim("P"), frozenset({Allen.CONTAINS}))
    around = Diamond(inside, frozenset({Allen.DURING}))
    u = GridUniverse.integers(3)
    grid_inside = naive_diamond(grid_extension(m.lookup("P"), u), u, [Allen.CONTAINS])
    assert grid_inside == set()
    assert naive_diamond(grid_inside, u, [Allen.DURING]) == set()
    assert interval(1, 2, False, False) in oracle_eval(m, around, u)


def test_oracle_eval_basics():
    m = Model({("P", ()): [spanning((0, 2), (1, 3))], ("Q", ()): [spanning((1, 2), (2, 3))]})
    u = GridUniverse.integers(3)
    p, q = Prim("P"), Prim("Q")
    assert oracle_eval(m, p, u) == grid_extension(m.lookup("P"), u)
    both = oracle_eval(m, And(p, q, frozenset({Allen.EQUAL})), u)
    assert both == oracle_eval(m, p, u) & oracle_eval(m, q, u)
    assert oracle_eval(m, Not(p), u) == set(u) - oracle_eval(m, p, u)


def test_random_cases_are_seeded():
    a = [repr(e) for _, e in random_cases(EvalConfig(pairs=5, seed=3))]
    b = [repr(e) for _, e in random_cases(EvalConfig(pairs=5, seed=3))]
    assert a == b


def test_evaluator_residue_is_local_and_degenerate():
    """Every node where the engine departs from the reference adds only point intervals."""
    cfg = EvalConfig(pairs=200, seed=7)
    oracle = DenseOracle(range(cfg.grid + 1))
    for model, e in random_cases(cfg):
        for node, missing, extra, proper in local_discrepancies(model, e, oracle):
            assert missing == 0 and proper == 0, node
