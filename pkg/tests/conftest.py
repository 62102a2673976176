from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from eventspan.interval import INF, NEG_INF, make_interval
from eventspan.oracle import DenseOracle, GridUniverse
from eventspan.spanning import SpanningInterval, normalize_one

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"

flags = st.booleans()
small = st.integers(min_value=0, max_value=4)
rational = st.builds(Fraction, st.integers(-6, 12), st.sampled_from([1, 2, 3]))
range_end = st.one_of(st.integers(0, 3), st.sampled_from([NEG_INF, INF]))


@st.composite
def intervals(draw, ends=small):
    lo, hi = sorted((draw(ends), draw(ends)))
    v = make_interval(lo, hi, draw(flags), draw(flags))
    if v is None:
        v = make_interval(lo, lo, True, True)
    return v


@st.composite
def raw_spanning(draw, ends=range_end):
    return SpanningInterval(*(draw(ends) for _ in range(4)), *(draw(flags) for _ in range(6)))


@st.composite
def spanning_intervals(draw, ends=range_end):
    s = normalize_one(draw(raw_spanning(ends)))
    if s is None:
        s = SpanningInterval(0, 1, 1, 2, True, True, True, True, True, True)
    return s


@pytest.fixture(scope="session")
def probe():
    """Probe intervals with endpoints 0..4."""
    return GridUniverse.integers(4)


@pytest.fixture(scope="session")
def dense():
    """Reference semantics for sets built from the constants 0..4, with probe positions."""
    u = GridUniverse.integers(4)
    oracle = DenseOracle(u.values)
    return oracle, [oracle.types.index[v] for v in u]
