"""Exact event-logic inference over intervals with open and closed endpoints."""

from .interval import (ALL_RELATIONS, INF, NEG_INF, Allen, EmptyIntervalError, Interval,
                       allen_relate, holds, interval, make_interval, span_intervals)
from .logic import (EVENT_NAMES, And, Diamond, Evaluator, Lexicon, Model, Not, Occurrence, Or,
                    Prim, any_openness, builtin_lexicon, classify, conj, evaluate, expand,
                    expand_expr, frame_model, seq)
from .relations import d_map, i_map
from .spanning import (EMPTY, SpanningInterval, canonical_union, complement, intersect,
                       member, normalize, span_spanning, spanning, universal)
from .syntax import (ParseError, parse_expression, parse_lexicon, parse_model, render_expression,
                     render_model, render_occurrence)

__version__ = "0.1.0"
