"""Per-frame predicate streams and the majority-vote smoothing filter.

A raw stream file holds one ground predicate per line::

    NAME ARG* START BITS

where ``START`` is the frame index of the first bit and ``BITS`` is a string
over ``{0,1}``.  Filtering turns each stream into runs of true frames; a run
over frames ``a..b`` becomes the spanning interval ``[[a:b+1]]`` so that a run
and the run following it share a boundary.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .logic import Model
from .spanning import SpanningInterval, spanning
from .syntax import ParseError

WINDOW = 5

_BITS = re.compile(r"[01]+")


@dataclass(frozen=True)
class RawStream:
    name: str
    args: Tuple[str, ...]
    start: int
    bits: Tuple[bool, ...]

    def __post_init__(self):
        if not self.bits:
            raise ValueError("a raw stream needs at least one frame")


def parse_raw_streams(text: str) -> List[RawStream]:
    streams = []
    offset = 0
    for line in text.splitlines(keepends=True):
        pos, offset = offset, offset + len(line)
        fields = line.split(";", 1)[0].split()
        if not fields:
            continue
        if len(fields) < 3:
            raise ParseError("expected NAME ARG* START BITS", text, pos)
        *head, start, bits = fields
        if not re.fullmatch(r"-?\d+", start):
            raise ParseError(f"frame index {start!r} is not an integer", text, pos)
        if not _BITS.fullmatch(bits):
            raise ParseError(f"bits {bits!r} must be 0s and 1s", text, pos)
        streams.append(RawStream(head[0], tuple(head[1:]), int(start),
                                 tuple(c == "1" for c in bits)))
    return streams


def majority_filter(bits: Sequence[bool], window: int = WINDOW) -> List[bool]:
    """Replace each bit by the majority over a centred window.

    The window is clipped at the ends of the stream; a tied vote keeps the
    original bit.
    """
    half = window // 2
    out = []
    n = len(bits)
    for t, bit in enumerate(bits):
        votes = bits[max(0, t - half):min(n, t + half + 1)]
        yes = sum(votes)
        no = len(votes) - yes
        out.append(bit if yes == no else yes > no)
    return out


def true_runs(bits: Sequence[bool], start: int = 0) -> List[Tuple[int, int]]:
    """Maximal runs of true bits as inclusive ``(first, last)`` frame pairs."""
    runs = []
    first = None
    for offset, bit in enumerate(bits):
        if bit and first is None:
            first = offset
        elif not bit and first is not None:
            runs.append((start + first, start + offset - 1))
            first = None
    if first is not None:
        runs.append((start + first, start + len(bits) - 1))
    return runs


def run_interval(first: int, last: int) -> SpanningInterval:
    return spanning((first, last + 1), (first, last + 1))


def filter_streams(streams: Iterable[RawStream], window: int = WINDOW) -> Model:
    records = []
    for s in streams:
        runs = true_runs(majority_filter(s.bits, window), s.start)
        records.append(((s.name, s.args), [run_interval(a, b) for a, b in runs]))
    return Model.from_records(records)


__all__ = ["RawStream", "parse_raw_streams", "majority_filter", "true_runs",
           "run_interval", "filter_streams", "WINDOW"]
