"""Classify every fixture model and compare it with its expected listing."""

import argparse
import time
from dataclasses import dataclass
from pathlib import Path

from eventspan.logic import builtin_lexicon, classify, frame_model
from eventspan.syntax import parse_model, render_occurrence

ROOT = Path(__file__).resolve().parents[1]


@dataclass
class FixtureRun:
    fixtures: Path = ROOT / "tests" / "fixtures"
    disassemble: str = "agent"
    literal: bool = False
    recursive: bool = True


def run(cfg: FixtureRun) -> int:
    lex = builtin_lexicon(cfg.disassemble)
    pattern = "**/*.model" if cfg.recursive else "*.model"
    failures = 0
    for path in sorted(cfg.fixtures.glob(pattern)):
        model = parse_model(path.read_text())
        if not cfg.literal:
            model = frame_model(model)
        start = time.perf_counter()
        occ = classify(model, lex)
        seconds = time.perf_counter() - start
        got = sorted(render_occurrence(o.event, o.args, o.when) for o in occ)
        want_path = path.with_suffix(".expected")
        want = sorted(l for l in want_path.read_text().splitlines() if l) if want_path.exists() else None
        status = "----" if want is None else ("ok  " if got == want else "DIFF")
        failures += status == "DIFF"
        print(f"{status} {path.relative_to(cfg.fixtures)}  {seconds * 1000:.0f} ms")
        for line in got:
            print(f"     {line}")
        if want is not None and got != want:
            for line in sorted(set(want) - set(got)):
                print(f"   - {line}")
            for line in sorted(set(got) - set(want)):
                print(f"   + {line}")
    return failures


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--fixtures", type=Path, default=FixtureRun.fixtures)
    p.add_argument("--disassemble", choices=["agent", "patient"], default=FixtureRun.disassemble)
    p.add_argument("--literal", action="store_true")
    p.add_argument("--top-only", action="store_true", help="skip fixture subdirectories")
    a = p.parse_args()
    cfg = FixtureRun(a.fixtures, a.disassemble, a.literal, not a.top_only)
    raise SystemExit(1 if run(cfg) else 0)


if __name__ == "__main__":
    main()
