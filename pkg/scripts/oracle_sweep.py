"""Compare every spanning-interval operation and the evaluator with brute-force semantics."""

import argparse
from dataclasses import dataclass, field

from eventspan.oracle import EvalConfig, SuiteConfig, check_evaluator, operation_suite


@dataclass
class Sweep:
    suite: SuiteConfig = field(default_factory=SuiteConfig)
    evaluator: EvalConfig = field(default_factory=EvalConfig)
    skip_evaluator: bool = False


def run(cfg: Sweep):
    results = operation_suite(cfg.suite)
    if not cfg.skip_evaluator:
        results.append(check_evaluator(cfg.evaluator))
    for r in results:
        print(r.summary())
        for ex in r.examples[:3]:
            print(f"    {ex}")
    return results


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--grid", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pairs", type=int, default=1000, help="random evaluator cases")
    p.add_argument("--skip-evaluator", action="store_true")
    a = p.parse_args()
    cfg = Sweep(SuiteConfig(grid=a.grid, seed=a.seed),
                EvalConfig(pairs=a.pairs, seed=a.seed), a.skip_evaluator)
    results = run(cfg)
    exact = sum(r.exact for r in results)
    print(f"{exact}/{len(results)} checks exact")


if __name__ == "__main__":
    main()
