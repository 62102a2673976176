"""Locate where evaluator disagreements with the reference first arise.

For each random case, every non-atomic node is recomputed by the reference
from the engine's own child values.  A node is blamed only for the error it
introduces, so errors inherited through negation are not double counted.
"""

import argparse
from collections import Counter
from dataclasses import dataclass

from eventspan.oracle import (DenseOracle, EvalConfig, GridUniverse, local_discrepancies,
                              model_constants, random_cases)
from eventspan.syntax import render_expression


@dataclass
class Diagnostic:
    cases: EvalConfig
    show: int = 5


def run(cfg: Diagnostic):
    nodes, missing, extra, nondegenerate = Counter(), Counter(), Counter(), Counter()
    shown = 0
    grid = GridUniverse.integers(cfg.cases.grid).values
    for model, e in random_cases(cfg.cases):
        oracle = DenseOracle(set(grid) | set(model_constants(model)))
        for node, miss, ext, nondeg in local_discrepancies(model, e, oracle):
            kind = type(node).__name__
            nodes[kind] += 1
            missing[kind] += miss
            extra[kind] += ext
            nondegenerate[kind] += nondeg
            if shown < cfg.show:
                print(f"{kind}: {render_expression(node)}  missing={miss} extra={ext} extra_proper={nondeg}")
                shown += 1
    print(f"{'node':8} {'count':>6} {'missing':>8} {'extra':>6} {'proper':>7}")
    for kind in sorted(nodes):
        print(f"{kind:8} {nodes[kind]:6} {missing[kind]:8} {extra[kind]:6} {nondegenerate[kind]:7}")
    return nodes, missing, extra, nondegenerate


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--pairs", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--show", type=int, default=5)
    a = p.parse_args()
    run(Diagnostic(EvalConfig(pairs=a.pairs, seed=a.seed), a.show))


if __name__ == "__main__":
    main()
