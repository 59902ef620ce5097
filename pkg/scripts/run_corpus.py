"""Random-corpus experiment: Graver and UGB sizes, oracle agreement, step ratios."""

import argparse
import time
from dataclasses import asdict

from toric_ugb.binomial import is_primitive_bruteforce, is_primitive_structural, support_walkgraph
from toric_ugb.corpus import CorpusConfig, random_corpus
from toric_ugb.graver import enumerate_walk_binomials, graver_basis
from toric_ugb.ugb import is_mixed_blocks, is_mixed_forest, universal_groebner_basis


def main():
    defaults = CorpusConfig()
    ap = argparse.ArgumentParser(description=__doc__)
    for name, value in asdict(defaults).items():
        ap.add_argument("--" + name.replace("_", "-"), type=int, default=value)
    args = ap.parse_args()
    config = CorpusConfig(**{k: getattr(args, k) for k in asdict(defaults)})

    t0 = time.perf_counter()
    print("n\tm\tcandidates\t|Gr|\t|U|\tmax_ratio")
    totals = dict(candidates=0, graver=0, ugb=0, mismatches=0)
    worst = 0.0
    for g in random_corpus(config):
        candidates = enumerate_walk_binomials(g)
        basis = graver_basis(g)
        ugb, traces = universal_groebner_basis(basis, g)
        for b in candidates:
            structural = bool(is_primitive_structural(support_walkgraph(b, g), g))
            totals["mismatches"] += structural != is_primitive_bruteforce(b, g)
        for b, t in zip(basis, traces):
            ok = t.verdict == "accepted"
            totals["mismatches"] += not ok == is_mixed_blocks(b, g)[0] == is_mixed_forest(b, g)
        ratio = max((t.step_count / b.walk_length ** 3 for b, t in zip(basis, traces)), default=0.0)
        worst = max(worst, ratio)
        totals["candidates"] += len(candidates)
        totals["graver"] += len(basis)
        totals["ugb"] += len(ugb)
        print(f"{g.n}\t{g.m}\t{len(candidates)}\t{len(basis)}\t{len(ugb)}\t{ratio:.4f}")
    print(" ".join(f"{k}={v}" for k, v in totals.items()),
          f"max_ratio={worst:.4f}", f"time={time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
