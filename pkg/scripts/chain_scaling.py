"""Cycle chains: |Gr_A| = k grows linearly while n = 4k; total filter steps per k."""

import argparse

from toric_ugb.corpus import cycle_chain
from toric_ugb.graver import graver_basis
from toric_ugb.ugb import universal_groebner_basis


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=6)
    ap.add_argument("--path-length", type=int, default=1)
    args = ap.parse_args()
    print("k\tn\tm\t|Gr|\t|U|\tsteps")
    for k in range(1, args.max_k + 1):
        g = cycle_chain(k, args.path_length)
        basis = graver_basis(g)
        ugb, traces = universal_groebner_basis(basis, g)
        steps = sum(t.step_count for t in traces)
        print(f"{k}\t{g.n}\t{g.m}\t{len(basis)}\t{len(ugb)}\t{steps}")


if __name__ == "__main__":
    main()
