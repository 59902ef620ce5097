"""Write the Graver basis of K_n as a basis file, then filter it through the UGB test.

The file can be fed back with ``ugb stats <graph> --basis <file>``.
"""

import argparse
import time
from pathlib import Path

from toric_ugb.corpus import complete
from toric_ugb.graver import degree_histogram, graver_basis_from_blocks
from toric_ugb.io import format_basis, format_graph, parse_basis
from toric_ugb.ugb import universal_groebner_basis


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=8)
    ap.add_argument("--out", type=Path, default=Path("k8"))
    ap.add_argument("--parallel", type=int, default=1)
    args = ap.parse_args()

    g = complete(args.n)
    args.out.mkdir(parents=True, exist_ok=True)
    graph_path = args.out / f"k{args.n}.txt"
    basis_path = args.out / f"k{args.n}.basis"
    graph_path.write_text(format_graph(g))

    t0 = time.perf_counter()
    basis = graver_basis_from_blocks(g)
    basis_path.write_text(format_basis(basis, g.m))
    t1 = time.perf_counter()
    imported = parse_basis(basis_path.read_text(), g)
    ugb, _ = universal_groebner_basis(imported, g, workers=args.parallel)
    t2 = time.perf_counter()
    print(f"K{args.n}: |Gr_A| = {len(imported)}, |U_A| = {len(ugb)}")
    print("degree histogram:", degree_histogram(imported))
    print(f"generate {t1 - t0:.1f}s, import+filter {t2 - t1:.1f}s")
    print(f"wrote {graph_path} and {basis_path}")


if __name__ == "__main__":
    main()
