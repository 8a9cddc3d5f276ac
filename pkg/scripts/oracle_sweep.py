#!/usr/bin/env python3
"""Cross-check the ladder bracket product against the fixpoint oracle.

Sweeps seeded homogeneous pairs of generated CIF subspaces and demands
exact table equality between the two independent algorithms.
"""

import argparse
import sys
import time

from ciflie import (
    PrimeField,
    bracket_product,
    bracket_product_oracle,
    first_difference,
    gen_pair,
    make_config,
    superalgebra_from_pairs,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pairs", type=int, default=500)
    parser.add_argument("--pairs-dim3", type=int, default=100)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--kind", default="subspace", choices=["set", "subspace", "graded", "ideal"]
    )
    args = parser.parse_args()

    F3 = PrimeField(3)
    H = superalgebra_from_pairs(F3, (0, 1), {(1, 1): (1, 0)})
    L3 = superalgebra_from_pairs(
        F3, (0, 1, 1), {(1, 1): (1, 0, 0), (1, 2): (1, 0, 0), (2, 2): (2, 0, 0)}
    )

    mismatches = 0
    start = time.monotonic()
    for name, alg, pairs in (("H", H, args.pairs), ("L3", L3, args.pairs_dim3)):
        for i in range(pairs):
            cfg = make_config(args.seed + i, alg)
            A, B = gen_pair(cfg, kind=args.kind)
            diff = first_difference(bracket_product(A, B), bracket_product_oracle(A, B))
            if diff is not None:
                mismatches += 1
                print(f"MISMATCH {name} seed={args.seed + i} at {diff}")
        print(f"{name}: {pairs} pairs checked")
    elapsed = time.monotonic() - start
    print(f"{mismatches} mismatches in {elapsed:.1f}s")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
