"""Duplicants for a range of multiplicity shapes at random rational roots.

For every shape (e_1, ..., e_n) the script samples roots, computes det Sigma
and the duplicant, and compares them with the root-difference product. The
last column records the observed sign of det Sigma against
(-1)^(sum e(e-1)/2), the sign this implementation's orientation produces.
"""

from __future__ import annotations

import argparse
import random
from itertools import combinations_with_replacement

from a1deg.duplicant import duplicant, duplicant_closed_form, root_difference_product, sigma_determinant
from a1deg.field import QQ
from a1deg.poly import RootDatum
from a1deg.sampling import random_distinct


def shapes(max_roots: int, max_mult: int):
    for n in range(1, max_roots + 1):
        yield from combinations_with_replacement(range(1, max_mult + 1), n)


def main() -> None:
    ap = argparse.ArgumentParser(description="duplicant shape table")
    ap.add_argument("--max-roots", type=int, default=4)
    ap.add_argument("--max-multiplicity", type=int, default=3)
    ap.add_argument("--samples", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    rng = random.Random(a.seed)
    print(f"{'shape':<16} {'N':>3} {'samples':>8} {'closed form':>12} {'sign rule':>10}")
    for shape in shapes(a.max_roots, a.max_multiplicity):
        closed = sign_ok = 0
        for _ in range(a.samples):
            roots = [RootDatum(r, e) for r, e in zip(random_distinct(QQ, rng, len(shape)), shape)]
            closed += duplicant(roots) == duplicant_closed_form(roots)
            rule = (-1) ** sum(e * (e - 1) // 2 for e in shape)
            sign_ok += sigma_determinant(roots) == rule * root_difference_product(roots)
        label = ",".join(map(str, shape))
        print(f"{label:<16} {sum(shape):>3} {a.samples:>8} {closed:>12} {sign_ok:>10}")


if __name__ == "__main__":
    main()
