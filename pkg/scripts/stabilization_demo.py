#!/usr/bin/env python3
"""Show the flag-multiplicity limit route converging: for each member of
the orbit set of a level-2 weight, print the non-decreasing sequence of
flag multiplicities along the cofinal family together with its predicted
stabilization threshold.

Usage: python scripts/stabilization_demo.py [--n 2 --i 1 --cvals 0,0,2
                                             --degree -6 --kmax 10]
"""

import argparse
from fractions import Fraction

from affmult import outer_multiplicity_formula, outer_multiplicity_limit
from affmult.affine_cartan import AffineWeight


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=2)
    parser.add_argument("--i", type=int, default=1)
    parser.add_argument("--cvals", default="0,0,2")
    parser.add_argument("--degree", default="-6")
    parser.add_argument("--kmax", type=int, default=10)
    args = parser.parse_args()
    cvals = tuple(int(x) for x in args.cvals.split(","))
    xi = AffineWeight.from_c_values(args.n, cvals, Fraction(args.degree))

    res = outer_multiplicity_limit(args.n, args.i, xi, args.kmax)
    print(f"xi: c-values {xi.c_values()}, degree {xi.degree}")
    print(f"{'orbit member':<14} {'threshold':<10} sequence (k = 0..{args.kmax})")
    for mu, threshold, vals in res.sequences:
        print(f"{str(mu.coords):<14} {threshold:<10} {list(vals)}")
    print(f"\nstabilized at k = {res.stabilized_at}; "
          f"limit sum = {res.value}")
    print(f"closed-formula value = "
          f"{outer_multiplicity_formula(args.n, args.i, xi)}")


if __name__ == "__main__":
    main()
