#!/usr/bin/env python3
"""Sweep all admissible content characters in a range and check that the
closed formula, the brute-force tableau count, and (optionally) the
truncated-character oracle agree on every instance.

Usage: python scripts/agreement_sweep.py [--ranks 1,2,3 --eta0-max 5 --depth 0]
"""

import argparse
import time
from dataclasses import dataclass

from affmult import (
    eta_from_xi,
    outer_multiplicity_formula,
    tau_bruteforce,
    tau_formula,
    tensor_outer_multiplicities,
)
from affmult.affine_cartan import affine_Lambda


@dataclass(frozen=True)
class SweepConfig:
    ranks: tuple
    eta0_max: int
    depth: int  # 0 disables the oracle comparison


def instances(cfg: SweepConfig):
    for n in cfg.ranks:
        for i in range(n + 1):
            for j in range(n + 1):
                k = (i - j) % (n + 1)
                if j > k:
                    continue
                for eta0 in range(cfg.eta0_max + 1):
                    xi = (affine_Lambda(n, j) + affine_Lambda(n, k)
                          ).shift_delta(-eta0)
                    try:
                        eta = eta_from_xi(n, i, xi)
                    except ValueError:
                        continue
                    yield n, i, eta, xi


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--ranks", default="1,2,3")
    parser.add_argument("--eta0-max", dest="eta0_max", type=int, default=5)
    parser.add_argument("--depth", type=int, default=0)
    args = parser.parse_args()
    cfg = SweepConfig(tuple(int(x) for x in args.ranks.split(",")),
                      args.eta0_max, args.depth)

    start = time.monotonic()
    count = failures = 0
    for n, i, eta, xi in instances(cfg):
        count += 1
        a = tau_formula(n, i, eta)
        b = tau_bruteforce(eta, i)
        if a != b:
            failures += 1
            print(f"FAIL n={n} i={i} eta={eta}: formula={a} brute={b}")
    print(f"formula vs brute force: {count} instances, "
          f"{failures} failures ({time.monotonic() - start:.1f}s)")

    if cfg.depth > 0:
        start = time.monotonic()
        checked = failures2 = 0
        for n in cfg.ranks:
            if n > 2:
                continue
            for i in range(n + 1):
                table = tensor_outer_multiplicities(
                    affine_Lambda(n, 0), affine_Lambda(n, i), cfg.depth)
                for xi, m in table.items():
                    checked += 1
                    f = outer_multiplicity_formula(n, i, xi)
                    if f != m:
                        failures2 += 1
                        print(f"FAIL n={n} i={i} xi={xi.c_values()} "
                              f"deg={xi.degree}: oracle={m} formula={f}")
        print(f"formula vs oracle: {checked} entries, "
              f"{failures2} failures ({time.monotonic() - start:.1f}s)")
        failures += failures2

    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
