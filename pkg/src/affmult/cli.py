"""Command-line interface.

Every computation in the library is exposed as a subcommand with
machine-readable output.  Vectors are comma-separated integers; affine
weights are passed as the n + 1 values on the simple coroots plus a
rational degree (``--cvals h0,...,hn --degree p/q``).

Exit codes: 0 success, 1 cross-check mismatch, 2 parameter validation
failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .affine_cartan import AffineWeight, FiniteWeight, affine_Lambda
from .char_oracle import tensor_outer_multiplicities
from .multiplicities import (
    eta_from_xi,
    f_ball_bound,
    f_weight,
    flag_multiplicity_at,
    flag_multiplicity_poly,
    general_fundamental,
    mu_split,
    outer_multiplicity_formula,
    outer_multiplicity_limit,
    tau_formula,
    xi_from_eta,
)
from .partitions import rho_multi
from .tableaux import mw_shapes_with_character, tau_bruteforce
from .weyl_orbits import (
    b_vector,
    enumerate_gamma,
    orbit_pair,
    socle_formula,
    socle_oracle,
)


class ValidationError(Exception):
    """Raised for bad parameters; maps to exit code 2."""


def parse_vec(text: str, name: str) -> tuple:
    if text.strip() == "":
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValidationError(f"parameter {name}: expected comma-separated integers")


def parse_rat(text: str, name: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"parameter {name}: expected a rational like -3 or 5/2")


def parse_affine(n: int, cvals: str, degree: str) -> AffineWeight:
    cv = parse_vec(cvals, "--cvals")
    if len(cv) != n + 1:
        raise ValidationError("parameter --cvals: need n + 1 values")
    return AffineWeight.from_c_values(n, cv, parse_rat(degree, "--degree"))


def check_rank(n: int) -> None:
    if n < 1:
        raise ValidationError("parameter --n: rank must be >= 1")


def check_index(i: int, n: int, name: str) -> None:
    if not 0 <= i <= n:
        raise ValidationError(f"parameter {name}: index must lie in [0, n]")


def weight_dict(w: AffineWeight) -> dict:
    return {"cvals": list(w.c_values()), "degree": str(w.degree)}


def emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, default=str))
        return
    result = payload["result"]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        rows = result.get("rows")
        if rows is not None:
            writer.writerow(result.get("header", []))
            writer.writerows(rows)
        else:
            for key in sorted(result):
                writer.writerow([key, result[key]])
        sys.stdout.write(buf.getvalue())
        return
    # table format: aligned key/value lines, rows printed as a block
    rows = result.get("rows")
    if rows is not None:
        header = result.get("header", [])
        print("\t".join(str(h) for h in header))
        for row in rows:
            print("\t".join(str(x) for x in row))
    for key in sorted(result):
        if key in ("rows", "header"):
            continue
        print(f"{key}: {result[key]}")


def _payload(command: str, params: dict, result: dict, rule: str) -> dict:
    return {
        "command": command,
        "params": params,
        "result": result,
        "provenance": {"rule": rule},
    }


def cmd_tau(args) -> int:
    check_rank(args.n)
    check_index(args.i, args.n, "--i")
    eta = parse_vec(args.eta, "--eta")
    if len(eta) != args.n + 1:
        raise ValidationError("parameter --eta: need n + 1 entries")
    if any(x < 0 for x in eta):
        raise ValidationError("parameter --eta: entries must be non-negative")
    value = tau_formula(args.n, args.i, eta)
    shapes = mw_shapes_with_character(eta, args.i)
    result = {
        "value": value,
        "brute_force": len(shapes),
        "rows": [[str(s)] for s in shapes],
        "header": ["shape"],
    }
    emit(_payload("tau", {"n": args.n, "i": args.i, "eta": list(eta)},
                  result, "orbit-pair multipartition count"), args.format)
    if value != len(shapes):
        print(f"mismatch: formula {value} != brute force {len(shapes)}",
              file=sys.stderr)
        return 1
    return 0


def cmd_socle(args) -> int:
    check_rank(args.n)
    if args.level < 1:
        raise ValidationError("parameter --level: must be >= 1")
    mu = FiniteWeight(args.n, parse_vec(args.mu, "--mu"))
    formula = socle_formula(args.level, mu).weight
    probe = AffineWeight(mu.w0_image(), args.level, Fraction(0))
    oracle = socle_oracle(probe).weight
    result = {
        "cvals": list(formula.c_values()),
        "degree": str(formula.degree),
        "oracle_cvals": list(oracle.c_values()),
        "oracle_degree": str(oracle.degree),
    }
    emit(_payload("socle", {"n": args.n, "level": args.level, "mu": list(mu.coords)},
                  result, "closed-form dominant representative"), args.format)
    if formula != oracle:
        print("mismatch: closed form disagrees with reflection descent",
              file=sys.stderr)
        return 1
    return 0


def cmd_orbit(args) -> int:
    check_rank(args.n)
    if args.level < 1:
        raise ValidationError("parameter --level: must be >= 1")
    mu = FiniteWeight(args.n, parse_vec(args.mu, "--mu"))
    pair = orbit_pair(args.level, mu)
    result = {
        "m": list(pair.m),
        "p": list(pair.p),
        "a": list(pair.a_vector()),
        "residue": pair.residue(),
        "dominant": pair.in_dominant_set(),
    }
    if args.level == 2 and pair.in_dominant_set():
        result["b_vector"] = list(b_vector(pair))
    emit(_payload("orbit", {"n": args.n, "level": args.level, "mu": list(mu.coords)},
                  result, "orbit-pair division"), args.format)
    return 0


def cmd_gamma(args) -> int:
    check_rank(args.n)
    xi = parse_affine(args.n, args.cvals, args.degree)
    if not xi.is_dominant():
        raise ValidationError("parameter --cvals: weight must be dominant")
    bound = parse_rat(args.norm_bound, "--norm-bound")
    rows = []
    for mu, pair in enumerate_gamma(xi, bound):
        rows.append([list(mu.coords), list(pair.m), list(pair.p)])
    result = {"count": len(rows), "rows": rows, "header": ["mu", "m", "p"]}
    emit(_payload("gamma", {"n": args.n, "cvals": list(xi.c_values()),
                            "degree": str(xi.degree),
                            "norm_bound": str(bound)},
                  result, "orbit-set enumeration"), args.format)
    return 0


def cmd_flag_mult(args) -> int:
    check_rank(args.n)
    lam = FiniteWeight(args.n, parse_vec(args.lam, "--lam"))
    mu = FiniteWeight(args.n, parse_vec(args.mu, "--mu"))
    if not lam.is_dominant() or not mu.is_dominant():
        raise ValidationError("parameters --lam/--mu: weights must be dominant")
    if args.r is not None:
        r = parse_rat(args.r, "--r")
        result = {"value": flag_multiplicity_at(lam, mu, r)}
    else:
        poly = flag_multiplicity_poly(lam, mu)
        result = {
            "polynomial": repr(poly),
            "rows": [[str(e), poly.coeffs[e]] for e in poly.support()],
            "header": ["exponent", "coefficient"],
        }
    emit(_payload("flag-mult", {"n": args.n, "lam": list(lam.coords),
                                "mu": list(mu.coords), "r": args.r},
                  result, "flag-multiplicity generating polynomial"), args.format)
    return 0


def cmd_multiplicity(args) -> int:
    check_rank(args.n)
    check_index(args.i, args.n, "--i")
    xi = parse_affine(args.n, args.cvals, args.degree)
    if xi.level != 2 or not xi.is_dominant():
        raise ValidationError("parameter --cvals: weight must be dominant of level 2")
    value = outer_multiplicity_formula(args.n, args.i, xi)
    rows = []
    for mu, pair in enumerate_gamma(xi, f_ball_bound(args.n, args.i, xi)):
        f = f_weight(args.n, args.i, xi, mu)
        b = mu_split(mu).bounds
        rows.append([list(mu.coords), list(b), str(f), rho_multi(f, b)])
    result = {"value": value, "rows": rows,
              "header": ["mu", "bounds", "f", "count"]}
    emit(_payload("multiplicity", {"n": args.n, "i": args.i,
                                   "cvals": list(xi.c_values()),
                                   "degree": str(xi.degree)},
                  result, "orbit-sum multiplicity formula"), args.format)
    return 0


def cmd_limit(args) -> int:
    check_rank(args.n)
    check_index(args.i, args.n, "--i")
    xi = parse_affine(args.n, args.cvals, args.degree)
    if xi.level != 2 or not xi.is_dominant():
        raise ValidationError("parameter --cvals: weight must be dominant of level 2")
    if args.kmax < 1:
        raise ValidationError("parameter --kmax: must be >= 1")
    res = outer_multiplicity_limit(args.n, args.i, xi, args.kmax)
    rows = [[list(mu.coords), thr, list(vals)] for mu, thr, vals in res.sequences]
    result = {"value": res.value, "stabilized_at": res.stabilized_at,
              "rows": rows, "header": ["mu", "threshold", "sequence"]}
    emit(_payload("limit", {"n": args.n, "i": args.i,
                            "cvals": list(xi.c_values()),
                            "degree": str(xi.degree), "kmax": args.kmax},
                  result, "stabilizing flag-multiplicity limit"), args.format)
    return 0


def cmd_tensor_general(args) -> int:
    check_rank(args.n)
    check_index(args.i, args.n, "--i")
    check_index(args.j, args.n, "--j")
    xi = parse_affine(args.n, args.cvals, args.degree)
    if xi.level != 2 or not xi.is_dominant():
        raise ValidationError("parameter --cvals: weight must be dominant of level 2")
    try:
        value = general_fundamental(args.n, args.i, args.j, xi)
    except ValueError as exc:
        raise ValidationError(f"parameter --cvals: {exc}")
    result = {"value": value}
    emit(_payload("tensor-general", {"n": args.n, "i": args.i, "j": args.j,
                                     "cvals": list(xi.c_values()),
                                     "degree": str(xi.degree)},
                  result, "rotation reduction to the (0, j - i) case"), args.format)
    return 0


def _parse_range(text: str, name: str) -> list:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError:
        raise ValidationError(f"parameter {name}: expected N or LO..HI")


def _verify_instance(task):
    """One cross-check: formula vs brute force (and vs oracle at small n)."""
    kind, data = task
    if kind == "tau":
        n, i, eta = data
        a = tau_formula(n, i, eta)
        b = tau_bruteforce(eta, i)
        ok = a == b
        return (ok, f"tau n={n} i={i} eta={eta}", f"formula={a} brute={b}")
    n, i, depth = data
    table = tensor_outer_multiplicities(affine_Lambda(n, 0), affine_Lambda(n, i), depth)
    for xi, m in sorted(table.items(), key=lambda kv: -kv[0].degree):
        f = outer_multiplicity_formula(n, i, xi)
        if f != m:
            return (False, f"oracle n={n} i={i} depth={depth}",
                    f"xi={xi.c_values()} deg={xi.degree}: oracle={m} formula={f}")
    return (True, f"oracle n={n} i={i} depth={depth}", f"{len(table)} entries")


def cmd_verify(args) -> int:
    ranks = _parse_range(args.n, "--n")
    if any(n < 1 for n in ranks):
        raise ValidationError("parameter --n: ranks must be >= 1")
    if args.eta0_max < 0:
        raise ValidationError("parameter --eta0-max: must be >= 0")
    tasks = []
    for n in ranks:
        for i in range(n + 1):
            for j in range(n + 1):
                k = (i - j) % (n + 1)
                if j > k:
                    continue
                for eta0 in range(args.eta0_max + 1):
                    xi = (affine_Lambda(n, j) + affine_Lambda(n, k)).shift_delta(-eta0)
                    try:
                        eta = eta_from_xi(n, i, xi)
                    except ValueError:
                        continue
                    tasks.append(("tau", (n, i, eta)))
    if args.depth > 0:
        for n in ranks:
            if n > 2:
                continue  # oracle sweep kept to desk scale
            for i in range(n + 1):
                tasks.append(("oracle", (n, i, args.depth)))
    workers = int(os.environ.get("AFFMULT_THREADS", "0")) or None
    with ThreadPoolExecutor(max_workers=workers) as pool:
        outcomes = list(pool.map(_verify_instance, tasks))
    rows = []
    failures = []
    for ok, key, detail in outcomes:
        rows.append([key, "pass" if ok else "FAIL", detail])
        if not ok:
            failures.append((key, detail))
    result = {"instances": len(rows), "failures": len(failures),
              "rows": rows, "header": ["instance", "status", "detail"]}
    emit(_payload("verify", {"n": args.n, "eta0_max": args.eta0_max,
                             "depth": args.depth},
                  result, "cross-check suite"), args.format)
    if failures:
        key, detail = failures[0]
        print(f"first failing instance: {key} ({detail})", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affmult",
        description="Exact outer multiplicities for affine type A tensor products",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=["table", "json", "csv"],
                       default="table")

    p = sub.add_parser("tau", help="tableau-count multiplicity from a content character")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--eta", required=True)
    add_common(p)
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("socle", help="dominant orbit representative")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--mu", required=True)
    add_common(p)
    p.set_defaults(func=cmd_socle)

    p = sub.add_parser("orbit", help="orbit-pair division of a finite weight")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--mu", required=True)
    add_common(p)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("gamma", help="enumerate the orbit set of a dominant weight")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cvals", required=True)
    p.add_argument("--degree", default="0")
    p.add_argument("--norm-bound", required=True)
    add_common(p)
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("flag-mult", help="flag multiplicity polynomial or value")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--r", default=None)
    add_common(p)
    p.set_defaults(func=cmd_flag_mult)

    p = sub.add_parser("multiplicity", help="outer multiplicity via the orbit sum")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--cvals", required=True)
    p.add_argument("--degree", default="0")
    add_common(p)
    p.set_defaults(func=cmd_multiplicity)

    p = sub.add_parser("limit", help="outer multiplicity via the stabilizing limit")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--cvals", required=True)
    p.add_argument("--degree", default="0")
    p.add_argument("--kmax", type=int, default=20)
    add_common(p)
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("tensor-general",
                       help="multiplicity in a general fundamental tensor product")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--cvals", required=True)
    p.add_argument("--degree", default="0")
    add_common(p)
    p.set_defaults(func=cmd_tensor_general)

    p = sub.add_parser("verify", help="run the cross-check suites")
    p.add_argument("--n", default="1..2")
    p.add_argument("--eta0-max", dest="eta0_max", type=int, default=3)
    p.add_argument("--depth", type=int, default=0,
                   help="also run the character-oracle sweep to this depth")
    add_common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
