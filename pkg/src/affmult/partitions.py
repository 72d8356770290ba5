"""Bounded partitions, multipartitions and Gaussian binomials.

A partition is a weakly decreasing tuple of positive integers (canonical
form has no trailing zeros).  The counting function rho(m, b) counts
partitions of m with parts at most b, with the convention that rho is 0
off the non-negative integers — callers feed it exact rationals coming
from quadratic-form evaluations, and non-integral arguments must count
as zero rather than raise.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .laurent import LaurentPoly

Partition = tuple  # weakly decreasing tuple of positive integers


def canonical(parts: Sequence[int]) -> Partition:
    """Strip trailing zeros; validate weak decrease."""
    parts = tuple(parts)
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError("parts must be weakly decreasing")
    if parts and parts[-1] < 0:
        raise ValueError("parts must be non-negative")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def enumerate_bounded(m: int, b: int, max_parts: Optional[int] = None) -> list:
    """All partitions of m with parts <= b (and at most max_parts parts),
    in lexicographically decreasing order."""
    out = []

    def rec(remaining, largest, count, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if max_parts is not None and count >= max_parts:
            return
        for part in range(min(largest, remaining), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, count + 1, prefix)
            prefix.pop()

    if m == 0:
        return [()]
    if m < 0 or b == 0:
        return []
    rec(m, b, 0, [])
    return out


@lru_cache(maxsize=None)
def _count(m: int, b: int, max_parts: int) -> int:
    """Partitions of m with parts <= b and at most max_parts parts."""
    if m == 0:
        return 1
    if m < 0 or b == 0 or max_parts == 0:
        return 0
    # either no part equals b, or remove one part b
    return _count(m, b - 1, max_parts) + _count(m - b, b, max_parts - 1)


def _is_bad_number(m) -> bool:
    """True when m is negative or non-integral (rho convention)."""
    if isinstance(m, Fraction):
        return m.denominator != 1 or m < 0
    return m < 0 or m != int(m)


def rho(m, b: int, max_parts: Optional[int] = None) -> int:
    """|P_b(m)| (with optional part-count cap); 0 off Z_{>=0}."""
    if _is_bad_number(m):
        return 0
    m = int(m)
    cap = m if max_parts is None else min(max_parts, m)
    return _count(m, b, cap)


def rho_multi(m, b: Sequence[int], a: Optional[Sequence[int]] = None) -> int:
    """Number of multipartitions of m with component j bounded by b_j
    (parts) and, when a is given, by a_j (number of parts)."""
    if a is not None and len(a) != len(b):
        raise ValueError("length caps must match bounds")
    if _is_bad_number(m):
        return 0
    m = int(m)
    caps = tuple(a) if a is not None else (None,) * len(b)
    if any(c is not None and c < 0 for c in caps):
        return 0

    # components with b_j = 0 (or cap 0) only admit the empty partition;
    # the count is invariant under permuting components, so sort for
    # cache hits across reorderings
    comps = tuple(sorted(
        (bj, cj if cj is not None else -1)
        for bj, cj in zip(b, caps) if bj > 0 and cj != 0))
    return _rho_multi_sorted(m, comps)


@lru_cache(maxsize=None)
def _rho_multi_sorted(m: int, comps: tuple) -> int:
    """Multipartition count over sorted (bound, cap) components; a cap of
    -1 means unbounded length."""
    if not comps:
        return 1 if m == 0 else 0
    bj, cj = comps[0]
    cap = None if cj == -1 else cj
    rest = comps[1:]
    return sum(
        rho(s, bj, cap) * _rho_multi_sorted(m - s, rest) for s in range(m + 1)
    )


def enumerate_multi(m: int, b: Sequence[int], a: Optional[Sequence[int]] = None) -> list:
    """Materialize the multipartitions counted by rho_multi."""
    caps = tuple(a) if a is not None else (None,) * len(b)

    def rec(j: int, rem: int):
        if j == len(b):
            if rem == 0:
                yield ()
            return
        for s in range(rem + 1):
            for comp in enumerate_bounded(s, b[j], caps[j]):
                for rest in rec(j + 1, rem - s):
                    yield (comp,) + rest

    return list(rec(0, m)) if not _is_bad_number(m) else []


@lru_cache(maxsize=None)
def q_binomial(m: int, p: int) -> LaurentPoly:
    """Gaussian binomial [m choose p]_q; coefficient of q^s counts
    partitions of s inside a p x (m-p) box."""
    if p < 0 or p > m:
        raise ValueError("require 0 <= p <= m")
    if p == 0 or p == m:
        return LaurentPoly.one()
    # Pascal recurrence [m, p] = [m-1, p] + q^{m-p} [m-1, p-1]
    return q_binomial(m - 1, p) + q_binomial(m - 1, p - 1).shift(m - p)


def q_binomial_product(m: Sequence[int], p: Sequence[int]) -> LaurentPoly:
    """Product of Gaussian binomials [m_j choose p_j]_q."""
    if len(m) != len(p):
        raise ValueError("vectors must have equal length")
    out = LaurentPoly.one()
    for mj, pj in zip(m, p):
        out = out * q_binomial(mj, pj)
    return out


def box_complement(parts: Partition, b: int, length: int) -> Partition:
    """Complement a partition inside a length x b box: pad with zeros to
    the given length, replace each part by b minus it, re-sort."""
    padded = list(parts) + [0] * (length - len(parts))
    return canonical(sorted((b - s for s in padded), reverse=True))


def stabilize_threshold(f: int, a: Sequence[int], b: Sequence[int]):
    """Smallest k from which the capped count stabilizes: the max of
    f + max(a) and (f + <a,b>)/|b| (second term only when |b| > 0)."""
    kmin = f + max(a) if a else f
    size = sum(b)
    if size > 0:
        dot = sum(x * y for x, y in zip(a, b))
        kmin = max(kmin, -((-(f + dot)) // size))  # ceil division
    return kmin


def stabilize_bijection(f: int, a: Sequence[int], b: Sequence[int], k: int) -> list:
    """Explicit pairing between the capped multipartitions of
    k|b| - <a,b> - f (caps k - a_j, bounds b) and the multipartitions of
    f (bounds b), by componentwise box complement."""
    if len(a) != len(b):
        raise ValueError("vectors must have equal length")
    if sum(b) == 0:
        raise ValueError("require |b| > 0")
    if k < stabilize_threshold(f, a, b):
        raise ValueError("k below the stabilization threshold")
    caps = [k - aj for aj in a]
    total = k * sum(b) - sum(x * y for x, y in zip(a, b)) - f
    pairs = []
    for multi in enumerate_multi(total, b, caps):
        image = tuple(
            box_complement(comp, bj, cap)
            for comp, bj, cap in zip(multi, b, caps)
        )
        pairs.append((multi, image))
    # sanity: the images exhaust P_b(f) exactly once
    targets = set(enumerate_multi(f, b))
    images = [im for _, im in pairs]
    if len(set(images)) != len(images) or set(images) != targets:
        raise AssertionError("complement map failed to be a bijection")
    return pairs


def compositions(m: int, l: int):
    """All ways to write m as an ordered sum of l non-negative integers."""
    if l == 0:
        if m == 0:
            yield ()
        return
    for first in range(m + 1):
        for rest in compositions(m - first, l - 1):
            yield (first,) + rest


def part_multiplicities(parts: Partition) -> list:
    """Distinct part sizes with multiplicities, largest first:
    [(k_1, r_1), ..., (k_s, r_s)] with k_1 > ... > k_s."""
    out = []
    for p in parts:
        if out and out[-1][0] == p:
            out[-1][1] += 1
        else:
            out.append([p, 1])
    return [(k, r) for k, r in out]
