"""Extended Young tableaux of rank n and their content characters.

A box (r, c) of an i-charged tableau is forced to carry the residue
c - r + i mod (n + 1).  A shape is admissible for charge i when it is
n-regular (no part repeats more than n times) and its distinct part
sizes satisfy a system of congruences; counting admissible shapes with
a prescribed content character gives the brute-force route to the outer
multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .partitions import canonical, part_multiplicities


@dataclass(frozen=True)
class ExtendedTableau:
    """Filling of a Young diagram by residues in [0, n]."""

    n: int
    shape: tuple
    charge: Optional[int] = None  # set when contents follow the charge rule

    def content(self, r: int, c: int) -> int:
        """Entry at row r, column c (1-based)."""
        if not (1 <= r <= len(self.shape) and 1 <= c <= self.shape[r - 1]):
            raise IndexError("box outside the diagram")
        if self.charge is None:
            raise ValueError("tableau has no charge rule")
        return (c - r + self.charge) % (self.n + 1)

    def boxes(self) -> Iterator[tuple]:
        for r, row_len in enumerate(self.shape, start=1):
            for c in range(1, row_len + 1):
                yield (r, c)


def charged_tableau(shape, i: int, n: int) -> ExtendedTableau:
    """The unique i-charged tableau on the given shape."""
    return ExtendedTableau(n, canonical(shape), i % (n + 1))


def content_character(T: ExtendedTableau) -> tuple:
    """Vector counting boxes of each residue class."""
    return shape_character(T.shape, T.charge, T.n)


def shape_character(shape, i: int, n: int) -> tuple:
    """Content character of the i-charged tableau on shape, computed
    row by row from the cyclic structure of the residues."""
    m = n + 1
    eta = [0] * m
    for r, length in enumerate(canonical(shape), start=1):
        full, rem = divmod(length, m)
        if full:
            for l in range(m):
                eta[l] += full
        start = (1 - r + i) % m
        for c in range(rem):
            eta[(start + c) % m] += 1
    return tuple(eta)


def is_regular(shape, n: int) -> bool:
    """True iff every part size repeats at most n times."""
    return all(r <= n for _, r in part_multiplicities(canonical(shape)))


def is_mw(shape, i: int, n: int) -> bool:
    """Admissibility of a shape at charge i: n-regularity plus the
    congruences k_l + i = r_l + 2(r_1 + ... + r_{l-1}) mod (n+1) on all
    distinct part sizes k_l.  Equivalently: r_1 = i + k_1 together with
    k_{l+1} - k_l = r_l + r_{l+1}, all mod (n+1)."""
    shape = canonical(shape)
    mults = part_multiplicities(shape)
    if any(r > n for _, r in mults):
        return False
    m = n + 1
    prefix = 0
    for k_l, r_l in mults:
        if (k_l + i - r_l - 2 * prefix) % m != 0:
            return False
        prefix += r_l
    return True


def _partitions_regular(m: int, n: int) -> Iterator[tuple]:
    """Partitions of m in which no part repeats more than n times."""

    def rec(remaining, largest, prefix):
        if remaining == 0:
            yield tuple(prefix)
            return
        for part in range(min(largest, remaining), 0, -1):
            for reps in range(1, n + 1):
                used = part * reps
                if used > remaining:
                    break
                prefix.extend([part] * reps)
                yield from rec(remaining - used, part - 1, prefix)
                del prefix[-reps:]

    yield from rec(m, m, [])


def mw_shapes_with_character(eta, i: int) -> list:
    """All admissible i-charged shapes whose content character is eta."""
    eta = tuple(eta)
    n = len(eta) - 1
    total = sum(eta)
    out = []
    for shape in _partitions_regular(total, n):
        if is_mw(shape, i, n) and shape_character(shape, i, n) == eta:
            out.append(shape)
    return out


def tau_bruteforce(eta, i: int) -> int:
    """Count admissible i-charged tableaux with content character eta
    by exhaustive enumeration of regular shapes."""
    return len(mw_shapes_with_character(eta, i))


def eta_prime(eta, i: int) -> tuple:
    """The transformed vector with cyclic entries
    delta_{0,r} + delta_{i,r} - 2 eta_r + eta_{r-1} + eta_{r+1};
    eta indexes a dominant weight iff all entries are >= 0."""
    eta = tuple(eta)
    m = len(eta)
    n = m - 1
    i = i % m
    return tuple(
        (1 if r == 0 else 0) + (1 if r == i else 0)
        - 2 * eta[r] + eta[(r - 1) % m] + eta[(r + 1) % m]
        for r in range(m)
    )


def jk_from_eta(eta, i: int):
    """Indices {j, k} with eta' = e_j + e_k; requires eta' >= 0 with
    total 2.  Then j + k = i mod (n + 1)."""
    ep = eta_prime(eta, i)
    if any(x < 0 for x in ep) or sum(ep) != 2:
        raise ValueError("eta' is not of the form e_j + e_k")
    idx = [r for r, x in enumerate(ep) for _ in range(x)]
    j, k = idx
    return (j, k)
