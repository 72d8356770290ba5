"""Affine Weyl group action, socle (dominant orbit representative)
formulas, orbit parameterizations at level 2, and reduced-pair lengths.

The key coordinates: for an integral finite weight mu and a level l,
write the epsilon-coordinates a_i of mu as a_i = p_i * l + m_i with
0 < m_i <= l.  The pair (m, p) determines the dominant representative
of l*Lambda_0 + w0(mu) in closed form, and at level 2 parameterizes the
orbit sets indexing the multiplicity sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Sequence

from .affine_cartan import (
    AffineWeight,
    FiniteWeight,
    affine_alpha,
    affine_bilinear,
    affine_cartan_matrix,
    bilinear,
    eps_coords,
    quadratic_f,
    residue,
    theta,
    weight_from_eps,
)


def simple_reflection(i: int, lam: AffineWeight) -> AffineWeight:
    """s_i(lam) = lam - lam(h_i) alpha_i for i in [0, n]."""
    v = lam.value(i)
    if v == 0:
        return lam
    return lam - v * affine_alpha(lam.n, i)


def in_finite_root_lattice(mu: FiniteWeight) -> bool:
    """Membership of a finite weight in the root lattice Q."""
    a = eps_coords(mu)
    return sum(a) % (mu.n + 1) == 0


def translation(alpha_fin: FiniteWeight, lam: AffineWeight) -> AffineWeight:
    """t_alpha(lam) = lam + lam(c) alpha
    - ((lam, alpha) + (alpha, alpha) lam(c) / 2) delta, for alpha in Q."""
    if not in_finite_root_lattice(alpha_fin):
        raise ValueError("translation vector must lie in the root lattice")
    pairing = bilinear(lam.finite, alpha_fin)
    norm = bilinear(alpha_fin, alpha_fin)
    new_fin = lam.finite + lam.level * alpha_fin
    new_deg = lam.degree - (pairing + Fraction(norm * lam.level, 2))
    return AffineWeight(new_fin, lam.level, new_deg)


@dataclass(frozen=True)
class SocleResult:
    """Dominant representative of an affine Weyl orbit, degree included."""

    weight: AffineWeight


def socle_oracle(xi: AffineWeight) -> SocleResult:
    """Reflection descent to the dominant orbit representative: repeatedly
    reflect at the smallest index with a negative coroot value.  Works on
    the integer vector of coroot values for speed; only reflections at
    index 0 change the degree."""
    if xi.level <= 0:
        raise ValueError("descent requires positive level")
    n = xi.n
    m = n + 1
    A = affine_cartan_matrix(n)
    v = list(xi.c_values())
    deg = xi.degree
    while True:
        for i in range(m):
            if v[i] < 0:
                break
        else:
            break
        vi = v[i]
        col = [A[j][i] for j in range(m)]
        for j in range(m):
            if col[j]:
                v[j] -= vi * col[j]
        if i == 0:
            deg -= vi
    return SocleResult(AffineWeight.from_c_values(n, v, deg))


def _sorted_nonneg_eps(mu: FiniteWeight) -> tuple:
    """Epsilon-coordinates of the dominant finite Weyl conjugate of mu:
    append the implicit 0, sort decreasingly, renormalize so the last
    entry is 0, drop it."""
    a = list(eps_coords(mu)) + [0]
    a.sort(reverse=True)
    low = a[-1]
    return tuple(x - low for x in a[:-1])


def orbit_division(level: int, a: Sequence[int]):
    """Unique division a_i = p_i * level + m_i with 0 < m_i <= level."""
    m, p = [], []
    for ai in a:
        pi, mi = divmod(ai - 1, level)
        m.append(mi + 1)
        p.append(pi)
    return tuple(m), tuple(p)


def res_p(p: Sequence[int], n: int) -> int:
    """The index in [0, n] with res + p_1 + ... + p_n = 0 mod (n+1)."""
    return (-sum(p)) % (n + 1)


@dataclass(frozen=True)
class OrbitPair:
    """Pair (m, p) with a_i = p_i * level + m_i, 0 < m_i <= level."""

    m: tuple
    p: tuple
    level: int

    @property
    def n(self) -> int:
        return len(self.m)

    def a_vector(self) -> tuple:
        return tuple(pi * self.level + mi for pi, mi in zip(self.p, self.m))

    def residue(self) -> int:
        return res_p(self.p, self.n)

    def in_dominant_set(self) -> bool:
        """Whether the pair comes from a dominant weight: the recombined
        a-vector must be weakly decreasing and non-negative."""
        a = self.a_vector()
        return all(a[i] >= a[i + 1] for i in range(len(a) - 1)) and (not a or a[-1] >= 0)

    def weight(self) -> FiniteWeight:
        return weight_from_eps(self.n, self.a_vector())


def orbit_pair(level: int, mu: FiniteWeight) -> OrbitPair:
    m, p = orbit_division(level, eps_coords(mu))
    return OrbitPair(m, p, level)


def socle_formula(level: int, mu: FiniteWeight) -> SocleResult:
    """Closed form for the dominant representative of
    level*Lambda_0 + w0(mu) (taken at degree 0).

    With (m, p) the division of the sorted epsilon-coordinates and
    m' the decreasing rearrangement of (level, m_1, ..., m_n), the
    representative has coroot value m'_{j+1} - m'_{j+2} at index
    (res(p) - j) mod (n+1); its degree follows from the orbit-degree
    relation 2*level*(deg) = (mu, mu) - (soc, soc)."""
    n = mu.n
    mm = n + 1
    a = _sorted_nonneg_eps(mu)
    m, p = orbit_division(level, a)
    pr = res_p(p, n)
    mp = sorted((level,) + m, reverse=True) + [0]
    cvals = [0] * mm
    for j in range(mm):
        cvals[(pr - j) % mm] = mp[j] - mp[j + 1]
    soc_fin = FiniteWeight(n, tuple(cvals[1:]))
    norm_mu = quadratic_f(a)
    norm_soc = bilinear(soc_fin, soc_fin)
    deg = Fraction(norm_mu - norm_soc, 2 * level)
    return SocleResult(AffineWeight(soc_fin, level, deg))


def r_of(mu: FiniteWeight, phi: AffineWeight) -> Fraction:
    """Degree label r(mu, phi) = phi(d) - ((mu,mu) - (phibar,phibar)) / (2 phi(c))."""
    if phi.level < 1:
        raise ValueError("require positive level")
    return phi.degree - Fraction(
        bilinear(mu, mu) - bilinear(phi.finite, phi.finite), 2 * phi.level
    )


def gamma_contains(xi: AffineWeight, mu: FiniteWeight) -> bool:
    """Whether the orbit of xi meets xi(c)*Lambda_0 + w0(mu) + Q*delta,
    i.e. mu lies in the orbit set of xi.  Checked by the closed-form
    socle and cross-checked by reflection descent."""
    if not xi.is_dominant() or xi.level < 1:
        raise ValueError("xi must be dominant of positive level")
    by_formula = socle_formula(xi.level, mu).weight.equiv_mod_delta(xi)
    probe = AffineWeight(mu.w0_image(), xi.level, Fraction(0))
    by_oracle = socle_oracle(probe).weight.equiv_mod_delta(xi)
    if by_formula != by_oracle:
        raise AssertionError("socle routes disagree on orbit membership")
    return by_formula


def _dominant_eps_in_ball(n: int, norm_bound: Fraction):
    """Weakly decreasing non-negative integer vectors a of length n with
    f(a) <= norm_bound.  Uses the coordinatewise bound
    a_i^2 <= (n+1) * norm_bound."""
    if norm_bound < 0:
        return
    amax = isqrt(int((n + 1) * norm_bound))

    def rec(prefix, largest):
        if len(prefix) == n:
            if quadratic_f(prefix) <= norm_bound:
                yield tuple(prefix)
            return
        for v in range(largest, -1, -1):
            prefix.append(v)
            yield from rec(prefix, v)
            prefix.pop()

    yield from rec([], amax)


def enumerate_gamma(xi: AffineWeight, norm_bound) -> list:
    """All dominant finite mu in the orbit set of xi with
    (mu, mu) <= norm_bound, each with its (m, p) pair."""
    if not xi.is_dominant() or xi.level < 1:
        raise ValueError("xi must be dominant of positive level")
    n = xi.n
    out = []
    for a in _dominant_eps_in_ball(n, Fraction(norm_bound)):
        mu = weight_from_eps(n, a)
        if socle_formula(xi.level, mu).weight.equiv_mod_delta(xi):
            out.append((mu, orbit_pair(xi.level, mu)))
    out.sort(key=lambda pair: pair[1].a_vector(), reverse=True)
    return out


def family_part_sizes(n: int, s: int) -> tuple:
    """The level-2 multiset m(s) = (2^{s-1}, 1^{n+1-s}) as a tuple."""
    return (2,) * (s - 1) + (1,) * (n + 1 - s)


def family_residues(n: int, j: int, k: int, s: int) -> set:
    """Allowed residues res(p) for the (j, k) family at part-multiset
    index s: (j-1) mod (n+1) when s = j - k, (k-1) mod (n+1) when
    s = k - j (both mod n+1)."""
    m = n + 1
    out = set()
    if (s - (j - k)) % m == 0:
        out.add((j - 1) % m)
    if (s - (k - j)) % m == 0:
        out.add((k - 1) % m)
    return out


@dataclass(frozen=True)
class LevelTwoFamily:
    """Materialized orbit-pair family for a level-2 weight Lambda_j + Lambda_k."""

    j: int
    k: int
    n: int
    members: tuple  # OrbitPair values


def level_two_family(n: int, j: int, k: int, norm_bound) -> LevelTwoFamily:
    """All pairs (m, p) in the (j, k) family with f(a(m, p)) <= norm_bound:
    the recombined a-vector is weakly decreasing non-negative, the sorted
    part vector matches m(s) for an admissible s, and res(p) is allowed."""
    m = n + 1
    j, k = j % m, k % m
    admissible = {}
    for s in range(1, m + 1):
        if (s - (j - k)) % m == 0 or (s + (j - k)) % m == 0:
            admissible[s] = family_residues(n, j, k, s)
    members = []
    for a in _dominant_eps_in_ball(n, Fraction(norm_bound)):
        mvec, pvec = orbit_division(2, a)
        s = sum(1 for x in mvec if x == 2) + 1
        if s in admissible and res_p(pvec, n) in admissible[s]:
            members.append(OrbitPair(mvec, pvec, 2))
    members.sort(key=lambda pr: pr.a_vector(), reverse=True)
    return LevelTwoFamily(j, k, n, tuple(members))


def b_vector(pair: OrbitPair) -> tuple:
    """Bound vector of a level-2 pair: with sentinels p_{n+1} = -1 and
    m_{n+1} = 2, entry r is p_r - p_{r+1} + (m_r - m_{r+1} - |m_r - m_{r+1}|)/2."""
    if pair.level != 2:
        raise ValueError("bound vector defined at level 2")
    if not pair.in_dominant_set():
        raise ValueError("pair must come from a dominant weight")
    m = pair.m + (2,)
    p = pair.p + (-1,)
    out = []
    for r in range(pair.n):
        d = m[r] - m[r + 1]
        out.append(p[r] - p[r + 1] + (d - abs(d)) // 2)
    return tuple(out)


def cofinal_weight(Lam: AffineWeight, k: int) -> AffineWeight:
    """The k-th element of the cofinal orbit sequence through Lam:
    level*Lambda_0 + (lambda + k*level*theta)
    + (s - k(k*level + |lambda|)) delta."""
    if not Lam.is_dominant():
        raise ValueError("Lam must be dominant")
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return Lam
    ell = Lam.level
    lam = Lam.finite
    size = lam.height_sum()
    fin = lam + (k * ell) * theta(Lam.n)
    deg = Lam.degree - k * (k * ell + size)
    return AffineWeight(fin, ell, Fraction(deg))


def permutation_length(w: Sequence[int]) -> int:
    """Coxeter length of a finite permutation = inversion count."""
    w = list(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError("w must be a permutation of 1..n+1")
    return sum(
        1 for x in range(len(w)) for y in range(x + 1, len(w)) if w[x] > w[y]
    )


def reduced_pair_length(w: Sequence[int], i: Sequence[int], j: Sequence[int],
                        n: int) -> int:
    """Length of the affine Weyl element assembled from a finite
    permutation w and a reduced pair (i, j): when the pair satisfies the
    four reducedness conditions, the length is additive,
    l(w) + l + sum_k (i_k + n + 1 - j_k)."""
    if len(i) != len(j):
        raise ValueError("i and j must have equal length")
    l = len(i)
    for s in range(l):
        if not (0 <= i[s] < n and 1 <= j[s] <= n + 1):
            raise ValueError("index out of range in (i, j)")
    for s in range(l - 1):
        # condition (1): interior factors avoid the degenerate shapes
        if not ((i[s], j[s]) == (0, 1) or (i[s] != 0 and j[s] != n + 1)):
            raise ValueError("not reduced: condition (1) fails at position %d" % (s + 1))
    for s in range(l - 1):
        # condition (2): i non-increasing, j non-decreasing
        if i[s] < i[s + 1] or j[s] > j[s + 1]:
            raise ValueError("not reduced: condition (2) fails at position %d" % (s + 1))
    for s in range(l - 1):
        # condition (3)
        if i[s] < j[s] - 1 and not i[s] > i[s + 1]:
            raise ValueError("not reduced: condition (3) fails at position %d" % (s + 1))
    for s in range(1, l):
        # condition (4)
        if i[s] < j[s] - 1 and not j[s - 1] < j[s]:
            raise ValueError("not reduced: condition (4) fails at position %d" % (s + 1))
    return permutation_length(w) + l + sum(
        i[s] + n + 1 - j[s] for s in range(l)
    )
