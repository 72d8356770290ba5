"""Independent verification oracle: truncated characters of simple
highest-weight modules of A_n^(1) via the Freudenthal recursion, tensor
products of truncated characters, and outer multiplicities by peeling
dominant weights in order.

Everything is exact.  The positive roots used are the real roots
alpha + r*delta (alpha any finite root, r >= 1; alpha positive at r = 0),
each of multiplicity 1, and the imaginary roots r*delta of multiplicity n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .affine_cartan import (
    AffineWeight,
    FiniteWeight,
    affine_bilinear,
    alpha,
    bilinear,
    quadratic_f,
    rho_hat,
    theta,
    weight_from_eps,
)
from .multiplicities import a_of_eta


@dataclass(frozen=True)
class TruncatedCharacter:
    """Weight multiplicities of V(highest) down to delta-depth <= depth."""

    highest: AffineWeight
    depth: int
    mults: dict

    def mult(self, w: AffineWeight) -> int:
        return self.mults.get(w, 0)


@lru_cache(maxsize=None)
def _finite_roots(n: int) -> tuple:
    """All roots of the finite part, as FiniteWeight values."""
    pos = []
    for lo in range(1, n + 1):
        root = alpha(n, lo)
        pos.append(root)
        for hi in range(lo + 1, n + 1):
            root = root + alpha(n, hi)
            pos.append(root)
    return tuple(pos) + tuple(-r for r in pos)


@lru_cache(maxsize=None)
def _positive_finite_roots(n: int) -> tuple:
    roots = _finite_roots(n)
    return roots[: len(roots) // 2]


def _coeff_vector(n: int, diff: AffineWeight) -> tuple:
    """Coefficients (c_0, ..., c_n) of a level-0 weight in the simple
    affine roots, or None if not a non-negative integer combination."""
    c0 = diff.degree
    if c0.denominator != 1 or c0 < 0:
        return None
    c0 = int(c0)
    try:
        rest = a_of_eta(diff.finite + c0 * theta(n))
    except ValueError:
        return None
    if any(x < 0 for x in rest):
        return None
    return (c0,) + rest


def freudenthal_character(Lam: AffineWeight, depth: int) -> TruncatedCharacter:
    """Weight multiplicities of the simple module V(Lam) at all weights
    of delta-depth at most `depth` below Lam."""
    if not Lam.is_dominant() or Lam.level < 1:
        raise ValueError("highest weight must be dominant of positive level")
    n = Lam.n
    rh = rho_hat(n)
    top_shift = Lam + rh
    top_norm = affine_bilinear(top_shift, top_shift)
    lev = Lam.level
    rho_bar = rh.finite
    mults = {Lam: 1}
    fin_roots = _finite_roots(n)

    def root_coeffs(beta_fin, r):
        """alpha-basis coefficients of the affine root beta_fin + r*delta."""
        base = a_of_eta(beta_fin + r * theta(n))
        return (r,) + base

    # layer by delta-depth; depth d weights have degree Lam(d) - d
    for d in range(0, depth + 1):
        candidates = _layer_candidates(Lam, d, top_norm, rho_bar)
        # ascending height of Lam - mu so that mu + t*positive-root is done
        candidates.sort(key=lambda item: item[1])
        for (nu, _height, cvec) in candidates:
            mu = AffineWeight(nu, lev, Lam.degree - d)
            if mu == Lam:
                continue
            mu_shift = mu + rh
            den = top_norm - affine_bilinear(mu_shift, mu_shift)
            if den <= 0:
                # strict norm inequality: such mu has multiplicity 0
                continue
            acc = Fraction(0)
            # real roots beta + r*delta
            for r in range(0, d + 1):
                for beta in (fin_roots if r >= 1 else fin_roots[: len(fin_roots) // 2]):
                    rc = root_coeffs(beta, r)
                    tmax = _t_limit(cvec, rc)
                    for t in range(1, tmax + 1):
                        w = AffineWeight(nu + t * beta, lev, mu.degree + t * r)
                        mw = mults.get(w, 0)
                        if mw:
                            acc += mw * (bilinear(w.finite, beta) + r * lev)
            # imaginary roots r*delta, multiplicity n
            for r in range(1, d + 1):
                tmax = d // r
                for t in range(1, tmax + 1):
                    if t * r > cvec[0]:
                        break
                    w = AffineWeight(nu, lev, mu.degree + t * r)
                    mw = mults.get(w, 0)
                    if mw:
                        acc += n * mw * (r * lev)
            val = Fraction(2 * acc, den)
            if val.denominator != 1 or val < 0:
                raise ArithmeticError("non-integral weight multiplicity")
            if val:
                mults[mu] = int(val)
    return TruncatedCharacter(Lam, depth, mults)


def _t_limit(cvec, root_coeffs) -> int:
    """Largest t with cvec - t*root_coeffs componentwise >= 0."""
    tmax = None
    for c, rc in zip(cvec, root_coeffs):
        if rc > 0:
            cap = c // rc
            tmax = cap if tmax is None else min(tmax, cap)
    return 0 if tmax is None else max(tmax, 0)


def _layer_candidates(Lam: AffineWeight, d: int, top_norm, rho_bar):
    """Finite parts nu of potential weights at delta-depth d: the shifted
    norm bound (nu + rho_bar, nu + rho_bar) <= top_norm + 2(level + n + 1)d
    cut down to Lam_bar + d*theta - Q+."""
    n = Lam.n
    # (mu + rho_hat, mu + rho_hat) <= top_norm with mu at degree Lam(d) - d
    ball = top_norm - 2 * (Lam.level + n + 1) * (Lam.degree - d)
    if ball < 0:
        return []
    amax = isqrt(int((n + 1) * ball))
    rho_eps = list(range(n, 0, -1))  # epsilon-coordinates of rho_bar
    shift_top = Lam.finite + d * theta(n)
    out = []

    def rec(prefix):
        if len(prefix) == n:
            if quadratic_f(prefix) <= ball:
                nu = weight_from_eps(n, [prefix[i] - rho_eps[i] for i in range(n)])
                diff = shift_top - nu
                try:
                    coeffs = a_of_eta(diff)
                except ValueError:
                    return
                if all(x >= 0 for x in coeffs):
                    height = sum(coeffs)
                    out.append((nu, height, (d,) + coeffs))
            return
        for v in range(-amax, amax + 1):
            prefix.append(v)
            rec(prefix)
            prefix.pop()

    rec([])
    return out


def tensor_character(c1: TruncatedCharacter, c2: TruncatedCharacter,
                     depth: int) -> dict:
    """Product of two truncated characters, kept to delta-depth <= depth
    below the sum of the highest weights."""
    top_deg = c1.highest.degree + c2.highest.degree
    out = {}
    for w1, m1 in c1.mults.items():
        for w2, m2 in c2.mults.items():
            w = w1 + w2
            if top_deg - w.degree <= depth:
                out[w] = out.get(w, 0) + m1 * m2
    return out


def tensor_outer_multiplicities(Lam: AffineWeight, Lam2: AffineWeight,
                                depth: int) -> dict:
    """Multiplicity of each simple module V(xi), xi dominant within
    delta-depth `depth`, in V(Lam) (x) V(Lam2): peel the product
    character from the top."""
    n = Lam.n
    c1 = freudenthal_character(Lam, depth)
    c2 = freudenthal_character(Lam2, depth)
    product = tensor_character(c1, c2, depth)
    top = Lam + Lam2
    dominant = [w for w in product if w.is_dominant()]

    def sort_key(w):
        cv = _coeff_vector(n, top - w)
        return (int(top.degree - w.degree), sum(cv), cv)

    dominant.sort(key=sort_key)
    peeled = {}
    chars = {}
    for xi in dominant:
        val = product[xi]
        for prev, m in peeled.items():
            if m == 0:
                continue
            if prev not in chars:
                rem = depth - int(top.degree - prev.degree)
                chars[prev] = freudenthal_character(prev, rem)
            val -= m * chars[prev].mult(xi)
        if val < 0:
            raise ArithmeticError("negative outer multiplicity during peeling")
        peeled[xi] = val
    return peeled


def reconstruction_check(Lam: AffineWeight, Lam2: AffineWeight,
                         depth: int) -> bool:
    """Full reconstruction identity: the peeled decomposition re-sums to
    the product character at every weight within depth."""
    c1 = freudenthal_character(Lam, depth)
    c2 = freudenthal_character(Lam2, depth)
    product = tensor_character(c1, c2, depth)
    peeled = tensor_outer_multiplicities(Lam, Lam2, depth)
    top = Lam + Lam2
    recon = {}
    for xi, m in peeled.items():
        if m == 0:
            continue
        rem = depth - int(top.degree - xi.degree)
        ch = freudenthal_character(xi, rem)
        for w, mw in ch.mults.items():
            if top.degree - w.degree <= depth:
                recon[w] = recon.get(w, 0) + m * mw
    return recon == product
