"""Outer multiplicities of level-2 simple modules in tensor products of
two level-1 fundamental modules, by three routes:

* a closed-form sum of bounded-multipartition counts over an orbit set
  indexed by dominant finite weights (``outer_multiplicity_formula``);
* the same sum re-indexed by level-2 orbit pairs and driven by a tableau
  content character (``tau_formula``);
* a stabilizing limit of level-1 to level-2 flag multiplicities along a
  cofinal orbit sequence (``outer_multiplicity_limit``).

Also: the level-1 to level-2 flag multiplicity generating polynomials,
and the rotation reduction expressing a general fundamental pair
(i, j) through the (0, j - i) case.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .affine_cartan import (
    AffineWeight,
    FiniteWeight,
    affine_Lambda,
    affine_alpha,
    affine_delta,
    bilinear,
    inverse_cartan,
    omega,
    quadratic_f,
    residue,
    theta,
    varpi_eps,
)
from .laurent import LaurentPoly
from .partitions import q_binomial_product, rho_multi, stabilize_threshold
from .tableaux import jk_from_eta
from .weyl_orbits import (
    OrbitPair,
    b_vector,
    enumerate_gamma,
    level_two_family,
    r_of,
)


@dataclass(frozen=True)
class DemazureLabel:
    """Label (level, lambda, r) of a Demazure-type module; never built."""

    level: int
    lam: FiniteWeight
    r: Fraction = Fraction(0)


@dataclass(frozen=True)
class MuSplit:
    """Parity split -w0(mu) = 2*mu0 + mu1 with mu1 coordinates in {0,1}."""

    mu0: FiniteWeight
    mu1: FiniteWeight

    @property
    def bounds(self) -> tuple:
        return self.mu0.coords


def mu_split(mu: FiniteWeight) -> MuSplit:
    if not mu.is_dominant():
        raise ValueError("mu must be dominant")
    v = mu.minus_w0().coords
    mu0 = FiniteWeight(mu.n, tuple(c // 2 for c in v))
    mu1 = FiniteWeight(mu.n, tuple(c % 2 for c in v))
    return MuSplit(mu0, mu1)


def direct_split(mu: FiniteWeight):
    """Parity split of mu itself: mu = 2*mu0 + mu1, mu1 coords in {0,1}.
    This is the convention of the flag-multiplicity formula; it differs
    from mu_split by the coordinate reversal -w0, which permutes the
    bound vector but leaves plain multipartition counts unchanged."""
    mu0 = FiniteWeight(mu.n, tuple(c // 2 for c in mu.coords))
    mu1 = FiniteWeight(mu.n, tuple(c % 2 for c in mu.coords))
    return mu0, mu1


def a_of_eta(eta: FiniteWeight) -> tuple:
    """Coefficients a with eta = sum a_i alpha_i; a_i = (eta, omega_i).
    Errors when eta is not in the root lattice."""
    inv = inverse_cartan(eta.n)
    out = []
    for i in range(eta.n):
        val = sum(inv[i][j] * eta.coords[j] for j in range(eta.n))
        if val.denominator != 1:
            raise ValueError("weight is not in the root lattice")
        out.append(int(val))
    return tuple(out)


def _flag_data(lam: FiniteWeight, mu: FiniteWeight):
    """Shared setup: root coefficients a of lam - mu (None if lam - mu
    is not a non-negative root sum), bounds from the split of mu, and
    the rational prefactor exponent (lam + mu1, lam - mu)/2."""
    diff = lam - mu
    try:
        a = a_of_eta(diff)
    except ValueError:
        return None
    if any(x < 0 for x in a):
        return None
    mu0, mu1 = direct_split(mu)
    shift = Fraction(bilinear(lam + mu1, diff), 2)
    return a, mu0.coords, shift


def flag_multiplicity_poly(lam: FiniteWeight, mu: FiniteWeight) -> LaurentPoly:
    """Generating polynomial of the level-1 to level-2 flag multiplicities:
    q^{(lam+mu1, lam-mu)/2} * prod_j [a_j + b_j choose a_j]_q, where a is
    the root-coefficient vector of lam - mu and b the bound vector of mu.
    Zero when lam - mu is not a non-negative sum of simple roots."""
    if not lam.is_dominant() or not mu.is_dominant():
        raise ValueError("weights must be dominant")
    data = _flag_data(lam, mu)
    if data is None:
        return LaurentPoly.zero()
    a, b, shift = data
    poly = q_binomial_product([x + y for x, y in zip(a, b)], list(a))
    return poly.shift(shift)


def flag_multiplicity_at(lam: FiniteWeight, mu: FiniteWeight, r) -> int:
    """Coefficient extraction without building the polynomial: the number
    of multipartitions of r - (lam+mu1, lam-mu)/2 with bounds from mu and
    length caps from lam - mu; zero off the admissible range."""
    if not lam.is_dominant() or not mu.is_dominant():
        raise ValueError("weights must be dominant")
    data = _flag_data(lam, mu)
    if data is None:
        return 0
    a, b, shift = data
    return rho_multi(Fraction(r) - shift, b, a)


def xi_from_eta(n: int, i: int, eta: Sequence[int]) -> AffineWeight:
    """xi = Lambda_0 + Lambda_i - sum_l eta_l alpha_l (level 2)."""
    if len(eta) != n + 1:
        raise ValueError("eta must have n + 1 entries")
    xi = affine_Lambda(n, 0) + affine_Lambda(n, i)
    for l, e in enumerate(eta):
        if e:
            xi = xi - e * affine_alpha(n, l)
    return xi


def eta_from_xi(n: int, i: int, xi: AffineWeight) -> tuple:
    """Inverse of xi_from_eta; errors unless Lambda_0 + Lambda_i - xi is
    a non-negative integer combination of the simple affine roots."""
    if xi.level != 2:
        raise ValueError("xi must have level 2")
    diff = (affine_Lambda(n, 0) + affine_Lambda(n, i)) - xi
    eta0 = diff.degree
    if eta0.denominator != 1 or eta0 < 0:
        raise ValueError("xi is not below Lambda_0 + Lambda_i")
    eta0 = int(eta0)
    fin = diff.finite + eta0 * theta(n)
    rest = a_of_eta(fin)
    if any(x < 0 for x in rest):
        raise ValueError("xi is not below Lambda_0 + Lambda_i")
    return (eta0,) + tuple(rest)


def f_ball_bound(n: int, i: int, xi: AffineWeight) -> Fraction:
    """Norm bound 2(omega_i, omega_i) - (xibar, xibar) - 4 xi(d) on the
    orbit-set members with a non-zero count."""
    w = omega(n, residue(i, n))
    return 2 * bilinear(w, w) - bilinear(xi.finite, xi.finite) - 4 * xi.degree


def f_weight(n: int, i: int, xi: AffineWeight, mu: FiniteWeight) -> Fraction:
    """f_{i,xi}(mu) = (2(omega_i,omega_i) - (xibar,xibar) - 4 xi(d) - (mu,mu))/4."""
    return Fraction(f_ball_bound(n, i, xi) - bilinear(mu, mu), 4)


def outer_multiplicity_formula(n: int, i: int, xi: AffineWeight) -> int:
    """Multiplicity of the simple module with highest weight xi in the
    tensor product of the 0-th and i-th level-1 fundamental modules:
    sum over the orbit set of xi of bounded-multipartition counts at
    argument f_{i,xi}(mu)."""
    if xi.level != 2:
        raise ValueError("xi must have level 2")
    if not xi.is_dominant():
        raise ValueError("xi must be dominant")
    bound = f_ball_bound(n, i, xi)
    total = 0
    for mu, _pair in enumerate_gamma(xi, bound):
        total += rho_multi(f_weight(n, i, xi, mu), mu_split(mu).bounds)
    return total


def f_eps(n: int, i: int, j: int, k: int, eta0: int, a: Sequence[int]) -> Fraction:
    """Epsilon-coordinate form of f_{i,xi}:
    f(w_i)/2 - f(w_j + w_k)/4 + eta_0 - f(a)/4, with w_* the fundamental
    direction vectors."""
    wi = varpi_eps(n, residue(i, n))
    wjk = tuple(x + y for x, y in zip(varpi_eps(n, residue(j, n)),
                                      varpi_eps(n, residue(k, n))))
    return (Fraction(quadratic_f(wi), 2) - Fraction(quadratic_f(wjk), 4)
            + eta0 - Fraction(quadratic_f(a), 4))


def tau_formula(n: int, i: int, eta: Sequence[int]) -> int:
    """Tableau-counting route: the same multiplicity computed from the
    content character eta, summing bounded-multipartition counts over
    the level-2 orbit-pair family of the indices (j, k) read off eta."""
    eta = tuple(eta)
    if len(eta) != n + 1:
        raise ValueError("eta must have n + 1 entries")
    j, k = jk_from_eta(eta, i)
    eta0 = eta[0]
    wi = varpi_eps(n, residue(i, n))
    wjk = tuple(x + y for x, y in zip(varpi_eps(n, j), varpi_eps(n, k)))
    bound = 2 * quadratic_f(wi) - quadratic_f(wjk) + 4 * eta0
    total = 0
    for pair in level_two_family(n, j, k, bound).members:
        total += rho_multi(f_eps(n, i, j, k, eta0, pair.a_vector()),
                           b_vector(pair))
    return total


def tau_terms(n: int, i: int, eta: Sequence[int]) -> list:
    """Per-pair breakdown of tau_formula: (pair, bounds, argument, count)."""
    eta = tuple(eta)
    j, k = jk_from_eta(eta, i)
    eta0 = eta[0]
    wi = varpi_eps(n, residue(i, n))
    wjk = tuple(x + y for x, y in zip(varpi_eps(n, j), varpi_eps(n, k)))
    bound = 2 * quadratic_f(wi) - quadratic_f(wjk) + 4 * eta0
    out = []
    for pair in level_two_family(n, j, k, bound).members:
        b = b_vector(pair)
        arg = f_eps(n, i, j, k, eta0, pair.a_vector())
        out.append((pair, b, arg, rho_multi(arg, b)))
    return out


@dataclass(frozen=True)
class LimitResult:
    """Outcome of the flag-multiplicity limit route."""

    value: int
    stabilized_at: object  # int, or the string "not stabilized"
    sequences: tuple  # per-mu tuples (mu, threshold, values by k)


def outer_multiplicity_limit(n: int, i: int, xi: AffineWeight,
                             k_max: int) -> LimitResult:
    """Limit route: for each mu in the orbit set of xi evaluate the flag
    multiplicity [D(1, omega_i + k*theta) : D(2, mu, r(mu,xi) + k(|omega_i|+k))]
    for k = 0..k_max.  Each sequence is non-decreasing and constant from
    the explicit stabilization threshold on; the stabilized sum is the
    outer multiplicity."""
    if xi.level != 2:
        raise ValueError("xi must have level 2")
    if not xi.is_dominant():
        raise ValueError("xi must be dominant")
    i = residue(i, n)
    wi = omega(n, i)
    size = wi.height_sum()
    th = theta(n)
    bound = f_ball_bound(n, i, xi)
    sequences = []
    global_threshold = 0
    total = 0
    stabilized = True
    for mu, _pair in enumerate_gamma(xi, bound):
        r0 = r_of(mu, xi)
        b = direct_split(mu)[0].coords
        f = f_weight(n, i, xi, mu)
        values = tuple(
            flag_multiplicity_at(wi + k * th, mu, r0 + k * (size + k))
            for k in range(k_max + 1)
        )
        if f.denominator != 1 or f < 0:
            threshold = 0  # count is identically 0 at every k
        else:
            a_cap = a_of_eta(mu - wi) if _in_lattice(mu - wi) else None
            if a_cap is None:
                threshold = 0
            else:
                threshold = max(0, stabilize_threshold(int(f), a_cap, b))
        sequences.append((mu, threshold, values))
        if threshold > k_max:
            stabilized = False
        else:
            global_threshold = max(global_threshold, threshold)
        total += values[-1]
    status = global_threshold if stabilized else "not stabilized"
    return LimitResult(total, status, tuple(sequences))


def _in_lattice(eta: FiniteWeight) -> bool:
    try:
        a_of_eta(eta)
        return True
    except ValueError:
        return False


def rotate(c: int, lam: AffineWeight) -> AffineWeight:
    """Diagram rotation by c steps: delta is fixed, alpha_k maps to
    alpha_{k+c}, and Lambda_0 maps to Lambda_c - ((omega_c, omega_c)/2) delta.
    An isometry of the affine weight lattice that permutes the coroot
    values cyclically."""
    n = lam.n
    m = n + 1
    c = c % m
    inv = inverse_cartan(n)
    wc = omega(n, c)
    half_norm = Fraction(bilinear(wc, wc), 2)
    # accumulate exact rational coordinates; integrality holds in total
    fin = [Fraction(0)] * n
    lev = 0
    deg = lam.degree
    for k in range(m):
        v = lam.value(k)
        if not v:
            continue
        # rho_c(Lambda_k) = Lambda_c - half_norm * delta
        #                   + sum_l (C^-1)_{kl} rho_c(alpha_l)
        lev += v
        for idx, x in enumerate(wc.coords):
            fin[idx] += v * x
        deg -= v * half_norm
        if k == 0:
            continue
        for l in range(1, m):
            coef = inv[k - 1][l - 1]
            if not coef:
                continue
            rooti = (l + c) % m
            root = affine_alpha(n, rooti)
            for idx, x in enumerate(root.finite.coords):
                if x:
                    fin[idx] += v * coef * x
            deg += v * coef * root.degree
    coords = []
    for x in fin:
        if x.denominator != 1:
            raise ArithmeticError("rotation produced non-integral coordinates")
        coords.append(int(x))
    return AffineWeight(FiniteWeight(n, tuple(coords)), lev, deg)


def _below(top: AffineWeight, xi: AffineWeight) -> bool:
    """Whether top - xi is a non-negative integer combination of the
    simple affine roots."""
    diff = top - xi
    if diff.level != 0:
        return False
    c0 = diff.degree
    if c0.denominator != 1 or c0 < 0:
        return False
    fin = diff.finite + int(c0) * theta(top.n)
    try:
        rest = a_of_eta(fin)
    except ValueError:
        return False
    return all(x >= 0 for x in rest)


def general_fundamental(n: int, i: int, j: int, xi: AffineWeight) -> int:
    """Multiplicity of V(xi) in V(Lambda_i) (x) V(Lambda_j), reduced to
    the (0, j - i) case by the diagram rotation taking Lambda_i to
    Lambda_0 up to a delta shift."""
    m = n + 1
    i, j = i % m, j % m
    if xi.level != 2:
        raise ValueError("xi must have level 2")
    top = affine_Lambda(n, i) + affine_Lambda(n, j)
    if not _below(top, xi):
        raise ValueError("xi is not below Lambda_i + Lambda_j")
    c = (-i) % m
    li = rotate(c, affine_Lambda(n, i))  # Lambda_0 + e1 * delta
    lj = rotate(c, affine_Lambda(n, j))  # Lambda_{j-i} + e2 * delta
    shift = li.degree + lj.degree
    xi_rot = rotate(c, xi).shift_delta(-shift)
    return outer_multiplicity_formula(n, (j - i) % m, xi_rot)
