"""Exact Cartan data for types A_n and A_n^(1).

Weights of the finite algebra are stored by their values on the simple
coroots h_1, ..., h_n (fundamental-weight coordinates).  Affine weights
carry a finite part, an integer level and an exact rational degree.  All
bilinear-form values are Fractions with denominator dividing n + 1; no
floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence


def residue(a: int, n: int) -> int:
    """Representative of a modulo n + 1 inside [0, n]."""
    return a % (n + 1)


@lru_cache(maxsize=None)
def cartan_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix of type A_n (tridiagonal 2 / -1)."""
    if n < 1:
        raise ValueError("rank must be >= 1")
    return tuple(
        tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n))
        for i in range(n)
    )


@lru_cache(maxsize=None)
def inverse_cartan(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse of the type A_n Cartan matrix.

    Entry (i, j) is min(i,j) * (n + 1 - max(i,j)) / (n + 1) with 1-based
    indices.
    """
    if n < 1:
        raise ValueError("rank must be >= 1")
    return tuple(
        tuple(
            Fraction(min(i, j) * (n + 1 - max(i, j)), n + 1)
            for j in range(1, n + 1)
        )
        for i in range(1, n + 1)
    )


@lru_cache(maxsize=None)
def affine_cartan_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix of type A_n^(1) on index set [0, n] (cyclic)."""
    if n == 1:
        return ((2, -2), (-2, 2))
    m = n + 1
    return tuple(
        tuple(
            2 if i == j else (-1 if (i - j) % m in (1, m - 1) else 0)
            for j in range(m)
        )
        for i in range(m)
    )


@dataclass(frozen=True)
class FiniteWeight:
    """Integral weight of sl_{n+1} in fundamental-weight coordinates."""

    n: int
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.n:
            raise ValueError("coordinate vector has wrong length")

    @staticmethod
    def zero(n: int) -> "FiniteWeight":
        return FiniteWeight(n, (0,) * n)

    def __add__(self, other: "FiniteWeight") -> "FiniteWeight":
        self._check(other)
        return FiniteWeight(self.n, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "FiniteWeight") -> "FiniteWeight":
        self._check(other)
        return FiniteWeight(self.n, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, k: int) -> "FiniteWeight":
        return FiniteWeight(self.n, tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def __neg__(self) -> "FiniteWeight":
        return FiniteWeight(self.n, tuple(-a for a in self.coords))

    def _check(self, other: "FiniteWeight") -> None:
        if self.n != other.n:
            raise ValueError("rank mismatch")

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def height_sum(self) -> int:
        """|lambda| = sum of the values on the simple coroots."""
        return sum(self.coords)

    def w0_image(self) -> "FiniteWeight":
        """Action of the longest Weyl element: w0(mu) = -reverse(mu)."""
        return FiniteWeight(self.n, tuple(-c for c in reversed(self.coords)))

    def minus_w0(self) -> "FiniteWeight":
        """-w0(mu); for type A this reverses the coordinates."""
        return FiniteWeight(self.n, tuple(reversed(self.coords)))


def omega(n: int, i: int) -> FiniteWeight:
    """Fundamental weight omega_i (omega_0 = 0)."""
    if not 0 <= i <= n:
        raise ValueError("index out of range")
    return FiniteWeight(n, tuple(1 if j == i else 0 for j in range(1, n + 1)))


def alpha(n: int, i: int) -> FiniteWeight:
    """Simple root alpha_i (1 <= i <= n) in fundamental-weight coordinates."""
    if not 1 <= i <= n:
        raise ValueError("index out of range")
    col = cartan_matrix(n)
    return FiniteWeight(n, tuple(col[j][i - 1] for j in range(n)))


def theta(n: int) -> FiniteWeight:
    """Highest root; alpha_1 + ... + alpha_n."""
    if n == 1:
        return FiniteWeight(1, (2,))
    return FiniteWeight(n, tuple(1 if j in (0, n - 1) else 0 for j in range(n)))


def bilinear(lam: FiniteWeight, mu: FiniteWeight) -> Fraction:
    """Invariant form normalized by (alpha, alpha) = 2, via the inverse
    Cartan matrix: (omega_i, omega_j) = (C^{-1})_{ij}."""
    if lam.n != mu.n:
        raise ValueError("rank mismatch")
    inv = inverse_cartan(lam.n)
    total = Fraction(0)
    for i, a in enumerate(lam.coords):
        if a == 0:
            continue
        row = inv[i]
        for j, b in enumerate(mu.coords):
            if b:
                total += a * b * row[j]
    return total


def eps_coords(mu: FiniteWeight) -> tuple[int, ...]:
    """Epsilon-basis coordinates a with a_i = sum_{j <= n+1-i} mu(h_j).

    These are the coordinates of -w0(mu); the quadratic form f evaluated
    on them recovers (mu, mu).
    """
    n = mu.n
    prefix = [0] * (n + 1)
    for j, c in enumerate(mu.coords, start=1):
        prefix[j] = prefix[j - 1] + c
    return tuple(prefix[n + 1 - i] for i in range(1, n + 1))


def weight_from_eps(n: int, a: Sequence[int]) -> FiniteWeight:
    """Inverse of eps_coords: mu(h_r) = a_{n+1-r} - a_{n+2-r}."""
    if len(a) != n:
        raise ValueError("epsilon vector has wrong length")
    ext = list(a) + [0]
    return FiniteWeight(n, tuple(ext[n - r] - ext[n - r + 1] for r in range(1, n + 1)))


def quadratic_f(a: Sequence) -> Fraction:
    """Positive definite form f(a) = (n*sum a_i^2 - 2*sum_{i<j} a_i a_j)/(n+1)."""
    n = len(a)
    sq = sum(x * x for x in a)
    s = sum(a)
    # 2*sum_{i<j} a_i a_j = s^2 - sq
    return Fraction((n + 1) * sq - s * s, n + 1)


def in_root_lattice(b: Sequence[int]) -> bool:
    """Whether sum(b_i) eps_i lies in the root lattice Q."""
    n = len(b)
    return sum(b) % (n + 1) == 0


def varpi_eps(n: int, i: int) -> tuple[int, ...]:
    """Epsilon-coordinate vector of the i-th fundamental weight direction
    (i leading ones); f on it equals i(n+1-i)/(n+1)."""
    if not 0 <= i <= n:
        raise ValueError("index out of range")
    return tuple(1 if j < i else 0 for j in range(n))


@dataclass(frozen=True)
class AffineWeight:
    """Affine weight lambda = finite + level * Lambda_0 + degree * delta."""

    finite: FiniteWeight
    level: int
    degree: Fraction

    @property
    def n(self) -> int:
        return self.finite.n

    @staticmethod
    def from_c_values(n: int, cvals: Sequence[int], degree=0) -> "AffineWeight":
        """Build from the n + 1 values on h_0, ..., h_n plus a degree."""
        if len(cvals) != n + 1:
            raise ValueError("need n + 1 coroot values")
        return AffineWeight(FiniteWeight(n, tuple(cvals[1:])), sum(cvals), Fraction(degree))

    def value(self, i: int) -> int:
        """lambda(h_i) for i in [0, n]; h_0 = c - h_theta."""
        if i == 0:
            return self.level - sum(self.finite.coords)
        return self.finite.coords[i - 1]

    def c_values(self) -> tuple[int, ...]:
        return tuple(self.value(i) for i in range(self.n + 1))

    def is_dominant(self) -> bool:
        return self.finite.is_dominant() and self.value(0) >= 0

    def __add__(self, other: "AffineWeight") -> "AffineWeight":
        return AffineWeight(self.finite + other.finite, self.level + other.level,
                            self.degree + other.degree)

    def __sub__(self, other: "AffineWeight") -> "AffineWeight":
        return AffineWeight(self.finite - other.finite, self.level - other.level,
                            self.degree - other.degree)

    def __mul__(self, k: int) -> "AffineWeight":
        return AffineWeight(k * self.finite, k * self.level, k * self.degree)

    __rmul__ = __mul__

    def shift_delta(self, s) -> "AffineWeight":
        return AffineWeight(self.finite, self.level, self.degree + Fraction(s))

    def equiv_mod_delta(self, other: "AffineWeight") -> bool:
        return self.finite == other.finite and self.level == other.level


def affine_Lambda(n: int, i: int) -> AffineWeight:
    """Fundamental affine weight Lambda_i = omega_i + Lambda_0 (type A)."""
    return AffineWeight(omega(n, residue(i, n)), 1, Fraction(0))


def affine_delta(n: int) -> AffineWeight:
    return AffineWeight(FiniteWeight.zero(n), 0, Fraction(1))


def affine_alpha(n: int, i: int) -> AffineWeight:
    """Simple root alpha_i as an affine weight; alpha_0 = delta - theta."""
    if i == 0:
        return AffineWeight(-theta(n), 0, Fraction(1))
    return AffineWeight(alpha(n, i), 0, Fraction(0))


def affine_bilinear(lam: AffineWeight, mu: AffineWeight) -> Fraction:
    """(lam, mu) = (finite, finite) + lam(c) mu(d) + lam(d) mu(c)."""
    return bilinear(lam.finite, mu.finite) + lam.level * mu.degree + lam.degree * mu.level


def rho_hat(n: int) -> AffineWeight:
    """Sum of all affine fundamental weights."""
    return AffineWeight(FiniteWeight(n, (1,) * n), n + 1, Fraction(0))
