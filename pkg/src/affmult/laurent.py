"""Sparse Laurent polynomials in one variable q.

Coefficients are integers; exponents may be integers or exact rationals
(generating polynomials of graded multiplicities carry a global rational
degree shift).  Stored as a dict from exponent to non-zero coefficient.
"""

from __future__ import annotations

from fractions import Fraction


class LaurentPoly:
    """Integer-coefficient polynomial with integer or rational exponents."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for e, c in coeffs.items():
                if c:
                    self.coeffs[e] = c

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def monomial(e, c: int = 1) -> "LaurentPoly":
        return LaurentPoly({e: c})

    def coeff(self, e) -> int:
        c = self.coeffs.get(e, 0)
        if c == 0 and not isinstance(e, Fraction):
            # an integer exponent may be stored as a Fraction-valued key
            c = self.coeffs.get(Fraction(e), 0)
        return c

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self):
        return sorted(self.coeffs)

    def min_degree(self):
        return min(self.coeffs)

    def max_degree(self):
        return max(self.coeffs)

    def shift(self, s) -> "LaurentPoly":
        """Multiply by q**s."""
        return LaurentPoly({e + s: c for e, c in self.coeffs.items()})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) - c
        return LaurentPoly(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.coeffs.items()})
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        norm = lambda d: {(Fraction(e) if not isinstance(e, Fraction) else e): c
                          for e, c in d.items()}
        return norm(self.coeffs) == norm(other.coeffs)

    def __hash__(self):
        return hash(frozenset((Fraction(e), c) for e, c in self.coeffs.items()))

    def is_palindromic(self) -> bool:
        """Whether coefficients are symmetric about the middle degree."""
        if self.is_zero():
            return True
        lo, hi = self.min_degree(), self.max_degree()
        return all(c == self.coeff(lo + hi - e) for e, c in self.coeffs.items())

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for e in self.support():
            c = self.coeffs[e]
            if e == 0:
                terms.append(f"{c}")
            else:
                mono = "q" if e == 1 else f"q^{e}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)
