"""The three multiplicity routes, flag multiplicity polynomials, and the
rotation reduction for general fundamental tensor products."""

import random
from fractions import Fraction

from affmult.affine_cartan import (
    AffineWeight,
    FiniteWeight,
    affine_bilinear,
    affine_Lambda,
    affine_delta,
    alpha,
    omega,
    theta,
)
from affmult.laurent import LaurentPoly
from affmult.multiplicities import (
    a_of_eta,
    direct_split,
    eta_from_xi,
    flag_multiplicity_at,
    flag_multiplicity_poly,
    general_fundamental,
    mu_split,
    outer_multiplicity_formula,
    outer_multiplicity_limit,
    rotate,
    tau_formula,
    tau_terms,
    xi_from_eta,
)
from affmult.partitions import rho, rho_multi
from affmult.tableaux import tau_bruteforce


class TestMuSplit:
    def test_zero(self):
        s = mu_split(FiniteWeight.zero(2))
        assert s.mu0 == s.mu1 == FiniteWeight.zero(2)

    def test_rank_one_parity(self):
        s = mu_split(5 * omega(1, 1))
        assert s.mu0 == 2 * omega(1, 1)
        assert s.mu1 == omega(1, 1)

    def test_reversal(self):
        s = mu_split(2 * omega(2, 1))
        assert s.mu0 == omega(2, 2)
        assert s.mu1 == FiniteWeight.zero(2)
        assert s.bounds == (0, 1)

    def test_direct_split_reconstruction(self):
        mu = FiniteWeight(3, (3, 0, 5))
        mu0, mu1 = direct_split(mu)
        assert 2 * mu0 + mu1 == mu
        assert all(c in (0, 1) for c in mu1.coords)


class TestRootCoefficients:
    def test_simple_roots(self):
        for n in (1, 2, 3):
            for i in range(1, n + 1):
                expected = tuple(1 if j == i else 0 for j in range(1, n + 1))
                assert a_of_eta(alpha(n, i)) == expected

    def test_theta(self):
        assert a_of_eta(theta(2)) == (1, 1)

    def test_rank_one_doubled(self):
        assert a_of_eta(2 * omega(1, 1)) == (1,)

    def test_rejects_non_lattice(self):
        try:
            a_of_eta(omega(2, 1))
        except ValueError:
            pass
        else:
            raise AssertionError("expected an error outside the root lattice")


class TestFlagMultiplicity:
    def test_equal_weights(self):
        lam = FiniteWeight(2, (1, 3))
        assert flag_multiplicity_poly(lam, lam) == LaurentPoly.one()
        assert flag_multiplicity_at(lam, lam, 0) == 1

    def test_rank_one_two_boxes(self):
        poly = flag_multiplicity_poly(2 * omega(1, 1), FiniteWeight.zero(1))
        assert poly == LaurentPoly({1: 1})
        assert flag_multiplicity_at(2 * omega(1, 1), FiniteWeight.zero(1), 1) == 1
        assert flag_multiplicity_at(2 * omega(1, 1), FiniteWeight.zero(1), 0) == 0

    def test_incomparable_weights(self):
        assert flag_multiplicity_poly(omega(2, 1), omega(2, 2)).is_zero()
        assert flag_multiplicity_at(omega(2, 1), omega(2, 2), 0) == 0

    def test_coefficients_non_negative_and_palindromic(self):
        rng = random.Random(5)
        for _ in range(40):
            n = rng.randint(1, 3)
            mu = FiniteWeight(n, tuple(rng.randint(0, 3) for _ in range(n)))
            step = sum((rng.randint(0, 2) * alpha(n, i + 1) for i in range(n)),
                       FiniteWeight.zero(n))
            lam = mu + step
            if not lam.is_dominant():
                continue
            poly = flag_multiplicity_poly(lam, mu)
            if poly.is_zero():
                continue
            assert all(c > 0 for c in poly.coeffs.values())
            assert poly.is_palindromic()

    def test_value_extraction_matches_polynomial(self):
        rng = random.Random(9)
        checked = 0
        while checked < 50:
            n = rng.randint(1, 3)
            mu = FiniteWeight(n, tuple(rng.randint(0, 3) for _ in range(n)))
            step = sum((rng.randint(0, 2) * alpha(n, i + 1) for i in range(n)),
                       FiniteWeight.zero(n))
            lam = mu + step
            if not lam.is_dominant():
                continue
            poly = flag_multiplicity_poly(lam, mu)
            lo = 0 if poly.is_zero() else poly.min_degree()
            hi = 0 if poly.is_zero() else poly.max_degree()
            for r in [lo, hi, lo + 1, Fraction(2 * lo + 1, 2)]:
                assert flag_multiplicity_at(lam, mu, r) == poly.coeff(r)
            checked += 1


class TestCharacterWeightCorrespondence:
    def test_trivial_character(self):
        for n in (1, 2):
            for i in range(n + 1):
                xi = xi_from_eta(n, i, (0,) * (n + 1))
                assert xi == affine_Lambda(n, 0) + affine_Lambda(n, i)

    def test_headline_weight(self):
        xi = xi_from_eta(2, 1, (6, 6, 5))
        assert xi.finite == 2 * omega(2, 2)
        assert xi.level == 2 and xi.degree == -6

    def test_theta_shift(self):
        xi = xi_from_eta(2, 1, (1, 1, 1))
        top = affine_Lambda(2, 0) + affine_Lambda(2, 1)
        assert xi == top - affine_delta(2)

    def test_round_trip(self):
        for eta in [(0, 0, 0), (2, 1, 1), (6, 6, 5), (3, 3, 3)]:
            xi = xi_from_eta(2, 1, eta)
            assert eta_from_xi(2, 1, xi) == eta

    def test_inverse_rejects_unreachable(self):
        try:
            eta_from_xi(2, 1, affine_Lambda(2, 0) + affine_Lambda(2, 2))
        except ValueError:
            pass
        else:
            raise AssertionError("expected an error for an unreachable weight")


class TestOrbitSumFormula:
    def test_top_component(self):
        for n in (1, 2, 3):
            for i in range(n + 1):
                top = affine_Lambda(n, 0) + affine_Lambda(n, i)
                assert outer_multiplicity_formula(n, i, top) == 1

    def test_headline(self):
        xi = AffineWeight(2 * omega(2, 2), 2, Fraction(-6))
        assert outer_multiplicity_formula(2, 1, xi) == 5


class TestTauFormula:
    def test_headline(self):
        assert tau_formula(2, 1, (6, 6, 5)) == 5

    def test_headline_terms(self):
        counts = sorted((tuple(b), arg, c) for _, b, arg, c in tau_terms(2, 1, (6, 6, 5)))
        assert counts == [((0, 2), 3, 2), ((1, 0), 5, 1), ((2, 1), 1, 2)]
        assert rho_multi(5, (1, 0)) == 1
        assert rho_multi(1, (2, 1)) == 2
        assert rho_multi(3, (0, 2)) == 2

    def test_empty_character(self):
        assert tau_formula(2, 0, (0, 0, 0)) == 1
        assert tau_formula(1, 0, (0, 0)) == 1

    def test_closed_double_sum_rank_two(self):
        # independent regression formula for characters (e, e, e-1):
        # sum over p >= -1, k >= ceil((2p+1)/3) of
        # rho_{(3k-2p-1, p+1)}(e - 1 - 2(3k^2 - 3kp - k + p^2 + p))
        def closed(e):
            total = 0
            for p in range(-1, e + 2):
                for k in range(max(0, -((-(2 * p + 1)) // 3)), e + 2):
                    arg = e - 1 - 2 * (3 * k * k - 3 * k * p - k + p * p + p)
                    total += rho_multi(arg, (3 * k - 2 * p - 1, p + 1))
            return total

        for e in range(1, 8):
            assert tau_formula(2, 1, (e, e, e - 1)) == closed(e)

    def test_matches_bruteforce_small(self):
        assert tau_formula(2, 1, (1, 1, 1)) == tau_bruteforce((1, 1, 1), 1)
        assert tau_formula(1, 1, (2, 2)) == tau_bruteforce((2, 2), 1)
        assert tau_formula(1, 0, (3, 2)) == tau_bruteforce((3, 2), 0)


class TestLimitRoute:
    def test_top_component(self):
        for n in (1, 2):
            for i in range(n + 1):
                top = affine_Lambda(n, 0) + affine_Lambda(n, i)
                res = outer_multiplicity_limit(n, i, top, 3)
                assert res.value == 1
                assert res.stabilized_at in (0, 1)

    def test_headline(self):
        xi = AffineWeight(2 * omega(2, 2), 2, Fraction(-6))
        res = outer_multiplicity_limit(2, 1, xi, 8)
        assert res.value == 5
        limits = sorted(vals[-1] for _, _, vals in res.sequences)
        assert limits == [1, 2, 2]
        for _, threshold, vals in res.sequences:
            assert all(vals[k] <= vals[k + 1] for k in range(len(vals) - 1))
            assert len(set(vals[threshold:])) == 1


class TestRotation:
    def test_permutes_coroot_values(self):
        rng = random.Random(3)
        for _ in range(30):
            n = rng.randint(1, 3)
            m = n + 1
            lam = AffineWeight(
                FiniteWeight(n, tuple(rng.randint(-3, 3) for _ in range(n))),
                0, Fraction(0))
            lam = AffineWeight(lam.finite, rng.randint(0, 3) + sum(
                abs(c) for c in lam.finite.coords), Fraction(rng.randint(-4, 4)))
            c = rng.randint(0, n)
            rot = rotate(c, lam)
            cv = lam.c_values()
            assert rot.c_values() == tuple(cv[(k - c) % m] for k in range(m))
            assert affine_bilinear(rot, rot) == affine_bilinear(lam, lam)

    def test_delta_fixed(self):
        for n in (1, 2, 3):
            for c in range(n + 1):
                assert rotate(c, affine_delta(n)) == affine_delta(n)


class TestGeneralFundamental:
    def test_zero_index_reduces_to_formula(self):
        xi = AffineWeight(2 * omega(2, 2), 2, Fraction(-6))
        assert general_fundamental(2, 0, 1, xi) == outer_multiplicity_formula(2, 1, xi)

    def test_rejects_unreachable(self):
        xi = AffineWeight(2 * omega(2, 2), 2, Fraction(0))
        try:
            general_fundamental(2, 1, 1, xi)
        except ValueError:
            pass
        else:
            raise AssertionError("expected an error for an unreachable weight")

    def test_top_components(self):
        for n in (1, 2):
            for i in range(n + 1):
                for j in range(n + 1):
                    top = affine_Lambda(n, i) + affine_Lambda(n, j)
                    assert general_fundamental(n, i, j, top) == 1
