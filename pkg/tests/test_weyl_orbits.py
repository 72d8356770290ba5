"""Affine Weyl action, dominant orbit representatives, level-2 orbit
families and reduced-pair lengths."""

import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from affmult.affine_cartan import (
    AffineWeight,
    FiniteWeight,
    affine_bilinear,
    affine_delta,
    affine_Lambda,
    bilinear,
    eps_coords,
    omega,
    quadratic_f,
    theta,
    weight_from_eps,
)
from affmult.multiplicities import f_ball_bound, mu_split
from affmult.weyl_orbits import (
    OrbitPair,
    b_vector,
    cofinal_weight,
    enumerate_gamma,
    gamma_contains,
    level_two_family,
    orbit_division,
    orbit_pair,
    permutation_length,
    r_of,
    reduced_pair_length,
    res_p,
    simple_reflection,
    socle_formula,
    socle_oracle,
    translation,
)


def random_affine_weight(rng, n):
    fin = FiniteWeight(n, tuple(rng.randint(-4, 4) for _ in range(n)))
    return AffineWeight(fin, rng.randint(1, 3), Fraction(rng.randint(-5, 5)))


class TestReflections:
    def test_fixed_point(self):
        lam = affine_Lambda(2, 1)
        assert simple_reflection(2, lam) == lam

    def test_involution_and_norm(self):
        rng = random.Random(7)
        for _ in range(40):
            n = rng.randint(1, 3)
            lam = random_affine_weight(rng, n)
            i = rng.randint(0, n)
            refl = simple_reflection(i, lam)
            assert simple_reflection(i, refl) == lam
            assert refl.level == lam.level
            assert affine_bilinear(refl, refl) == affine_bilinear(lam, lam)

    def test_zero_node_expansion(self):
        # s_0(Lambda_0) = Lambda_0 + theta - delta, norm preserved
        for n in (1, 2, 3):
            L0 = affine_Lambda(n, 0)
            refl = simple_reflection(0, L0)
            assert refl.finite == theta(n)
            assert refl.level == 1
            assert refl.degree == -1


class TestTranslations:
    def test_delta_fixed(self):
        assert translation(theta(2), affine_delta(2)) == affine_delta(2)

    def test_theta_on_lambda_zero(self):
        out = translation(theta(2), affine_Lambda(2, 0))
        assert out.finite == theta(2)
        assert out.level == 1 and out.degree == -1

    def test_zero_translation(self):
        lam = AffineWeight(omega(2, 1), 2, Fraction(3))
        assert translation(FiniteWeight.zero(2), lam) == lam

    def test_rejects_non_lattice_vector(self):
        try:
            translation(omega(2, 1), affine_Lambda(2, 0))
        except ValueError:
            pass
        else:
            raise AssertionError("expected an error outside the root lattice")

    def test_norm_preserved(self):
        rng = random.Random(11)
        for _ in range(30):
            n = rng.randint(1, 3)
            lam = random_affine_weight(rng, n)
            k = rng.randint(-2, 2)
            out = translation(k * theta(n), lam)
            assert out.level == lam.level
            assert affine_bilinear(out, out) == affine_bilinear(lam, lam)


class TestSocle:
    def test_dominant_fixed(self):
        lam = AffineWeight(omega(2, 1), 2, Fraction(0))
        assert socle_oracle(lam).weight == lam

    def test_zero_weight(self):
        for n in (1, 2, 3):
            for level in (1, 2, 3):
                soc = socle_formula(level, FiniteWeight.zero(n)).weight
                assert soc == AffineWeight(FiniteWeight.zero(n), level, Fraction(0))

    def test_level_two_square(self):
        soc = socle_formula(2, 2 * omega(2, 1)).weight
        assert soc.finite == 2 * omega(2, 1)
        assert soc.level == 2 and soc.degree == 0

    def test_level_one_theta(self):
        # descends to Lambda_0; degree fixed by the norm relation
        soc = socle_formula(1, theta(2)).weight
        probe = AffineWeight(theta(2).w0_image(), 1, Fraction(0))
        assert soc == socle_oracle(probe).weight
        assert soc.finite == FiniteWeight.zero(2)
        assert soc.degree == 1

    def test_rank_one_single_box(self):
        soc = socle_formula(1, omega(1, 1)).weight
        assert soc.equiv_mod_delta(affine_Lambda(1, 1))

    @given(st.integers(1, 3), st.integers(1, 3),
           st.lists(st.integers(-4, 4), min_size=1, max_size=3))
    @settings(max_examples=120, deadline=None)
    def test_formula_matches_descent(self, n, level, coords):
        if len(coords) != n:
            return
        mu = FiniteWeight(n, tuple(coords))
        formula = socle_formula(level, mu).weight
        probe = AffineWeight(mu.w0_image(), level, Fraction(0))
        assert formula == socle_oracle(probe).weight

    def test_smallest_part_value(self):
        # the coroot value just past the residue index is the minimal part
        for n in (2, 3):
            for level in (1, 2, 3):
                for trial in range(20):
                    rng = random.Random(100 * n + 10 * level + trial)
                    mu = FiniteWeight(
                        n, tuple(sorted((rng.randint(0, 5) for _ in range(n)),
                                        reverse=True)))
                    a = eps_coords(mu)
                    m, p = orbit_division(level, a)
                    soc = socle_formula(level, mu).weight
                    idx = (res_p(p, n) + 1) % (n + 1)
                    assert soc.value(idx) == min((level,) + m) > 0


class TestDegreeOrbitRelation:
    def test_random_reflections(self):
        rng = random.Random(23)
        for _ in range(40):
            n = rng.randint(1, 3)
            lam = random_affine_weight(rng, n)
            lam = AffineWeight(
                FiniteWeight(n, tuple(abs(c) for c in lam.finite.coords)),
                abs(lam.level) + sum(abs(c) for c in lam.finite.coords),
                lam.degree)
            assert lam.is_dominant()
            xi = lam
            for _ in range(rng.randint(1, 8)):
                xi = simple_reflection(rng.randint(0, n), xi)
            lhs = 2 * lam.level * (xi.degree - lam.degree)
            rhs = bilinear(lam.finite, lam.finite) - bilinear(xi.finite, xi.finite)
            assert lhs == rhs


class TestGammaMembership:
    def test_zero_in_vacuum(self):
        for n in (1, 2):
            for level in (1, 2):
                xi = AffineWeight(FiniteWeight.zero(n), level, Fraction(0))
                assert gamma_contains(xi, FiniteWeight.zero(n))

    def test_doubled_weight(self):
        xi = AffineWeight(2 * omega(2, 1), 2, Fraction(0))
        assert gamma_contains(xi, 2 * omega(2, 1))
        assert not gamma_contains(xi, omega(2, 1))

    def test_r_of_examples(self):
        assert r_of(2 * omega(2, 1), AffineWeight(2 * omega(2, 1), 2, Fraction(0))) == 0
        assert r_of(2 * omega(1, 1),
                    AffineWeight(FiniteWeight.zero(1), 2, Fraction(0))) == Fraction(-1, 2)


class TestEnumerateGamma:
    def test_vacuum(self):
        for n in (1, 2):
            xi = AffineWeight(FiniteWeight.zero(n), 2, Fraction(0))
            out = enumerate_gamma(xi, 0)
            assert len(out) == 1
            assert out[0][0] == FiniteWeight.zero(n)

    def test_headline_orbit_set(self):
        xi = AffineWeight(2 * omega(2, 2), 2, Fraction(-6))
        out = enumerate_gamma(xi, f_ball_bound(2, 1, xi))
        bounds = sorted(b_vector(pair) for _, pair in out)
        assert bounds == [(0, 2), (1, 0), (2, 1)]

    def test_members_pass_membership_test(self):
        xi = AffineWeight(FiniteWeight.zero(1), 2, Fraction(0))
        for mu, _pair in enumerate_gamma(xi, 8):
            assert gamma_contains(xi, mu)


class TestLevelTwoFamily:
    def test_equal_indices_rank_two(self):
        fam = level_two_family(2, 2, 2, 20)
        assert fam.members
        for pair in fam.members:
            assert pair.m == (2, 2)
            # p-vector is (3k - 1 - p, p) for p >= -1, 3k >= 2p + 1
            p = pair.p[1]
            k3 = pair.p[0] + p + 1
            assert k3 % 3 == 0 and p >= -1 and k3 >= 2 * p + 1

    def test_equal_indices_force_doubled_parts(self):
        for n in (1, 2, 3):
            for j in range(n + 1):
                for pair in level_two_family(n, j, j, 10).members:
                    assert pair.m == (2,) * n
                    assert sum(pair.p) % (n + 1) == (1 - j) % (n + 1)

    def test_all_members_in_orbit(self):
        for (j, k) in [(0, 1), (2, 2), (1, 2)]:
            xi = affine_Lambda(2, j) + affine_Lambda(2, k)
            for pair in level_two_family(2, j, k, 12).members:
                mu = pair.weight()
                assert gamma_contains(xi, mu)

    def test_bound_vector_matches_split(self):
        for (j, k) in [(0, 1), (2, 2), (1, 1)]:
            for pair in level_two_family(2, j, k, 16).members:
                mu = pair.weight()
                assert b_vector(pair) == mu_split(mu).bounds
                assert quadratic_f(pair.a_vector()) == bilinear(mu, mu)


class TestBVector:
    def test_vacuum_rank_one(self):
        assert b_vector(OrbitPair((2,), (-1,), 2)) == (0,)

    def test_rank_two_ones(self):
        assert b_vector(OrbitPair((1, 1), (0, 0), 2)) == (0, 0)

    def test_rank_two_family_form(self):
        for p in (-1, 0, 1, 2):
            for k in range(0, 4):
                if 3 * k < 2 * p + 1:
                    continue
                pair = OrbitPair((2, 2), (3 * k - 1 - p, p), 2)
                if not pair.in_dominant_set():
                    continue
                assert b_vector(pair) == (3 * k - 2 * p - 1, p + 1)


class TestCofinal:
    def test_base_point(self):
        lam = AffineWeight(omega(2, 1), 2, Fraction(3))
        assert cofinal_weight(lam, 0) == lam

    def test_rank_one_vacuum(self):
        out = cofinal_weight(affine_Lambda(1, 0), 1)
        assert out.finite == theta(1)
        assert out.level == 1 and out.degree == -1

    def test_norm_and_level_preserved(self):
        lam = AffineWeight(omega(2, 2), 2, Fraction(-1))
        norm = affine_bilinear(lam, lam)
        for k in range(6):
            out = cofinal_weight(lam, k)
            assert out.level == lam.level
            assert affine_bilinear(out, out) == norm


class TestReducedPairs:
    def test_empty_pair(self):
        assert reduced_pair_length((2, 1, 3), (), (), 2) == 1
        assert permutation_length((3, 2, 1)) == 3

    def test_zero_node_powers(self):
        # k copies of the longest single factor give length 2nk in total
        for n in (2, 3):
            for k in (1, 2, 3):
                w = tuple(range(1, n + 2))
                i = (n - 1,) * k
                j = (1,) * k
                assert reduced_pair_length(w, i, j, n) == 2 * n * k

    def test_monotonicity_violation(self):
        try:
            reduced_pair_length((1, 2, 3), (0, 1), (1, 1), 2)
        except ValueError as exc:
            assert "condition (2)" in str(exc)
        else:
            raise AssertionError("expected a reducedness error")
