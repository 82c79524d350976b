import cmath
import math

import numpy as np
import pytest

from gaussfactor import gausssums as gs
from gaussfactor.decomposition import recommend_weight_width

W10 = gs.WeightProfile(10.0, 40)
SPEC33 = gs.ContinuousSpec(1.0, 33.0)


def broad_profile(n: int, margin: float = 2.0) -> gs.WeightProfile:
    return gs.WeightProfile.for_width(recommend_weight_width(n, margin))


class TestWeightProfile:
    def test_normalized_to_one(self):
        for dm, m in ((10.0, 40), (8.0, 32), (3.0, 12), (25.0, 100)):
            w = gs.WeightProfile(dm, m)
            assert abs(w.weights().sum() - 1.0) < 1e-12

    def test_positive_and_symmetric(self):
        w = W10.weights()
        assert (w > 0).all()
        assert np.allclose(w, w[::-1], rtol=0, atol=0)

    def test_default_truncation(self):
        assert gs.WeightProfile.for_width(10.0).m_max == 40
        assert gs.WeightProfile.for_width(10.2).m_max == 41

    def test_validation(self):
        with pytest.raises(ValueError):
            gs.WeightProfile(0.0, 10)
        with pytest.raises(ValueError):
            gs.WeightProfile(5.0, 0)


class TestContinuousSum:
    def test_zero_argument_is_one(self):
        assert abs(gs.continuous_sum(0.0, SPEC33, W10) - 1.0) < 1e-13

    def test_n33_local_maxima_at_factors(self):
        for l in (3, 11):
            at = abs(gs.continuous_sum(float(l), SPEC33, W10)) ** 2
            for off in (-0.02, -0.01, 0.01, 0.02):
                assert at > abs(gs.continuous_sum(l + off, SPEC33, W10)) ** 2

    def test_a8_suppresses_factor_peak(self):
        spec8 = gs.ContinuousSpec(8.0, 33.0)
        at3 = abs(gs.continuous_sum(3.0, spec8, W10)) ** 2
        nearby = max(
            abs(gs.continuous_sum(3.0 + off, spec8, W10)) ** 2
            for off in np.arange(0.01, 0.31, 0.01)
        )
        assert at3 < 1.2 * nearby

    def test_a_33_over_7_behaves_like_a1(self):
        spec7 = gs.ContinuousSpec(33.0 / 7.0, 33.0)
        at3 = abs(gs.continuous_sum(3.0, spec7, W10)) ** 2
        at3_ref = abs(gs.continuous_sum(3.0, SPEC33, W10)) ** 2
        assert abs(at3 - at3_ref) < 1e-3
        for off in (-0.02, -0.01, 0.01, 0.02):
            assert at3 > abs(gs.continuous_sum(3.0 + off, spec7, W10)) ** 2

    def test_periodicity(self):
        for xi in (0.37, 2.0, 5.81, 13.5):
            a = gs.continuous_sum(xi, SPEC33, W10)
            b = gs.continuous_sum(xi + 33.0, SPEC33, W10)
            assert abs(a - b) < 1e-12

    def test_grid_matches_scalar(self):
        xis = np.arange(2.0, 4.0, 0.13)
        grid = gs.continuous_sum_grid(xis, SPEC33, W10)
        for x, v in zip(xis, grid):
            assert v == gs.continuous_sum(float(x), SPEC33, W10)


class TestDiscreteSum:
    def test_argument_equal_to_modulus(self):
        for n in (5, 33, 1911):
            assert abs(gs.discrete_sum(n, n, W10) - 1.0) < 1e-12

    def test_factor_enhancement_39(self):
        v = abs(gs.discrete_sum(39, 3, W10)) ** 2
        assert abs(v - 3 / 39) < 1e-3

    def test_nonfactor_vanishes_42(self):
        w = broad_profile(42)
        assert abs(gs.discrete_sum(42, 5, w)) ** 2 < 1e-6

    def test_periodic_in_l(self):
        for l in (1, 4, 17):
            assert gs.discrete_sum(39, l, W10) == gs.discrete_sum(39, l + 39, W10)

    def test_17_digit_modulus_via_exact_phase_oracle(self):
        from gaussfactor.numtheory import mod_mul_phase

        n = 10**17 + 9
        w = gs.WeightProfile(3.0, 12)
        for l in (3, 12345678901234567):
            expect = sum(
                wt * cmath.exp(2j * cmath.pi * float(mod_mul_phase(abs(int(m)), l, n)))
                for m, wt in zip(w.indices(), w.weights())
            )
            assert abs(gs.discrete_sum(n, l, w) - expect) < 1e-12


class TestStandardGauss:
    def test_single_term(self):
        assert gs.standard_gauss(1, 1) == 1.0

    def test_b4(self):
        assert abs(gs.standard_gauss(1, 4) - (2 + 2j)) < 1e-12

    def test_3_5_direct(self):
        expect = sum(cmath.exp(2j * cmath.pi * (m * m * 3 % 5) / 5) for m in range(5))
        assert abs(gs.standard_gauss(3, 5) - expect) < 1e-12
        assert abs(gs.standard_gauss(3, 5) - (-math.sqrt(5))) < 1e-9

    def test_shift_invariance(self):
        for a, b in ((1, 7), (3, 12), (5, 9), (0, 4)):
            assert gs.standard_gauss(a + b, b) == gs.standard_gauss(a, b)

    def test_huge_modulus_phases_exact(self):
        # same residue pattern as a small case; values must agree
        n = 10**15
        v = gs.reciprocate_truncated(n, 4, 4)
        w = gs.reciprocate_truncated(n % 4, 4, 4)
        assert v == w


class TestFiniteW:
    def test_odd_r(self):
        assert abs(abs(gs.finite_w(1, 3, 0)) - 1 / math.sqrt(3)) < 1e-12

    def test_even_r_zero_row(self):
        assert abs(gs.finite_w(1, 2, 0)) < 1e-12

    def test_2_4_1_direct(self):
        expect = sum(cmath.exp(2j * cmath.pi * ((2 * p * p + p) % 4) / 4) for p in range(4)) / 4
        assert abs(gs.finite_w(2, 4, 1) - expect) < 1e-12
        assert abs(gs.finite_w(2, 4, 1)) < 1e-12

    def test_periodic_in_m(self):
        for q, r in ((1, 5), (3, 8), (2, 7)):
            for m in range(r):
                assert gs.finite_w(q, r, m) == gs.finite_w(q, r, m + r)


class TestWtilde:
    def test_unit_modulus_cases(self):
        assert abs(abs(gs.wtilde(1, 0, 1, 3)) ** 2 - 1 / 3) < 1e-12
        assert abs(abs(gs.wtilde(1, 5, 1, 3)) ** 2 - 1 / 3) < 1e-12

    def test_even_parity_case(self):
        val = abs(gs.wtilde(2, 0, 0, 2)) ** 2
        assert min(abs(val - 0.0), abs(val - 1.0)) < 1e-12
        assert val < 1e-12  # qr/2 + m = 1 is odd

    def test_direct_oracle(self):
        for a, b, c, r in ((1, 0, 1, 3), (3, 2, 1, 5), (2, 1, 0, 4), (5, 3, 7, 8)):
            expect = sum(
                cmath.exp(1j * cmath.pi * (p * p * a + 2 * b * p + p * c) / r)
                for p in range(r)
            ) / r
            assert abs(gs.wtilde(a, b, c, r) - expect) < 1e-12

    def test_b_sweep_matches_scalar(self):
        sweep = gs.wtilde_b_sweep(3, 1, 7)
        for b in range(7):
            assert abs(sweep[b] - gs.wtilde(3, b, 1, 7)) < 1e-14


class TestReciprocate:
    def test_divisor_gives_unity(self):
        for n, l in ((15, 3), (1911, 21), (100, 10)):
            for m_terms in (1, 3, 8):
                assert gs.reciprocate_truncated(n, l, m_terms) == 1.0

    def test_15_2_two_terms(self):
        assert abs(gs.reciprocate_truncated(15, 2, 2)) < 1e-12

    def test_truncated_with_all_terms_is_complete(self):
        assert gs.reciprocate_truncated(1911, 12, 12) == gs.reciprocate_complete(1911, 12)

    def test_complete_single_term(self):
        assert gs.reciprocate_complete(1911, 1) == 1.0

    def test_n1911_values(self):
        assert abs(gs.reciprocate_complete(1911, 21) - 1.0) < 1e-12
        assert abs(abs(gs.reciprocate_complete(1911, 12)) - math.sqrt(0.5)) < 1e-12

    def test_depends_on_n_mod_l_only(self):
        for n, l in ((1911, 12), (100, 7), (39, 5)):
            assert gs.reciprocate_complete(n, l) == gs.reciprocate_complete(n % l + l, l)

    def test_rejects_zero_l(self):
        with pytest.raises(ValueError):
            gs.reciprocate_truncated(15, 0, 3)


class TestExponentialSum:
    def test_j2_is_reciprocate(self):
        for n, l, m in ((1911, 12, 7), (39, 5, 11)):
            assert gs.exponential_sum(n, l, 2, m) == gs.reciprocate_truncated(n, l, m)

    def test_divisor_any_power(self):
        assert gs.exponential_sum(100, 10, 5, 12) == 1.0

    def test_15_4_cubic_hand_sum(self):
        expect = sum(
            cmath.exp(-2j * cmath.pi * (pow(m, 3, 4) * 15 % 4) / 4) for m in range(4)
        ) / 4
        got = gs.exponential_sum(15, 4, 3, 4)
        assert abs(got - expect) < 1e-12
        assert abs(got - 0.5) < 1e-12


class TestMonteCarlo:
    def test_divisor_always_unity(self):
        for seed in (0, 1, 99):
            assert gs.monte_carlo_sum(1911, 21, 5, seed) == 1.0

    def test_full_sample_reproduces_complete_bitwise(self):
        for n, l in ((1911, 50), (39, 17)):
            for seed in (0, 7):
                assert gs.monte_carlo_sum(n, l, l, seed) == gs.reciprocate_complete(n, l)

    def test_seeded_nonfactor_below_half(self):
        assert abs(gs.monte_carlo_sum(1911, 100, 20, seed=1)) < 0.5

    def test_deterministic(self):
        a = gs.monte_carlo_sum(1911, 100, 20, seed=5)
        b = gs.monte_carlo_sum(1911, 100, 20, seed=5)
        assert a == b

    def test_rejects_oversized_sample(self):
        with pytest.raises(ValueError):
            gs.monte_carlo_sum(15, 4, 5, seed=0)


class TestRingGauss:
    def test_quadratic_character_mod_3(self):
        chi = gs.CharacterSpec(3, 1)
        expect = cmath.exp(2j * cmath.pi / 3) - cmath.exp(4j * cmath.pi / 3)
        got = gs.ring_gauss(chi, 1)
        assert abs(got - expect) < 1e-12
        assert abs(got - 1j * math.sqrt(3)) < 1e-12

    def test_modulus_sqrt_n(self):
        for n in (5, 13, 31):
            for k in range(1, n - 1):
                chi = gs.CharacterSpec(n, k)
                for beta in range(1, n):
                    assert abs(abs(gs.ring_gauss(chi, beta)) - math.sqrt(n)) < 1e-10

    def test_trivial_character(self):
        for n in (5, 11):
            chi = gs.CharacterSpec(n, 0)
            assert abs(gs.ring_gauss(chi, 3) - (-1.0)) < 1e-10

    def test_reduction_identity(self):
        for n in (7, 19):
            for k in range(1, n - 1):
                chi = gs.CharacterSpec(n, k)
                g1 = gs.ring_gauss(chi, 1)
                for beta in range(1, n):
                    lhs = gs.ring_gauss(chi, beta)
                    rhs = gs.character_eval(chi, beta).conjugate() * g1
                    assert abs(lhs - rhs) < 1e-10

    def test_rejects_composite_modulus(self):
        with pytest.raises(ValueError):
            gs.CharacterSpec(15, 1)


class TestCharacterEval:
    def test_anchor_values(self):
        chi = gs.CharacterSpec(7, 2)
        assert gs.character_eval(chi, 0) == 0
        assert abs(gs.character_eval(chi, 1) - 1.0) < 1e-12

    def test_multiplicative_table(self):
        for n, k in ((5, 1), (5, 2), (13, 3)):
            chi = gs.CharacterSpec(n, k)
            for x in range(n):
                for y in range(n):
                    lhs = gs.character_eval(chi, x * y)
                    rhs = gs.character_eval(chi, x) * gs.character_eval(chi, y)
                    assert abs(lhs - rhs) < 1e-12


def test_evaluate_dispatch_provenance():
    res = gs.evaluate(gs.SumFamily.RECIPROCATE_COMPLETE, n_target=1911, l=21)
    assert res.family is gs.SumFamily.RECIPROCATE_COMPLETE
    assert abs(res.value - 1.0) < 1e-12
    assert res.params["n_target"] == 1911
