from fractions import Fraction

import pytest

from circan import (
    CirculantSpec,
    DomainStatus,
    Family,
    alternate_rt_az_form,
    base_spec,
    c7_point,
    distance_vector,
    domain_status,
    double_loop_diameter_lower_bound,
    double_loop_gen_point,
    double_loop_half_point,
    multiplicative_base_diameter,
    multiplicative_point,
    predict,
    predicted_distance_vector,
)
from circan.errors import KnownExceptionError, OutOfDomainError


class TestPointConstruction:
    def test_half(self):
        p = double_loop_half_point(6)
        assert (p.family, p.n, p.a) == (Family.DOUBLE_LOOP_HALF, 12, 6)
        assert base_spec(p) == CirculantSpec.of(12, [1, 6])

    def test_gen_validation(self):
        with pytest.raises(ValueError):
            double_loop_gen_point(10, 5)  # a = n/2 belongs to the half family
        with pytest.raises(ValueError):
            double_loop_gen_point(10, 1)

    def test_multiplicative_family_assignment(self):
        assert multiplicative_point(2, 3).family is Family.MC_23
        assert multiplicative_point(2, 5).family is Family.MC_2H
        assert multiplicative_point(3, 2).family is Family.MC_GEN

    def test_multiplicative_base_spec_folds_jumps(self):
        p = multiplicative_point(2, 4)
        assert base_spec(p) == CirculantSpec.of(16, [1, 2, 4, 8])


class TestDomains:
    def test_half_adversarial_points(self):
        assert domain_status(double_loop_half_point(2))[0] is DomainStatus.OUT_OF_DOMAIN
        assert domain_status(double_loop_half_point(3))[0] is DomainStatus.OUT_OF_DOMAIN
        assert domain_status(double_loop_half_point(4))[0] is DomainStatus.IN_DOMAIN

    def test_gen_known_exception(self):
        assert domain_status(double_loop_gen_point(8, 3))[0] is DomainStatus.KNOWN_EXCEPTION
        with pytest.raises(KnownExceptionError):
            predicted_distance_vector(double_loop_gen_point(8, 3))

    def test_gen_below_domain(self):
        assert domain_status(double_loop_gen_point(6, 2))[0] is DomainStatus.OUT_OF_DOMAIN
        with pytest.raises(OutOfDomainError):
            predict(double_loop_gen_point(6, 2))

    def test_multiplicative_domains(self):
        out = [(2, 1), (2, 2), (3, 1), (4, 1)]
        for m, h in out:
            assert domain_status(multiplicative_point(m, h))[0] is DomainStatus.OUT_OF_DOMAIN
        for m, h in [(2, 4), (3, 2), (4, 2), (5, 1), (9, 1)]:
            assert domain_status(multiplicative_point(m, h))[0] is DomainStatus.IN_DOMAIN


class TestPredictedVectors:
    def test_half_eight(self):
        vec = predicted_distance_vector(double_loop_half_point(4))
        assert vec.d.tolist() == [0, 2, 1, 1, 2, 1, 1, 2]

    def test_mc23(self):
        vec = predicted_distance_vector(multiplicative_point(2, 3))
        assert vec.d.tolist() == [0, 3, 2, 1, 4, 1, 2, 3]

    def test_gen_ten_three(self):
        vec = predicted_distance_vector(double_loop_gen_point(10, 3))
        twos = [v for v in range(10) if vec.d[v] == 2]
        assert twos == [1, 3, 7, 9]
        assert vec.d.sum() == 13  # n + 3

    def test_c7_vectors_match_bfs(self):
        for a in (2, 3):
            point = c7_point(a)
            vec = predicted_distance_vector(point)
            actual = distance_vector(base_spec(point).complement())
            assert vec == actual


class TestPredictions:
    def test_half_twelve(self):
        pred = predict(double_loop_half_point(6))
        assert pred.rho == 14
        assert pred.rs == Fraction(19, 2)
        assert pred.xi == 3
        assert (pred.pi_lower, pred.pi_upper) == (Fraction(28, 8), 11)
        assert pred.indices.wiener == 84

    def test_c7(self):
        pred = predict(c7_point(2))
        assert (pred.rho, pred.xi) == (12, 6)
        assert pred.indices.wiener == 42
        assert pred.indices.exact["t_az"] == Fraction(2612736, 1331)

    def test_mc_gen_five_squared(self):
        pred = predict(multiplicative_point(5, 2))
        assert pred.rho == 25 + 2 * 2 - 1
        assert pred.xi == 4
        assert pred.rs == 22

    def test_mc_2h_sixteen(self):
        pred = predict(multiplicative_point(2, 4))
        assert pred.rho == 22
        assert pred.rs == Fraction(23, 2)
        assert pred.xi == 7
        assert pred.indices.exact["t_az"] == Fraction(907039232, 9261)

    def test_internal_consistency_over_sweeps(self):
        points = (
            [double_loop_half_point(k) for k in range(4, 40)]
            + [double_loop_gen_point(n, a) for n in range(8, 30)
               for a in range(2, (n - 1) // 2 + 1) if (n, a) != (8, 3)]
            + [multiplicative_point(m, h) for m, h in [(2, 4), (2, 7), (3, 3), (5, 2), (7, 1), (11, 1)]]
        )
        for point in points:
            pred = predict(point)  # raises if the scalar and vector forms disagree
            assert pred.xi == pred.rho - (point.n - 1)


class TestAlternateForms:
    def test_sign_rearrangements_equal_canonical(self):
        points = [multiplicative_point(2, h) for h in range(4, 10)]
        points += [multiplicative_point(m, h) for m, h in [(3, 2), (3, 4), (5, 2), (9, 1), (6, 2)]]
        for point in points:
            alt = alternate_rt_az_form(point)
            assert alt is not None
            assert alt == predict(point).indices.exact["rt_az"], point

    def test_absent_for_double_loops(self):
        assert alternate_rt_az_form(double_loop_half_point(6)) is None


class TestDiameterClosedForms:
    def test_examples(self):
        assert multiplicative_base_diameter(2, 3) == 2
        assert multiplicative_base_diameter(3, 2) == 2
        assert multiplicative_base_diameter(2, 1) == 1

    def test_matches_bfs_to_512(self):
        m = 2
        while m**1 <= 512:
            n, h = m, 1
            while n <= 512:
                spec = base_spec(multiplicative_point(m, h))
                assert distance_vector(spec).diameter == multiplicative_base_diameter(m, h), (m, h)
                n *= m
                h += 1
            m += 1

    def test_double_loop_lower_bound_examples(self):
        assert double_loop_diameter_lower_bound(26) == 4
        assert double_loop_diameter_lower_bound(25) == 3
        assert double_loop_diameter_lower_bound(2) == 1

    def test_double_loop_lower_bound_is_exact_ceiling(self):
        for n in range(2, 2000):
            t = double_loop_diameter_lower_bound(n)
            assert (2 * t + 1) ** 2 >= 2 * n - 1
            assert t == 0 or (2 * (t - 1) + 1) ** 2 < 2 * n - 1

    def test_half_jump_base_diameter_claim(self):
        # diameter of C_2k(1, k) is k/2 for even k, (k+1)/2 for odd k;
        # cross-checked by BFS rather than assumed
        for k in range(2, 65):
            spec = CirculantSpec.of(2 * k, [1, k])
            want = k // 2 if k % 2 == 0 else (k + 1) // 2
            assert distance_vector(spec).diameter == want, k
