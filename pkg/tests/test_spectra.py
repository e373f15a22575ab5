import math
from fractions import Fraction

import pytest

from distspec import (
    CharPoly,
    SturmChain,
    THETA,
    THETA_MIN_POLY,
    ONE_MINUS_SQRT3,
    SQRT2_MINUS_2,
    SQRT2_MINUS_2_MIN_POLY,
    Trichotomy,
    apsp,
    build_complete,
    build_cone_of_cliques,
    build_pendant_clique,
    char_poly_exact,
    count_distinct_roots_above,
    eigenvalues,
    lambda2_vs_threshold,
    power_sum_moment,
    root_multiplicity,
    summarize,
)
from distspec.spectra import (
    QuadAlg,
    _charpoly_int,
    _charpoly_np,
    poly_divides,
    poly_gcd,
    poly_mul,
    poly_squarefree,
)

from conftest import charpoly_oracle, random_connected_graph


class TestPolyHelpers:
    def test_mul_known(self):
        # (x+1)(x-1) = x^2 - 1
        assert poly_mul((1, 1), (-1, 1)) == (-1, 0, 1)

    def test_gcd_common_factor(self):
        a = poly_mul((1, 1), (2, 3))     # (x+1)(3x+2)
        b = poly_mul((1, 1), (-5, 1))    # (x+1)(x-5)
        assert poly_gcd(a, b) == (1, 1)

    def test_gcd_coprime(self):
        assert poly_gcd((1, 1), (-1, 1)) == (1,)

    def test_squarefree_strips_multiplicity(self):
        p = poly_mul(poly_mul((1, 1), (1, 1)), (-3, 1))  # (x+1)^2 (x-3)
        assert poly_squarefree(p) == poly_mul((1, 1), (-3, 1))


class TestQuadAlg:
    def test_theta_float(self):
        assert abs(float(THETA) - (17 - math.sqrt(329)) / 2) < 1e-15

    def test_theta_satisfies_min_poly(self):
        # theta^2 - 17 theta - 10 = 0, exactly
        v = THETA * THETA - THETA * Fraction(17) - QuadAlg.of(329, 10)
        assert v.a == 0 and v.b == 0

    def test_signs(self):
        assert THETA.sign() < 0
        assert ONE_MINUS_SQRT3.sign() < 0
        assert SQRT2_MINUS_2.sign() < 0
        assert (QuadAlg.of(2, 0, 1) - QuadAlg.of(2, 1)).sign() > 0   # sqrt2 > 1
        assert (QuadAlg.of(2, 0, 1) - QuadAlg.of(2, 2)).sign() < 0   # sqrt2 < 2

    def test_ordering_of_constants(self):
        # -1 < 1-sqrt3 < sqrt2-2 < theta < 0 (the gaps are ~0.15 and ~0.017,
        # far beyond float error)
        assert -1 < float(ONE_MINUS_SQRT3) < float(SQRT2_MINUS_2) < float(THETA) < 0
        assert float(SQRT2_MINUS_2) == pytest.approx(math.sqrt(2) - 2, abs=1e-15)
        assert float(ONE_MINUS_SQRT3) == pytest.approx(1 - math.sqrt(3), abs=1e-15)


class TestSturm:
    def test_theta_min_poly_roots_above_theta(self):
        # x^2-17x-10 has roots theta and (17+sqrt329)/2; only the latter is
        # strictly above theta
        chain = SturmChain(THETA_MIN_POLY)
        assert chain.count_above(THETA) == 1

    def test_root_at_endpoint_excluded(self):
        assert SturmChain((0, 1)).count_above(0) == 0          # p = x
        assert SturmChain((0, -1, 1)).count_above(0) == 1      # x(x-1)

    def test_counts_match_numpy_roots(self, rng):
        import numpy as np
        for _ in range(30):
            g = random_connected_graph(rng, rng.randint(3, 8))
            p = char_poly_exact(apsp(g))
            roots = np.sort(np.linalg.eigvalsh(np.array(apsp(g).d, dtype=float)))
            chain = SturmChain(p.coeffs)
            for t in (-3, -1, 0, 2):
                distinct = len({round(r, 6) for r in roots if r > t + 1e-9})
                assert chain.count_above(Fraction(t)) == distinct


class TestCharPoly:
    def test_k2(self):
        # D(K2) = [[0,1],[1,0]], char poly x^2 - 1
        assert char_poly_exact(((0, 1), (1, 0))).coeffs == (-1, 0, 1)

    def test_k3(self):
        # x^3 - 3x - 2 = (x-2)(x+1)^2
        assert char_poly_exact(apsp(build_complete(3))).coeffs == (-2, -3, 0, 1)

    def test_matches_determinant_oracle(self, rng):
        for _ in range(40):
            g = random_connected_graph(rng, rng.randint(2, 9))
            rows = apsp(g).d
            assert char_poly_exact(rows).coeffs == charpoly_oracle(rows)

    def test_int_and_np_paths_agree(self, rng):
        for _ in range(25):
            g = random_connected_graph(rng, rng.randint(2, 8))
            rows = apsp(g).d
            n = len(rows)
            if max(max(r) for r in rows) <= 7:
                assert _charpoly_np(rows, n) == _charpoly_int(rows, n)

    def test_big_entries_use_exact_path(self):
        # entries exceed the int64 fast-path envelope; result still exact
        rows = ((0, 10 ** 6), (10 ** 6, 0))
        assert char_poly_exact(rows).coeffs == (-(10 ** 12), 0, 1)

    def test_nonsymmetric_rejected(self):
        with pytest.raises(ValueError):
            char_poly_exact(((0, 1), (2, 0)))

    def test_serialize_round_trip(self, rng):
        g = random_connected_graph(rng, 6)
        p = char_poly_exact(apsp(g))
        assert CharPoly.deserialize(p.serialize()) == p

    def test_pretty(self):
        assert CharPoly((-2, -3, 0, 1)).pretty() == "x^3 - 3*x - 2"

    def test_residual_property(self, rng):
        # |P(lambda_i)| small at every float eigenvalue
        for _ in range(20):
            g = random_connected_graph(rng, rng.randint(3, 8))
            rows = apsp(g).d
            p = char_poly_exact(rows)
            scale = max(1.0, max(abs(c) for c in p.coeffs))
            for lam in eigenvalues(rows):
                assert abs(p(lam)) / scale < 1e-6


class TestThreshold:
    def test_complete_below(self):
        for n in range(2, 10):
            p = char_poly_exact(apsp(build_complete(n)))
            assert lambda2_vs_threshold(p) is Trichotomy.BELOW

    def test_pendant_clique_below(self):
        p = char_poly_exact(apsp(build_pendant_clique(7, 3)))
        assert lambda2_vs_threshold(p) is Trichotomy.BELOW

    def test_c4_above(self):
        from distspec import PATTERNS
        p = char_poly_exact(apsp(PATTERNS["C4"].graph()))
        assert lambda2_vs_threshold(p) is Trichotomy.ABOVE

    def test_equal_case_synthetic(self):
        # (x^2-17x-10)(x+1): roots (17+sqrt329)/2, theta, -1, so lambda2 is
        # exactly theta
        p = CharPoly(tuple(poly_mul(THETA_MIN_POLY, (1, 1))))
        assert lambda2_vs_threshold(p) is Trichotomy.EQUAL

    def test_agrees_with_float_lambda2_at_margin(self, rng):
        for _ in range(40):
            g = random_connected_graph(rng, rng.randint(2, 8))
            rows = apsp(g).d
            p = char_poly_exact(rows)
            verdict = lambda2_vs_threshold(p)
            lam2 = eigenvalues(rows)[1]
            theta = float(THETA)
            if abs(lam2 - theta) > 1e-6:
                want = Trichotomy.ABOVE if lam2 > theta else Trichotomy.BELOW
                assert verdict is want

    def test_degree_too_small(self):
        with pytest.raises(ValueError):
            lambda2_vs_threshold(CharPoly((0, 1)))


class TestRootMultiplicity:
    def test_complete_minus_one(self):
        # D(K_n) spectrum: n-1 once, -1 with multiplicity n-1
        for n in range(2, 8):
            p = char_poly_exact(apsp(build_complete(n)))
            assert root_multiplicity(p, -1) == n - 1
            assert root_multiplicity(p, n - 1) == 1

    def test_cone_minus_one(self):
        # cone over cliques (2,3): n=6, k=2 -> multiplicity n-k-1 = 3
        p = char_poly_exact(apsp(build_cone_of_cliques((2, 3))))
        assert root_multiplicity(p, -1) == 3

    def test_non_root(self):
        p = char_poly_exact(apsp(build_complete(4)))
        assert root_multiplicity(p, 7) == 0


class TestMoments:
    def test_trace_zero(self, rng):
        for _ in range(20):
            g = random_connected_graph(rng, rng.randint(2, 8))
            p = char_poly_exact(apsp(g))
            assert power_sum_moment(p, 1) == 0

    def test_second_moment_is_squared_distance_sum(self, rng):
        for _ in range(20):
            g = random_connected_graph(rng, rng.randint(2, 8))
            rows = apsp(g).d
            p = char_poly_exact(rows)
            assert power_sum_moment(p, 2) == sum(x * x for r in rows for x in r)

    def test_pendant_clique_formula(self):
        # second moment of D(K_s^t) is 4n(n-1) - 6m + 5t(t-1)
        for s, t in [(3, 2), (4, 2), (5, 3), (6, 6)]:
            g = build_pendant_clique(s, t)
            n, m = g.n, g.m
            p = char_poly_exact(apsp(g))
            assert power_sum_moment(p, 2) == 4 * n * (n - 1) - 6 * m + 5 * t * (t - 1)

    def test_k32_frozen_values(self):
        # K_3^2: n=5, m=5, second moment 60 (brute-force verified)
        g = build_pendant_clique(3, 2)
        assert (g.n, g.m) == (5, 5)
        assert power_sum_moment(char_poly_exact(apsp(g)), 2) == 60

    def test_k42_frozen_values(self):
        g = build_pendant_clique(4, 2)
        assert (g.n, g.m) == (6, 8)
        assert power_sum_moment(char_poly_exact(apsp(g)), 2) == 82

    def test_unsupported_moment(self):
        p = char_poly_exact(apsp(build_complete(3)))
        with pytest.raises(ValueError):
            power_sum_moment(p, 3)


class TestSummary:
    def test_summarize_k3(self):
        s = summarize(apsp(build_complete(3)))
        assert s.lambda2_exact is Trichotomy.BELOW
        assert s.eigen[0] == pytest.approx(2.0, abs=1e-12)
        assert s.eigen[1] == pytest.approx(-1.0, abs=1e-12)


class TestDivides:
    def test_sqrt2_factor_of_pendant_poly(self):
        # x^2+4x+2 divides the distance char poly of K_s^t when t >= 2
        p = char_poly_exact(apsp(build_pendant_clique(5, 3)))
        assert poly_divides(SQRT2_MINUS_2_MIN_POLY, p)

    def test_non_factor(self):
        p = char_poly_exact(apsp(build_complete(4)))
        assert not poly_divides(THETA_MIN_POLY, p)

    def test_count_distinct_roots_above_rational(self):
        p = CharPoly((-2, -3, 0, 1))  # (x-2)(x+1)^2
        assert count_distinct_roots_above(p, Fraction(0)) == 1
        assert count_distinct_roots_above(p, Fraction(-2)) == 2
        assert count_distinct_roots_above(p, Fraction(2)) == 0
