"""Lower bounds, counting, spread subsets, and the region inequality."""

import math
import random
from fractions import Fraction

import pytest

from conftest import INFINITE, finite_place
from ffheights import lehmer
from ffheights.catalog import (
    curve_e3,
    isotrivial_curve,
    isotrivial_point_search,
    legendre_twist,
    spread_curve,
)
from ffheights.elliptic import add, multiply, negate
from ffheights.heights import IsotrivialCurveError, global_height, height_pairing


class TestTheorem1:
    def test_e3(self):
        E, P = curve_e3()
        report = lehmer.theorem1_bound(E, None, [P])
        assert report.h_j == 6
        assert report.bound == Fraction(1, 10500 * 36)
        assert report.all_pass
        assert not report.large_regime

    def test_torsion_excluded(self):
        from ffheights.catalog import legendre_curve

        E, torsion = legendre_curve()
        report = lehmer.theorem1_bound(E, None, torsion)
        assert all(r.torsion and r.passes is None for r in report.results)
        assert report.all_pass  # vacuous

    def test_isotrivial_rejected(self):
        with pytest.raises(IsotrivialCurveError):
            lehmer.theorem1_bound(isotrivial_curve(), None, [])

    def test_large_regime_flag(self):
        # flag is h_j^3 D^2 >= 50000^2, equivalently h^{3/2} D >= 50000
        E, P = curve_e3()
        report = lehmer.theorem1_bound(E, None, [])
        assert report.large_bound == Fraction(1, 4108 * 36)


class TestConstant:
    def test_grid_reaches_paper_value(self):
        delta, eps, value = lehmer.optimize_constant_grid(1, 1, 1000)
        assert value >= 9.52455e-5

    def test_point_evaluation(self):
        v = lehmer.c4_constant(0.561, 0.508)
        assert v > 0

    def test_branch_agreement_with_rounded_constants(self):
        # C4(2/3, 1/50, J, D) vs min{J^2 D^{4/3}/5.57e6, 1/4107.37}; the
        # rounded form pins the second branch at its (J, D) = (1, 1)
        # worst case, so it is a lower bound everywhere and a tight match
        # (within 3%) wherever the first branch is active, which covers
        # the whole sample below (J^2 D^{4/3} <= 214 < 1356.16)
        for J in (1, 2, 3, 4, 5):
            for D in (1, 2, 3, 4, 5):
                mine = lehmer.c4_constant(2 / 3, 1 / 50, J, D)
                target = min(J**2 * D ** (4 / 3) / 5.57e6, 1 / 4107.37)
                assert mine >= target
                assert abs(mine - target) / target < 0.03
        # in the second-branch regime the rounded constant stays a valid
        # lower bound even though it is no longer tight
        assert lehmer.c4_constant(2 / 3, 1 / 50, 100, 1) >= 1 / 4107.37

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            lehmer.c4_constant(0.0, 0.5)
        with pytest.raises(ValueError):
            lehmer.c4_constant(0.5, 0.5, J=0.5)


class TestTheorem2:
    def test_counting_bound_fields(self):
        cb = lehmer.theorem2_bound(Fraction(1, 2), Fraction(1, 2), 1, Fraction(6))
        assert cb.scale == 48
        assert cb.B_cubed == Fraction(1, 4**3) / 48**2
        assert cb.admits(Fraction(0))
        assert not cb.admits(Fraction(1))

    def test_count_ok_exact_branches(self):
        cb = lehmer.theorem2_bound(Fraction(1, 2), Fraction(1, 2), 1, Fraction(6))
        assert cb.count_ok(24)  # 24 * 1/2 <= 12
        assert not cb.count_ok(10**6)

    def test_sigma_count_rank1(self):
        E, P = curve_e3()
        # hhat(P) = 1, so hhat(mP) = m^2 <= 5 iff |m| <= 2
        assert lehmer.sigma_count(E, [P], Fraction(5)) == 5
        assert lehmer.sigma_count(E, [P], Fraction(0)) == 1

    def test_sigma_count_rank2_with_precomputed_gram(self):
        E, P1, P2 = spread_curve()
        gram = [
            [height_pairing(E, a, b) for b in (P1, P2)] for a in (P1, P2)
        ]
        # q(a, b) = 3/2 a^2 + 5/6 b^2; count of q <= 3/2: (0,0), (±1,0), (0,±1)
        assert gram[0][1] == 0
        n = lehmer.sigma_count(E, [P1, P2], Fraction(3, 2), gram=gram)
        assert n == 5

    def test_sigma_count_rejects_dependent(self):
        E, P = curve_e3()
        with pytest.raises(ValueError):
            lehmer.sigma_count(E, [P, multiply(E, 2, P)], Fraction(1))


class TestLemmas:
    def test_parallelogram_pair_equality(self):
        E, P = curve_e3()
        lhs, rhs, holds, equality = lehmer.parallelogram_check(E, [P, negate(P)])
        assert holds and equality and lhs == rhs

    def test_parallelogram_strict_case(self):
        E, P = curve_e3()
        lhs, rhs, holds, equality = lehmer.parallelogram_check(
            E, [P, multiply(E, 2, P), multiply(E, 3, P)]
        )
        assert holds and not equality

    def test_spread_sum_bound(self):
        E, P = curve_e3()
        w = finite_place("t^2 + 2*t + 3")
        pts = [multiply(E, m, P) for m in (1, 2, 3)]
        lhs, rhs = lehmer.spread_sum_bound(E, w, pts)
        assert lhs >= rhs

    def test_spread_sum_needs_degenerate_place(self):
        E, P1, P2 = spread_curve()
        with pytest.raises(ValueError):
            lehmer.spread_sum_bound(E, finite_place("t"), [P1, P2])  # vj = 0 there

    def test_clique_search_finds_subset(self):
        E, P1, P2 = spread_curve()
        w = finite_place("t + 1")
        lattice = {}
        for a in range(-7, 8):
            for b in range(-7, 8):
                lattice[(a, b)] = add(E, multiply(E, a, P1), multiply(E, b, P2))
        coords = [(a, b) for a in range(7) for b in range(7)]
        candidates = [lattice[c] for c in coords]
        from ffheights.heights import local_height
        from ffheights.reduction import localize

        ld = localize(E, w)

        def pair_value(j, k):
            da = coords[j][0] - coords[k][0]
            db = coords[j][1] - coords[k][1]
            return Fraction(local_height(E, w, lattice[(da, db)], ld).value)

        subset = lehmer.select_spread_subset(
            E, w, candidates, 2, 4, pair_local_height=pair_value
        )
        assert len(subset) == 5

    def test_clique_search_validates_input(self):
        E, P1, P2 = spread_curve()
        with pytest.raises(ValueError):
            lehmer.select_spread_subset(E, finite_place("t + 1"), [P1], 2, 4)


class TestInequality:
    def test_instance_validation(self):
        with pytest.raises(ValueError):
            lehmer.InequalityInstance(Fraction(1), Fraction(1), (Fraction(1), Fraction(2)))
        with pytest.raises(ValueError):
            lehmer.InequalityInstance(Fraction(-1), Fraction(1), (Fraction(1),))

    def test_stated_form_fails_small_r(self):
        inst = lehmer.InequalityInstance(
            Fraction(1), Fraction(1), (Fraction(2), Fraction(2), Fraction(2))
        )
        _, _, holds = lehmer.inequality_check(inst)
        assert not holds
        _, _, holds_refined = lehmer.inequality_check(inst, refine=True)
        assert holds_refined

    def test_closed_form_infimum(self):
        x, v = lehmer.inequality_infimum(1, 2, 3)
        assert math.isclose(x, math.sqrt(12))
        assert math.isclose(v, 3 * 2 ** (-2 / 3) * (2 / (1 + 1 / 3)) ** (1 / 3))

    def test_numeric_matches_closed_form(self):
        rng = random.Random(4)
        for _ in range(10):
            a, b = rng.uniform(0.2, 5), rng.uniform(0.2, 5)
            r = rng.randrange(1, 8)
            _, v = lehmer.inequality_infimum(a, b, r)
            _, nv = lehmer.inequality_infimum_numeric(a, b, r)
            assert abs(nv - v) / v < 1e-9


class TestIsotrivial:
    def test_discriminant_degree_and_bound(self):
        E = isotrivial_curve()
        assert lehmer.minimal_discriminant_degree(E) == 12
        report = lehmer.isotrivial_bound_check(E, None, [])
        assert report.bound == Fraction(1, 144)
        assert not report.split

    def test_found_points_satisfy_bound(self):
        E = isotrivial_curve()
        points = isotrivial_point_search(E, max_deg=2)
        report = lehmer.isotrivial_bound_check(E, None, points)
        assert report.all_pass

    def test_twelve_torsion_excluded(self):
        from ffheights.elliptic import INFINITY

        E = isotrivial_curve()
        report = lehmer.isotrivial_bound_check(E, None, [INFINITY])
        assert report.results[0][1] is None
