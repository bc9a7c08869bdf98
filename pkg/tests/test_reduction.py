"""Minimal models, Kodaira classification, and component identification."""

import random
from fractions import Fraction

import pytest

from conftest import INFINITE, finite_place, rf
from ffheights.catalog import (
    curve_e1,
    curve_e3,
    e_m_curve,
    isotrivial_curve,
    istar_even_alpha,
    istar_even_beta,
    istar_odd_points,
    legendre_curve,
    legendre_twist,
    random_curve_point,
    spread_curve,
)
from ffheights.elliptic import multiply, new_curve
from ffheights.heights import contributing_places
from ffheights.reduction import component_of, is_identity_component, localize


class TestClassification:
    def test_e1(self):
        E = curve_e1()
        ld = localize(E, finite_place("t^2 + 2"))
        assert ld.kodaira.symbol == "I1"
        ld_inf = localize(E, INFINITE)
        assert ld_inf.kodaira.symbol == "II*"
        assert ld_inf.v_delta == 10

    def test_e3(self):
        E, _ = curve_e3()
        symbols = {}
        for w in contributing_places(E, _inf()):
            symbols[str(w)] = localize(E, w).kodaira.symbol
        assert symbols["infinity"] == "I0*"
        finite = [s for k, s in symbols.items() if k != "infinity"]
        assert finite == ["I1", "I1"]

    @pytest.mark.parametrize("m", range(1, 9))
    def test_e_m_family(self, m):
        E = e_m_curve(m)
        ld = localize(E, finite_place("t"))
        assert ld.kodaira.symbol == f"I{m}*"
        assert ld.v_delta == 6 + m
        assert ld.v_c4 == 2
        assert ld.vj_inv == m
        assert ld.component_order == 4
        assert ld.component_exponent == (4 if m % 2 else 2)

    def test_legendre_multiplicative(self):
        E, _ = legendre_curve()
        for expr, symbol in [("t", "I2"), ("t + 4", "I2")]:
            ld = localize(E, finite_place(expr))
            assert ld.kodaira.symbol == symbol
            assert ld.component_order == 2

    def test_isotrivial_types(self):
        E = isotrivial_curve()
        assert localize(E, finite_place("t")).kodaira.symbol == "II"
        assert localize(E, INFINITE).kodaira.symbol == "II*"
        assert localize(E, finite_place("t + 1")).kodaira.symbol == "Good"

    def test_rescaling_produces_same_minimal_data(self):
        # a non-minimal model (A t^4, B t^6) must classify like (A, B) at (t)
        E, _ = curve_e3()
        t4, t6 = rf("t^4"), rf("t^6")
        E_big = new_curve(A=E.A * t4, B=E.B * t6)
        w = finite_place("t")
        a, b = localize(E, w), localize(E_big, w)
        assert a.kodaira == b.kodaira
        assert a.v_delta == b.v_delta
        assert b.scale_power == a.scale_power + 1

    def test_sum_of_vdelta_is_multiple_of_12(self):
        rng = random.Random(9)
        for _ in range(10):
            E, _ = random_curve_point(rng)
            total = sum(
                w.degree * localize(E, w).v_delta for w in contributing_places(E, _inf())
            )
            assert total % 12 == 0 and total > 0


def _inf():
    from ffheights.elliptic import INFINITY

    return INFINITY


class TestComponents:
    def test_identity_with_pole(self):
        E, P = curve_e3()
        # x(2P) has poles at good places where 2P sits in the formal group
        Q = multiply(E, 2, P)
        for w, _ in _pole_places(Q.x):
            identity, nu = is_identity_component(E, w, Q, localize(E, w))
            assert identity and nu >= Fraction(1, 2)

    def test_cycle_component(self):
        E, P1, P2 = spread_curve()
        w = finite_place("t + 1")
        ld = localize(E, w)
        assert ld.kodaira.symbol == "I3"
        labels = {m: str(component_of(E, w, multiply(E, m, P2), ld)) for m in (1, 2, 3)}
        assert labels[3].startswith("Identity")
        assert labels[1] == labels[2] == "Cycle(1)"
        assert str(component_of(E, w, P1, ld)).startswith("Identity")

    @pytest.mark.parametrize("m", [1, 3, 5])
    def test_istar_odd_alpha_beta(self, m):
        E, alpha, beta = istar_odd_points(m)
        w = finite_place("t")
        ld = localize(E, w)
        assert ld.kodaira.symbol == f"I{m}*"
        assert str(component_of(E, w, alpha, ld)) == "Alpha"
        assert str(component_of(E, w, beta, ld)) == "Beta"

    @pytest.mark.parametrize("m", [2, 4, 6])
    def test_istar_even_alpha_beta(self, m):
        w = finite_place("t")
        E_a, P_a = istar_even_alpha(m)
        assert str(component_of(E_a, w, P_a)) == "Alpha"
        E_b, P_b = istar_even_beta(m)
        assert str(component_of(E_b, w, P_b)) == "Beta"

    def test_torsion_on_nonidentity(self):
        E, torsion = legendre_curve()
        w = finite_place("t")
        ld = localize(E, w)
        kinds = {str(component_of(E, w, T, ld)) for T in torsion}
        assert "Cycle(1)" in kinds  # some 2-torsion leaves the identity component


def _pole_places(x):
    from ffheights.funcfield import places_of_polynomial

    return places_of_polynomial(x.den)
