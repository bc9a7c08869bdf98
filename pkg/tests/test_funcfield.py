"""Field arithmetic, places, factorization, and the normalized Weil height."""

import random
from fractions import Fraction

import pytest

from conftest import INFINITE, finite_place, rf
from ffheights.funcfield import (
    ConstantField,
    ExtensionMap,
    ParseError,
    Place,
    Polynomial,
    compose,
    factor,
    invert_variable,
    is_irreducible,
    order_at,
    parse_rational_function,
    place_below,
    places_of_polynomial,
    places_over,
    residue,
    weil_height,
)


class TestConstantField:
    def test_rejects_small_characteristic(self):
        for p in (2, 3, 4, 6, 9):
            with pytest.raises(ValueError):
                ConstantField(p)

    def test_inverse(self):
        k = ConstantField(7)
        for a in range(1, 7):
            assert (a * k.inv(a)) % 7 == 1


class TestPolynomial:
    def test_ring_axioms_randomized(self):
        rng = random.Random(0)
        k = ConstantField(5)

        def rand():
            return Polynomial([rng.randrange(5) for _ in range(rng.randrange(6))], k, "t")

        for _ in range(50):
            a, b, c = rand(), rand(), rand()
            assert a * (b + c) == a * b + a * c
            assert (a + b) * c == a * c + b * c
            assert a * b == b * a

    def test_divmod_roundtrip(self):
        rng = random.Random(1)
        k = ConstantField(5)
        for _ in range(100):
            a = Polynomial([rng.randrange(5) for _ in range(rng.randrange(8))], k, "t")
            b = Polynomial([rng.randrange(5) for _ in range(rng.randrange(1, 5))], k, "t")
            if b.is_zero():
                continue
            q, r = divmod(a, b)
            assert q * b + r == a
            assert r.is_zero() or r.degree < b.degree

    def test_gcd_divides_both(self):
        a = rf("t^4 - 1").num
        b = rf("t^2 - 1").num
        g = a.gcd(b)
        assert (a % g).is_zero() and (b % g).is_zero()
        assert g == rf("t^2 - 1").num.monic()


class TestParser:
    def test_roundtrip(self):
        for expr in ("t", "(t^2 + 1)/(t - 3)", "2*t^3 - t + 4", "-(1+t)"):
            f = rf(expr)
            assert rf(str(f)) == f

    def test_rejects_garbage(self):
        for expr in ("t +", "(t", "t^^2", "x & y"):
            with pytest.raises(ParseError):
                rf(expr)

    def test_coefficients_reduce_mod_p(self):
        assert rf("7*t") == rf("2*t")


class TestFactor:
    def test_factorization_multiplies_back(self):
        rng = random.Random(2)
        k = ConstantField(5)
        for _ in range(30):
            f = Polynomial([rng.randrange(5) for _ in range(rng.randrange(2, 9))], k, "t")
            if f.degree < 1:
                continue
            f = f.monic()
            prod = Polynomial([1], k, "t")
            for g, m in factor(f).items():
                assert is_irreducible(g)
                prod = prod * g**m
            assert prod == f

    def test_seed_determinism(self):
        f = rf("t^6 + t + 1").num
        assert factor(f, seed=3) == factor(f, seed=3)


class TestPlacesAndOrders:
    def test_order_at_finite(self):
        w = finite_place("t")
        assert order_at(rf("t^3/(t+1)"), w) == 3
        assert order_at(rf("(t+1)/t^2"), w) == -2

    def test_order_at_infinity(self):
        assert order_at(rf("t^3 + 1"), INFINITE) == -3
        assert order_at(rf("1/(t^2+t)"), INFINITE) == 2

    def test_product_formula(self):
        # sum over all places of deg(w) * ord_w(f) = 0
        f = rf("(t^3 + t + 1)/(t^2 + 2)")
        total = order_at(f, INFINITE)
        seen = set()
        for poly in (f.num, f.den):
            for w, _ in places_of_polynomial(poly):
                if w.poly.coeffs in seen:
                    continue
                seen.add(w.poly.coeffs)
                total += w.degree * order_at(f, w)
        assert total == 0

    def test_residue(self):
        w = finite_place("t^2 + 2")
        r = residue(rf("t^3"), w)
        # t^3 = t * t^2 = -2t mod (t^2+2)
        assert r == rf("3*t").num

    def test_invert_variable(self):
        f = rf("(t^2 + 1)/t")
        g = invert_variable(f)
        assert g == rf("(1 + t^2)/t")  # symmetric example
        assert invert_variable(rf("t^3")) == rf("1/t^3")


class TestWeilHeight:
    def test_base_examples(self):
        assert weil_height(rf("t")) == 1
        assert weil_height(rf("(t^2+1)/(t-1)")) == 2
        assert weil_height(rf("3")) == 0

    def test_extension_normalization(self):
        ext = ExtensionMap(rf("s^2", var="s"))
        assert weil_height(rf("s^2", var="s"), over=ext) == 1
        assert weil_height(rf("s", var="s"), over=ext) == Fraction(1, 2)

    def test_zero_iff_constant(self):
        assert weil_height(rf("4")) == 0
        assert weil_height(rf("t + 4")) > 0


class TestExtensions:
    @pytest.mark.parametrize("phi_expr", ["s", "s^2", "s^3", "s^2+s"])
    def test_sum_e_deg_equals_d_deg(self, phi_expr):
        ext = ExtensionMap(rf(phi_expr, var="s"))
        for place in (finite_place("t"), finite_place("t^2 + 2"), INFINITE):
            data = places_over(place, ext)
            assert sum(d.e * d.w.degree for d in data) == ext.degree * place.degree

    def test_place_below_roundtrip(self):
        ext = ExtensionMap(rf("s^2", var="s"))
        for v in (finite_place("t"), finite_place("t + 1"), INFINITE):
            for d in places_over(v, ext):
                below = place_below(d.w, ext)
                assert below.v == v
                assert below.e == d.e

    def test_compose(self):
        f = rf("(t^2+1)/t")
        phi = rf("s^2+s", var="s")
        g = compose(f, phi)
        assert g == (phi**2 + 1) / phi
