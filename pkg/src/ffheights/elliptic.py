"""Weierstrass models over k(t), the group law, and division polynomials.

General (a1, a2, a3, a4, a6) input is converted on entry to the short
form y^2 = x^3 + Ax + B (legal since char >= 5) and the coordinate change
is retained so points can be mapped between the two forms.  All group
arithmetic runs on the short form with exact rational functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .funcfield import (
    ConstantField,
    ExtensionMap,
    Polynomial,
    RationalFunction,
    compose,
    weil_height,
)


class SingularCurveError(ValueError):
    """The supplied coefficients have discriminant zero."""


@dataclass(frozen=True)
class CurvePoint:
    """Affine point (x, y) in short-form coordinates, or the point at infinity."""

    x: RationalFunction | None = None
    y: RationalFunction | None = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self):
        return "infinity" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY = CurvePoint()


@dataclass(frozen=True)
class CurveModel:
    """Elliptic curve over a rational function field in short Weierstrass form."""

    a1: RationalFunction
    a2: RationalFunction
    a3: RationalFunction
    a4: RationalFunction
    a6: RationalFunction
    A: RationalFunction
    B: RationalFunction
    b2: RationalFunction
    b4: RationalFunction
    b6: RationalFunction
    b8: RationalFunction
    c4: RationalFunction
    c6: RationalFunction
    delta: RationalFunction
    j: RationalFunction

    @property
    def field(self) -> ConstantField:
        return self.A.field

    @property
    def var(self) -> str:
        return self.A.var

    @property
    def is_isotrivial(self) -> bool:
        return self.j.is_constant()

    # -- coordinate change between the input form and the short form -----
    def to_short(self, x: RationalFunction, y: RationalFunction) -> tuple:
        """Map a point on the (a1..a6) model to short-form coordinates."""
        twelve_inv = Fraction(1, 12)
        return (
            x + _scale(self.b2, twelve_inv),
            y + _scale(self.a1 * x + self.a3, Fraction(1, 2)),
        )

    def from_short(self, x: RationalFunction, y: RationalFunction) -> tuple:
        x0 = x - _scale(self.b2, Fraction(1, 12))
        y0 = y - _scale(self.a1 * x0 + self.a3, Fraction(1, 2))
        return (x0, y0)

    def on_curve(self, P: CurvePoint) -> bool:
        if P.is_infinity:
            return True
        return P.y * P.y == P.x**3 + self.A * P.x + self.B


def _scale(f: RationalFunction, q: Fraction) -> RationalFunction:
    """Multiply by a rational number, exactly, inside F_p (p > 3)."""
    p = f.field.p
    num = q.numerator % p
    den_inv = f.field.inv(q.denominator % p)
    return f * ((num * den_inv) % p)


def new_curve(
    a_invariants=None,
    A: RationalFunction | None = None,
    B: RationalFunction | None = None,
) -> CurveModel:
    """Build a curve from (a1, a2, a3, a4, a6) or directly from (A, B)."""
    if a_invariants is not None:
        a1, a2, a3, a4, a6 = a_invariants
    else:
        zero = A * 0
        a1, a2, a3 = zero, zero, zero
        a4, a6 = A, B
    if a1.field.p in (2, 3):  # pragma: no cover - ConstantField forbids this
        raise ValueError("characteristic must be >= 5")
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    c4 = b2 * b2 - 24 * b4
    c6 = -(b2**3) + 36 * b2 * b4 - 216 * b6
    delta = -(b2 * b2 * b8) - 8 * (b4**3) - 27 * (b6 * b6) + 9 * b2 * b4 * b6
    if delta.is_zero():
        raise SingularCurveError("discriminant is zero")
    j = c4**3 / delta
    A_short = _scale(c4, Fraction(-1, 48))
    B_short = _scale(c6, Fraction(-1, 864))
    return CurveModel(
        a1=a1, a2=a2, a3=a3, a4=a4, a6=a6,
        A=A_short, B=B_short,
        b2=b2, b4=b4, b6=b6, b8=b8, c4=c4, c6=c6, delta=delta, j=j,
    )


def pullback_curve(E: CurveModel, ext: ExtensionMap) -> CurveModel:
    """The same curve viewed over K = k(s) with t = phi(s)."""
    return new_curve(A=compose(E.A, ext.phi), B=compose(E.B, ext.phi))


def negate(P: CurvePoint) -> CurvePoint:
    if P.is_infinity:
        return P
    return CurvePoint(P.x, -P.y)


def add(E: CurveModel, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    """Chord-tangent addition on the short form."""
    if not (E.on_curve(P) and E.on_curve(Q)):
        raise ValueError("point is not on the curve")
    return _add_unchecked(E, P, Q)


def _add_unchecked(E: CurveModel, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.x == Q.x:
        if P.y == -Q.y:
            return INFINITY
        # tangent line
        slope = _scale(3 * P.x * P.x + E.A, Fraction(1, 2)) / P.y
    else:
        slope = (Q.y - P.y) / (Q.x - P.x)
    x3 = slope * slope - P.x - Q.x
    y3 = slope * (P.x - x3) - P.y
    return CurvePoint(x3, y3)


def multiply(E: CurveModel, m: int, P: CurvePoint) -> CurvePoint:
    """m-fold multiple by double-and-add; negative m negates."""
    if m < 0:
        return negate(multiply(E, -m, P))
    if not E.on_curve(P):
        raise ValueError("point is not on the curve")
    result = INFINITY
    base = P
    while m:
        if m & 1:
            result = _add_unchecked(E, result, base)
        if m > 1:
            base = _add_unchecked(E, base, base)
        m >>= 1
    return result


# ---------------------------------------------------------------------------
# division polynomials
# ---------------------------------------------------------------------------


class XPoly:
    """Polynomial in x with RationalFunction coefficients (internal helper)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = list(coeffs)
        while c and c[-1].is_zero():
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return XPoly(out)

    def __sub__(self, other):
        return self + XPoly([-c for c in other.coeffs])

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return XPoly([])
        zero = self.coeffs[0] * 0
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return XPoly(out)

    def scale(self, c) -> "XPoly":
        return XPoly([a * c for a in self.coeffs])

    def evaluate(self, x: RationalFunction) -> RationalFunction:
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        return isinstance(other, XPoly) and self.coeffs == other.coeffs


def _division_poly_table(E: CurveModel, m_max: int):
    """q_m with psi_m = q_m(x) for odd m and psi_m = 2y * q_m(x) for even m."""
    one_rf = RationalFunction.from_int(1, E.field, E.var)
    zero_rf = one_rf * 0
    one = XPoly([one_rf])
    zero = XPoly([])
    A, B = E.A, E.B
    F = XPoly([B, A, zero_rf, one_rf])  # x^3 + Ax + B
    q = {
        0: zero,
        1: one,
        2: one,
        3: XPoly([-(A * A), 12 * B, 6 * A, zero_rf, 3 * one_rf]),
        4: XPoly(
            [
                -8 * B * B - A**3,
                -4 * A * B,
                -5 * A * A,
                20 * B,
                5 * A,
                zero_rf,
                one_rf,
            ]
        ).scale(2 * one_rf),
    }
    F2_16 = (F * F).scale(16 * one_rf)

    def get(n: int) -> XPoly:
        if n in q:
            return q[n]
        m, rem = divmod(n, 2)
        if rem:  # n = 2m + 1
            if m % 2 == 0:
                val = F2_16 * get(m + 2) * get(m) * get(m) * get(m) - get(m - 1) * get(
                    m + 1
                ) * get(m + 1) * get(m + 1)
            else:
                val = get(m + 2) * get(m) * get(m) * get(m) - F2_16 * get(m - 1) * get(
                    m + 1
                ) * get(m + 1) * get(m + 1)
        else:  # n = 2m
            inner = get(m + 2) * get(m - 1) * get(m - 1) - get(m - 2) * get(m + 1) * get(
                m + 1
            )
            val = get(m) * inner
        q[n] = val
        return val

    return {n: get(n) for n in range(0, m_max + 1)}


def division_polynomial(E: CurveModel, m: int) -> XPoly:
    """q_m with psi_m = q_m(x) (m odd) or psi_m = psi_2 * q_m(x) (m even)."""
    if m < 1:
        raise ValueError("m must be positive")
    return _division_poly_table(E, m)[m]


def division_poly_value(E: CurveModel, m: int, P: CurvePoint) -> RationalFunction:
    """psi_m evaluated at an affine point of E."""
    if P.is_infinity:
        raise ValueError("psi_m is evaluated at affine points")
    qm = division_polynomial(E, m).evaluate(P.x)
    if m % 2 == 0:
        return 2 * P.y * qm
    return qm


def x_of_multiple(E: CurveModel, m: int, P: CurvePoint) -> RationalFunction:
    """x(mP) via the division-polynomial identity (cross-check helper)."""
    table = _division_poly_table(E, m + 1)
    F = P.x**3 + E.A * P.x + E.B  # = y^2
    qm = table[m].evaluate(P.x)
    qm1 = table[m - 1].evaluate(P.x)
    qp1 = table[m + 1].evaluate(P.x)
    if m % 2 == 0:
        num = qm1 * qp1
        den = 4 * F * qm * qm
    else:
        num = 4 * F * qm1 * qp1
        den = qm * qm
    return P.x - num / den


def duplicate_x(E: CurveModel, X: RationalFunction) -> RationalFunction:
    """x(2P) as a function of x(P) (the duplication map on x-coordinates)."""
    num = X**4 - 2 * E.A * X * X - 8 * E.B * X + E.A * E.A
    den = 4 * (X**3 + E.A * X + E.B)
    if den.is_zero():
        raise ZeroDivisionError("2P is the point at infinity")
    return num / den


def naive_height_of_x(E: CurveModel, P: CurvePoint, ext: ExtensionMap | None = None) -> Fraction:
    if P.is_infinity:
        return Fraction(0)
    return weil_height(P.x, over=ext)
