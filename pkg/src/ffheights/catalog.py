"""A small corpus of curves over F_5(t) with known points and reduction data.

Used by the test suite and available from the library: curves with
multiplicative places, I_M* places with points on each simple component,
a 2-torsion curve, a rank-2 curve, and an isotrivial curve, plus the
base-change maps used for degree-D checks.
"""

from __future__ import annotations

import random

from .elliptic import CurveModel, CurvePoint, new_curve
from .funcfield import (
    ConstantField,
    ExtensionMap,
    Polynomial,
    RationalFunction,
    factor,
    parse_rational_function,
)


def rf(expr: str, p: int = 5, var: str = "t") -> RationalFunction:
    return parse_rational_function(expr, var, ConstantField(p))


def _t(p: int = 5) -> RationalFunction:
    return RationalFunction.gen(ConstantField(p), "t")


def curve_e1(p: int = 5) -> CurveModel:
    """y^2 = x^3 + x + t: multiplicative place at (t^2+2), II* at infinity."""
    return new_curve(A=rf("1", p), B=rf("t", p))


def curve_e3(p: int = 5) -> tuple[CurveModel, CurvePoint]:
    """y^2 = x^3 + x - t^3 + t^2 - t with the point (t, t)."""
    E = new_curve(A=rf("1", p), B=rf("-t^3 + t^2 - t", p))
    return E, CurvePoint(rf("t", p), rf("t", p))


def legendre_curve(p: int = 5) -> tuple[CurveModel, list[CurvePoint]]:
    """y^2 = x(x-1)(x-t) with its three 2-torsion points (short form)."""
    zero = rf("0", p)
    E = new_curve(a_invariants=(zero, rf("-(1+t)", p), zero, rf("t", p), zero))
    torsion = []
    for root in ("0", "1", "t"):
        x, y = E.to_short(rf(root, p), zero)
        torsion.append(CurvePoint(x, y))
    return E, torsion


def legendre_twist(p: int = 5) -> tuple[CurveModel, CurvePoint]:
    """y^2 = x(x-1)(x-c) with c = t(t-2)/(t-1); carries the point (t, t)."""
    zero = rf("0", p)
    c = rf("t*(t-2)/(t-1)", p)
    E = new_curve(a_invariants=(zero, -(1 + c), zero, c, zero))
    x, y = E.to_short(rf("t", p), rf("t", p))
    return E, CurvePoint(x, y)


def e_m_curve(M: int, p: int = 5, b: RationalFunction | None = None) -> CurveModel:
    """y^2 = x^3 - 3t^2 x + 2t^3 b with b = 1 + t^M by default (I_M* at (t))."""
    t = _t(p)
    if b is None:
        b = 1 + t**M
    return new_curve(A=-3 * t**2, B=2 * t**3 * b)


def istar_odd_points(M: int, p: int = 5) -> tuple[CurveModel, CurvePoint, CurvePoint]:
    """For odd M: the member b = 1 + 3t^M carries a point on each of the
    alpha and beta components of its I_M* fiber at (t) (valid over F_5,
    where 6 is a square)."""
    if M % 2 == 0 or M < 1:
        raise ValueError("M must be a positive odd integer")
    if p != 5:
        raise ValueError("these closed-form points are specific to p = 5")
    t = _t(p)
    E = e_m_curve(M, p, b=1 + 3 * t**M)
    half = (M + 3) // 2
    alpha = CurvePoint(-2 * t, t**half)
    beta = CurvePoint(t, t**half)
    return E, alpha, beta


def istar_even_alpha(M: int, p: int = 5) -> tuple[CurveModel, CurvePoint]:
    """For even M >= 2: a member with a point on the alpha component."""
    if M % 2 == 1 or M < 2:
        raise ValueError("M must be a positive even integer")
    t = _t(p)
    E = e_m_curve(M, p, b=1 + t**M * (3 - t) + 3 * t ** (2 * M - 1))
    P = CurvePoint(t**2 - 2 * t, 3 * t**2 - t**3 + t ** (M + 1))
    return E, P


def istar_even_beta(M: int, p: int = 5) -> tuple[CurveModel, CurvePoint]:
    """For even M >= 2: a member with a point on the beta component."""
    if M % 2 == 1 or M < 2:
        raise ValueError("M must be a positive even integer")
    t = _t(p)
    E = e_m_curve(M, p, b=1 + t**M + 3 * t ** (M + 1) + 2 * t ** (3 * M // 2))
    P = CurvePoint(t + t ** ((M + 2) // 2), t ** ((M + 4) // 2))
    return E, P


def rank_two_curve(p: int = 5) -> tuple[CurveModel, CurvePoint, CurvePoint]:
    """The curve through (t, t^2) and (t^2, t), solved linearly for (A, B)."""
    t = _t(p)
    x1, y1 = t, t**2
    x2, y2 = t**2, t
    A = ((y1**2 - x1**3) - (y2**2 - x2**3)) / (x1 - x2)
    B = y1**2 - x1**3 - A * x1
    E = new_curve(A=A, B=B)
    return E, CurvePoint(x1, y1), CurvePoint(x2, y2)


def spread_curve(p: int = 5) -> tuple[CurveModel, CurvePoint, CurvePoint]:
    """A rank-2 lattice with a nontrivial component group: the curve
    through (1, t+1) and (3t, 2t+2) has an I3 fiber at (t+1), and the two
    points are independent of heights 3/2 and 5/6 (p = 5 only)."""
    if p != 5:
        raise ValueError("this curve is specific to p = 5")
    x1, y1 = rf("1", p), rf("t + 1", p)
    x2, y2 = rf("3*t", p), rf("2*t + 2", p)
    A = ((y1**2 - x1**3) - (y2**2 - x2**3)) / (x1 - x2)
    B = y1**2 - x1**3 - A * x1
    E = new_curve(A=A, B=B)
    return E, CurvePoint(x1, y1), CurvePoint(x2, y2)


def isotrivial_curve(p: int = 5) -> CurveModel:
    """y^2 = x^3 + t: constant j = 0, types II at (t) and II* at infinity."""
    return new_curve(A=rf("0", p), B=rf("t", p))


def isotrivial_point_search(E: CurveModel, max_deg: int = 2, seed: int = 0) -> list[CurvePoint]:
    """Points of E with polynomial x of degree <= max_deg, found by checking
    whether the cubic in x is a perfect square in F_p[t]."""
    field = E.field
    p = field.p
    var = E.var
    points = []
    for code in range(p ** (max_deg + 1)):
        digits = []
        c = code
        for _ in range(max_deg + 1):
            digits.append(c % p)
            c //= p
        x = RationalFunction(Polynomial(digits, field, var))
        f = x**3 + E.A * x + E.B
        if not f.den.is_one() or f.is_zero():
            continue
        y = _poly_sqrt(f.num, seed=seed)
        if y is None:
            continue
        for sign in (1, -1):
            points.append(CurvePoint(x, sign * RationalFunction(y)))
    return points


def _poly_sqrt(f: Polynomial, seed: int = 0) -> Polynomial | None:
    """A square root of f in F_p[t], or None."""
    if f.is_zero():
        return f
    lead = f.lead
    root = None
    for c in range(1, f.field.p):
        if (c * c) % f.field.p == lead:
            root = c
            break
    if root is None:
        return None
    out = Polynomial([root], f.field, f.var)
    for g, m in factor(f.monic(), seed=seed).items():
        if m % 2:
            return None
        out = out * g ** (m // 2)
    return out


def extension_maps(p: int = 5, var: str = "s") -> list[ExtensionMap]:
    """The base changes t = s, s^2, s^3, s^2 + s (degrees 1, 2, 3, 2)."""
    field = ConstantField(p)
    return [
        ExtensionMap(parse_rational_function(expr, var, field))
        for expr in ("s", "s^2", "s^3", "s^2+s")
    ]


def random_curve_point(rng: random.Random, p: int = 5, max_deg: int = 3):
    """A random curve with a known point: draw A, x, y and set
    B = y^2 - x^3 - Ax.  Retries until the discriminant is nonzero."""
    field = ConstantField(p)
    while True:
        def rand_poly(deg):
            return Polynomial([rng.randrange(p) for _ in range(deg + 1)], field, "t")

        A = RationalFunction(rand_poly(rng.randrange(max_deg + 1)))
        x = RationalFunction(rand_poly(rng.randrange(1, max_deg + 1)))
        y = RationalFunction(rand_poly(rng.randrange(1, max_deg + 1)))
        B = y**2 - x**3 - A * x
        try:
            E = new_curve(A=A, B=B)
        except ValueError:
            continue
        if E.is_isotrivial:
            continue
        return E, CurvePoint(x, y)
