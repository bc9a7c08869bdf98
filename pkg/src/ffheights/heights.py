"""Exact local and global canonical heights, the limit oracle, and torsion.

Local heights are computed on the minimal model at each place by closed
formulas keyed to the component of the special fiber; two independent
recomputations (a multiply-into-the-identity relation and the
intersection-matrix correction) are available as cross-checks.  The
global height is the degree-weighted sum over the finitely many places
that can contribute, divided by the extension degree so that values are
normalized relative to the base field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import fibers
from .elliptic import (
    CurveModel,
    CurvePoint,
    add,
    division_poly_value,
    duplicate_x,
    multiply,
    new_curve,
    pullback_curve,
)
from .funcfield import (
    ExtensionMap,
    Place,
    Polynomial,
    RationalFunction,
    order_at,
    place_below,
    places_of_polynomial,
    weil_height,
)
from .reduction import (
    ComponentLabel,
    InternalInconsistencyError,
    LocalData,
    component_of,
    localize,
    minimal_coordinates,
)


class IsotrivialCurveError(ValueError):
    """Operation requires a nonconstant j-invariant."""


@dataclass(frozen=True)
class LocalHeight:
    value: Fraction
    method: str  # "closed_form" | "multiply_in" | "intersection_correction"


@dataclass(frozen=True)
class LedgerEntry:
    place: Place
    e: int
    degree: int
    local: LocalHeight  # value normalized by e(w)


@dataclass(frozen=True)
class HeightBreakdown:
    global_height: Fraction
    ledger: tuple
    extension_degree: int
    isotrivial: bool


_SIMPLE_CORRECTION = {
    "III": Fraction(-1, 4),
    "IV": Fraction(-1, 3),
    "I0*": Fraction(-1, 2),
    "IV*": Fraction(-2, 3),
    "III*": Fraction(-3, 4),
}


def _closed_form_value(ld: LocalData, label: ComponentLabel) -> Fraction:
    v_delta = Fraction(ld.v_delta)
    if label.kind == "identity":
        return label.nu + v_delta / 12
    if label.kind == "cycle":
        n, N = label.n, ld.kodaira.n
        return v_delta / 12 - Fraction(n * (N - n), 2 * N)
    if label.kind == "alpha":
        return Fraction(ld.vj_inv, 12)
    if label.kind == "beta":
        return -Fraction(ld.vj_inv, 24)
    return v_delta / 12 + _SIMPLE_CORRECTION[ld.kodaira.symbol]


def local_height(
    E: CurveModel, w: Place, P: CurvePoint, ld: LocalData | None = None
) -> LocalHeight:
    """Local canonical height at w (closed form, ord_w-normalized)."""
    if P.is_infinity:
        raise ValueError("local height of the point at infinity")
    if ld is None:
        ld = localize(E, w)
    label = component_of(E, w, P, ld)
    return LocalHeight(_closed_form_value(ld, label), "closed_form")


def local_height_intersection(
    E: CurveModel, w: Place, P: CurvePoint, ld: LocalData | None = None
) -> LocalHeight | None:
    """Recompute via the fiber intersection matrix; None on the identity
    component (no matrix correction applies there)."""
    if ld is None:
        ld = localize(E, w)
    label = component_of(E, w, P, ld)
    if label.kind == "identity":
        return None
    kt = ld.kodaira
    if label.kind == "cycle":
        graph = fibers.build_fiber("I", kt.n)
        fiber_label = f"c{label.n}"
    elif label.kind in ("alpha", "beta"):
        graph = fibers.build_fiber("I*", kt.n)
        fiber_label = label.kind
    else:
        graph = fibers.build_fiber(kt.kind, kt.n)
        fiber_label = None
    table = fibers.correction_table(graph)
    if fiber_label is None:
        values = set(table.corrections.values())
        if len(values) != 1:
            raise InternalInconsistencyError(
                f"non-constant corrections for symmetric type {kt.symbol}"
            )
        correction = values.pop()
    else:
        correction = table.corrections[fiber_label]
    return LocalHeight(
        Fraction(ld.v_delta, 12) + correction, "intersection_correction"
    )


def _minimal_model_point(ld: LocalData, E: CurveModel, P: CurvePoint):
    """The curve (A_min, B_min) in the working frame and P on it."""
    E_min = new_curve(A=ld.A_min, B=ld.B_min)
    x, y = minimal_coordinates(ld, P)
    return E_min, CurvePoint(x, y)


def local_height_multiply_in(
    E: CurveModel, w: Place, P: CurvePoint, ld: LocalData | None = None
) -> LocalHeight | None:
    """Recompute by multiplying P into the identity component.

    With m a multiple of the component-group exponent and mP affine,
    lambda(P) = [lambda(mP) - ord_w(psi_m(P)) + ((m^2-1)/12) v(Delta)] / m^2,
    where lambda(mP) is the identity-component closed form.  Returns None
    when every available multiple lands at infinity.
    """
    if P.is_infinity:
        raise ValueError("local height of the point at infinity")
    if ld is None:
        ld = localize(E, w)
    wf = ld.frame_place
    E_min, P_min = _minimal_model_point(ld, E, P)
    base = ld.component_exponent if ld.component_exponent > 1 else 2
    for m in (base, 2 * base, 3 * base):
        mP = multiply(E_min, m, P_min)
        if mP.is_infinity:
            continue
        psi = division_poly_value(E_min, m, P_min)
        if psi.is_zero():  # pragma: no cover - zero iff mP is infinity
            continue
        lam_m = local_height(E_min, wf, mP)
        value = (
            lam_m.value
            - order_at(psi, wf)
            + Fraction((m * m - 1) * ld.v_delta, 12)
        ) / (m * m)
        return LocalHeight(value, "multiply_in")
    return None


# ---------------------------------------------------------------------------
# global height
# ---------------------------------------------------------------------------


def contributing_places(E: CurveModel, P: CurvePoint, seed: int = 0) -> list[Place]:
    """A finite superset of the places with nonzero local height.

    Everywhere else the model is already minimal with good reduction and
    x(P) is integral, so the identity rule gives exactly 0.
    """
    polys = [E.delta.num, E.delta.den, E.A.den, E.B.den]
    if not P.is_infinity:
        polys.append(P.x.den)
    seen = set()
    out = []
    for f in polys:
        if f.degree < 1:
            continue
        for place, _ in places_of_polynomial(f, seed=seed):
            if place.poly.coeffs not in seen:
                seen.add(place.poly.coeffs)
                out.append(place)
    out.append(Place("infinite"))
    return out


def global_height(
    E: CurveModel, P: CurvePoint, ext: ExtensionMap | None = None, seed: int = 0
) -> HeightBreakdown:
    """Canonical height, normalized relative to the base field.

    With an extension map, the curve is pulled back to the extension
    field, the point is expected to have coordinates there already, and
    the degree-weighted sum is divided by the extension degree.  The
    value matches the limit definition
    lim 4^{-n} h(x(2^n P)), which is twice the weighted sum of the local
    heights in the ledger (the local normalization is fixed by the
    duplication identity, under which lambda grows like half the pole
    order of x).
    """
    D = ext.degree if ext is not None else 1
    if P.is_infinity:
        return HeightBreakdown(Fraction(0), (), D, E.is_isotrivial)
    base_var = E.var
    E_work = pullback_curve(E, ext) if ext is not None else E
    P_work = P
    if not E_work.on_curve(P_work):
        raise ValueError("point is not on the curve")
    total = Fraction(0)
    ledger = []
    for w in contributing_places(E_work, P_work, seed=seed):
        ld = localize(E_work, w)
        lam = local_height(E_work, w, P_work, ld)
        total += w.degree * lam.value
        if ext is not None:
            e = place_below(w, ext, tvar=base_var, seed=seed).e
        else:
            e = 1
        ledger.append(
            LedgerEntry(w, e, w.degree, LocalHeight(lam.value / e, lam.method))
        )
    return HeightBreakdown(2 * total / D, tuple(ledger), D, E.is_isotrivial)


def height_limit_oracle(
    E: CurveModel, P: CurvePoint, n_max: int, ext: ExtensionMap | None = None
) -> list[Fraction]:
    """The sequence 4^{-n} h(x(2^n P)) for n = 0..n_max (truncates at
    infinity); its limit is the canonical height."""
    if P.is_infinity:
        return []
    if ext is not None:
        E = pullback_curve(E, ext)
    out = []
    X = P.x
    n = 0
    while True:
        out.append(weil_height(X, over=ext) / Fraction(4) ** n)
        if n == n_max:
            return out
        try:
            X = duplicate_x(E, X)
        except ZeroDivisionError:
            return out
        n += 1


def height_pairing(
    E: CurveModel, P: CurvePoint, Q: CurvePoint, ext: ExtensionMap | None = None
) -> Fraction:
    """The symmetric bilinear form ½(h(P+Q) - h(P) - h(Q))."""
    E_work = pullback_curve(E, ext) if ext is not None else E
    h_sum = global_height(E, add(E_work, P, Q), ext).global_height
    h_p = global_height(E, P, ext).global_height
    h_q = global_height(E, Q, ext).global_height
    return (h_sum - h_p - h_q) / 2


def is_torsion(E: CurveModel, P: CurvePoint, ext: ExtensionMap | None = None) -> bool:
    """Exact zero-height test; requires a nonconstant j-invariant."""
    if E.is_isotrivial:
        raise IsotrivialCurveError("torsion test needs a non-isotrivial curve")
    if P.is_infinity:
        return True
    return global_height(E, P, ext).global_height == 0
