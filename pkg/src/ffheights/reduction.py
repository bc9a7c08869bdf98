"""Per-place minimal models, Kodaira classification, and components.

At a finite place everything happens in the coordinates of the curve; at
the infinite place the variable is inverted first so the place becomes
the finite place (t) of the working frame.  The model is rescaled by
u = pi^k, (A, B) -> (A/pi^{4k}, B/pi^{6k}), until minimal, and the
Kodaira type is read off the (v(c4), v(Delta)) table, which is complete
in characteristic >= 5.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .elliptic import CurveModel, CurvePoint
from .funcfield import (
    Place,
    Polynomial,
    RationalFunction,
    invert_variable,
    order_at,
)


class InternalInconsistencyError(RuntimeError):
    """Component criteria contradicted each other: a classification bug."""


@dataclass(frozen=True)
class KodairaType:
    """Reduction type: Good, I(N>=1), II, III, IV, I*(M>=0), IV*, III*, II*."""

    kind: str
    n: int = 0

    def __post_init__(self):
        if self.kind not in ("Good", "I", "II", "III", "IV", "I*", "IV*", "III*", "II*"):
            raise ValueError(f"unknown Kodaira kind {self.kind!r}")
        if self.kind == "I" and self.n < 1:
            raise ValueError("I_N needs N >= 1")
        if self.kind == "I*" and self.n < 0:
            raise ValueError("I_M* needs M >= 0")

    @property
    def symbol(self) -> str:
        if self.kind == "I":
            return f"I{self.n}"
        if self.kind == "I*":
            return f"I{self.n}*"
        return self.kind

    @property
    def is_multiplicative(self) -> bool:
        return self.kind == "I"

    @property
    def is_additive(self) -> bool:
        return self.kind not in ("Good", "I")


@dataclass(frozen=True)
class ComponentLabel:
    """Which component of the special fiber a point reduces to.

    kind is one of "identity" (with filtration level nu >= 0), "cycle"
    (I_N, index n up to sign, 1 <= n <= floor(N/2)), "alpha" / "beta"
    (I_M*, M >= 1), or "simple" (the interchangeable non-identity simple
    components of III, IV, I0*, IV*, III*).
    """

    kind: str
    nu: Fraction = Fraction(0)
    n: int = 0

    def __str__(self):
        if self.kind == "identity":
            return f"Identity(nu={self.nu})"
        if self.kind == "cycle":
            return f"Cycle({self.n})"
        return {"alpha": "Alpha", "beta": "Beta", "simple": "SimpleNonIdentity"}[self.kind]


_COMPONENT_GROUPS = {
    "Good": (1, 1),
    "II": (1, 1),
    "II*": (1, 1),
    "III": (2, 2),
    "III*": (2, 2),
    "IV": (3, 3),
    "IV*": (3, 3),
}


@dataclass(frozen=True)
class LocalData:
    """Minimal-model data of a curve at one place."""

    place: Place
    scale_power: int  # k with u = pi^k
    pi: Polynomial  # uniformizer in the working frame
    A_min: RationalFunction
    B_min: RationalFunction
    v_delta: int
    v_c4: int | None  # None when c4 = 0 identically (j = 0)
    kodaira: KodairaType
    component_order: int
    component_exponent: int
    vj_inv: int

    @property
    def J_w(self) -> int:
        return self.vj_inv

    @property
    def frame_place(self) -> Place:
        return Place("finite", self.pi)


def _to_frame(f: RationalFunction, w: Place) -> RationalFunction:
    return invert_variable(f) if w.kind == "infinite" else f


def _order_or_none(f: RationalFunction, wf: Place):
    return None if f.is_zero() else order_at(f, wf)


def _classify(v_c4, v_delta) -> KodairaType:
    if v_delta == 0:
        return KodairaType("Good")
    if v_c4 == 0:
        return KodairaType("I", v_delta)
    if v_delta == 2:
        return KodairaType("II")
    if v_delta == 3:
        return KodairaType("III")
    if v_delta == 4:
        return KodairaType("IV")
    if v_delta == 6:
        return KodairaType("I*", 0)
    if v_c4 == 2 and v_delta >= 7:
        return KodairaType("I*", v_delta - 6)
    if v_delta == 8:
        return KodairaType("IV*")
    if v_delta == 9:
        return KodairaType("III*")
    if v_delta == 10:
        return KodairaType("II*")
    raise InternalInconsistencyError(
        f"no Kodaira type for (v(c4), v(Delta)) = ({v_c4}, {v_delta})"
    )


def _component_group(kt: KodairaType) -> tuple[int, int]:
    if kt.kind in _COMPONENT_GROUPS:
        return _COMPONENT_GROUPS[kt.kind]
    if kt.kind == "I":
        return kt.n, kt.n
    # I_M*: (Z/2)^2 for even M, Z/4 for odd M
    return 4, (2 if kt.n % 2 == 0 else 4)


def localize(E: CurveModel, w: Place) -> LocalData:
    """Minimal model and Kodaira classification of E at the place w."""
    A = _to_frame(E.A, w)
    B = _to_frame(E.B, w)
    pi = w.poly if w.kind == "finite" else Polynomial.gen(E.field, A.var)
    wf = Place("finite", pi)
    vA = _order_or_none(A, wf)
    vB = _order_or_none(B, wf)
    candidates = []
    if vA is not None:
        candidates.append(vA // 4)
    if vB is not None:
        candidates.append(vB // 6)
    k = min(candidates)
    pi_rf = RationalFunction(pi)
    A_min = A / pi_rf ** (4 * k)
    B_min = B / pi_rf ** (6 * k)
    delta_min = -16 * (4 * A_min**3 + 27 * B_min**2)
    v_delta = order_at(delta_min, wf)
    v_c4 = (vA - 4 * k) if vA is not None else None
    if E.j.is_zero():
        vj_inv = 0
    else:
        vj_inv = max(0, -order_at(E.j, w))
    kt = _classify(v_c4, v_delta)
    order, exponent = _component_group(kt)
    return LocalData(
        place=w,
        scale_power=k,
        pi=pi,
        A_min=A_min,
        B_min=B_min,
        v_delta=v_delta,
        v_c4=v_c4,
        kodaira=kt,
        component_order=order,
        component_exponent=exponent,
        vj_inv=vj_inv,
    )


def minimal_coordinates(ld: LocalData, P: CurvePoint) -> tuple:
    """Short-form coordinates of P on the minimal model at ld.place."""
    if P.is_infinity:
        raise ValueError("the point at infinity has no affine coordinates")
    x = _to_frame(P.x, ld.place)
    y = _to_frame(P.y, ld.place)
    pi_rf = RationalFunction(ld.pi)
    k = ld.scale_power
    return x / pi_rf ** (2 * k), y / pi_rf ** (3 * k)


def is_identity_component(
    E: CurveModel, w: Place, P: CurvePoint, ld: LocalData | None = None
) -> tuple[bool, Fraction]:
    """Whether P reduces to a nonsingular point, with the filtration level nu.

    nu = max{0, ord_w(x(P)^-1)}/2 on the minimal model; nu = 0 when the
    reduction is affine nonsingular.
    """
    if P.is_infinity:
        raise ValueError("the point at infinity is not classified")
    if ld is None:
        ld = localize(E, w)
    x, y = minimal_coordinates(ld, P)
    wf = ld.frame_place
    vx = _order_or_none(x, wf)
    if vx is not None and vx < 0:
        return True, Fraction(-vx, 2)
    vy = _order_or_none(y, wf)
    tangent = 3 * x * x + ld.A_min
    vt = _order_or_none(tangent, wf)
    singular = (vy is None or vy >= 1) and (vt is None or vt >= 1)
    return not singular, Fraction(0)


def component_of(
    E: CurveModel, w: Place, P: CurvePoint, ld: LocalData | None = None
) -> ComponentLabel:
    """The component of the special fiber that P reduces to."""
    if P.is_infinity:
        raise ValueError("the point at infinity is not classified")
    if ld is None:
        ld = localize(E, w)
    identity, nu = is_identity_component(E, w, P, ld)
    if identity:
        return ComponentLabel("identity", nu=nu)
    kt = ld.kodaira
    wf = ld.frame_place
    x, y = minimal_coordinates(ld, P)
    if kt.kind in ("Good", "II", "II*"):
        raise InternalInconsistencyError(
            f"type {kt.symbol} has no rational non-identity component, "
            f"yet a point reduced to the singular locus at {w}"
        )
    if kt.kind == "I":
        N = kt.n
        if N == 1:
            raise InternalInconsistencyError(
                "I_1 has trivial component group, yet a point reduced to the node"
            )
        # lift of the node, accurate past floor(N/2), so the clamp is exact
        x0 = -(3 * ld.B_min) / (2 * ld.A_min)
        diff = x - x0
        d = order_at(diff, wf) if not diff.is_zero() else N  # exact hit: clamp
        n = min(d, N // 2)
        if n < 1:
            raise InternalInconsistencyError(
                "singular reduction at an I_N place with ord(x - x0) < 1"
            )
        return ComponentLabel("cycle", n=n)
    if kt.kind == "I*" and kt.n >= 1:
        M = kt.n
        pi_rf = RationalFunction(ld.pi)
        a = -ld.A_min / (3 * pi_rf**2)
        b = ld.B_min / (2 * pi_rf**3)
        # a, b are units; the blown-up cubic X^3 - 3aX + 2b has double
        # root b/a mod pi, so x/pi away from it means the alpha component
        shifted = x - pi_rf * (b / a)
        d = order_at(shifted, wf) if not shifted.is_zero() else M + 2
        if d == 1:
            return ComponentLabel("alpha")
        vy = _order_or_none(y, wf)
        if M % 2 == 1:
            if vy is None or 2 * vy != M + 3:
                raise InternalInconsistencyError(
                    f"beta point at an I_{M}* place violates ord(y) = (M+3)/2"
                )
        else:
            if vy is not None and 2 * vy < M + 4:
                raise InternalInconsistencyError(
                    f"beta point at an I_{M}* place violates ord(y) >= (M+4)/2"
                )
        return ComponentLabel("beta")
    # III, IV, I0*, IV*, III*: all non-identity simple components are
    # interchangeable (constant reduced-inverse diagonal)
    return ComponentLabel("simple")


def analyze_row(ld: LocalData, e: int = 1) -> dict:
    """Summary of one place as plain data (for the CLI)."""
    return {
        "place": str(ld.place),
        "degree": ld.place.degree,
        "e": e,
        "type": ld.kodaira.symbol,
        "v_delta": ld.v_delta,
        "v_c4": ld.v_c4,
        "J_w": ld.J_w,
        "component_group": {
            "order": ld.component_order,
            "exponent": ld.component_exponent,
        },
    }
