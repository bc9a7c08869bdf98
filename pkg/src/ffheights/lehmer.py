"""Height lower bounds, counting bounds, constants, and inequalities.

Exact rational arithmetic everywhere a comparison is decided; floating
point appears only in the constant optimizer and the numeric minimizer,
both clearly marked approximate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .elliptic import CurveModel, CurvePoint, add, multiply, negate, pullback_curve
from .fibers import _invert as _fraction_inverse
from .funcfield import ExtensionMap, Place, place_below, places_of_polynomial, weil_height
from .heights import (
    IsotrivialCurveError,
    global_height,
    height_pairing,
    local_height,
)
from .reduction import localize


class SpreadSearchError(RuntimeError):
    """No subset of the guaranteed size exists: an upstream correctness bug."""


# ---------------------------------------------------------------------------
# Theorem 1: the Lehmer-type lower bound
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PointResult:
    point: CurvePoint
    hhat: Fraction
    torsion: bool
    passes: bool | None  # None when excluded as torsion


@dataclass(frozen=True)
class BoundReport:
    curve_id: str
    h_j: Fraction
    D: int
    bound: Fraction
    large_regime: bool
    large_bound: Fraction
    results: tuple

    @property
    def all_pass(self) -> bool:
        return all(r.passes for r in self.results if r.passes is not None)


def theorem1_bound(
    E: CurveModel,
    ext: ExtensionMap | None,
    points,
    curve_id: str = "",
) -> BoundReport:
    """Check hhat >= 1/(10500 h(j)^2 D^2) for every non-torsion point."""
    if E.is_isotrivial:
        raise IsotrivialCurveError(
            "constant j-invariant: use isotrivial_bound_check"
        )
    h_j = weil_height(E.j)
    D = ext.degree if ext is not None else 1
    bound = Fraction(1, 10500) / (h_j**2 * D**2)
    large_bound = Fraction(1, 4108) / (h_j**2 * D**2)
    large = h_j**3 * D**2 >= 50000**2
    results = []
    for P in points:
        report = global_height(E, P, ext)
        h = report.global_height
        torsion = h == 0
        results.append(PointResult(P, h, torsion, None if torsion else h >= bound))
    return BoundReport(curve_id, h_j, D, bound, large, large_bound, tuple(results))


# ---------------------------------------------------------------------------
# §6 constant and optimizer
# ---------------------------------------------------------------------------


def c4_constant(delta: float, eps: float, J: float = 1.0, D: float = 1.0) -> float:
    """The two-branch constant whose grid maximum yields the 1/10500."""
    if not (0 < delta < 1 and 0 < eps < 1):
        raise ValueError("delta and eps must lie in (0, 1)")
    if J < 1 or D < 1:
        raise ValueError("J and D must be >= 1")
    prefactor = (1 - delta) / (2 ** (7 / 3) * (1 + eps) ** (2 / 3))
    branch1 = eps**2 * J**2 * D ** (4 / 3) / (12 + eps) ** 2
    branch2 = delta**2 / (
        2 ** (10 / 3) * (1 + eps) ** (2 / 3) + delta / (J * D ** (2 / 3))
    ) ** 2
    return prefactor * min(branch1, branch2)


def optimize_constant_grid(J: float = 1.0, D: float = 1.0, grid_n: int = 1000):
    """Brute-force maximum of the constant over the open grid {i/grid_n}^2.

    Returns (delta*, eps*, max value); ties break to the smallest delta,
    then the smallest eps.  All values are floating approximations.
    """
    import numpy as np

    if grid_n < 2:
        raise ValueError("grid_n must be >= 2")
    axis = np.arange(1, grid_n) / grid_n
    d = axis[:, None]
    e = axis[None, :]
    prefactor = (1 - d) / (2 ** (7 / 3) * (1 + e) ** (2 / 3))
    branch1 = e**2 * J**2 * D ** (4 / 3) / (12 + e) ** 2
    branch2 = d**2 / (
        2 ** (10 / 3) * (1 + e) ** (2 / 3) + d / (J * D ** (2 / 3))
    ) ** 2
    values = prefactor * np.minimum(branch1, branch2)
    i, j = np.unravel_index(int(np.argmax(values)), values.shape)
    return float(axis[i]), float(axis[j]), float(values[i, j])


# ---------------------------------------------------------------------------
# Theorem 2: counting points of small height
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CountingBound:
    """The small-height cutoff B and the admissible count, exactly.

    B = ((1-delta)/2) * (1/(2^5 (1+eps) D))^{2/3} is irrational in
    general, so membership is decided by comparing cubes.
    """

    delta: Fraction
    eps: Fraction
    D: int
    h_j: Fraction

    def __post_init__(self):
        if not (0 < self.delta < 1 and 0 < self.eps < 1):
            raise ValueError("delta and eps must lie in (0, 1)")

    @property
    def scale(self) -> Fraction:
        """2^5 (1+eps) D."""
        return 32 * (1 + self.eps) * self.D

    @property
    def B_cubed(self) -> Fraction:
        return ((1 - self.delta) / 2) ** 3 / self.scale**2

    @property
    def B_float(self) -> float:
        return float(self.B_cubed) ** (1 / 3)

    @property
    def count_bound_float(self) -> float:
        return max(12 / float(self.eps), float(self.h_j / self.delta) * float(self.scale) ** (2 / 3))

    @property
    def n_bound_float(self) -> float:
        """The intermediate bound h(j)/(12 delta) * (2^5 (1+eps) D)^{2/3}."""
        return float(self.h_j / (12 * self.delta)) * float(self.scale) ** (2 / 3)

    def admits(self, h: Fraction) -> bool:
        """Exact test hhat <= B."""
        return h >= 0 and h**3 <= self.B_cubed

    def count_ok(self, count: int) -> bool:
        """Exact test count <= max{12/eps, (h_j/delta) scale^{2/3}}."""
        if count * self.eps <= 12:
            return True
        return count**3 * self.delta**3 <= self.h_j**3 * self.scale**2


def theorem2_bound(delta: Fraction, eps: Fraction, D: int, h_j: Fraction) -> CountingBound:
    return CountingBound(Fraction(delta), Fraction(eps), D, Fraction(h_j))


def sigma_count(
    E: CurveModel,
    generators,
    bound,
    ext: ExtensionMap | None = None,
    torsion=(),
    gram=None,
) -> int:
    """Number of points in the subgroup spanned by the generators (plus the
    supplied torsion translates) with hhat <= B.

    ``bound`` is an exact Fraction cutoff or a CountingBound.  ``gram``
    may supply the precomputed height-pairing matrix of the generators.
    """
    r = len(generators)
    if r > 3:
        raise ValueError("rank > 3 not supported")
    if isinstance(bound, CountingBound):
        admits = bound.admits
        b_float = bound.B_float * (1 + 1e-9)
    else:
        cutoff = Fraction(bound)
        admits = lambda h: h <= cutoff  # noqa: E731
        b_float = float(cutoff)
    if r == 0:
        return (1 + len(torsion)) if admits(Fraction(0)) else 0
    if gram is None:
        gram = [
            [height_pairing(E, generators[i], generators[j], ext) for j in range(r)]
            for i in range(r)
        ]
    for k in range(1, r + 1):
        sub = [row[:k] for row in gram[:k]]
        _, det = _fraction_inverse(sub)
        if det <= 0:
            raise ValueError("generators are dependent or torsion")
    inverse, _ = _fraction_inverse(gram)
    boxes = [int(math.isqrt(int(math.ceil(b_float * float(inverse[i][i]))))) + 1 for i in range(r)]

    def q(m) -> Fraction:
        return sum(
            gram[i][j] * m[i] * m[j] for i in range(r) for j in range(r)
        )

    count = 0
    ranges = [range(-b, b + 1) for b in boxes]
    if r == 1:
        vectors = ((i,) for i in ranges[0])
    elif r == 2:
        vectors = ((i, j) for i in ranges[0] for j in ranges[1])
    else:
        vectors = ((i, j, k) for i in ranges[0] for j in ranges[1] for k in ranges[2])
    for m in vectors:
        if admits(q(m)):
            count += 1
    return count * (1 + len(torsion))


# ---------------------------------------------------------------------------
# Lemmas 3.1, 5.1, 5.2
# ---------------------------------------------------------------------------


def parallelogram_check(E: CurveModel, points, ext: ExtensionMap | None = None):
    """max hhat(P_i) vs (1/(2(N+1)^2)) * sum over ordered pairs of
    hhat(P_j - P_k); returns (lhs, rhs, holds, equality_flag)."""
    pts = list(points)
    if len(pts) < 2:
        raise ValueError("need at least two points")
    n1 = len(pts)
    E_work = pullback_curve(E, ext) if ext is not None else E
    heights = [global_height(E, P, ext).global_height for P in pts]
    lhs = max(heights)
    total = Fraction(0)
    for j in range(n1):
        for k in range(n1):
            if j == k:
                continue
            diff = add(E_work, pts[j], negate(pts[k]))
            total += global_height(E, diff, ext).global_height
    rhs = total / (2 * n1**2)
    sum_point = pts[0]
    for P in pts[1:]:
        sum_point = add(E_work, sum_point, P)
    sum_torsion = global_height(E, sum_point, ext).global_height == 0
    equality = len(set(heights)) == 1 and sum_torsion
    return lhs, rhs, lhs >= rhs, equality


def _paper_place_data(E: CurveModel, w: Place, ext: ExtensionMap | None, seed: int = 0):
    """(working curve, local data, e(w), base valuation of j^-1)."""
    E_work = pullback_curve(E, ext) if ext is not None else E
    ld = localize(E_work, w)
    e = place_below(w, ext, tvar=E.var, seed=seed).e if ext is not None else 1
    vj_base = Fraction(ld.vj_inv, e)
    return E_work, ld, e, vj_base


def spread_sum_bound(
    E: CurveModel, w: Place, points, ext: ExtensionMap | None = None, seed: int = 0
):
    """lhs = sum over ordered pairs of the local height of differences at w
    (normalized by e(w)); rhs = (1/12)((N+1)/J_w)^2 v(j^-1) - ((N+1)/12) v(j^-1)."""
    E_work, ld, e, vj = _paper_place_data(E, w, ext, seed)
    if vj <= 0:
        raise ValueError("the place must have v(j^-1) > 0")
    pts = list(points)
    n1 = len(pts)
    lhs = Fraction(0)
    for j in range(n1):
        for k in range(n1):
            if j == k:
                continue
            diff = add(E_work, pts[j], negate(pts[k]))
            if diff.is_infinity:
                raise ValueError("points must be distinct")
            lhs += Fraction(local_height(E_work, w, diff, ld).value) / e
    J_w = ld.vj_inv
    rhs = Fraction(1, 12) * Fraction(n1 * n1, J_w * J_w) * vj - Fraction(n1, 12) * vj
    return lhs, rhs


def select_spread_subset(
    E: CurveModel,
    w: Place,
    candidates,
    A: int,
    N: int,
    ext: ExtensionMap | None = None,
    pair_local_height=None,
    seed: int = 0,
):
    """A subset of N+1 candidates with pairwise local height at w at least
    ((1 - 1/A)/12) max{v(j^-1), 0}, found by exact clique search.

    ``pair_local_height(j, k)`` may supply precomputed values (normalized
    by e(w)); otherwise differences are formed and evaluated directly.
    """
    pts = list(candidates)
    if A < 1:
        raise ValueError("A must be >= 1")
    if len(pts) < 6 * A * N + 1:
        raise ValueError("need at least 6AN+1 candidates")
    E_work, ld, e, vj = _paper_place_data(E, w, ext, seed)
    threshold = Fraction(A - 1, 12 * A) * max(vj, 0)
    n = len(pts)
    if pair_local_height is None:
        def pair_local_height(j, k):
            diff = add(E_work, pts[j], negate(pts[k]))
            if diff.is_infinity:
                raise ValueError("candidates must be distinct")
            return Fraction(local_height(E_work, w, diff, ld).value) / e

    adjacency = [[False] * n for _ in range(n)]
    for j in range(n):
        for k in range(j + 1, n):
            ok = pair_local_height(j, k) >= threshold
            adjacency[j][k] = adjacency[k][j] = ok

    target = N + 1
    order = sorted(range(n), key=lambda v: -sum(adjacency[v]))

    def extend(clique, rest):
        if len(clique) == target:
            return clique
        if len(clique) + len(rest) < target:
            return None
        for idx, v in enumerate(rest):
            new_rest = [u for u in rest[idx + 1 :] if adjacency[v][u]]
            found = extend(clique + [v], new_rest)
            if found is not None:
                return found
        return None

    clique = extend([], order)
    if clique is None:
        raise SpreadSearchError(
            "no admissible subset of the guaranteed size exists"
        )
    return [pts[v] for v in sorted(clique)]


# ---------------------------------------------------------------------------
# Appendix A inequality
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InequalityInstance:
    alpha: Fraction
    beta: Fraction
    e: tuple  # positive rationals, e[0] the maximum

    def __post_init__(self):
        if self.alpha <= 0 or self.beta <= 0:
            raise ValueError("alpha and beta must be positive")
        if not self.e or any(x <= 0 for x in self.e):
            raise ValueError("e must be a nonempty sequence of positive values")
        if any(x > self.e[0] for x in self.e[1:]):
            raise ValueError("e[0] must be the maximum")

    @property
    def r(self) -> int:
        return len(self.e) - 1


def inequality_check(
    inst: InequalityInstance,
    constant: Fraction = Fraction(27, 4),
    refine: bool = False,
):
    """Compare (alpha e0 + beta sum 1/e_i)^3 against constant * alpha^2 *
    beta * sum(e_i), optionally scaled by r/(r+1).  Exact when the inputs
    are rational; returns (lhs, rhs_cubed, holds)."""
    lhs = inst.alpha * inst.e[0] + inst.beta * sum(
        Fraction(1) / x for x in inst.e[1:]
    )
    factor = Fraction(inst.r, inst.r + 1) if refine else Fraction(1)
    rhs_cubed = Fraction(constant) * inst.alpha**2 * inst.beta * sum(inst.e) * factor
    return lhs, rhs_cubed, lhs**3 >= rhs_cubed


def inequality_infimum(alpha: float, beta: float, r: int):
    """Closed-form minimizer and infimum over the region e_i <= e_0:
    x* = sqrt(2 beta r / alpha), inf = 3 * 2^{-2/3} (alpha^2 beta / (1 + 1/r))^{1/3}."""
    if alpha <= 0 or beta <= 0 or r < 1:
        raise ValueError("need alpha, beta > 0 and r >= 1")
    x_star = math.sqrt(2 * beta * r / alpha)
    inf_value = 3 * 2 ** (-2 / 3) * (alpha**2 * beta / (1 + 1 / r)) ** (1 / 3)
    return x_star, inf_value


def _objective(alpha: float, beta: float, e) -> float:
    return (alpha * e[0] + beta * sum(1.0 / x for x in e[1:])) / sum(e) ** (1 / 3)


def _golden_min(f, lo: float, hi: float, iters: int = 140) -> float:
    ratio = (math.sqrt(5) - 1) / 2
    a, b = lo, hi
    c = b - ratio * (b - a)
    d = a + ratio * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - ratio * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + ratio * (b - a)
            fd = f(d)
    return (a + b) / 2


def inequality_infimum_numeric(alpha: float, beta: float, r: int, sweeps: int = 80):
    """Numeric minimum of (alpha e0 + beta sum 1/e_i)/(sum e_i)^{1/3} over
    the region 0 < e_i <= e_0, by coordinate descent with a scale move.
    Floating approximation, used to validate the closed form."""
    if alpha <= 0 or beta <= 0 or r < 1:
        raise ValueError("need alpha, beta > 0 and r >= 1")
    e = [1.0] * (r + 1)
    best = _objective(alpha, beta, e)
    for _ in range(sweeps):
        # global rescale in log space (plain coordinate moves stall on the
        # scale direction)
        ls = _golden_min(
            lambda s: _objective(alpha, beta, [x * math.exp(s) for x in e]),
            -8.0,
            8.0,
        )
        e = [x * math.exp(ls) for x in e]
        lo0 = max(e[1:])
        e[0] = _golden_min(
            lambda v: _objective(alpha, beta, [v] + e[1:]), lo0, 8 * lo0 + 1.0
        )
        for i in range(1, r + 1):
            e[i] = _golden_min(
                lambda v, i=i: _objective(alpha, beta, e[:i] + [v] + e[i + 1 :]),
                1e-9,
                e[0],
            )
        value = _objective(alpha, beta, e)
        if best - value < 1e-15 * max(1.0, abs(best)):
            best = min(best, value)
            break
        best = value
    return e, best


# ---------------------------------------------------------------------------
# §7 isotrivial bound
# ---------------------------------------------------------------------------


def minimal_discriminant_degree(E: CurveModel, seed: int = 0) -> int:
    """deg of the minimal discriminant divisor: sum of deg(w) * v(Delta_min)."""
    polys = [E.delta.num, E.delta.den, E.A.den, E.B.den]
    seen = set()
    places = []
    for f in polys:
        if f.degree < 1:
            continue
        for place, _ in places_of_polynomial(f, seed=seed):
            if place.poly.coeffs not in seen:
                seen.add(place.poly.coeffs)
                places.append(place)
    places.append(Place("infinite"))
    return sum(w.degree * localize(E, w).v_delta for w in places)


@dataclass(frozen=True)
class IsotrivialReport:
    deg_discriminant: int
    D: int
    bound: Fraction
    split: bool
    results: tuple  # (point, hhat or None when 12-torsion, passes or None)

    @property
    def all_pass(self) -> bool:
        return all(p for _, _, p in self.results if p is not None)


def isotrivial_bound_check(
    E: CurveModel, ext: ExtensionMap | None, points
) -> IsotrivialReport:
    """For constant j: hhat >= deg(D_{E/K}) / (12^3 D) unless 12P = O."""
    if not E.is_isotrivial:
        raise ValueError("curve is not isotrivial: use theorem1_bound")
    E_work = pullback_curve(E, ext) if ext is not None else E
    D = ext.degree if ext is not None else 1
    deg_d = minimal_discriminant_degree(E_work)
    bound = Fraction(deg_d, 12**3 * D)
    results = []
    for P in points:
        if multiply(E_work, 12, P).is_infinity:
            results.append((P, None, None))
            continue
        h = global_height(E, P, ext).global_height
        results.append((P, h, h >= bound))
    return IsotrivialReport(deg_d, D, bound, deg_d == 0, tuple(results))
