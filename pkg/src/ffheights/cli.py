"""Command-line front end: parse curve/point JSON, dispatch, report.

Exit codes: 0 success, 1 a mathematical check failed (a bound was
violated), 2 input error.  Exact rationals serialize as "p/q" strings;
floating values appear only in optimizer output and carry an
"approx": true marker.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import fibers, lehmer
from .elliptic import INFINITY, CurveModel, CurvePoint, new_curve
from .funcfield import (
    ConstantField,
    ExtensionMap,
    ParseError,
    Place,
    Polynomial,
    parse_rational_function,
)
from .heights import global_height, local_height, local_height_intersection, local_height_multiply_in
from .reduction import analyze_row, localize


class InputError(ValueError):
    """Malformed or inconsistent input files/arguments."""


def frac(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational {text!r}: {exc}") from exc


# ---------------------------------------------------------------------------
# input files
# ---------------------------------------------------------------------------


@dataclass
class CurveInput:
    curve: CurveModel
    ext: ExtensionMap | None
    general_form: bool  # points are given on the (a1..a6) model
    var: str
    field: ConstantField


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def load_curve(path: str) -> CurveInput:
    data = _load_json(path)
    try:
        p = int(data["field"]["p"])
        var = data.get("var", "t")
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad curve file {path}: {exc}") from exc
    try:
        k = ConstantField(p)
    except ValueError as exc:
        raise InputError(str(exc)) from exc

    def rf(text):
        try:
            return parse_rational_function(str(text), var, k)
        except ParseError as exc:
            raise InputError(f"bad expression {text!r}: {exc}") from exc

    try:
        if "a" in data:
            a = data["a"]
            if len(a) != 5:
                raise InputError("'a' must list a1, a2, a3, a4, a6")
            curve = new_curve(a_invariants=tuple(rf(x) for x in a))
            general = True
        else:
            curve = new_curve(A=rf(data["A"]), B=rf(data["B"]))
            general = False
    except (KeyError, ValueError) as exc:
        raise InputError(f"bad curve file {path}: {exc}") from exc
    ext = None
    if "extension" in data:
        ext_data = data["extension"]
        ext_var = ext_data.get("var", "s")
        try:
            phi = parse_rational_function(str(ext_data["phi"]), ext_var, k)
            ext = ExtensionMap(phi)
        except (KeyError, ParseError, ValueError) as exc:
            raise InputError(f"bad extension in {path}: {exc}") from exc
    return CurveInput(curve, ext, general, var, k)


def parse_point(obj, ci: CurveInput) -> CurvePoint:
    if obj == "infinity":
        return INFINITY
    try:
        x_text, y_text = obj["x"], obj["y"]
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad point {obj!r}: {exc}") from exc
    var = ci.ext.var if ci.ext is not None else ci.var
    try:
        x = parse_rational_function(str(x_text), var, ci.field)
        y = parse_rational_function(str(y_text), var, ci.field)
    except ParseError as exc:
        raise InputError(f"bad point {obj!r}: {exc}") from exc
    if ci.ext is not None and ci.general_form:
        raise InputError("points over an extension must use the short (A, B) form")
    if ci.general_form:
        x, y = ci.curve.to_short(x, y)
    P = CurvePoint(x, y)
    curve = ci.curve
    from .elliptic import pullback_curve

    check_curve = pullback_curve(curve, ci.ext) if ci.ext is not None else curve
    if not check_curve.on_curve(P):
        raise InputError(f"point {obj!r} is not on the curve")
    return P


def load_points(path: str, ci: CurveInput) -> list[CurvePoint]:
    data = _load_json(path)
    if isinstance(data, dict) or isinstance(data, str):
        data = [data]
    return [parse_point(obj, ci) for obj in data]


def parse_place(obj, ci: CurveInput) -> Place:
    try:
        kind = obj["kind"]
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad place {obj!r}: {exc}") from exc
    if kind == "infinite":
        return Place("infinite")
    if kind != "finite":
        raise InputError(f"unknown place kind {kind!r}")
    var = ci.ext.var if ci.ext is not None else ci.var
    try:
        poly_rf = parse_rational_function(str(obj["poly"]), var, ci.field)
    except (KeyError, ParseError) as exc:
        raise InputError(f"bad place {obj!r}: {exc}") from exc
    if not poly_rf.den.is_one():
        raise InputError("place polynomial must be a polynomial")
    try:
        return Place("finite", poly_rf.num.monic())
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def load_places(path: str, ci: CurveInput) -> list[Place]:
    data = _load_json(path)
    if isinstance(data, dict):
        data = [data]
    return [parse_place(obj, ci) for obj in data]


# ---------------------------------------------------------------------------
# job dispatch
# ---------------------------------------------------------------------------


@dataclass
class JobSpec:
    command: str
    inputs: list = field(default_factory=list)
    options: dict = field(default_factory=dict)
    json_output: bool = False


def _emit(job: JobSpec, payload: dict, text_lines) -> None:
    if job.json_output:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _working_curve(ci: CurveInput) -> CurveModel:
    from .elliptic import pullback_curve

    return pullback_curve(ci.curve, ci.ext) if ci.ext is not None else ci.curve


def _cmd_analyze(job: JobSpec) -> int:
    ci = load_curve(job.inputs[0])
    seed = job.options.get("seed", 0)
    E = _working_curve(ci)
    from .heights import contributing_places
    from .funcfield import place_below

    rows = []
    for w in contributing_places(E, INFINITY, seed=seed):
        ld = localize(E, w)
        e = place_below(w, ci.ext, tvar=ci.var, seed=seed).e if ci.ext else 1
        rows.append(analyze_row(ld, e))
    payload = {"places": rows}
    lines = [
        f"{r['place']}: type {r['type']}, deg {r['degree']}, e {r['e']}, "
        f"v(Delta) {r['v_delta']}, v(c4) {r['v_c4']}, J_w {r['J_w']}, "
        f"component group order {r['component_group']['order']} "
        f"exponent {r['component_group']['exponent']}"
        for r in rows
    ]
    _emit(job, payload, lines)
    return 0


def _cmd_height(job: JobSpec) -> int:
    ci = load_curve(job.inputs[0])
    seed = job.options.get("seed", 0)
    points = load_points(job.inputs[1], ci)
    if len(points) != 1:
        raise InputError("height expects exactly one point")
    report = global_height(ci.curve, points[0], ci.ext, seed=seed)
    payload = {
        "hhat": frac(report.global_height),
        "isotrivial": report.isotrivial,
        "extension_degree": report.extension_degree,
        "ledger": [
            {
                "place": str(entry.place),
                "degree": entry.degree,
                "e": entry.e,
                "lambda": frac(entry.local.value),
                "method": entry.local.method,
            }
            for entry in report.ledger
        ],
    }
    lines = [f"hhat = {frac(report.global_height)}"]
    for entry in report.ledger:
        lines.append(
            f"  {entry.place}: lambda = {frac(entry.local.value)} "
            f"(deg {entry.degree}, e {entry.e}, {entry.local.method})"
        )
    _emit(job, payload, lines)
    return 0


def _cmd_local_heights(job: JobSpec) -> int:
    ci = load_curve(job.inputs[0])
    points = load_points(job.inputs[1], ci)
    if len(points) != 1:
        raise InputError("local-heights expects exactly one point")
    P = points[0]
    if P.is_infinity:
        raise InputError("local heights need an affine point")
    places = load_places(job.inputs[2], ci)
    E = _working_curve(ci)
    rows = []
    for w in places:
        ld = localize(E, w)
        closed = local_height(E, w, P, ld)
        row = {"place": str(w), "closed_form": frac(closed.value)}
        other = local_height_multiply_in(E, w, P, ld)
        if other is not None:
            row["multiply_in"] = frac(other.value)
        corr = local_height_intersection(E, w, P, ld)
        if corr is not None:
            row["intersection_correction"] = frac(corr.value)
        rows.append(row)
    lines = []
    for row in rows:
        extras = ", ".join(
            f"{k} {v}" for k, v in row.items() if k not in ("place", "closed_form")
        )
        lines.append(f"{row['place']}: lambda = {row['closed_form']}" + (f" ({extras})" if extras else ""))
    _emit(job, {"local_heights": rows}, lines)
    return 0


_FIBER_KINDS = {
    "I": "I",
    "II": "II",
    "III": "III",
    "IV": "IV",
    "IStar": "I*",
    "IVStar": "IV*",
    "IIIStar": "III*",
    "IIStar": "II*",
}


def _cmd_fiber_table(job: JobSpec) -> int:
    kind_name = job.options["type"]
    if kind_name not in _FIBER_KINDS:
        raise InputError(f"unknown fiber type {kind_name!r}")
    n = job.options.get("N") if kind_name == "I" else job.options.get("M")
    try:
        g = fibers.build_fiber(_FIBER_KINDS[kind_name], n or 0)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    payload = {
        "name": g.name,
        "labels": list(g.labels),
        "multiplicities": list(g.multiplicities),
        "matrix": [list(row) for row in g.matrix],
    }
    lines = [f"fiber {g.name}", f"components: {', '.join(g.labels)}",
             f"kernel (multiplicities): {list(g.multiplicities)}", "A:"]
    for row in g.matrix:
        lines.append("  " + " ".join(f"{x:3d}" for x in row))
    if len(g.labels) > 1:
        inverse, det = fibers.reduced_inverse(g)
        table = fibers.correction_table(g)
        payload["det_reduced"] = frac(det)
        payload["reduced_inverse"] = [[frac(x) for x in row] for row in inverse]
        payload["corrections"] = {k: frac(v) for k, v in table.corrections.items()}
        lines.append(f"det(A_red) = {frac(det)}")
        lines.append("A_red^-1:")
        for row in inverse:
            lines.append("  " + " ".join(frac(x) for x in row))
        lines.append("corrections (1/2 diagonal):")
        for k, v in table.corrections.items():
            lines.append(f"  {k}: {frac(v)}")
    _emit(job, payload, lines)
    return 0


def _cmd_lehmer_check(job: JobSpec) -> int:
    ci = load_curve(job.inputs[0])
    points = load_points(job.inputs[1], ci)
    if ci.curve.is_isotrivial:
        report = lehmer.isotrivial_bound_check(ci.curve, ci.ext, points)
        payload = {
            "isotrivial": True,
            "deg_discriminant": report.deg_discriminant,
            "D": report.D,
            "bound": frac(report.bound),
            "split": report.split,
            "points": [
                {
                    "hhat": None if h is None else frac(h),
                    "twelve_torsion": h is None,
                    "passes": p,
                }
                for _, h, p in report.results
            ],
            "all_pass": report.all_pass,
        }
        lines = [
            f"isotrivial curve: deg(D) = {report.deg_discriminant}, "
            f"bound = {frac(report.bound)}, split = {report.split}",
        ]
        for _, h, p in report.results:
            if h is None:
                lines.append("  point: 12-torsion, excluded")
            else:
                lines.append(f"  point: hhat = {frac(h)}, passes = {p}")
        _emit(job, payload, lines)
        return 0 if report.all_pass else 1
    report = lehmer.theorem1_bound(ci.curve, ci.ext, points)
    payload = {
        "isotrivial": False,
        "h_j": frac(report.h_j),
        "D": report.D,
        "bound": frac(report.bound),
        "large_regime": report.large_regime,
        "large_bound": frac(report.large_bound),
        "points": [
            {
                "hhat": frac(r.hhat),
                "torsion": r.torsion,
                "passes": r.passes,
            }
            for r in report.results
        ],
        "all_pass": report.all_pass,
    }
    lines = [
        f"h(j) = {frac(report.h_j)}, D = {report.D}, bound = {frac(report.bound)}"
    ]
    for r in report.results:
        if r.torsion:
            lines.append(f"  {r.point}: torsion, excluded")
        else:
            lines.append(f"  {r.point}: hhat = {frac(r.hhat)}, passes = {r.passes}")
    _emit(job, payload, lines)
    return 0 if report.all_pass else 1


def _cmd_optimize_constant(job: JobSpec) -> int:
    J = job.options.get("J", 1.0)
    D = job.options.get("D", 1.0)
    grid = job.options.get("grid", 1000)
    delta, eps, value = lehmer.optimize_constant_grid(J, D, grid)
    payload = {
        "approx": True,
        "delta": delta,
        "eps": eps,
        "max": value,
        "inverse": 1.0 / value,
        "grid": grid,
        "J": J,
        "D": D,
    }
    lines = [
        f"max C4 = {value:.6e} (1/{1.0 / value:.1f}) at delta = {delta}, "
        f"eps = {eps} [approx]"
    ]
    _emit(job, payload, lines)
    return 0


def _cmd_count_small(job: JobSpec) -> int:
    ci = load_curve(job.inputs[0])
    generators = load_points(job.inputs[1], ci)
    bound = parse_fraction(job.options["B"])
    try:
        count = lehmer.sigma_count(ci.curve, generators, bound, ci.ext)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    payload = {"B": frac(bound), "count": count}
    _emit(job, payload, [f"count(hhat <= {frac(bound)}) = {count}"])
    return 0


def _cmd_inequality(job: JobSpec) -> int:
    alpha = parse_fraction(job.options["alpha"])
    beta = parse_fraction(job.options["beta"])
    try:
        e = tuple(parse_fraction(x) for x in job.options["e"].split(","))
        inst = lehmer.InequalityInstance(alpha, beta, e)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    lhs, rhs_cubed, holds = lehmer.inequality_check(inst)
    _, rhs_ref, holds_ref = lehmer.inequality_check(inst, refine=True)
    payload = {
        "alpha": frac(alpha),
        "beta": frac(beta),
        "e": [frac(x) for x in e],
        "r": inst.r,
        "lhs": frac(lhs),
        "rhs_cubed": frac(rhs_cubed),
        "holds": holds,
        "rhs_cubed_refined": frac(rhs_ref),
        "holds_refined": holds_ref,
    }
    lines = [
        f"lhs = {frac(lhs)}; lhs^3 vs 27/4 a^2 b sum(e): holds = {holds}",
        f"with the r/(r+1) factor: holds = {holds_ref}",
    ]
    _emit(job, payload, lines)
    return 0


_DISPATCH = {
    "analyze": _cmd_analyze,
    "height": _cmd_height,
    "local-heights": _cmd_local_heights,
    "fiber-table": _cmd_fiber_table,
    "lehmer-check": _cmd_lehmer_check,
    "optimize-constant": _cmd_optimize_constant,
    "count-small": _cmd_count_small,
    "inequality": _cmd_inequality,
}


def run(job: JobSpec) -> int:
    return _DISPATCH[job.command](job)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ffheights",
        description="Exact canonical heights on elliptic curves over F_p(t).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="emit JSON")
        sp.add_argument("--seed", type=int, default=0, help="factorization seed")

    sp = sub.add_parser("analyze", help="per-place reduction table")
    sp.add_argument("curve")
    common(sp)

    sp = sub.add_parser("height", help="canonical height with ledger")
    sp.add_argument("curve")
    sp.add_argument("point")
    common(sp)

    sp = sub.add_parser("local-heights", help="local heights at given places")
    sp.add_argument("curve")
    sp.add_argument("point")
    sp.add_argument("places")
    common(sp)

    sp = sub.add_parser("fiber-table", help="intersection matrix data")
    sp.add_argument("--type", required=True, choices=sorted(_FIBER_KINDS))
    sp.add_argument("--N", type=int)
    sp.add_argument("--M", type=int)
    common(sp)

    sp = sub.add_parser("lehmer-check", help="height lower-bound report")
    sp.add_argument("curve")
    sp.add_argument("points")
    common(sp)

    sp = sub.add_parser("optimize-constant", help="grid search of the constant")
    sp.add_argument("--grid", type=int, default=1000)
    sp.add_argument("--J", type=float, default=1.0)
    sp.add_argument("--D", type=float, default=1.0)
    common(sp)

    sp = sub.add_parser("count-small", help="count subgroup points under a height cutoff")
    sp.add_argument("curve")
    sp.add_argument("points")
    sp.add_argument("--B", required=True, help="exact cutoff p/q")
    common(sp)

    sp = sub.add_parser("inequality", help="check the three-term inequality")
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--beta", required=True)
    sp.add_argument("--e", required=True, help="comma-separated values, e0 first")
    common(sp)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    options = {
        k: v
        for k, v in vars(args).items()
        if k not in ("command", "json", "curve", "point", "points", "places")
        and v is not None
    }
    inputs = [
        getattr(args, name)
        for name in ("curve", "point", "points", "places")
        if hasattr(args, name)
    ]
    job = JobSpec(args.command, inputs, options, args.json)
    try:
        return run(job)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
