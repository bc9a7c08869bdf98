"""Exact canonical heights on elliptic curves over rational function fields.

The package computes, with exact rational arithmetic over F_p(t) (p >= 5):
per-place Kodaira reduction data, local and global canonical heights,
fiber intersection matrices with their height corrections, and the
Lehmer-type lower/counting bound machinery, with a JSON batch CLI.
"""

from .elliptic import CurveModel, CurvePoint, INFINITY, add, multiply, negate, new_curve
from .funcfield import (
    ConstantField,
    ExtensionMap,
    Place,
    Polynomial,
    RationalFunction,
    parse_rational_function,
)
from .heights import global_height, height_limit_oracle, height_pairing, is_torsion, local_height
from .kernels import BACKEND
from .reduction import KodairaType, LocalData, localize

__all__ = [
    "BACKEND",
    "ConstantField",
    "CurveModel",
    "CurvePoint",
    "ExtensionMap",
    "INFINITY",
    "KodairaType",
    "LocalData",
    "Place",
    "Polynomial",
    "RationalFunction",
    "add",
    "global_height",
    "height_limit_oracle",
    "height_pairing",
    "is_torsion",
    "local_height",
    "localize",
    "multiply",
    "negate",
    "new_curve",
    "parse_rational_function",
]

__version__ = "0.1.0"
