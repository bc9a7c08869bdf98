"""Shared fixtures and helpers for the test suite."""

from __future__ import annotations

from fractions import Fraction

import pytest

from ffheights.funcfield import ConstantField, Place, Polynomial, parse_rational_function


@pytest.fixture(scope="session")
def f5() -> ConstantField:
    return ConstantField(5)


def rf(expr: str, var: str = "t", p: int = 5):
    return parse_rational_function(expr, var, ConstantField(p))


def finite_place(expr: str, var: str = "t", p: int = 5) -> Place:
    poly = rf(expr, var, p)
    assert poly.den.is_one()
    return Place("finite", poly.num.monic())


INFINITE = Place("infinite")


def F(a, b=1) -> Fraction:
    return Fraction(a, b)
