from fractions import Fraction

import pytest
from hypothesis import given

from archtrop import (
    DimensionMismatch,
    EmptyPolynomial,
    ModelMismatch,
    PolynomialSyntaxError,
    format_laurent,
    parse_laurent,
)
from archtrop.polynomial import LOGPOLAR, RationalComplex

from conftest import EX12, laurent_polys


@given(laurent_polys())
def test_round_trip(f):
    assert parse_laurent(format_laurent(f), f.n) == f


@pytest.mark.parametrize(
    "text, n, t",
    [
        (EX12, 2, 4),
        ("x1^2 - x1 - 1", 1, 3),
        ("x^2 + 2*x + 1", 1, 3),
        ("x1^-3 + x1^(-1)*x2", 2, 2),
        ("x1*x2 - x1^2 - 1/16^6", 2, 3),
        ("x3 - 1 - x1^2/16^18", 3, 3),
        ("(1/2+3/4i)*x1 + 2", 1, 2),
        ("2^10*x1 - 10^3", 1, 2),
    ],
)
def test_accepts(text, n, t):
    f = parse_laurent(text)
    assert (f.n, f.t) == (n, t)


def test_coefficients_are_exact():
    f = parse_laurent("x1*x2 - x1^2 - 1/16^6")
    assert dict(zip(f.support, f.coefficients))[(0, 0)] == RationalComplex(Fraction(-1, 16**6))
    g = parse_laurent("(1/2-3i)*x1")
    assert g.coefficients[0] == RationalComplex(Fraction(1, 2), Fraction(-3))


def test_duplicates_merge_and_cancel():
    assert parse_laurent("x1 + 2*x1 - 1").t == 2
    with pytest.raises(EmptyPolynomial):
        parse_laurent("x1 - x1")


def test_log_polar_coefficients():
    f = parse_laurent("exp(2, 1/2)*x1 + exp(-1)")
    assert f.model == LOGPOLAR
    with pytest.raises(ModelMismatch):
        parse_laurent("exp(1)*x1 + 2")


@pytest.mark.parametrize("text", ["", "x1 +", "x1^", "3**x1", "x1^1.5", "(1+2)*x1", "y1", "x0"])
def test_rejects(text):
    with pytest.raises((PolynomialSyntaxError, DimensionMismatch)):
        parse_laurent(text)


def test_declared_dimension():
    assert parse_laurent("x1 + 1", 3).n == 3
    with pytest.raises(DimensionMismatch):
        parse_laurent("x3 + 1", 2)


def test_syntax_error_reports_offset():
    with pytest.raises(PolynomialSyntaxError) as info:
        parse_laurent("1 + x1 + ")
    assert info.value.position is not None
