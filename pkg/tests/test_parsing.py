"""Grammar, error reporting, and canonical round-trip printing."""

import random
from fractions import Fraction

import pytest

from conftest import random_poly
from screwinv.parsing import ParseError, UnknownVariableError, format_poly, parse
from screwinv.poly import Polynomial, TermOrder, VariableSet
from screwinv.screw import screw_varset


@pytest.fixture
def vs1():
    return screw_varset(1)


def test_klein_form(vs1):
    f = parse("w11*v11 + w12*v12 + w13*v13", vs1)
    assert len(f) == 3
    assert f.coefficient(parse("w12*v12", vs1).leading_monomial()) == 1


def test_zero_literal(vs1):
    assert parse("0", vs1).is_zero()


def test_cancellation(vs1):
    assert parse("3/2*w11^2 - 3/2*w11^2", vs1).is_zero()


def test_coefficients_and_exponents(vs1):
    f = parse("2*w11^3 - 1/2*v11 + 7", vs1)
    assert f.coefficient((3, 0, 0, 0, 0, 0)) == 2
    assert f.coefficient((0, 0, 0, 1, 0, 0)) == Fraction(-1, 2)
    assert f.coefficient(vs1.unit()) == 7


def test_leading_sign_and_whitespace(vs1):
    assert parse(" - w11 +  w12 ", vs1) == parse("w12 - w11", vs1)
    assert parse("+w11", vs1) == parse("w11", vs1)


def test_exponent_zero_is_unit(vs1):
    assert parse("w11^0", vs1) == parse("1", vs1)


def test_syntax_error_has_position(vs1):
    with pytest.raises(ParseError) as exc:
        parse("w11 + * w12", vs1)
    assert exc.value.position == 6


def test_unknown_variable(vs1):
    with pytest.raises(UnknownVariableError) as exc:
        parse("w11 + bogus", vs1)
    assert exc.value.name == "bogus"
    assert exc.value.position == 6


def test_zero_denominator(vs1):
    with pytest.raises(ParseError):
        parse("1/0", vs1)


def test_trailing_garbage(vs1):
    with pytest.raises(ParseError):
        parse("w11 w12", vs1)
    with pytest.raises(ParseError):
        parse("w11 $ w12", vs1)


def test_number_after_star_rejected(vs1):
    # the grammar allows a coefficient only at the head of a term
    with pytest.raises(ParseError):
        parse("2*3", vs1)
    with pytest.raises(ParseError):
        parse("w11*2", vs1)


def test_format_zero(vs1):
    assert format_poly(Polynomial.zero(vs1)) == "0"


def test_format_klein_canonical(vs1):
    f = parse("w13*v13 + w11*v11 + w12*v12", vs1)
    assert format_poly(f) == "w11*v11 + w12*v12 + w13*v13"


def test_format_suppresses_unit_coefficients(vs1):
    assert format_poly(parse("1*w11", vs1)) == "w11"
    assert format_poly(parse("0 - w11", vs1)) == "-w11"
    assert format_poly(parse("7", vs1)) == "7"
    assert format_poly(parse("0 - 1", vs1)) == "-1"
    assert format_poly(parse("3/2*w11^2 - v11", vs1)) == "3/2*w11^2 - v11"


def test_format_respects_order():
    vs = VariableSet(["x", "y"])
    f = parse("x + y", vs)
    assert format_poly(f) == "x + y"
    assert format_poly(f, TermOrder(vs, ["y", "x"])) == "y + x"


def test_round_trip_fuzz():
    vs = VariableSet(["t1", "w11", "w12", "v11", "v12"])
    rng = random.Random(0xBEEF)
    for _ in range(1000):
        f = random_poly(rng, vs, max_terms=6, max_deg=4)
        assert parse(format_poly(f), vs) == f


def test_format_deterministic(vs1):
    f = parse("w11*v11 - 2*w12 + 1/3", vs1)
    assert format_poly(f) == format_poly(parse(format_poly(f), vs1))
