import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tlh.poly import A, ONE, ONE_MINUS_Q, Q, FracPoly, Polynomial, monomial
from tlh.serialize import ParseError, dumps, parse_frac, parse_poly

from test_poly import fracs, polys


def test_simple_text():
    assert dumps(ONE + A) == "1 + a"
    assert parse_poly("1 + a") == ONE + A
    assert parse_poly("q^(1/2)") == monomial(1, q=Fraction(1, 2))
    assert parse_poly("0") == Polynomial()
    assert dumps(Polynomial()) == "0"


def test_text_accepts_leading_minus_and_spacing():
    assert parse_poly("-q") == -Q
    assert parse_poly("- q + 2a") == -Q + 2 * A
    assert parse_poly("3 q^2 a t^(-3/4)") == monomial(3, q=2, a=1, t=Fraction(-3, 4))
    assert parse_poly("q q") == Q * Q


def test_parse_errors_carry_position():
    for bad in ["", "q +", "q ^", "q^(1/3)", "x + 1", "1 + + 2"]:
        with pytest.raises(ParseError) as err:
            parse_poly(bad)
        assert err.value.position >= 0


def test_json_schema():
    p = monomial(2, q=1) + monomial(-1, a=Fraction(1, 2))
    obj = json.loads(dumps(p, "json"))
    assert obj["exponent_unit"] == "1/4"
    assert obj["variables"] == ["q", "a", "t"]
    assert obj["terms"] == [
        {"coeff": "-1", "exp": [0, 2, 0]},
        {"coeff": "2", "exp": [4, 0, 0]},
    ]


def test_json_frac_schema():
    f = FracPoly(ONE + A, [ONE_MINUS_Q, ONE_MINUS_Q])
    obj = json.loads(dumps(f, "json"))
    assert obj["den"] == [
        {"lead": [0, 0, 0], "trail": [4, 0, 0]},
        {"lead": [0, 0, 0], "trail": [4, 0, 0]},
    ]
    assert parse_frac(dumps(f, "json")) == f


def test_json_rejects_bad_input():
    with pytest.raises(ParseError):
        parse_poly("{", "json")
    with pytest.raises(ParseError):
        parse_poly(json.dumps({"exponent_unit": "1/2", "variables": ["q", "a", "t"], "terms": []}), "json")
    frac = json.loads(dumps(FracPoly(ONE, [ONE_MINUS_Q]), "json"))
    with pytest.raises(ParseError):
        parse_poly(json.dumps(frac), "json")


def test_latex_output():
    assert dumps(Q ** 3 + Q ** 5 - Q ** 8, "latex") == "q^{3} + q^{5} - q^{8}"
    assert dumps(monomial(1, t=Fraction(-3, 2)), "latex") == "t^{-3/2}"
    f = FracPoly(ONE + A, [ONE_MINUS_Q])
    assert dumps(f, "latex") == "\\frac{1 + a}{(1 - q)}"


def test_three_strand_poly_round_trips_all_formats():
    from tlh.shuffle import poincare_poly

    p = poincare_poly("000")
    assert parse_poly(dumps(p, "text")) == p
    assert parse_poly(dumps(p, "json"), "json") == p
    dumps(p, "latex")  # write-only, must not raise


def test_big_coefficients_round_trip():
    p = monomial(10 ** 40, q=1) - monomial(7 ** 30, t=2)
    assert parse_poly(dumps(p)) == p
    assert parse_poly(dumps(p, "json"), "json") == p


@settings(max_examples=200)
@given(polys())
def test_poly_round_trip(p):
    assert parse_poly(dumps(p, "text")) == p
    assert parse_poly(dumps(p, "json"), "json") == p
    # canonical form is a fixed point
    assert dumps(parse_poly(dumps(p, "text")), "text") == dumps(p, "text")


@settings(max_examples=150)
@given(fracs())
def test_frac_json_round_trip(f):
    assert parse_frac(dumps(f, "json")) == f
    assert dumps(parse_frac(dumps(f, "json")), "json") == dumps(f, "json")
