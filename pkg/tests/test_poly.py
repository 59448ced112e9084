from fractions import Fraction

import pytest

from singular_lct import BivariatePolynomial, ParseError

P = BivariatePolynomial.parse


def test_parse_basic():
    f = P("(x^3 - y^2)^2 - x^5*y")
    assert f.terms == {
        (6, 0): Fraction(1),
        (3, 2): Fraction(-2),
        (0, 4): Fraction(1),
        (5, 1): Fraction(-1),
    }


def test_parse_implicit_multiplication():
    assert P("x^5y") == P("x^5 * y")
    assert P("2x") == P("2*x")
    assert P("3(x+y)") == P("3*x + 3*y")


def test_parse_rational_coefficients():
    f = P("1/2*x + 3/4")
    assert f.coefficient(1, 0) == Fraction(1, 2)
    assert f.coefficient(0, 0) == Fraction(3, 4)


def test_parse_unary_minus_and_nesting():
    assert P("-x + x") == P("0")
    assert P("-(x - y)") == P("y - x")


@pytest.mark.parametrize("bad", ["x +", "x^", "(x", "x**2", "z", "1/0"])
def test_parse_errors_carry_position(bad):
    with pytest.raises(ParseError) as err:
        P(bad)
    assert "^" in str(err.value)  # caret diagnostic


def test_print_parse_roundtrip():
    for text in ["x^5 - y^7", "(x^3 - y^2)^2 - x^5*y", "x*y", "1/3*x^2*y - y"]:
        f = P(text)
        assert P(str(f)) == f


def test_multiplicity_and_leading_form():
    f = P("(x^3 - y^2)^2 - x^5*y")
    assert f.multiplicity() == 4
    assert f.leading_form() == P("y^4")
    assert P("x*y").multiplicity() == 2
    assert P("x + y^2").multiplicity() == 1


def test_blowup_charts_are_exact():
    f = P("y^2 - x^3")
    assert f.blowup_x_chart() == P("y^2 - x")  # f(x, xy) / x^2
    assert f.blowup_y_chart() == P("1 - x^3*y")  # f(xy, y) / y^2

    g = P("x^2 - y^3")
    assert g.blowup_y_chart() == P("x^2 - y")


def test_shift_recenters():
    f = P("y^2 - x")
    g = f.shift_y(Fraction(3))
    assert g == P("y^2 + 6*y + 9 - x")
    assert g.evaluate(0, -3) == f.evaluate(0, 0)


def test_arithmetic():
    f, g = P("x + y"), P("x - y")
    assert f * g == P("x^2 - y^2")
    assert (f + g) == P("2*x")
    assert f**3 == P("x^3 + 3*x^2*y + 3*x*y^2 + y^3")
