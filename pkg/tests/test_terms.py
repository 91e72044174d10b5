from fractions import Fraction

import pytest
import sympy

from bexponents.errors import UnsupportedBaseShape
from bexponents.polyring import MPoly, ParamCoef
from bexponents.residues.families import factor_axis
from bexponents.residues.terms import derivative_terms, terms_to_mpoly_at

X, Y = sympy.symbols("x y")


def taylor_oracle(expr, alpha, nu, var, other, z):
    d = sympy.diff(expr ** alpha, var, nu).subs(var, 0) / sympy.factorial(nu)
    return float(d.subs(other, z))


@pytest.mark.parametrize("alpha", [Fraction(-5, 3), Fraction(7, 4), Fraction(-39, 94)])
@pytest.mark.parametrize("nu", [0, 1, 2, 4])
def test_derivative_terms_x_axis(alpha, nu):
    poly = MPoly({(0, 0): 1, (0, 3): 4, (0, 6): 4, (1, 1): 3, (2, 4): 1, (3, 0): Fraction(-1, 2)})
    expr = (1 + 2 * Y ** 3) ** 2 + 3 * X * Y + X ** 2 * Y ** 4 - X ** 3 / 2
    terms = derivative_terms(poly, alpha, nu, "x")
    a = sympy.Rational(alpha.numerator, alpha.denominator)
    for z in (0.3, 0.8):
        assert terms_to_mpoly_at(terms, z) == pytest.approx(
            taylor_oracle(expr, a, nu, X, Y, z), rel=1e-10, abs=1e-12)


def test_derivative_terms_y_axis_with_parameter():
    t = ParamCoef.param(0)
    poly = MPoly({(0, 0): 3, (2, 0): 1, (1, 1): t, (0, 2): 2})
    expr = 3 + X ** 2 + sympy.Rational(5, 2) * X * Y + 2 * Y ** 2
    terms = derivative_terms(poly, Fraction(-1, 2), 3, "y")
    for z in (0.25, 0.9):
        got = terms_to_mpoly_at(terms, z, {0: Fraction(5, 2)})
        assert got == pytest.approx(taylor_oracle(expr, sympy.Rational(-1, 2), 3, Y, X, z),
                                    rel=1e-10)


def test_factor_axis():
    base = factor_axis(MPoly({(0, 0): 1, (0, 3): 4, (0, 6): 4, (1, 1): 3}), "x")
    assert (base.c0, base.c1, base.p, base.e) == (1, 2, 3, 2)
    with pytest.raises(UnsupportedBaseShape):
        factor_axis(MPoly({(0, 0): 1, (0, 1): 1, (0, 3): 1}), "x")
    with pytest.raises(UnsupportedBaseShape):
        factor_axis(MPoly({(0, 0): 1, (0, 2): -1}), "x")
