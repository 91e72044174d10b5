from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from bexponents.errors import NotDivisible
from bexponents.polyring import H, MPoly, ParamCoef, binomial_poly

X, Y, T1, T2 = sympy.symbols("x y t1 t2")

small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
coefs = st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)), small_fracs,
                        max_size=3).map(ParamCoef)
polys = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), coefs,
                        max_size=5).map(MPoly)


def coef_expr(c):
    return sum((sympy.Rational(v.numerator, v.denominator)
                * T1 ** (k[0] if len(k) > 0 else 0) * T2 ** (k[1] if len(k) > 1 else 0)
                for k, v in c.terms.items()), sympy.Integer(0))


def to_sympy(p):
    return sympy.expand(sum((coef_expr(c) * X ** i * Y ** j for (i, j), c in p.terms.items()),
                            sympy.Integer(0)))


@settings(max_examples=80, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == MPoly()
    assert a * MPoly.const(1) == a


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_product_matches_sympy(a, b):
    assert sympy.expand(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0
    assert sympy.expand(to_sympy(a ** 2) - to_sympy(a) ** 2) == 0


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_leibniz_and_commuting_partials(a, b):
    for var in ("x", "y"):
        assert (a * b).diff(var) == a.diff(var) * b + a * b.diff(var)
    assert a.diff("x").diff("y") == a.diff("y").diff("x")
    assert a.diff("x", 2) == a.diff("x").diff("x")


@settings(max_examples=40, deadline=None)
@given(polys, polys, polys)
def test_substitution_matches_sympy(a, u, v):
    got = to_sympy(a.substitute(x=u, y=v))
    want = to_sympy(a).subs({X: to_sympy(u), Y: to_sympy(v)}, simultaneous=True)
    assert sympy.expand(got - want) == 0


@settings(max_examples=60, deadline=None)
@given(coefs, coefs, small_fracs)
def test_param_coef_substitution(c, d, val):
    prod = (c * d).substitute({0: val})
    assert prod == c.substitute({0: val}) * d.substitute({0: val})
    assert sympy.expand(coef_expr(c * d) - coef_expr(c) * coef_expr(d)) == 0


def test_param_coef_basics():
    t = ParamCoef.param(0)
    c = 136 * t - 63
    assert c.render() == "136*t1 - 63"
    assert c.render(["t"]) == "136*t - 63"
    assert c.degree_in(0) == 1
    assert c.coefficient_in(0, 1) == 136 and c.coefficient_in(0, 0) == -63
    assert c.substitute({0: Fraction(63, 136)}).is_zero()
    assert c.evaluate([1]) == 73
    with pytest.raises(ValueError):
        c.constant_value()


def test_binomials_and_H():
    p = binomial_poly(5)
    assert to_sympy(p) == sympy.expand((1 - Y) ** 5)
    assert to_sympy(binomial_poly(3, "x", 1)) == sympy.expand((1 + X) ** 3)
    assert sympy.expand(Y * to_sympy(H(4)) - (1 - (1 - Y) ** 4)) == 0


def test_monomial_divide_and_axis():
    p = MPoly({(2, 3): 1, (3, 1): 2})
    assert p.monomial_divide(2, 1) == MPoly({(0, 2): 1, (1, 0): 2})
    with pytest.raises(NotDivisible):
        p.monomial_divide(0, 2)
    q = MPoly({(0, 2): 5, (1, 1): 1, (3, 0): 7})
    assert q.axis_eval("x") == MPoly({(0, 2): 5})
    assert q.coefficient("x", 1) == MPoly({(0, 1): 1})
    assert q.degree("x") == 3 and q.degree("y") == 2
    assert q.evaluate(1.0, 2.0) == 29.0


def test_render():
    t = ParamCoef.param(0)
    p = MPoly({(8, 0): 1, (4, 5): -2, (0, 10): 1, (6, 6): t})
    assert p.render(["t"]) == "t*x^6*y^6 + y^10 - 2*x^4*y^5 + x^8"
