"""Deformation families of plus and minus type and their chart pipelines.

Plus:  f = (x^n1 + y^m + h1)^n2 + x^a y^b + h2, with h2 a sum of monomials.
Minus: f = g^n2 + x^a y^b + sum c (x^n1 - y^m)^l x^a' y^b', g = x^n1 - y^m.

Parameters are named; a coefficient may be a rational, a parameter name or
a ParamCoef in the family's parameters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import BadAB, BadExtraTerm, BadSupport, UnsupportedBaseShape
from ..exact import parse_rational, rational_power
from ..invariants import CharSeq
from ..polyring import MPoly, ParamCoef, binomial_poly


def solve_ab(cs: CharSeq):
    """Non-negative (a, b) with a*m + b*n1 = D and the smallest a."""
    from ..errors import NoSolution
    for a in range(cs.D // cs.m + 1):
        rest = cs.D - a * cs.m
        if rest % cs.n1 == 0:
            return a, rest // cs.n1
    raise NoSolution(f"a*{cs.m} + b*{cs.n1} = {cs.D} has no solution")


def _coef(value, params):
    if isinstance(value, ParamCoef):
        return value
    if isinstance(value, str) and value in params:
        return ParamCoef.param(params.index(value))
    return ParamCoef.const(parse_rational(value))


@dataclass(frozen=True)
class AxisBase:
    """(c0 + c1 z^p)^e, the restriction of a chart function to an axis."""
    c0: Fraction
    c1: Fraction
    p: int
    e: int


def factor_axis(poly: MPoly, var: str) -> AxisBase:
    """Write poly(var = 0) as (c0 + c1 z^p)^e with c0, c1 > 0."""
    slice_ = poly.axis_eval(var)
    other = 1 if var == "x" else 0
    coeffs = {}
    for k, c in slice_.terms.items():
        if not c.is_constant():
            raise UnsupportedBaseShape(f"axis slice {slice_.render()} depends on parameters")
        coeffs[k[other]] = c.constant_value()
    if 0 not in coeffs or len(coeffs) < 2:
        raise UnsupportedBaseShape(f"axis slice {slice_.render()} is not a binomial power")
    exps = sorted(coeffs)
    p, top = exps[1], exps[-1]
    if top % p:
        raise UnsupportedBaseShape(f"axis slice {slice_.render()} is not a binomial power")
    e = top // p
    try:
        c0 = rational_power(coeffs[0], Fraction(1, e))
        c1 = rational_power(coeffs[top], Fraction(1, e))
    except Exception as exc:
        raise UnsupportedBaseShape(f"axis slice {slice_.render()}: {exc}") from None
    base = MPoly({(0, 0): c0, ((p, 0) if other == 0 else (0, p)): c1}) ** e
    if c0 <= 0 or c1 <= 0 or base != slice_:
        raise UnsupportedBaseShape(f"axis slice {slice_.render()} is not (c0 + c1 z^p)^e")
    return AxisBase(c0, c1, p, e)


@dataclass(frozen=True)
class PlusFamily:
    cs: CharSeq
    ab: tuple
    h1_terms: tuple
    h2_terms: tuple
    params: tuple
    f: MPoly = field(repr=False)
    f_tilde: MPoly = field(repr=False)
    f1: MPoly = field(repr=False)
    f2: MPoly = field(repr=False)
    base1: AxisBase = field(repr=False)
    base2: AxisBase = field(repr=False)

    sign = "+"


@dataclass(frozen=True)
class MinusFamily:
    cs: CharSeq
    ab: tuple
    extra_terms: tuple
    params: tuple
    f: MPoly = field(repr=False)
    f_tilde: MPoly = field(repr=False)
    f_tt: MPoly = field(repr=False)
    f_hat: MPoly = field(repr=False)
    f_hh: MPoly = field(repr=False)
    f1: MPoly = field(repr=False)
    f2: MPoly = field(repr=False)
    base1: AxisBase = field(repr=False)
    base2: AxisBase = field(repr=False)

    sign = "-"

    @property
    def nus(self):
        """nu attached to each extra term, in order."""
        return tuple(extra_term_nu(self.cs, ell, a, b) for ell, a, b, _ in self.extra_terms)


def _check_ab(cs: CharSeq, ab):
    if ab is None:
        return solve_ab(cs)
    a, b = ab
    if a < 0 or b < 0 or a * cs.m + b * cs.n1 != cs.D:
        raise BadAB(f"(a, b) = {tuple(ab)} violates a*m + b*n1 = {cs.D}")
    return int(a), int(b)


def build_plus_family(cs: CharSeq, h1_terms=(), ab=None, h2_terms=(), params=()):
    """Plus family; terms are (i, j, coef) triples."""
    params = tuple(params)
    n1, m, n2 = cs.n1, cs.m, cs.n2
    a, b = _check_ab(cs, ab)
    h1 = tuple((int(i), int(j), _coef(c, params)) for i, j, c in h1_terms)
    h2 = tuple((int(i), int(j), _coef(c, params)) for i, j, c in h2_terms)
    for i, j, _ in h1:
        if m * i + n1 * j <= m * n1:
            raise BadSupport(f"h1 term x^{i} y^{j} has m*i + n1*j <= {m * n1}")
    inner = MPoly({(n1, 0): 1, (0, m): 1})
    for i, j, c in h1:
        inner = inner + MPoly.monomial(i, j, c)
    head = inner ** n2 + MPoly.monomial(a, b)
    for i, j, c in h2:
        if (i, j) in head.terms:
            raise BadSupport(f"h2 term x^{i} y^{j} meets the support of the other terms")
    f = head
    for i, j, c in h2:
        f = f + MPoly.monomial(i, j, c)
    N = cs.N1
    ft = f.substitute(x=MPoly.monomial(m, 0), y=MPoly.monomial(0, n1))
    f1 = ft.substitute(y=MPoly.monomial(1, 1)).monomial_divide(deg_x=N)
    f2 = ft.substitute(x=MPoly.monomial(1, 1)).monomial_divide(deg_y=N)
    return PlusFamily(cs, (a, b), h1, h2, params, f, ft, f1, f2,
                      factor_axis(f1, "x"), factor_axis(f2, "y"))


def extra_term_nu(cs: CharSeq, ell: int, a: int, b: int) -> int:
    return cs.D * ell + (cs.m * a + cs.n1 * b) * cs.n2 - cs.D * cs.n2


def build_minus_family(cs: CharSeq, extra_terms=(), ab=None, params=()):
    """Minus family; extra terms are (ell, a, b, coef) tuples."""
    params = tuple(params)
    n1, m, n2, q = cs.n1, cs.m, cs.n2, cs.q
    a, b = _check_ab(cs, ab)
    extras = []
    for ell, ea, eb, c in extra_terms:
        ell, ea, eb = int(ell), int(ea), int(eb)
        nu = extra_term_nu(cs, ell, ea, eb)
        if not 0 <= ell < n2 or ea < 0 or eb < 0 or nu < 1:
            raise BadExtraTerm(
                f"term (l, a, b) = {(ell, ea, eb)} gives nu = {nu}; need 0 <= l < {n2}, nu >= 1")
        extras.append((ell, ea, eb, _coef(c, params)))
    g = MPoly({(n1, 0): 1, (0, m): -1})
    f = g ** n2 + MPoly.monomial(a, b)
    for ell, ea, eb, c in extras:
        f = f + g ** ell * MPoly.monomial(ea, eb, c)
    ft = f.substitute(x=MPoly.monomial(m, 0), y=MPoly.monomial(0, n1))
    ftt = ft.substitute(y=MPoly.monomial(1, 1)).monomial_divide(deg_x=cs.N1)
    fhat = ftt.substitute(y=binomial_poly(1))
    fhh = fhat.substitute(x=MPoly.monomial(n2, 0), y=MPoly.monomial(0, q))
    f1 = fhh.substitute(y=MPoly.monomial(1, 1)).monomial_divide(deg_x=n2 * q)
    f2 = fhh.substitute(x=MPoly.monomial(1, 1)).monomial_divide(deg_y=n2 * q)
    return MinusFamily(cs, (a, b), tuple(extras), params, f, ft, ftt, fhat, fhh, f1, f2,
                       factor_axis(f1, "x"), factor_axis(f2, "y"))


def positivity_check(family, values=None, grid: int = 200):
    """Sample f on a grid of its domain; None when parameters are symbolic.

    Plus families use [0,1]^2 minus the origin. Minus families use
    0 <= y <= x^(n1/m) inside the unit square.
    """
    values = values or {}
    idx = {family.params.index(k): parse_rational(v) for k, v in values.items()}
    f = family.f.substitute_params(idx)
    if f.free_params():
        return None
    cs = family.cs
    for gi in range(grid + 1):
        x = gi / grid
        for gj in range(grid + 1):
            y = gj / grid
            if family.sign == "-":
                y *= x ** (cs.n1 / cs.m)
            if x == 0 and y == 0:
                continue
            if f.evaluate(x, y) <= 0:
                return False
    return True


def family_from_json(data: dict):
    """Build a family from the JSON description used by the command line.

    Terms: {"lnu", "a", "b", "param", optional "coef"}. For plus families a
    term with "inner": true is placed inside the n2-th power (an h1 term);
    other plus terms are h2 monomials and must have lnu 0.
    """
    cs = CharSeq(int(data["n1"]), int(data["m"]), int(data["n2"]), int(data["q"]))
    params = tuple(sorted((data.get("params") or {}).keys()))
    for term in data.get("terms") or []:
        name = term.get("param")
        if name and name not in params:
            params = params + (name,)
    ab = tuple(data["ab"]) if data.get("ab") else None

    def coef(term):
        c = ParamCoef.const(parse_rational(term.get("coef", 1)))
        if term.get("param"):
            c = c * ParamCoef.param(params.index(term["param"]))
        return c

    terms = data.get("terms") or []
    sign = data.get("sign", "+")
    if sign == "+":
        h1 = [(t["a"], t["b"], coef(t)) for t in terms if t.get("inner")]
        h2 = []
        for t in terms:
            if t.get("inner"):
                continue
            if int(t.get("lnu", 0)) != 0:
                raise BadExtraTerm("plus families take only monomial extra terms (lnu = 0)")
            h2.append((t["a"], t["b"], coef(t)))
        family = build_plus_family(cs, h1, ab, h2, params)
    elif sign == "-":
        extras = [(t.get("lnu", 0), t["a"], t["b"], coef(t)) for t in terms]
        family = build_minus_family(cs, extras, ab, params)
    else:
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    values = {k: parse_rational(v) for k, v in (data.get("params") or {}).items()
              if v is not None}
    return family, values


def family_to_json(family, values=None) -> dict:
    cs = family.cs
    names = family.params

    def split(c: ParamCoef):
        # single-parameter monomials keep their parameter; rest goes to coef
        if len(c.terms) == 1:
            (key, val), = c.terms.items()
            if key == ():
                return None, val
            if sum(key) == 1:
                return names[key.index(1)], val
        raise ValueError(f"coefficient {c.render(names)} is not a scaled parameter")

    terms = []
    if family.sign == "+":
        for i, j, c in family.h1_terms:
            name, val = split(c)
            terms.append({"lnu": 0, "a": i, "b": j, "param": name, "coef": str(val),
                          "inner": True})
        for i, j, c in family.h2_terms:
            name, val = split(c)
            terms.append({"lnu": 0, "a": i, "b": j, "param": name, "coef": str(val)})
    else:
        for ell, a, b, c in family.extra_terms:
            name, val = split(c)
            terms.append({"lnu": ell, "a": a, "b": b, "param": name, "coef": str(val)})
    values = values or {}
    return {
        "n1": cs.n1, "m": cs.m, "n2": cs.n2, "q": cs.q, "sign": family.sign,
        "ab": list(family.ab), "terms": terms,
        "params": {k: (str(values[k]) if k in values else None) for k in names},
    }
