"""Floating-point oracle for G-values and beta values.

G(s) for z^e (c0 + c1 z^p)^E is the continuation of
int_0^1 z^(e+s-1) (c0 + c1 z^p)^E dz. On [0, z0] with c1 z0^p <= c0/2 the
binomial series converges geometrically and integrates termwise; each term
z^(sigma+pk)/(sigma+pk) is already the continued value. The remainder
[z0, 1] is a proper integral handled by adaptive quadrature.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath

from ..errors import IntegerBetaArgument, PoleAtS, QuadratureFailure
from .terms import GTerm

DPS = 30


def _mp(r):
    r = Fraction(r)
    return mpmath.mpf(r.numerator) / r.denominator


def _coef_value(g: GTerm, params):
    c = g.coef
    if c.free_params():
        c = c.substitute({k: Fraction(v) for k, v in (params or {}).items()})
    return c.constant_value()


def numeric_G(g: GTerm, s, params=None, rel_tol: float = 1e-12) -> float:
    """Value of the continued G-integral of the GTerm at s."""
    with mpmath.workdps(DPS):
        return float(_numeric_G(g, s, params, rel_tol))


def _split_point(g: GTerm):
    """c0, c1 and z0 with c1 z0^p = c0/2 (capped at 1), at the current precision."""
    c0, c1 = _mp(g.base_c0), _mp(g.base_c1)
    return c0, c1, min(mpmath.mpf(1), (c0 / (2 * c1)) ** (mpmath.mpf(1) / g.base_p))


def _series(sigma, p, E, c0, c1, z0, s):
    """Termwise integral of the binomial series on [0, z0]; also the largest term."""
    Em = _mp(E)
    integer_E = E.denominator == 1 and E >= 0
    series, biggest = mpmath.mpf(0), mpmath.mpf(0)
    k = 0
    coef = c0 ** Em
    while True:
        if integer_E and k > E:
            break
        expo = sigma + p * k
        if expo == 0:
            raise PoleAtS(f"G has a pole at s = {s} (term k = {k})")
        term = coef * z0 ** _mp(expo) / _mp(expo)
        series += term
        biggest = max(biggest, abs(term))
        if k > 3 and abs(term) < mpmath.eps * max(1, abs(series)):
            break
        coef = coef * (Em - k) / (k + 1) * c1 / c0
        k += 1
        if k > 20000:
            raise QuadratureFailure("binomial series did not converge")
    return series, biggest


def _numeric_G(g: GTerm, s, params, rel_tol):
    sigma = Fraction(g.var_exponent) + Fraction(s)
    E, p = Fraction(g.base_exponent), g.base_p
    c0, c1, z0 = _split_point(g)
    series, biggest = _series(sigma, p, E, c0, c1, z0, s)
    # alternating terms for very negative E cancel; redo with the lost digits added
    if series and biggest > abs(series) * 1000:
        with mpmath.extradps(int(mpmath.log10(biggest / abs(series))) + 10):
            series, _ = _series(sigma, p, E, *_split_point(g), s)
    tail = mpmath.mpf(0)
    if z0 < 1:
        sig, Em = _mp(sigma), _mp(E)
        f = lambda z: z ** (sig - 1) * (c0 + c1 * z ** p) ** Em
        tail, err = mpmath.quad(f, [z0, (z0 + 1) / 2, 1], error=True)
        if err > rel_tol * max(abs(tail), mpmath.mpf(10) ** -20):
            raise QuadratureFailure(f"quadrature error {err} for {g} at s = {s}")
    return _mp(_coef_value(g, params)) * (series + tail)


def numeric_beta(u, v) -> float:
    u, v = Fraction(u), Fraction(v)
    for a in (u, v):
        if a.denominator == 1 and a <= 0:
            raise IntegerBetaArgument(f"B({u}, {v}) has a non-positive integer argument")
    with mpmath.workdps(DPS):
        return float(mpmath.beta(_mp(u), _mp(v)))


def numeric_sides(sides, params=None) -> float:
    """sum_w w * (sum G over side 1 + sum G over side 2) at higher precision."""
    with mpmath.workdps(DPS):
        total = mpmath.mpf(0)
        for weight, side1, side2 in sides:
            part = mpmath.mpf(0)
            for g, s in list(side1) + list(side2):
                part += _numeric_G(g, s, params, 1e-12)
            total += _mp(weight) * part
        return float(total)
