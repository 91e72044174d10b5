"""Sparse polynomials in x, y with coefficients in Q[t1, ..., tr].

ParamCoef keys are exponent tuples in the parameters with trailing zeros
stripped, so () is the constant monomial, (1,) is t1 and (0, 2) is t2**2.
MPoly maps (deg_x, deg_y) to nonzero ParamCoefs.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from math import comb

from .errors import NotDivisible


def _strip(key):
    key = tuple(key)
    while key and key[-1] == 0:
        key = key[:-1]
    return key


def _add_keys(a, b):
    return _strip(x + y for x, y in zip_longest(a, b, fillvalue=0))


class ParamCoef:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = {(): Fraction(terms)}
        self.terms = {_strip(k): Fraction(v) for k, v in terms.items() if v != 0}

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def const(cls, value):
        return cls({(): Fraction(value)})

    @classmethod
    def param(cls, index, coef=1):
        """coef * t_{index + 1} (indices are 0-based)."""
        return cls({(0,) * index + (1,): Fraction(coef)})

    @staticmethod
    def lift(value):
        return value if isinstance(value, ParamCoef) else ParamCoef.const(value)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(k == () for k in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"coefficient {self} depends on parameters")
        return self.terms.get((), Fraction(0))

    def __add__(self, other):
        other = ParamCoef.lift(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return ParamCoef._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return ParamCoef._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-ParamCoef.lift(other))

    def __rsub__(self, other):
        return ParamCoef.lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, ParamCoef):
            other = Fraction(other)
            if other == 0:
                return ParamCoef()
            return ParamCoef._raw({k: v * other for k, v in self.terms.items()})
        out = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = k1 if not k2 else (k2 if not k1 else _add_keys(k1, k2))
                s = out.get(k, 0) + v1 * v2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return ParamCoef._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = ParamCoef.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, ParamCoef):
            try:
                other = ParamCoef.const(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def nparams(self):
        return max((len(k) for k in self.terms), default=0)

    def free_params(self):
        return {i for k in self.terms for i, e in enumerate(k) if e}

    def degree_in(self, index):
        return max((k[index] if index < len(k) else 0 for k in self.terms), default=-1)

    def coefficient_in(self, index, degree):
        """Coefficient of t_index**degree, as a ParamCoef in the others."""
        out = {}
        for k, v in self.terms.items():
            e = k[index] if index < len(k) else 0
            if e == degree:
                kk = list(k) + [0] * (index + 1 - len(k))
                kk[index] = 0
                out[_strip(kk)] = v
        return ParamCoef._raw(out)

    def substitute(self, values):
        """Replace t_i by the rationals in ``values`` (dict index -> value)."""
        out = ParamCoef()
        for k, v in self.terms.items():
            coef = Fraction(v)
            rest = []
            for i, e in enumerate(k):
                if e and i in values:
                    coef *= Fraction(values[i]) ** e
                    rest.append(0)
                else:
                    rest.append(e)
            out = out + ParamCoef({_strip(rest): coef})
        return out

    def evaluate(self, values):
        return self.substitute(dict(enumerate(values)) if isinstance(values, (list, tuple))
                               else values).constant_value()

    def render(self, names=None):
        if not self.terms:
            return "0"
        names = names or [f"t{i + 1}" for i in range(self.nparams())]
        keys = sorted(self.terms, key=lambda k: (-sum(k), tuple(-e for e in k)))
        parts = []
        for k in keys:
            v = self.terms[k]
            mono = "*".join(names[i] if e == 1 else f"{names[i]}^{e}"
                            for i, e in enumerate(k) if e)
            mag = abs(v)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            parts.append(("-" if v < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"ParamCoef({self.render()})"


class MPoly:
    """Polynomial in x, y; immutable by convention."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent {(i, j)}")
            c = ParamCoef.lift(c)
            if not c.is_zero():
                self.terms[(int(i), int(j))] = c

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def const(cls, value):
        return cls({(0, 0): value})

    @classmethod
    def monomial(cls, i, j, coef=1):
        return cls({(i, j): coef})

    @classmethod
    def x(cls):
        return cls.monomial(1, 0)

    @classmethod
    def y(cls):
        return cls.monomial(0, 1)

    @staticmethod
    def lift(value):
        return value if isinstance(value, MPoly) else MPoly.const(value)

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        other = MPoly.lift(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            if k in out:
                s = out[k] + v
                if s.is_zero():
                    del out[k]
                else:
                    out[k] = s
            else:
                out[k] = v
        return MPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-MPoly.lift(other))

    def __rsub__(self, other):
        return MPoly.lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            if isinstance(other, ParamCoef):
                other = MPoly.const(other)
            else:
                other = Fraction(other)
                if other == 0:
                    return MPoly()
                return MPoly._raw({k: v * other for k, v in self.terms.items()})
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                prod = c1 * c2
                if k in out:
                    s = out[k] + prod
                    if s.is_zero():
                        del out[k]
                    else:
                        out[k] = s
                elif not prod.is_zero():
                    out[k] = prod
        return MPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = MPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            try:
                other = MPoly.lift(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def substitute(self, x=None, y=None):
        """Compose with x -> X, y -> Y (None keeps the variable)."""
        X = MPoly.x() if x is None else MPoly.lift(x)
        Y = MPoly.y() if y is None else MPoly.lift(y)
        xpow, ypow = {0: MPoly.const(1)}, {0: MPoly.const(1)}

        def power(cache, base, e):
            if e not in cache:
                cache[e] = base ** e
            return cache[e]

        out = MPoly()
        for (i, j), c in self.terms.items():
            out = out + power(xpow, X, i) * power(ypow, Y, j) * c
        return out

    def substitute_params(self, values):
        out = {}
        for k, c in self.terms.items():
            cc = c.substitute(values)
            if not cc.is_zero():
                out[k] = cc
        return MPoly._raw(out)

    def monomial_divide(self, deg_x=0, deg_y=0):
        out = {}
        for (i, j), c in self.terms.items():
            if i < deg_x or j < deg_y:
                raise NotDivisible(
                    f"term x^{i} y^{j} is not divisible by x^{deg_x} y^{deg_y}")
            out[(i - deg_x, j - deg_y)] = c
        return MPoly._raw(out)

    def diff(self, var, order=1):
        """Partial derivative of the given order in 'x' or 'y'."""
        idx = 0 if var == "x" else 1
        out = {}
        for k, c in self.terms.items():
            e = k[idx]
            if e < order:
                continue
            falling = 1
            for r in range(order):
                falling *= e - r
            nk = (k[0] - order, k[1]) if idx == 0 else (k[0], k[1] - order)
            out[nk] = c * falling
        return MPoly._raw(out)

    def axis_eval(self, var):
        """Set ``var`` to 0, keeping the terms free of it."""
        idx = 0 if var == "x" else 1
        return MPoly._raw({k: c for k, c in self.terms.items() if k[idx] == 0})

    def coefficient(self, var, degree):
        """Coefficient of var**degree as a polynomial in the other variable."""
        idx = 0 if var == "x" else 1
        out = {}
        for k, c in self.terms.items():
            if k[idx] == degree:
                nk = (0, k[1]) if idx == 0 else (k[0], 0)
                out[nk] = c
        return MPoly._raw(out)

    def degree(self, var):
        idx = 0 if var == "x" else 1
        return max((k[idx] for k in self.terms), default=-1)

    def free_params(self):
        out = set()
        for c in self.terms.values():
            out |= c.free_params()
        return out

    def evaluate(self, x, y, params=None):
        """Float value at (x, y) with numeric parameters."""
        total = 0.0
        for (i, j), c in self.terms.items():
            cv = c.evaluate(params or {}) if c.free_params() else c.constant_value()
            total += float(cv) * x ** i * y ** j
        return total

    def render(self, names=None):
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda k: (-(k[0] + k[1]), -k[0]))
        parts = []
        for i, j in keys:
            c = self.terms[(i, j)]
            mono = "*".join(
                ([f"x^{i}" if i > 1 else "x"] if i else [])
                + ([f"y^{j}" if j > 1 else "y"] if j else []))
            if len(c.terms) > 1:
                body = f"({c.render(names)})" + (f"*{mono}" if mono else "")
                sign = "+"
            else:
                text = c.render(names)
                sign = "-" if text.startswith("-") else "+"
                text = text.lstrip("-")
                if mono:
                    body = mono if text == "1" else f"{text}*{mono}"
                else:
                    body = text
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"MPoly({self.render()})"


def binomial_poly(n, var="y", sign=-1):
    """(1 + sign*var)**n expanded directly."""
    terms = {}
    for k in range(n + 1):
        key = (0, k) if var == "y" else (k, 0)
        terms[key] = comb(n, k) * sign ** k
    return MPoly(terms)


def H(n):
    """H_n(y) with y*H_n(y) = 1 - (1 - y)**n."""
    return (1 - binomial_poly(n)).monomial_divide(deg_y=1)
