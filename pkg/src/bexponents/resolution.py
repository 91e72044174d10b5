"""Multiplicities of the two rupture divisors and the non-integrality test.

For a candidate beta in B11 (divisor 1) or B21 (divisor 2) a monomial form
is read off a semigroup decomposition, and the three residues eps_{j,k}
modulo 1 are checked to be non-integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DecompositionMissing, NotInB11orB21
from .exact import frac_part, sg_decompose
from .invariants import CharSeq, b1_shift, b2_shift, in_B11, in_B21, split_sets


def _min_solution(a: int, c: int, b: int):
    """Smallest positive x with a*x + c = b*y for a positive integer y."""
    x = 1
    while (a * x + c) % b or (a * x + c) // b < 1:
        x += 1
    return x, (a * x + c) // b


@dataclass(frozen=True)
class ResolutionData:
    N1: int
    N2: int
    N11: int
    N12: int
    N13: int
    N21: int
    N22: int
    N23: int
    aux: dict


def resolution_multiplicities(cs: CharSeq) -> ResolutionData:
    n1, m, n2, q = cs.n1, cs.m, cs.n2, cs.q
    D = cs.D
    a11, a11p = _min_solution(n1, 1, m)
    a12, a12p = _min_solution(m, 1, n1)
    a13, a13p = _min_solution(1, n2, q)
    a21, a21p = _min_solution(n2, 1, q)
    a22, a22p = _min_solution(q, 1, n2)
    aux = {
        "alpha11": a11, "alpha11'": a11p, "alpha12": a12, "alpha12'": a12p,
        "alpha13": a13, "alpha13'": a13p, "alpha21": a21, "alpha21'": a21p,
        "alpha22": a22, "alpha22'": a22p,
    }
    return ResolutionData(
        N1=m * n1 * n2, N2=n2 * D,
        N11=n1 * n2 * a11, N12=m * n2 * a12, N13=(m * n1 * a13p + 1) * n2,
        N21=n2 * (m * n1 * a21p + a21), N22=a22 * D, N23=1, aux=aux,
    )


@dataclass(frozen=True)
class Certificate:
    candidate: Fraction
    divisor: int
    form_exponents: tuple
    epsilons: tuple
    valid: bool


def form_exponents(cs: CharSeq, beta: Fraction):
    """(divisor, (beta1, beta2, beta3)) of the form attached to beta."""
    beta = Fraction(beta)
    n1, m = cs.n1, cs.m
    if in_B11(cs, beta):
        k = b1_shift(cs, beta)
        c = sg_decompose(cs.gamma1, k)
        if c is None:
            raise DecompositionMissing(f"{k} has no decomposition in <{m}, {n1}>")
        # gamma1 generators are (m, n1): k = m b1' + n1 b2'
        return 1, (c[0] + 1, c[1] + 1, 0)
    if in_B21(cs, beta):
        k = b2_shift(cs, beta)
        c = sg_decompose(cs.gamma, k)
        if c is None:
            raise DecompositionMissing(f"{k} has no decomposition in Gamma")
        # gamma generators are (n1 n2, m n2, D): k = n2(m b1' + n1 b2') + D b3
        return 2, (c[1] + 1, c[0] + 1, c[2])
    raise NotInB11orB21(f"{beta} lies in neither B11 nor B21 of {cs.as_tuple()}")


def form_order(cs: CharSeq, divisor: int, exps) -> int:
    """nu_j of the form along the divisor."""
    b1, b2, b3 = exps
    base = cs.m * b1 + cs.n1 * b2
    if divisor == 1:
        return base
    return base * cs.n2 + cs.q + cs.D * b3


def reduced_epsilons(cs: CharSeq, divisor: int, exps):
    """The three eps_{j,k} mod 1 in their reduced congruence forms."""
    n1, m, n2 = cs.n1, cs.m, cs.n2
    b1, b2, b3 = exps
    if divisor == 1:
        vals = (Fraction(b2, m), Fraction(b1, n1), -Fraction(m * b1 + n1 * b2, m * n1))
    else:
        nu = form_order(cs, 2, exps)
        vals = (Fraction(m * b1 + n1 * b2 - m * n1, cs.D), Fraction(b3 + 1, n2),
                -Fraction(nu, n2 * cs.D))
    return tuple(frac_part(v) for v in vals)


def raw_epsilons(cs: CharSeq, divisor: int, exps, data: ResolutionData | None = None):
    """-nu_j N_{j,k}/N_j mod 1 straight from the multiplicities."""
    data = data or resolution_multiplicities(cs)
    nu = form_order(cs, divisor, exps)
    if divisor == 1:
        Nj, Njk = data.N1, (data.N11, data.N12, data.N13)
    else:
        Nj, Njk = data.N2, (data.N21, data.N22, data.N23)
    return tuple(frac_part(Fraction(-nu * n, Nj)) for n in Njk)


def certify_root(cs: CharSeq, beta) -> Certificate:
    beta = Fraction(beta)
    divisor, exps = form_exponents(cs, beta)
    nu = form_order(cs, divisor, exps)
    Nj = cs.N1 if divisor == 1 else cs.n2 * cs.D
    if Fraction(nu, Nj) != beta:
        raise DecompositionMissing(f"form order {nu}/{Nj} does not give {beta}")
    eps = reduced_epsilons(cs, divisor, exps)
    valid = all(e != 0 for e in eps) and beta < 1
    return Certificate(beta, divisor, exps, eps, valid)


def certify_all(cs: CharSeq) -> list:
    """Certificates for every member of B11 and B21 below 1."""
    b11, _, b21, _ = split_sets(cs)
    return [certify_root(cs, b) for b in sorted(set(b11) | set(b21)) if b < 1]
