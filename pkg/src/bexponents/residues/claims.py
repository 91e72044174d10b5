"""Enumerations behind the two families that kill residues at a gap.

For a gap k of <m, n1> (plus side) or of <n1 n2, m n2, D> (minus side)
these list the forms whose residue at -beta can be nonzero, build a family
with one parameter per form and solve for parameters making all of those
residues vanish.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import KInSemigroup, NotDegreeOne
from ..exact import sg_contains
from ..invariants import CharSeq
from ..polyring import ParamCoef
from .engine import residue
from .families import build_minus_family, build_plus_family, solve_ab


@dataclass(frozen=True)
class Claim1Entry:
    ell: int
    i: int
    j: int
    beta1: int
    beta2: int


@dataclass(frozen=True)
class Claim1Data:
    k: int
    beta: Fraction
    i0: int
    j0: int
    entries: tuple


def claim1_enumerate(cs: CharSeq, k: int) -> Claim1Data:
    n1, m = cs.n1, cs.m
    if k < 1 or sg_contains(cs.gamma1, k):
        raise KInSemigroup(f"{k} is not a positive gap of <{m}, {n1}>")
    sols = []
    for i0 in range(1, n1):
        rest = k + m * n1 - m * i0
        if rest % n1 == 0 and 1 <= rest // n1 < m:
            sols.append((i0, rest // n1))
    if len(sols) != 1:
        raise AssertionError(f"expected a unique (i0, j0) for k = {k}, got {sols}")
    i0, j0 = sols[0]
    cells = []
    for i in range(1, i0 + 1):
        for j in range(1, j0 + 1):
            ell = m * i + n1 * j - m * n1
            if ell >= 1:
                cells.append(Claim1Entry(ell, i, j, 1 + i0 - i, 1 + j0 - j))
    cells.sort(key=lambda e: e.ell)
    assert cells[-1].ell == k
    for e in cells:
        assert 1 <= e.beta1 <= i0 and 1 <= e.beta2 <= j0
    return Claim1Data(k, Fraction(m + n1 + k, cs.N1), i0, j0, tuple(cells))


def claim1_family(cs: CharSeq, k: int, ab=None):
    """(family, targets, beta) for a gap k of <m, n1>."""
    data = claim1_enumerate(cs, k)
    names = tuple(f"t{p + 1}" for p in range(len(data.entries)))
    h1 = [(e.i, e.j, ParamCoef.param(p)) for p, e in enumerate(data.entries)]
    family = build_plus_family(cs, h1, ab if ab is not None else solve_ab(cs), params=names)
    targets = [(e.beta1, e.beta2, 0) for e in data.entries]
    return family, targets, data.beta


@dataclass(frozen=True)
class Claim2Entry:
    nu: int
    beta1: int
    beta2: int
    beta3: int
    ell: int
    a: int
    b: int
    members: tuple


@dataclass(frozen=True)
class Claim2Data:
    k: int
    beta: Fraction
    entries: tuple

    @property
    def N_beta(self):
        return [e.nu for e in self.entries]

    @property
    def beta3_values(self):
        return sorted({e.beta3 for e in self.entries})


def minimal_ab(cs: CharSeq, target: int):
    """Non-negative (a, b) with m a + n1 b = target and the smallest a."""
    for a in range(target // cs.m + 1):
        rest = target - cs.m * a
        if rest % cs.n1 == 0:
            return a, rest // cs.n1
    return None


def claim2_enumerate(cs: CharSeq, k: int) -> Claim2Data:
    n1, m, n2, q, D = cs.n1, cs.m, cs.n2, cs.q, cs.D
    if sg_contains(cs.gamma, k):
        raise KInSemigroup(f"{k} lies in <{n1 * n2}, {m * n2}, {D}>")
    by_nu = {}
    for b3 in range((k - 1) // D + 1):
        r3 = k - D * b3
        for t1 in range((r3 - 1) // (n2 * m) + 1):
            r1 = r3 - n2 * m * t1
            for t2 in range((r1 - 1) // (n2 * n1) + 1):
                by_nu.setdefault(r1 - n2 * n1 * t2, []).append((t1, t2, b3))
    inv_D = pow(D, -1, n2)
    entries = []
    for nu in sorted(by_nu):
        members = sorted(by_nu[nu])
        b3s = {b3 for _, _, b3 in members}
        if len(b3s) != 1:
            raise AssertionError(f"nu = {nu} carries several beta3 values {b3s}")
        b3 = b3s.pop()
        if b3 >= n2:
            raise AssertionError(f"beta3 = {b3} is not below n2 = {n2}")
        t1, t2, _ = members[0]
        ell = nu * inv_D % n2
        target = (D * n2 + nu - D * ell) // n2
        ab = minimal_ab(cs, target)
        if ab is None:
            raise AssertionError(f"m a + n1 b = {target} has no solution")
        entries.append(Claim2Entry(nu, t1 + 1, t2 + 1, b3, ell, ab[0], ab[1], tuple(members)))
    beta = Fraction((m + n1) * n2 + q + k, n2 * D)
    return Claim2Data(k, beta, tuple(entries))


def claim2_family(cs: CharSeq, k: int, ab=None):
    data = claim2_enumerate(cs, k)
    names = tuple(f"t{p + 1}" for p in range(len(data.entries)))
    extras = [(e.ell, e.a, e.b, ParamCoef.param(p)) for p, e in enumerate(data.entries)]
    family = build_minus_family(cs, extras, ab if ab is not None else solve_ab(cs), params=names)
    targets = [(e.beta1, e.beta2, e.beta3) for e in data.entries]
    return family, targets, data.beta


def _solve_linear(combo, index):
    """Value of t_index making every coefficient of combo vanish."""
    value = None
    for c in combo.coefficients():
        if c.degree_in(index) > 1:
            raise NotDegreeOne(f"coefficient {c.render(combo.params)} is not affine")
        lead = c.coefficient_in(index, 1)
        const = c.coefficient_in(index, 0)
        if lead.is_zero():
            continue
        if not (lead.is_constant() and const.is_constant()):
            raise NotDegreeOne(f"coefficient {c.render(combo.params)} has other free parameters")
        value = -const.constant_value() / lead.constant_value()
        break
    if value is None:
        raise NotDegreeOne(f"residue {combo.render()} does not involve the parameter")
    rest = combo.substitute({index: value})
    if not rest.is_zero():
        raise NotDegreeOne(f"no single value kills {combo.render()}")
    return value


def solve_vanishing_params(family, beta, targets):
    """Rational parameter values making every targeted residue at -beta zero.

    Targets are processed in order; each residue, after substituting the
    values found so far, must be affine in exactly one remaining parameter.
    Returns {name: value}; raises NotDegreeOne when the structure fails.
    """
    alpha = -Fraction(beta)
    combos = [residue(family, t, alpha) for t in targets]
    assignment = {}
    for t, combo in zip(targets, combos):
        current = combo.substitute(assignment)
        if current.is_zero():
            continue
        free = sorted(current.free_params())
        if len(free) != 1:
            raise NotDegreeOne(
                f"residue for {t} is {current.render()} with free parameters {free}")
        assignment[free[0]] = _solve_linear(current, free[0])
    for t, combo in zip(targets, combos):
        if not combo.substitute(assignment).is_zero():
            raise NotDegreeOne(f"residue for {t} survives the assignment")
    return {family.params[i]: v for i, v in sorted(assignment.items())}
