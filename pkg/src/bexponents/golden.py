"""Golden checks for the worked examples (run by ``bexponents verify``).

Each check returns (ok, detail). The numbers are the worked example
values for the families (2,3,2,q), (2,3,3,1+3k) and (4,5,2,7).
"""

from __future__ import annotations

from fractions import Fraction as Fr

from .exact import sg_frobenius, sg_new
from .invariants import (
    CharSeq, always_roots_E, common_roots, dim_bounds, milnor, spectrum_parts,
    split_sets, sum_closed_forms, tjurina_bound, tjurina_bound_at_lower, yano_sets,
)
from .polyring import H, MPoly, ParamCoef, binomial_poly
from .resolution import resolution_multiplicities
from .residues.claims import claim1_enumerate, claim2_enumerate, solve_vanishing_params
from .residues.engine import (
    minus_sides, pole_candidates_minus, pole_candidates_plus, residue_minus, residue_plus,
)
from .residues.families import build_minus_family, build_plus_family
from .residues.terms import derivative_terms

CS4527 = CharSeq(4, 5, 2, 7)
T = ParamCoef.param(0)


def _fam_minus():
    return build_minus_family(CS4527, [(0, 6, 6, "t")], (7, 3), ("t",))


def _fam_plus():
    return build_plus_family(CS4527, [], (7, 3), [(6, 6, "t")], ("t",))


def check_frobenius_gamma1():
    v = sg_frobenius(sg_new([3, 2]))
    return v == 3 * 2 - 3 - 2, f"frobenius <3,2> = {v}"


def check_milnor_4527():
    return milnor(CS4527) == 63 + 7, f"mu = {milnor(CS4527)}"


def check_spectrum_A1_2321():
    a1, _ = spectrum_parts(CharSeq(2, 3, 2, 1))
    return a1 == [Fr(5, 12), Fr(11, 12)], f"A1 = {[str(a) for a in a1]}"


def check_yano_family_B1():
    bad = [q for q in (1, 3, 5, 7, 9, 11)
           if yano_sets(CharSeq(2, 3, 2, q))[0] != [Fr(k, 12) for k in (5, 7, 11, 13)]]
    return not bad, f"failing q: {bad}"


def check_yano_family_B2():
    bad = []
    for q in (1, 3, 5, 7, 9, 11):
        want = sorted({Fr(10 + q + 2 * k, 2 * (12 + q)) for k in range(12 + q) if k != 1})
        if yano_sets(CharSeq(2, 3, 2, q))[1] != want:
            bad.append(q)
    return not bad, f"failing q: {bad}"


def check_11_40_in_B1():
    return Fr(11, 40) in yano_sets(CS4527)[0], "11/40 in B1"


def check_yano_family_splits():
    bad = [q for q in (1, 3, 5, 7, 9, 11)
           if split_sets(CharSeq(2, 3, 2, q))[1] or split_sets(CharSeq(2, 3, 2, q))[3]]
    return not bad, f"failing q: {bad}"


def check_B22_4527():
    b22 = split_sets(CS4527)[3]
    want = [Fr(n, 94) for n in (27, 29, 31, 37, 39)]
    return b22 == want, f"B22 = {[str(b) for b in b22]}"


def check_B12_4527():
    b12 = split_sets(CS4527)[1]
    return b12 == [Fr(11, 40)], f"B12 = {[str(b) for b in b12]}"


def check_B22_2331():
    bad = []
    for k in (1, 2, 3, 4):
        b22 = split_sets(CharSeq(2, 3, 3, 1 + 3 * k))[3]
        want = [Fr(17 + 3 * k + 3 * j, 3 * (19 + 3 * k)) for j in range(k + 6)]
        if b22 != want:
            bad.append(k)
    return not bad, f"failing k: {bad}"


def check_common_roots_2321():
    cs = CharSeq(2, 3, 2, 1)
    b1, b2 = yano_sets(cs)
    cr = common_roots(cs)
    return cr == sorted(b1 + b2) and len(cr) == 16, f"|CR| = {len(cr)}"


def check_common_roots_4527():
    b1, b2 = yano_sets(CS4527)
    b22 = set(split_sets(CS4527)[3])
    want = sorted(set(b1) - {Fr(11, 40)} | (set(b2) - b22))
    return common_roots(CS4527) == want, "CR = (B1 - {11/40}) + (B2 - B22)"


def check_complement_E_4527():
    cs = CS4527
    a1, _ = spectrum_parts(cs)
    side = set(a1) | {2 - a for a in a1}
    e = set(always_roots_E(cs))
    from .invariants import spectrum
    rest = sorted(a for a in set(spectrum(cs)) - e if a in side)
    want = [Fr(n, 40) for n in (51, 61, 62, 63, 66, 67, 71)]
    return rest == want, f"A1-side of spectrum - E = {[str(a) for a in rest]}"


def check_dim_yano_family():
    bad = [q for q in (1, 3, 5, 7, 9, 11) if dim_bounds(CharSeq(2, 3, 2, q)) != (2, 2, 2)]
    return not bad, f"failing q: {bad}"


def check_dim_2331():
    bad = [k for k in (1, 2, 3, 4) if dim_bounds(CharSeq(2, 3, 3, 1 + 3 * k))[2] != 10 + k]
    return not bad, f"failing k: {bad}"


def check_dim_4527():
    lo, up, _ = dim_bounds(CS4527)
    return (lo, up) == (12, 18), f"bounds = {(lo, up)}"


def check_sum_identity():
    bad = []
    for cs in (CharSeq(2, 3, 2, 1), CS4527, CharSeq(2, 3, 3, 4)):
        s1, s2 = sum_closed_forms(cs)
        mu = milnor(cs)
        if s1 + s2 != Fr(mu, 2) + (cs.m + cs.n1) * cs.n2 + cs.q - cs.qtilde - cs.h - 4:
            bad.append(cs.as_tuple())
    return not bad, f"failing: {bad}"


def check_tjurina_4527():
    return tjurina_bound_at_lower(CS4527) == 58, (
        f"mu - dim_lower = {tjurina_bound_at_lower(CS4527)}, "
        f"universal bound = {tjurina_bound(CS4527)}")


def check_tjurina_yano_family():
    bad = [q for q in (1, 3, 5) if tjurina_bound(CharSeq(2, 3, 2, q)) != milnor(CharSeq(2, 3, 2, q)) - 2]
    return not bad, f"failing q: {bad}"


def check_N13_formula():
    bad = []
    for cs in (CharSeq(2, 3, 2, 1), CS4527, CharSeq(3, 5, 2, 9)):
        d = resolution_multiplicities(cs)
        a13, a13p = d.aux["alpha13"], d.aux["alpha13'"]
        if a13 + cs.n2 != a13p * cs.q or d.N13 != (cs.m * cs.n1 * a13p + 1) * cs.n2:
            bad.append(cs.as_tuple())
    return not bad, f"failing: {bad}"


def check_substitution_tilde():
    f = _fam_plus().f
    ft = f.substitute(x=MPoly.monomial(5, 0), y=MPoly.monomial(0, 4))
    want = (MPoly({(20, 0): 1, (0, 20): 1}) ** 2 + MPoly.monomial(35, 12)
            + MPoly.monomial(30, 24, T))
    return ft == want, ft.render(("t",))


def check_Q0():
    n = 4 * 5
    q_poly = (1 - binomial_poly(n)).monomial_divide(deg_y=1)
    return q_poly.terms[(0, 0)].constant_value() == n, "Q(0) = m n1"


def check_plus_f1():
    fam = _fam_plus()
    want = (MPoly({(0, 0): 1, (0, 20): 1}) ** 2 + MPoly.monomial(7, 12)
            + MPoly.monomial(14, 24, T))
    return fam.f1 == want, fam.f1.render(("t",))


def check_plus_f2():
    fam = _fam_plus()
    want = (MPoly({(0, 0): 1, (20, 0): 1}) ** 2 + MPoly.monomial(35, 7)
            + MPoly.monomial(30, 14, T))
    return fam.f2 == want, fam.f2.render(("t",))


def check_plus_h_zero():
    fam = _fam_plus()
    beta = Fr(11, 40)
    t1 = derivative_terms(fam.f1, -beta, 2, "x", fam.base1)
    t2 = derivative_terms(fam.f2, -beta, 2, "y", fam.base2)
    return not t1 and not t2, f"{len(t1)} and {len(t2)} terms"


def check_minus_derivative_table():
    fam = _fam_minus()
    d7 = fam.f2.diff("y", 7).axis_eval("y")
    d14 = fam.f2.diff("y", 14).axis_eval("y")
    e7 = fam.f1.diff("x", 7).axis_eval("x")
    want7 = MPoly({(0, 0): -20160 * 1900, (14, 0): -20160 * 3})
    want14 = MPoly({(0, 0): 87178291200 * 81700, (14, 0): 87178291200 * 66}) + \
        MPoly.monomial(28, 0, T * 87178291200)
    wante7 = MPoly({(0, 21): -20160 * 1900, (0, 7): -20160 * 3})
    base = fam.f2.axis_eval("y") == MPoly({(0, 0): 400, (14, 0): 1})
    return d7 == want7 and d14 == want14 and e7 == wante7 and base, "derivative table"


def check_minus_derivative_terms_nu7():
    fam = _fam_minus()
    alpha = Fr(-39, 94)
    terms = derivative_terms(fam.f2, alpha, 7, "y", fam.base2)
    got = {(g.var_exponent, g.base_exponent): g.coef.constant_value() for g in terms}
    # 20160 beta (1900 + 3 x^14)(400 + x^14)^(-beta-1) / 7!
    want = {(0, alpha - 1): -4 * 1900 * alpha, (14, alpha - 1): -4 * 3 * alpha}
    return got == want, f"{got}"


def check_2331_family():
    k = 1
    cs = CharSeq(2, 3, 3, 1 + 3 * k)
    fam = build_minus_family(cs, [(1, 5, k - 1, "t")], (5 + k, 2), ("t",))
    g = MPoly({(2, 0): 1, (0, 3): -1})
    want = g ** 3 + MPoly.monomial(5 + k, 2) + g * MPoly.monomial(5, k - 1, T)
    return fam.f == want, fam.f.render(("t",))


def check_pole_candidate_minus():
    poles = pole_candidates_minus(CS4527, 1, 1, 0)
    fam = poles.second_family(Fr(-39, 94))
    return (1, 14) in fam and poles.is_candidate(Fr(-39, 94)), f"(i, nu_i) = {fam}"


def check_convergence_abscissa():
    poles = pole_candidates_minus(CS4527, 1, 1, 0)
    plus = pole_candidates_plus(CS4527, 1, 1)
    return poles.abscissa() == Fr(-9, 40) and plus.P.first() == Fr(-9, 40), str(poles.abscissa())


def check_claim1_diagonal_pair():
    from .residues.claims import claim1_family
    cs = CharSeq(3, 5, 2, 1)
    k = 1
    fam, targets, beta = claim1_family(cs, k)
    data = claim1_enumerate(cs, k)
    res = residue_plus(fam, *targets[-1][:2], -beta)
    # the last target's t-coefficient is a multiple of B((1+i0)/n1, (1+j0)/m)
    from .residues.beta import canonical_beta
    _, key = canonical_beta(Fr(1 + data.i0, cs.n1), Fr(1 + data.j0, cs.m))
    idx = len(targets) - 1
    if key is None:
        ok = not res.pure.coefficient_in(idx, 1).is_zero()
    else:
        ok = key in res.terms and not res.terms[key].coefficient_in(idx, 1).is_zero()
    return ok, res.render()


def check_headline_residue():
    r = residue_minus(_fam_minus(), 1, 1, 0, Fr(-39, 94))
    return r.render() == "(136*t - 63)/447440 * B(-4/47, 1/2)", r.render()


def check_minus_zero_residues():
    fam = _fam_minus()
    bad = []
    for k in (2, 4, 6, 12):
        if not residue_minus(fam, 1, 1, 0, -Fr(25 + k, 94)).is_zero():
            bad.append(k)
    for b in ((2, 1, 0), (1, 2, 0)):
        if not residue_minus(fam, *b, Fr(-39, 94)).is_zero():
            bad.append((14, b))
    return not bad, f"nonzero: {bad}"


def check_solve_t():
    sol = solve_vanishing_params(_fam_minus(), Fr(39, 94), [(2, 1, 0), (1, 2, 0), (1, 1, 0)])
    return sol == {"t": Fr(63, 136)}, f"{sol}"


def check_plus_zero():
    r = residue_plus(_fam_plus(), 1, 1, Fr(-11, 40))
    return r.is_zero(), r.render()


def check_plus_witness():
    r = residue_plus(_fam_plus(), 3, 9, Fr(-51, 40))
    return r.is_transcendence_witness and not r.is_zero(), r.render()


def check_claim2_table():
    sides = minus_sides(_fam_minus(), 1, 1, 0, Fr(-39, 94))
    pairs = pole_candidates_minus(CS4527, 1, 1, 0).second_family(Fr(-39, 94))
    data = claim2_enumerate(CS4527, 14)
    ok = pairs == [(1, 14), (2, 7), (3, 0)] and len(sides) == 3 and data.N_beta == [4, 6, 14]
    return ok, f"(i, nu_i) = {pairs}, N_beta = {data.N_beta}"


def check_claim2_beta3():
    bad = []
    for cs in (CS4527, CharSeq(2, 3, 3, 4), CharSeq(2, 3, 2, 5)):
        for k in cs.gamma.gaps:
            if any(e.beta3 >= cs.n2 for e in claim2_enumerate(cs, k).entries):
                bad.append((cs.as_tuple(), k))
    return not bad, f"failing: {bad}"


def check_H_identity():
    bad = [n for n in (1, 2, 5, 20) if MPoly.monomial(0, 1) * H(n) != 1 - binomial_poly(n)
           or H(n).terms[(0, 0)].constant_value() != n]
    return not bad, f"failing n: {bad}"


def check_cli_invariants():
    from .cli import invariants_payload
    data = invariants_payload(CharSeq(2, 3, 2, 1))
    ok = data["mu"] == 16 and (data["dim_lower"], data["dim_upper"]) == (2, 2)
    return ok and data["B1"] == ["5/12", "7/12", "11/12", "13/12"], "invariants report"


CHECKS = [
    ("semigroup: Frobenius of <m, n1> is m n1 - m - n1", check_frobenius_gamma1),
    ("milnor: (4,5,2,7) gives 63 + q", check_milnor_4527),
    ("spectrum: A1 of (2,3,2,1)", check_spectrum_A1_2321),
    ("yano: B1 of (2,3,2,q)", check_yano_family_B1),
    ("yano: B2 of (2,3,2,q)", check_yano_family_B2),
    ("yano: 11/40 in B1 of (4,5,2,7)", check_11_40_in_B1),
    ("split: B12 = B22 = {} for (2,3,2,q)", check_yano_family_splits),
    ("split: B12 of (4,5,2,7)", check_B12_4527),
    ("split: B22 of (4,5,2,7)", check_B22_4527),
    ("split: |B22| = k + 6 for (2,3,3,1+3k)", check_B22_2331),
    ("common roots: (2,3,2,1)", check_common_roots_2321),
    ("common roots: (4,5,2,7)", check_common_roots_4527),
    ("E: A1-side complement for (4,5,2,7)", check_complement_E_4527),
    ("bounds: (2,3,2,q) all equal 2", check_dim_yano_family),
    ("bounds: generic dim 10 + k for (2,3,3,1+3k)", check_dim_2331),
    ("bounds: (12, 18) for (4,5,2,7)", check_dim_4527),
    ("sums: total of exponents", check_sum_identity),
    ("tjurina: 58 for (4,5,2,7)", check_tjurina_4527),
    ("tjurina: mu - 2 for (2,3,2,q)", check_tjurina_yano_family),
    ("resolution: N13 formula", check_N13_formula),
    ("polyring: f(x^m, y^n1) for the plus family", check_substitution_tilde),
    ("polyring: Q(0) = m n1", check_Q0),
    ("polyring: H_n identity", check_H_identity),
    ("pipeline: plus f1", check_plus_f1),
    ("pipeline: plus f2", check_plus_f2),
    ("pipeline: plus second derivatives vanish at 11/40", check_plus_h_zero),
    ("pipeline: minus derivative table", check_minus_derivative_table),
    ("terms: minus nu = 7 expansion", check_minus_derivative_terms_nu7),
    ("family: (2,3,3,4) minus family", check_2331_family),
    ("poles: -39/94 in the second progression", check_pole_candidate_minus),
    ("poles: convergence abscissa", check_convergence_abscissa),
    ("pairing: claim 1 diagonal beta value", check_claim1_diagonal_pair),
    ("residue: minus at -39/94", check_headline_residue),
    ("residue: minus zeros at k = 2,4,6,12 and k = 14 off-diagonal", check_minus_zero_residues),
    ("residue: t = 63/136", check_solve_t),
    ("residue: plus at -11/40 is zero", check_plus_zero),
    ("residue: plus at -51/40 is a witness", check_plus_witness),
    ("claim 2: table for k = 14", check_claim2_table),
    ("claim 2: beta3 < n2", check_claim2_beta3),
    ("cli: invariants of (2,3,2,1)", check_cli_invariants),
]


def run_all():
    results = []
    for name, fn in CHECKS:
        try:
            ok, detail = fn()
        except Exception as exc:  # report, do not abort the table
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append((name, bool(ok), detail))
    return results
