"""Command line front end.

Exit codes: 0 ok, 1 verification failure, 2 invalid characteristic
sequence, 3 typed engine error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .errors import EngineError, InvalidCharSeq
from .exact import parse_rational
from .invariants import (
    CharSeq, admissible_grid, common_roots, dim_bounds, invariant_report, milnor,
    spectrum, split_sets, yano_sets,
)
from .resolution import certify_all, certify_root

CSV_FIELDS = [
    "n1", "m", "n2", "q", "mu", "dim_lower", "dim_upper", "generic_dim",
    "tjurina_lower", "n_B1", "n_B2", "n_B12", "n_B22", "n_CR", "n_E",
    "distinct_eigenvalues",
]


def rat(r) -> str:
    return str(Fraction(r))


def rats(values) -> list:
    return [rat(v) for v in values]


def cs_payload(cs: CharSeq) -> dict:
    return {"n1": cs.n1, "m": cs.m, "n2": cs.n2, "q": cs.q,
            "sequence": list(cs.sequence)}


def invariants_payload(cs: CharSeq) -> dict:
    r = invariant_report(cs)
    return {
        "input": cs_payload(cs),
        "mu": r.mu, "alpha1": rat(r.alpha1), "spectrum": rats(r.spectrum),
        "B1": rats(r.B1), "B2": rats(r.B2), "B11": rats(r.B11), "B12": rats(r.B12),
        "B21": rats(r.B21), "B22": rats(r.B22), "CR": rats(r.CR), "E": rats(r.E),
        "dim_lower": r.dim_lower, "dim_upper": r.dim_upper,
        "generic_dim": r.generic_dim if isinstance(r.generic_dim, int) else rat(r.generic_dim),
        "tjurina_lower": r.tjurina_lower, "tjurina_at_dim_lower": r.tjurina_at_dim_lower,
        "qtilde": r.qtilde, "h": r.h, "distinct_eigenvalues": r.distinct_eigenvalues,
    }


def certificate_payload(c) -> dict:
    return {"candidate": rat(c.candidate), "divisor": c.divisor,
            "form_exponents": list(c.form_exponents), "epsilons": rats(c.epsilons),
            "valid": c.valid}


def emit(payload, fmt: str = "json") -> str:
    """Deterministic rendering of a payload."""
    if fmt == "json":
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for row in payload:
            writer.writerow(row)
        return buf.getvalue()
    lines = []
    for key in sorted(payload):
        val = payload[key]
        if isinstance(val, list):
            val = "{" + ", ".join(str(v) for v in val) + "}"
        elif isinstance(val, dict):
            val = json.dumps(val, sort_keys=True)
        lines.append(f"{key}: {val}")
    return "\n".join(lines) + "\n"


def sweep_row(cs: CharSeq) -> dict:
    r = invariant_report(cs)
    return {
        "n1": cs.n1, "m": cs.m, "n2": cs.n2, "q": cs.q, "mu": r.mu,
        "dim_lower": r.dim_lower, "dim_upper": r.dim_upper, "generic_dim": r.generic_dim,
        "tjurina_lower": r.tjurina_lower, "n_B1": len(r.B1), "n_B2": len(r.B2),
        "n_B12": len(r.B12), "n_B22": len(r.B22), "n_CR": len(r.CR), "n_E": len(r.E),
        "distinct_eigenvalues": int(r.distinct_eigenvalues),
    }


def _cs(args) -> CharSeq:
    return CharSeq(args.n1, args.m, args.n2, args.q)


def _out(args, payload):
    sys.stdout.write(emit(payload, "json" if args.json else "text"))


def cmd_invariants(args):
    payload = invariants_payload(_cs(args))
    if args.timing:
        start = time.perf_counter()
        invariants_payload(_cs(args))
        payload["timing_s"] = round(time.perf_counter() - start, 6)
    _out(args, payload)


def cmd_spectrum(args):
    cs = _cs(args)
    _out(args, {"input": cs_payload(cs), "mu": milnor(cs), "spectrum": rats(spectrum(cs))})


def cmd_yano(args):
    cs = _cs(args)
    b1, b2 = yano_sets(cs)
    _out(args, {"input": cs_payload(cs), "B1": rats(b1), "B2": rats(b2)})


def cmd_split(args):
    cs = _cs(args)
    b11, b12, b21, b22 = split_sets(cs)
    _out(args, {"input": cs_payload(cs), "B11": rats(b11), "B12": rats(b12),
                "B21": rats(b21), "B22": rats(b22)})


def cmd_common_roots(args):
    cs = _cs(args)
    _out(args, {"input": cs_payload(cs), "CR": rats(common_roots(cs))})


def cmd_bounds(args):
    cs = _cs(args)
    lo, up, gen = dim_bounds(cs)
    from .invariants import tjurina_bound, tjurina_bound_at_lower
    _out(args, {"input": cs_payload(cs), "dim_lower": lo, "dim_upper": up,
                "generic_dim": gen if isinstance(gen, int) else rat(gen),
                "tjurina_lower": tjurina_bound(cs),
                "tjurina_at_dim_lower": tjurina_bound_at_lower(cs)})


def cmd_certify(args):
    cs = _cs(args)
    if args.beta is not None:
        certs = [certify_root(cs, parse_rational(args.beta))]
    else:
        certs = certify_all(cs)
    payload = {"input": cs_payload(cs), "certificates": [certificate_payload(c) for c in certs],
               "all_valid": all(c.valid for c in certs)}
    _out(args, payload)
    return 0 if payload["all_valid"] else 1


def _load_family(path, expected_sign=None):
    from .residues.families import family_from_json
    with open(path) as fh:
        data = json.load(fh)
    if expected_sign and data.get("sign", "+") != expected_sign:
        raise InvalidCharSeq(f"--family asks for sign {expected_sign!r}, spec file has "
                             f"{data.get('sign')!r}")
    return family_from_json(data)


def cmd_residue(args):
    from .residues.engine import residue, residue_sides
    from .residues.oracle import numeric_sides
    sign = {"plus": "+", "minus": "-"}[args.family]
    family, values = _load_family(args.spec, sign)
    betas = [args.beta1, args.beta2] + ([args.beta3] if sign == "-" else [])
    alpha = parse_rational(args.alpha)
    combo = residue(family, betas, alpha)
    shown = combo.substitute_named(values) if values else combo
    payload = {
        "family": args.family, "betas": betas, "alpha": rat(alpha),
        "combo": shown.render(), "zero": shown.is_zero(),
        "transcendence_witness": shown.is_transcendence_witness,
        "params": {k: rat(v) for k, v in sorted(values.items())},
    }
    if args.numeric:
        if shown.free_params():
            raise EngineError("numeric evaluation needs values for every parameter")
        idx = {family.params.index(k): v for k, v in values.items()}
        payload["numeric"] = {"combo": shown.numeric(),
                              "quadrature": numeric_sides(residue_sides(family, betas, alpha), idx)}
    if args.json:
        sys.stdout.write(emit(payload, "json"))
    else:
        sys.stdout.write(payload["combo"] + "\n")
        if args.numeric:
            sys.stdout.write(f"numeric: {payload['numeric']['combo']!r} "
                             f"(quadrature {payload['numeric']['quadrature']!r})\n")


def cmd_solve_t(args):
    from .residues.claims import claim1_enumerate, claim2_enumerate, solve_vanishing_params
    family, _ = _load_family(args.spec)
    cs = family.cs
    beta = parse_rational(args.beta)
    if family.sign == "+":
        k = beta * cs.N1 - cs.m - cs.n1
        if k.denominator != 1:
            raise EngineError(f"{beta} is not of the form (m + n1 + k)/(m n1 n2)")
        targets = [(e.beta1, e.beta2, 0) for e in claim1_enumerate(cs, int(k)).entries]
    else:
        k = beta * cs.n2 * cs.D - (cs.m + cs.n1) * cs.n2 - cs.q
        if k.denominator != 1:
            raise EngineError(f"{beta} is not of the form ((m + n1) n2 + q + k)/(n2 D)")
        targets = [(e.beta1, e.beta2, e.beta3) for e in claim2_enumerate(cs, int(k)).entries]
    sol = solve_vanishing_params(family, beta, targets)
    payload = {"beta": rat(beta), "targets": [list(t) for t in targets],
               "solution": {k: rat(v) for k, v in sol.items()}}
    sys.stdout.write(emit(payload, "json"))


def cmd_sweep(args):
    grid = admissible_grid(args.max_n1n2m, args.max_q, simple_only=not args.all)
    jobs = args.jobs or os.cpu_count() or 1
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(sweep_row, grid, chunksize=8))
    else:
        rows = [sweep_row(cs) for cs in grid]
    if args.csv:
        sys.stdout.write(emit(rows, "csv"))
    else:
        sys.stdout.write(emit({"rows": rows}, "json"))


def cmd_verify(args):
    from .golden import run_all
    results = run_all()
    width = max(len(name) for name, _, _ in results)
    for name, ok, detail in results:
        line = f"{'PASS' if ok else 'FAIL'}  {name.ljust(width)}".rstrip()
        if not ok or args.verbose:
            line += f"  {detail}"
        sys.stdout.write(line + "\n")
    failed = sum(not ok for _, ok, _ in results)
    sys.stdout.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bexponents",
        description="Bernstein exponents of plane curve germs with two Puiseux pairs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_cs(p):
        p.add_argument("--n1", type=int, required=True)
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--n2", type=int, required=True)
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        return p

    p = with_cs(sub.add_parser("invariants", help="full invariant report"))
    p.add_argument("--timing", action="store_true", help="add a wall-clock field")
    p.set_defaults(func=cmd_invariants)
    for name, func in (("spectrum", cmd_spectrum), ("yano", cmd_yano), ("split", cmd_split),
                       ("common-roots", cmd_common_roots), ("bounds", cmd_bounds)):
        with_cs(sub.add_parser(name)).set_defaults(func=func)

    p = with_cs(sub.add_parser("certify", help="non-integrality certificates"))
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--all", action="store_true")
    g.add_argument("--beta")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("residue", help="exact residue of a family integral")
    p.add_argument("--family", choices=["plus", "minus"], required=True)
    p.add_argument("--spec", required=True, help="family JSON file")
    p.add_argument("--beta1", type=int, required=True)
    p.add_argument("--beta2", type=int, required=True)
    p.add_argument("--beta3", type=int, default=0)
    p.add_argument("--alpha", required=True)
    p.add_argument("--numeric", action="store_true", help="add floating-point values")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_residue)

    p = sub.add_parser("solve-t", help="parameters killing the residues at -beta")
    p.add_argument("--spec", required=True)
    p.add_argument("--beta", required=True)
    p.set_defaults(func=cmd_solve_t)

    p = sub.add_parser("sweep", help="invariants over a grid")
    p.add_argument("--max-n1n2m", type=int, required=True)
    p.add_argument("--max-q", type=int, default=12)
    p.add_argument("--all", action="store_true", help="include germs failing the eigenvalue condition")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run the golden example checks")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except InvalidCharSeq as exc:
        sys.stderr.write(f"invalid characteristic sequence: {exc}\n")
        return 2
    except (EngineError, ValueError, ZeroDivisionError) as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 3
    return code or 0


def main():
    sys.exit(run())
