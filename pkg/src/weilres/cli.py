"""Command-line entry point; every subcommand prints one JSON document.

Exit codes: 0 success, 2 invalid input, 3 unsupported size, 4 internal
consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra.arith import is_prime
from .algebra.numberfield import NumberField
from .algebra.poly import format_poly, parse_poly
from .cyclic import decompose_cyclic
from .errors import ConsistencyError, InvalidInput, UnsupportedSize
from .honda_tate import IsogenyClass, WeilNumber, char_poly_of_class, isogeny_class
from .oracle import EllipticCurveParams, count_points, frobenius_power_charpoly, oracle_decompose, oracle_decompose_weil
from .restriction import (
    Decomposition,
    RestrictionProblem,
    decompose_restriction,
    descent_obstructions,
    frobenius_field,
    radical_irreducible,
    simplicity_verdict,
)
from .skew import GroupAction, GroupTable, SkewElement, center_basis, component_dims
from .sweep import SweepConfig, frobenius_power_minpoly, run_sweep

EXIT_OK, EXIT_INVALID, EXIT_SIZE, EXIT_CONSISTENCY = 0, 2, 3, 4


def frac(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _weil(args) -> WeilNumber:
    g = parse_poly(args.minpoly)
    if not g.is_monic() or not g.is_integral():
        raise InvalidInput(f"{args.minpoly!r} is not monic with integer coefficients")
    return WeilNumber(g, args.p, args.a)


def class_json(c: IsogenyClass) -> dict:
    return {
        "minpoly": format_poly(c.minpoly),
        "q": c.weil.q,
        "center_degree": c.center_degree,
        "invariants": {k: frac(v) for k, v in c.invariants},
        "m": c.m,
        "dim": c.dim,
    }


def decomposition_json(d: Decomposition) -> dict:
    return {
        "provenance": d.provenance,
        "components": [dict(class_json(c), multiplicity=k) for c, k in d.components],
        "isotypic_components": d.isotypic_count,
    }


def _checks(pairs) -> dict:
    return {name: ("skipped" if ok is None else ok) for name, ok in pairs}


def cmd_honda_tate(args) -> dict:
    w = _weil(args)
    c = isogeny_class(w)
    total = sum((v for _, v in c.invariants), Fraction(0))
    chi = char_poly_of_class(c)
    return {
        "command": "honda-tate",
        "input": {"minpoly": format_poly(w.minpoly), "p": w.p, "a": w.a},
        "provenance": "honda-tate",
        "places": [{"p": pl.p, "e": pl.e, "f": pl.f, "v_gen": pl.v_gen} for pl in c.places],
        "real_places": c.real_places,
        "invariants": {k: frac(v) for k, v in c.invariants},
        "m": c.m,
        "dim": c.dim,
        "char_poly": format_poly(chi),
        "consistency": {
            "brauer-reciprocity": total % 1 == 0,
            "dimension-formula": 2 * c.dim == c.m * w.degree,
            "char-poly-degree": chi.degree == 2 * c.dim,
        },
    }


def cmd_restrict(args) -> dict:
    w = _weil(args)
    prob = RestrictionProblem(w, args.n)
    verdict = simplicity_verdict(prob)
    dec = verdict.decomposition
    oracle = oracle_decompose_weil(w, args.n)
    doc = {
        "command": "restrict",
        "input": {"minpoly": format_poly(w.minpoly), "p": w.p, "a": w.a, "n": args.n},
        "base_field_q": w.p**prob.a_k,
        **decomposition_json(dec),
        "center_polynomial": format_poly(dec.center_poly),
        "simple": dec.is_simple,
        "verdict": {
            "kind": verdict.kind,
            "reason": verdict.reason,
            "ground_truth": verdict.ground_truth,
            "descent_test_exact": verdict.descent_test_exact,
        },
    }
    if w.degree <= 2:
        F, pi = frobenius_field(w)
        rad = radical_irreducible(F, pi, args.n)
        tested = descent_obstructions(prob)
        doc["descent_checks"] = [{"q": q, "root": None if b is None else str(b)} for q, b in tested]
        doc["descent_obstructions"] = [{"q": q, "witness": str(b)} for q, b in tested if b is not None]
        doc["radical"] = {"kind": rad.kind, "q": rad.q, "witness": None if rad.witness is None else str(rad.witness)}
    else:
        doc["descent_checks"] = None
        doc["descent_obstructions"] = None
        doc["radical"] = None
    agree = oracle.signature() == dec.signature()
    if not agree:
        raise ConsistencyError("charpoly oracle disagrees with the center-based decomposition")
    doc["consistency"] = dict(_checks(dec.checks), **{"oracle-agreement": agree})
    return doc


def cmd_cyclic(args) -> dict:
    r = decompose_cyclic(args.n, args.g, args.cm_disc)
    comps = []
    for c in r.components:
        comps.append({"d": c.d, "dim": c.dim, "split": c.split, "parts": list(c.parts), "simple": not c.split})
    return {
        "command": "cyclic",
        "input": {"n": args.n, "g": args.g, "cm_disc": args.cm_disc},
        "provenance": "center-based",
        "hypotheses": r.hypotheses,
        "components": comps,
        "dims": r.dims(),
        "total_dim": r.total_dim,
        "consistency": dict(_checks(r.checks), **{"dimension-total": r.total_dim == args.n * args.g}),
    }


def cmd_skew_center(args) -> dict:
    field = NumberField(parse_poly(args.minpoly), name="a")
    group = GroupTable.cyclic(args.n)
    if args.action == "conj":
        action = GroupAction.conjugation(group, field)
    else:
        action = GroupAction.trivial(group, field)
    basis = center_basis(action)
    e = SkewElement(action, {s: Fraction(1, args.n) for s in group})
    pair = [e, SkewElement.one(action) - e]
    dims = component_dims(action, pair)
    return {
        "command": "skew-center",
        "input": {"field": format_poly(field.defining), "n": args.n, "action": args.action},
        "provenance": "center-based",
        "center_dim": len(basis),
        "center_basis": [{str(s): str(v) for s, v in z.coeffs.items()} for z in basis],
        "idempotents": ["average of the group", "1 - average of the group"],
        "component_dims": dims,
        "consistency": {"center-commutes": True, "component-dims-sum": sum(dims) == args.n},
    }


def cmd_oracle(args) -> dict:
    E = EllipticCurveParams(args.p, args.a4, args.a6)
    count, t = count_points(E)
    dec = oracle_decompose(E, args.n)
    mp = frobenius_power_minpoly(t, E.p, args.n)
    center = decompose_restriction(RestrictionProblem(WeilNumber(mp, E.p, args.n), args.n))
    agree = center.signature() == dec.signature()
    if not agree:
        raise ConsistencyError("center-based decomposition disagrees with the oracle")
    return {
        "command": "oracle",
        "input": {"p": E.p, "a4": E.a4, "a6": E.a6, "n": args.n},
        "points": count,
        "trace": t,
        "base_change_charpoly": format_poly(frobenius_power_charpoly(t, E.p, args.n)),
        **decomposition_json(dec),
        "consistency": dict(_checks(dec.checks), **{"center-agreement": agree}),
    }


def cmd_sweep(args) -> dict:
    primes = tuple(p for p in range(5, args.p_max + 1) if is_prime(p))
    report = run_sweep(SweepConfig(primes, args.n_max))
    failures = [
        {"p": p, "a4": a4, "a6": a6, "n": n, "trace": r.t, "error": r.error}
        for p, a4, a6, n, r in report.failures
    ]
    return {
        "command": "sweep",
        "input": {"p_max": args.p_max, "n_max": args.n_max},
        "provenance": "center-based vs charpoly-oracle",
        "table": report.summary(),
        "cases": len(report.rows),
        "failures": failures,
        "pass": not failures,
        "consistency": {
            "cross-pipeline": all(r[4].agree for r in report.rows),
            "isotypic-count": all(r[4].isotypic_ok for r in report.rows),
            "radical-equivalence": all(r[4].radical_ok for r in report.rows),
            "brauer-reciprocity": all(r[4].brauer_ok for r in report.rows),
            "theorem-soundness": report.soundness_violations == 0,
        },
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weilres", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="pretty", action="store_false", help="compact JSON (default)")
        fmt.add_argument("--pretty", dest="pretty", action="store_true", help="indented JSON")
        p.set_defaults(pretty=False)
        return p

    ht = common(sub.add_parser("honda-tate", help="isogeny-class data of a Weil number"))
    ht.add_argument("--minpoly", required=True)
    ht.add_argument("--p", type=int, required=True)
    ht.add_argument("--a", type=int, default=1)
    ht.set_defaults(func=cmd_honda_tate)

    rs = common(sub.add_parser("restrict", help="decompose a Weil restriction"))
    rs.add_argument("--minpoly", required=True)
    rs.add_argument("--p", type=int, required=True)
    rs.add_argument("--a", type=int, required=True)
    rs.add_argument("--n", type=int, required=True)
    rs.set_defaults(func=cmd_restrict)

    cy = common(sub.add_parser("cyclic", help="cyclotomic decomposition for a variety over the base"))
    cy.add_argument("--n", type=int, required=True)
    cy.add_argument("--g", type=int, default=1)
    cy.add_argument("--cm-disc", type=int, default=None)
    cy.set_defaults(func=cmd_cyclic)

    sk = common(sub.add_parser("skew-center", help="center of a cyclic skew group ring"))
    sk.add_argument("--minpoly", default="x^2+1", help="defining polynomial of the coefficient field")
    sk.add_argument("--n", type=int, default=2, help="order of the cyclic group")
    sk.add_argument("--action", choices=("conj", "trivial"), default="conj")
    sk.set_defaults(func=cmd_skew_center)

    orc = common(sub.add_parser("oracle", help="point-counting decomposition of a curve's restriction"))
    orc.add_argument("--p", type=int, required=True)
    orc.add_argument("--a4", type=int, required=True)
    orc.add_argument("--a6", type=int, required=True)
    orc.add_argument("--n", type=int, default=1)
    orc.set_defaults(func=cmd_oracle)

    sw = common(sub.add_parser("sweep", help="cross-pipeline sweep over small primes"))
    sw.add_argument("--p-max", type=int, default=13)
    sw.add_argument("--n-max", type=int, default=6)
    sw.set_defaults(func=cmd_sweep)
    return parser


def run(args: argparse.Namespace) -> tuple[dict | None, int]:
    """Execute a parsed request; errors are reported on stderr and mapped to exit codes."""
    try:
        doc = args.func(args)
    except (InvalidInput, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None, EXIT_INVALID
    except UnsupportedSize as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return None, EXIT_SIZE
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return None, EXIT_CONSISTENCY
    if doc["command"] == "sweep" and not doc["pass"]:
        return doc, EXIT_CONSISTENCY
    return doc, EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    doc, code = run(args)
    if doc is not None:
        print(json.dumps(doc, indent=2 if args.pretty else None))
    return code


if __name__ == "__main__":
    sys.exit(main())
