"""Acceptance suite: one PASS/FAIL line per criterion, printed straight to the terminal.

Criteria 1, 2 and 6 go through the command line in a fresh interpreter.  The
others run in-process after every memo cache in the package has been cleared,
so the timings are cold.
"""

import json
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from weilres import honda_tate
from weilres.algebra.numberfield import NumberField
from weilres.algebra.poly import Poly
from weilres.cyclic import cross_check_finite, cyclotomic_idempotents
from weilres.honda_tate import WeilNumber
from weilres.oracle import oracle_decompose_trace
from weilres.restriction import RestrictionProblem, decompose_restriction
from weilres.skew import (
    GroupAction,
    GroupTable,
    SkewElement,
    center_basis,
    component_dims,
    conjugation_dagger,
    left_regular_matrix,
    matmul_field,
    rosati_involute,
)
from weilres.sweep import SweepConfig, frobenius_power_minpoly, run_sweep

PRIMES = (5, 7, 11, 13)
N_MAX = 6


def report(capsys, number, ok, detail):
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")


def clear_caches():
    for name, mod in list(sys.modules.items()):
        if name == "weilres" or name.startswith("weilres."):
            for obj in vars(mod).values():
                if callable(getattr(obj, "cache_clear", None)):
                    obj.cache_clear()


def cli(*argv):
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "weilres", *argv], capture_output=True, text=True)
    elapsed = time.perf_counter() - start
    assert proc.returncode == 0, proc.stderr
    return json.loads(proc.stdout), elapsed


@pytest.fixture(scope="module")
def sweep():
    clear_caches()
    return run_sweep(SweepConfig(PRIMES, N_MAX))


def test_criterion_1_supersingular_restriction(capsys):
    doc, elapsed = cli("restrict", "--minpoly", "x+25", "--p", "5", "--a", "4", "--n", "4")
    comps = [(c["minpoly"], c["dim"], c["multiplicity"]) for c in doc["components"]]
    ok = (
        doc["isotypic_components"] == 1
        and comps == [("x^4 + 25", 2, 2)]
        and doc["center_polynomial"] == "x^4 + 25"
        and doc["verdict"]["kind"] == "not-simple"
        and doc["simple"] is False
        and elapsed < 1.0
    )
    report(capsys, 1, ok, f"pi_K=-25 over F_625, n=4: components {comps}, center {doc['center_polynomial']}, "
                          f"verdict {doc['verdict']['kind']}, {elapsed:.2f} s")
    assert ok


def test_criterion_2_minus4_restriction(capsys):
    doc, elapsed = cli("restrict", "--minpoly", "x^2-14*x+81", "--p", "3", "--a", "4", "--n", "4")
    comps = [(c["dim"], c["multiplicity"]) for c in doc["components"]]
    ok = (
        doc["descent_obstructions"] == []
        and doc["radical"]["kind"] == "reducible-minus4"
        and doc["isotypic_components"] == 2
        and comps == [(2, 1), (2, 1)]
        and elapsed < 1.0
    )
    report(capsys, 2, ok, f"pi_K root of x^2-14x+81, n=4: obstructions {doc['descent_obstructions']}, "
                          f"radical {doc['radical']['kind']}, components {comps}, {elapsed:.2f} s")
    assert ok


def test_criterion_3_cross_pipeline_sweep(capsys, sweep):
    expected_curves = {p: p * p - p for p in PRIMES}
    bad = [r for r in sweep.rows if not (r[4].agree and r[4].isotypic_ok)]
    ok = not bad and sweep.curves == expected_curves and len(sweep.rows) == sum(expected_curves.values()) * N_MAX
    ok = ok and sweep.elapsed < 120
    report(capsys, 3, ok, f"{len(sweep.rows)} (curve, n) cases over p in {PRIMES}, n <= {N_MAX}: "
                          f"{len(sweep.rows) - len(bad)} agree with isotypic count, {sweep.elapsed:.1f} s")
    assert ok


def test_criterion_4_theorem_soundness(capsys, sweep):
    hits = [r for r in sweep.rows if r[4].verdict == "simple-by-theorem"]
    violations = []
    for p, _, _, n, case in hits:
        truth = oracle_decompose_trace(p, case.t, n)
        if not (len(truth.components) == 1 and truth.components[0][1] == 1):
            violations.append((p, case.t, n))
    ok = not violations and sweep.soundness_violations == 0
    report(capsys, 4, ok, f"{len(hits)} simple-by-theorem verdicts, {len(violations)} contradict the oracle")
    assert ok


def test_criterion_5_cyclic_cross_check(capsys):
    clear_caches()
    start = time.perf_counter()
    checked, failed = 0, []
    for p in PRIMES:
        for t in range(-2 * p, 2 * p + 1):
            if t % p == 0 or t * t >= 4 * p:
                continue
            for n in range(1, N_MAX + 1):
                checked += 1
                if not cross_check_finite(p, t, n).agree:
                    failed.append((p, t, n))
    inst = cross_check_finite(5, 2, 4)
    oracle_traces = sorted(-int(c.minpoly[1]) for c, _ in inst.oracle.components)
    center = decompose_restriction(RestrictionProblem(WeilNumber(frobenius_power_minpoly(2, 5, 4), 5, 4), 4))
    center_traces = sorted(-int(c.minpoly[1]) for c, _ in center.components)
    elapsed = time.perf_counter() - start
    ok = (
        not failed
        and inst.cyclic.dims() == [1, 1, 1, 1]
        and oracle_traces == center_traces == [-4, -2, 2, 4]
        and all(k == 1 and c.dim == 1 for c, k in inst.oracle.components)
        and elapsed < 10
    )
    report(capsys, 5, ok, f"{checked} ordinary (p, t, n) cases, {len(failed)} disagreements; "
                          f"p=5 t=2 n=4 traces {oracle_traces} (oracle) {center_traces} (center), {elapsed:.2f} s")
    assert ok


def test_criterion_6_cyclic_cm(capsys):
    five, _ = cli("cyclic", "--n", "5", "--g", "1", "--cm-disc", "-4")
    four, _ = cli("cyclic", "--n", "4", "--g", "1", "--cm-disc", "-4")
    comps5 = [(c["d"], c["dim"], c["simple"]) for c in five["components"]]
    w4 = [c for c in four["components"] if c["d"] == 4]
    ok = comps5 == [(1, 1, True), (5, 4, True)] and len(w4) == 1 and w4[0]["parts"] == [1, 1]
    report(capsys, 6, ok, f"n=5, D=-4: (d, dim, simple) {comps5}; n=4, D=-4: W_4 parts {w4[0]['parts']}")
    assert ok


def _random_element(rng, action):
    F = action.field
    coeffs = {}
    for s in action.group:
        if rng.random() < 0.7:
            u = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            v = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            coeffs[s] = F(u) + v * F.gen if F.degree == 2 else F(u)
    return SkewElement(action, coeffs)


def _skew_failures(action, count, seed):
    rng = random.Random(seed)
    dagger = conjugation_dagger(action.field)
    n = action.group.order
    failures = 0
    elems = [_random_element(rng, action) for _ in range(count)]
    for x, y in zip(elems, elems[1:] + elems[:1]):
        rx = rosati_involute(x, dagger)
        L, Lr = left_regular_matrix(x), left_regular_matrix(rx)
        checks = (
            left_regular_matrix(x * y) == matmul_field(L, left_regular_matrix(y)),
            rosati_involute(x * y, dagger) == rosati_involute(y, dagger) * rx,
            rosati_involute(rx, dagger) == x,
            all(Lr[s][t] == dagger(L[t][s]) for s in range(n) for t in range(n)),
        )
        failures += not all(checks)
    return failures


def test_criterion_7_property_suites(capsys, monkeypatch):
    clear_caches()
    start = time.perf_counter()
    for n in range(1, 61):
        cyclotomic_idempotents(n)  # raises on any failed invariant
    Qi = NumberField.quadratic(-1)
    conj = GroupAction.conjugation(GroupTable.cyclic(2), Qi)
    triv = GroupAction.trivial(GroupTable.cyclic(6), NumberField.rationals())
    skew_fail = _skew_failures(conj, 1000, 7) + _skew_failures(triv, 1000, 8)

    calls = []
    original = honda_tate._isogeny_class_cached

    def recording(minpoly, p, a):
        cls = original(minpoly, p, a)
        calls.append(sum((v for _, v in cls.invariants), Fraction(0)) % 1 == 0)
        return cls

    monkeypatch.setattr(honda_tate, "_isogeny_class_cached", recording)
    sweep = run_sweep(SweepConfig(PRIMES, N_MAX))
    for p in PRIMES:
        for t in range(-2 * p, 2 * p + 1):
            if t * t < 4 * p:
                honda_tate.isogeny_class(WeilNumber(Poly([p, -t, 1]), p, 1))
        for sign in (1, -1):
            honda_tate.isogeny_class(WeilNumber(Poly([sign * p, 1]), p, 2))
    elapsed = time.perf_counter() - start
    brauer_fail = calls.count(False)
    ok = skew_fail == 0 and brauer_fail == 0 and all(r[4].brauer_ok for r in sweep.rows) and elapsed < 30
    report(capsys, 7, ok, f"idempotents n<=60 verified; skew laws on 2x1000 elements, {skew_fail} failures; "
                          f"Brauer reciprocity on {len(calls)} Honda-Tate calls, {brauer_fail} failures; {elapsed:.1f} s")
    assert ok


def test_criterion_8_crossed_product_center(capsys):
    Qi = NumberField.quadratic(-1)
    action = GroupAction.conjugation(GroupTable.cyclic(2), Qi)
    basis = center_basis(action)
    one = SkewElement.one(action)
    e = (one + SkewElement.group_element(action, 1)) * Fraction(1, 2)
    dims = component_dims(action, [e, one - e])
    ok = len(basis) == 1 and basis[0].coeffs.keys() == {0} and dims == [1, 1]
    report(capsys, 8, ok, f"Q(i) with conjugation, Z/2: center dimension {len(basis)}, component_dims {dims}")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v", "-p", "no:cacheprovider"]))
