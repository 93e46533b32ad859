"""Exhaustive comparison of the two decomposition pipelines over small prime fields.

For every nonsingular short Weierstrass curve E over F_p and every n, the
restriction of E over F_{p^n} back to F_p is decomposed twice: once from the
point-counting oracle and once from the Frobenius pi^n, computed by arithmetic
in Q(pi) rather than by the trace recurrence.  Each case also checks the
isotypic count, the radical-irreducibility equivalence, Brauer reciprocity and
the soundness of the simplicity criterion.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .algebra.numberfield import NumberField
from .algebra.poly import Poly
from .errors import ConsistencyError
from .honda_tate import WeilNumber
from .oracle import EllipticCurveParams, count_points, nonsingular_pairs, oracle_decompose
from .restriction import (
    RestrictionProblem,
    decompose_restriction,
    frobenius_field,
    radical_irreducible,
    simplicity_verdict,
)


@dataclass(frozen=True)
class SweepConfig:
    primes: tuple[int, ...] = (5, 7, 11, 13)
    n_max: int = 6


@dataclass(frozen=True)
class CaseResult:
    """Outcome for one (p, t, n); shared by every curve with that trace."""

    p: int
    t: int
    n: int
    pi_minpoly: Poly
    agree: bool
    isotypic_ok: bool
    radical_ok: bool
    brauer_ok: bool
    verdict: str
    sound: bool
    error: str = ""

    @property
    def passed(self) -> bool:
        return self.agree and self.isotypic_ok and self.radical_ok and self.brauer_ok and self.sound


@dataclass
class SweepReport:
    config: SweepConfig
    curves: dict[int, int] = field(default_factory=dict)
    rows: list[tuple[int, int, int, int, CaseResult]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def failures(self) -> list[tuple[int, int, int, int, CaseResult]]:
        return [r for r in self.rows if not r[4].passed]

    @property
    def theorem_hits(self) -> int:
        return sum(1 for r in self.rows if r[4].verdict == "simple-by-theorem")

    @property
    def soundness_violations(self) -> int:
        return sum(1 for r in self.rows if not r[4].sound)

    def summary(self) -> list[dict]:
        out = []
        for p in self.config.primes:
            rows = [r for r in self.rows if r[0] == p]
            verdicts = Counter(r[4].verdict for r in rows)
            out.append({
                "p": p,
                "curves": self.curves.get(p, 0),
                "cases": len(rows),
                "agree": sum(r[4].agree for r in rows),
                "isotypic_ok": sum(r[4].isotypic_ok for r in rows),
                "simple_by_theorem": verdicts.get("simple-by-theorem", 0),
                "soundness_violations": sum(not r[4].sound for r in rows),
                "pass": all(r[4].passed for r in rows),
            })
        return out


def frobenius_power_minpoly(t: int, p: int, n: int) -> Poly:
    """Minimal polynomial of pi^n where pi is a root of x^2 - t x + p."""
    F = NumberField(Poly([p, -t, 1]), name="pi")
    return (F.gen**n).minpoly()


@lru_cache(maxsize=4096)
def compare_case(p: int, t: int, n: int) -> CaseResult:
    mp = frobenius_power_minpoly(t, p, n)
    try:
        prob = RestrictionProblem(WeilNumber(mp, p, n), n)
        dec = decompose_restriction(prob)
        E = _any_curve(p, t)
        oracle = oracle_decompose(E, n)
    except ConsistencyError as exc:
        return CaseResult(p, t, n, mp, False, False, False, False, "error", False, str(exc))
    agree = dec.signature() == oracle.signature()
    isotypic_ok = dict(dec.checks).get("isotypic-count") is True
    F, pi = frobenius_field(prob.pi_K)
    radical_ok = radical_irreducible(F, pi, n).irreducible == (dec.isotypic_count == 1)
    brauer_ok = all(
        sum(v for _, v in cls.invariants) % 1 == 0
        for d in (dec, oracle)
        for cls, _ in d.components
    )
    try:
        verdict = simplicity_verdict(prob)
        kind, sound = verdict.kind, True
    except ConsistencyError as exc:
        return CaseResult(p, t, n, mp, agree, isotypic_ok, radical_ok, brauer_ok, "violation", False, str(exc))
    return CaseResult(p, t, n, mp, agree, isotypic_ok, radical_ok, brauer_ok, kind, sound)


@lru_cache(maxsize=256)
def _curves(p: int) -> tuple[tuple[int, int, int], ...]:
    return tuple((a4, a6, count_points(EllipticCurveParams(p, a4, a6))[1]) for a4, a6 in nonsingular_pairs(p))


def _any_curve(p: int, t: int) -> EllipticCurveParams:
    for a4, a6, tt in _curves(p):
        if tt == t:
            return EllipticCurveParams(p, a4, a6)
    raise ValueError(f"no curve of trace {t} over F_{p}")


def run_sweep(config: SweepConfig = SweepConfig()) -> SweepReport:
    start = time.perf_counter()
    report = SweepReport(config)
    for p in config.primes:
        curves = _curves(p)
        report.curves[p] = len(curves)
        for a4, a6, t in curves:
            for n in range(1, config.n_max + 1):
                report.rows.append((p, a4, a6, n, compare_case(p, t, n)))
    report.elapsed = time.perf_counter() - start
    return report
