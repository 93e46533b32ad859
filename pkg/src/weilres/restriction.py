"""Decomposition of a Weil restriction along F_{q_K} / F_{q_k}, [K:k] = n.

If A' over K has Frobenius pi_K then W = Res A' has characteristic polynomial
chi_{A'}(T^n).  Factoring it over Q and reading each factor through Honda-Tate
gives the isogeny decomposition.  The center of End(W) tensor Q is
Q(pi_K)[X]/(X^n - pi_K), so its factors over Q(pi_K) must match the distinct
rational factors of chi_W one for one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra.arith import prime_divisors
from .algebra.factor import MAX_DEGREE, factor_over_Q
from .algebra.numberfield import NFElement, NumberField, factor_over_field, is_minus4_fourth, is_nth_power
from .algebra.poly import Poly
from .errors import (
    ConsistencyError,
    InvalidInput,
    InvalidWeilNumber,
    MultiplicityNotIntegral,
    UnsupportedDegree,
)
from .honda_tate import IsogenyClass, WeilNumber, isogeny_class

CENTER_BASED = "center-based"
CHARPOLY_ORACLE = "charpoly-oracle"


@dataclass(frozen=True)
class RestrictionProblem:
    pi_K: WeilNumber
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInput("n must be a positive integer")
        if self.pi_K.a % self.n:
            raise InvalidInput(f"n={self.n} does not divide a={self.pi_K.a}: no subfield of that index")

    @property
    def p(self) -> int:
        return self.pi_K.p

    @property
    def a_k(self) -> int:
        """Exponent of the base field: q_k = p^(a/n)."""
        return self.pi_K.a // self.n


@dataclass(frozen=True)
class Decomposition:
    components: tuple[tuple[IsogenyClass, int], ...]
    provenance: str
    checks: tuple[tuple[str, Optional[bool]], ...] = ()
    center_poly: Optional[Poly] = None

    def signature(self):
        """Comparable form: sorted (minpoly, dim, multiplicity) triples."""
        return tuple(sorted(((c.minpoly, c.dim, k) for c, k in self.components),
                            key=lambda t: (t[0].sort_key(), t[1], t[2])))

    @property
    def isotypic_count(self) -> int:
        return len(self.components)

    @property
    def is_simple(self) -> bool:
        return len(self.components) == 1 and self.components[0][1] == 1

    @property
    def total_dim(self) -> int:
        return sum(c.dim * k for c, k in self.components)


@dataclass(frozen=True)
class RadicalVerdict:
    kind: str  # "irreducible", "reducible-power" or "reducible-minus4"
    q: Optional[int] = None
    witness: Optional[NFElement] = None

    @property
    def irreducible(self) -> bool:
        return self.kind == "irreducible"


@dataclass(frozen=True)
class SimplicityVerdict:
    kind: str  # "simple-by-theorem", "not-simple" or "theorem-inapplicable"
    reason: str
    ground_truth: str  # "simple" or "not-simple"
    descent_test_exact: bool
    decomposition: Decomposition


def chi_substitute(chi: Poly, n: int) -> Poly:
    if not chi:
        raise InvalidInput("chi must be nonzero")
    if n < 1:
        raise InvalidInput("n must be a positive integer")
    return chi.substitute_power(n)


def radical_irreducible(F: NumberField, alpha, n: int) -> RadicalVerdict:
    """Decide irreducibility of X^n - alpha over F by the q-th power and -4*beta^4 tests."""
    alpha = F(alpha)
    if alpha == 0:
        raise InvalidInput("alpha must be nonzero")
    if n < 1:
        raise InvalidInput("n must be a positive integer")
    for q in prime_divisors(n):
        beta = is_nth_power(F, alpha, q)
        if beta is not None:
            return RadicalVerdict("reducible-power", q, beta)
    if n % 4 == 0:
        beta = is_minus4_fourth(F, alpha)
        if beta is not None:
            return RadicalVerdict("reducible-minus4", 4, beta)
    return RadicalVerdict("irreducible")


def frobenius_field(w: WeilNumber) -> tuple[NumberField, NFElement]:
    """Q(pi) presented by the minimal polynomial of pi, together with pi itself."""
    if w.degree > 2:
        raise UnsupportedDegree(f"Q(pi) has degree {w.degree}; quadratic at most is supported here")
    F = NumberField(w.minpoly, name="pi", check=False)
    return F, F.gen


def descent_obstructions(prob: RestrictionProblem) -> list[tuple[int, Optional[NFElement]]]:
    """For each prime q | n, a q-th root of pi_K in Q(pi_K) if there is one."""
    if prob.n == 1:
        return []
    F, pi = frobenius_field(prob.pi_K)
    return [(q, is_nth_power(F, pi, q)) for q in prime_divisors(prob.n)]


def classes_from_charpoly(chi: Poly, p: int, a: int, provenance: str) -> Decomposition:
    """Split a characteristic polynomial into Honda-Tate classes over F_{p^a}."""
    if chi.degree > MAX_DEGREE:
        raise UnsupportedDegree(f"characteristic polynomial of degree {chi.degree} exceeds {MAX_DEGREE}")
    components = []
    for h, c in factor_over_Q(chi):
        try:
            w = WeilNumber(h, p, a)
        except InvalidWeilNumber as exc:
            raise ConsistencyError(f"factor {h} of a Frobenius polynomial is not a Weil polynomial") from exc
        cls = isogeny_class(w)
        if c % cls.m:
            raise MultiplicityNotIntegral(f"exponent {c} of {h} is not divisible by m={cls.m}")
        components.append((cls, c // cls.m))
    dim_ok = 2 * sum(cls.dim * k for cls, k in components) == chi.degree
    if not dim_ok:
        raise ConsistencyError("dimensions of the components do not add up")
    return Decomposition(tuple(components), provenance, (("dimension-additivity", True),))


def decompose_restriction(prob: RestrictionProblem, m_A: Optional[int] = None) -> Decomposition:
    cls_A = isogeny_class(prob.pi_K)
    if m_A is None:
        m_A = cls_A.m
    elif m_A != cls_A.m:
        raise InvalidInput(f"m_A={m_A} but the class of pi_K has Brauer order {cls_A.m}")
    g = prob.pi_K.minpoly
    chi_W = chi_substitute(g**m_A, prob.n)
    dec = classes_from_charpoly(chi_W, prob.p, prob.a_k, CENTER_BASED)

    checks = list(dec.checks)
    center_poly = Poly([1])
    for cls, _ in dec.components:
        center_poly = center_poly * cls.minpoly
    center_ok = center_poly == chi_substitute(g, prob.n)
    if not center_ok:
        raise ConsistencyError("center polynomial differs from minpoly(T^n)")
    checks.append(("center-dimension", True))

    if g.degree <= 2:
        F, pi = frobenius_field(prob.pi_K)
        radical = Poly.monomial(prob.n, F.one) - Poly([pi])
        count = len(factor_over_field(F, radical))
        if count != dec.isotypic_count:
            raise ConsistencyError(
                f"X^n - pi_K has {count} factors over Q(pi_K) but chi_W has {dec.isotypic_count}"
            )
        checks.append(("isotypic-count", True))
    else:
        checks.append(("isotypic-count", None))
    return Decomposition(dec.components, CENTER_BASED, tuple(checks), center_poly)


def simplicity_verdict(prob: RestrictionProblem) -> SimplicityVerdict:
    """Apply the simplicity criterion where its hypotheses are decidable, else report ground truth.

    kind is simple-by-theorem, not-simple (hypotheses fail, W splits) or
    theorem-inapplicable (hypotheses fail, W is simple anyway).

    The q-th root test decides descent to a subfield only when End(A') tensor Q
    is commutative (m_A = 1); then every Frobenius of a model over a subfield
    lies in Q(pi_K).  Otherwise the criterion is not applied.
    """
    dec = decompose_restriction(prob)
    truth = "simple" if dec.is_simple else "not-simple"
    n = prob.n
    m_A = isogeny_class(prob.pi_K).m

    def fallback(reason: str, exact: bool) -> SimplicityVerdict:
        # the criterion is silent here: report ground truth, which can only be negative or unexplained
        kind = "not-simple" if truth == "not-simple" else "theorem-inapplicable"
        return SimplicityVerdict(kind, reason, truth, exact, dec)

    if n == 1:
        return _checked(SimplicityVerdict("simple-by-theorem", "n = 1: W is A' itself", truth, True, dec))
    if prob.pi_K.degree > 2:
        return fallback("Q(pi_K) has degree > 2: root test not available", False)
    if m_A != 1:
        return fallback("End(A') is not commutative: the root test does not decide descent", False)
    roots = [(q, w) for q, w in descent_obstructions(prob) if w is not None]
    if roots:
        q, _ = roots[0]
        return fallback(f"pi_K has a root of order {q} in Q(pi_K): A' descends to a proper subfield", True)
    F, pi = frobenius_field(prob.pi_K)
    if n % 4 == 0 and is_minus4_fourth(F, pi) is not None:
        return fallback("4 | n and pi_K lies in -4*Q(pi_K)^4", True)
    return _checked(SimplicityVerdict("simple-by-theorem", "no descent and no -4*beta^4 obstruction",
                                      truth, True, dec))


def _checked(v: SimplicityVerdict) -> SimplicityVerdict:
    if v.kind == "simple-by-theorem" and v.ground_truth != "simple":
        raise ConsistencyError("simplicity criterion contradicts the characteristic-polynomial decomposition")
    return v
