"""Cyclic restrictions of varieties already defined over the base field.

For W = Res_{K/k}(A_K) with K/k cyclic of degree n, the group algebra
Q[X]/(X^n - 1) of Gal(K/k) splits along the cyclotomic factors of X^n - 1.
Its orthogonal idempotents E_d cut W into pieces W_d with dim W_d = phi(d) dim A.
When End(A) tensor Q is Q the pieces are simple; for a CM elliptic curve the
piece W_d splits in two exactly when the CM field sits inside Q(zeta_d).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional

from .algebra.arith import divisors, euler_phi, fundamental_discriminant, is_fundamental_discriminant
from .algebra.cyclotomic import cyclotomic, quad_in_cyclotomic
from .algebra.numberfield import NumberField, factor_over_field
from .algebra.poly import Poly, poly_xgcd
from .errors import ConsistencyError, InvalidInput, NotFundamental, UnsupportedSize
from .oracle import curve_with_trace, oracle_decompose
from .restriction import Decomposition
from .skew import GroupAction, GroupTable, SkewElement, component_dims

MAX_N = 60
MAX_RANK_CHECK = 12


@dataclass(frozen=True)
class IdempotentEntry:
    d: int
    phi: Poly        # Phi_d
    cofactor: Poly   # (X^n - 1) / Phi_d
    psi: Poly        # inverse of the cofactor modulo Phi_d
    idempotent: Poly  # E_d = psi * cofactor reduced modulo X^n - 1


@dataclass(frozen=True)
class IdempotentSet:
    n: int
    entries: tuple[IdempotentEntry, ...]

    def __getitem__(self, d: int) -> IdempotentEntry:
        for e in self.entries:
            if e.d == d:
                return e
        raise KeyError(d)


def cyclotomic_idempotents(n: int) -> IdempotentSet:
    if not 1 <= n <= MAX_N:
        raise UnsupportedSize(f"n must lie in 1..{MAX_N}")
    modulus = Poly.monomial(n) - 1
    entries = []
    for d in divisors(n):
        phi = cyclotomic(d)
        cof = modulus.exact_div(phi)
        g, s, _ = poly_xgcd(cof % phi, phi)
        if g != Poly([1]):
            raise ConsistencyError(f"cofactor of Phi_{d} is not coprime to it")
        entries.append(IdempotentEntry(d, phi, cof, s, (s * cof) % modulus))
    result = IdempotentSet(n, tuple(entries))
    _verify(result)
    return result


def _cyclic_product(a: list[int], b: list[int], n: int) -> list[int]:
    out = [0] * n
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[(i + j) % n] += x * y
    return out


def _verify(ids: IdempotentSet) -> None:
    """Check E_d^2 = E_d, E_d E_e = 0 and sum E_d = 1 in Q[X]/(X^n - 1).

    All E_d share the denominator D = lcm of their coefficient denominators, so
    the checks run on the integer vectors D*E_d with cyclic convolution.
    """
    n = ids.n
    den = 1
    for e in ids.entries:
        for c in e.idempotent.coeffs:
            den = lcm(den, Fraction(c).denominator)
    vecs = []
    for e in ids.entries:
        c = e.idempotent.coeffs
        vecs.append([int(Fraction(c[k]) * den) if k < len(c) else 0 for k in range(n)])
    total = [0] * n
    for a, va in zip(ids.entries, vecs):
        total = [x + y for x, y in zip(total, va)]
        if _cyclic_product(va, va, n) != [den * x for x in va]:
            raise ConsistencyError(f"E_{a.d} is not idempotent")
        for b, vb in zip(ids.entries, vecs):
            if a.d < b.d and any(_cyclic_product(va, vb, n)):
                raise ConsistencyError(f"E_{a.d} E_{b.d} is not zero")
    if total != [den] + [0] * (n - 1):
        raise ConsistencyError("idempotents do not sum to 1")


@dataclass(frozen=True)
class CyclicComponent:
    d: int
    dim: int
    split: bool
    parts: tuple[int, ...]


@dataclass(frozen=True)
class CyclicComponentReport:
    n: int
    g: int
    cm_disc: Optional[int]
    components: tuple[CyclicComponent, ...]
    checks: tuple[tuple[str, Optional[bool]], ...]
    hypotheses: str = "caller-asserted"

    @property
    def total_dim(self) -> int:
        return sum(c.dim for c in self.components)

    def dims(self) -> list[int]:
        return sorted(x for c in self.components for x in c.parts)


def decompose_cyclic(n: int, g: int, cm_disc: Optional[int] = None) -> CyclicComponentReport:
    if n < 1 or g < 1:
        raise InvalidInput("n and g must be positive")
    if n > MAX_N:
        raise UnsupportedSize(f"n must be at most {MAX_N}")
    if cm_disc is not None:
        if cm_disc >= 0 or not is_fundamental_discriminant(cm_disc):
            raise NotFundamental(f"{cm_disc} is not the discriminant of an imaginary quadratic field")
        if g != 1:
            raise InvalidInput("a CM discriminant requires g = 1")
    ids = cyclotomic_idempotents(n)
    comps = []
    field_check = True if cm_disc is not None else None
    F = NumberField.quadratic(_radicand(cm_disc)) if cm_disc is not None else None
    for entry in ids.entries:
        d = entry.d
        dim = euler_phi(d) * g
        split = cm_disc is not None and quad_in_cyclotomic(cm_disc, d)
        if F is not None:
            reducible = len(factor_over_field(F, entry.phi)) > 1
            field_check = field_check and (reducible == split)
        parts = (dim // 2, dim // 2) if split else (dim,)
        comps.append(CyclicComponent(d, dim, split, parts))
    if field_check is False:
        raise ConsistencyError("conductor test disagrees with factoring Phi_d over the CM field")
    checks = [("idempotents", True), ("cm-field-factorization", field_check)]
    checks.append(("idempotent-ranks", _rank_check(ids) if n <= MAX_RANK_CHECK else None))
    report = CyclicComponentReport(n, g, cm_disc, tuple(comps), tuple(checks))
    if report.total_dim != n * g:
        raise ConsistencyError("component dimensions do not add up to n*g")
    return report


def _radicand(disc: int) -> int:
    return disc // 4 if disc % 4 == 0 else disc


def _rank_check(ids: IdempotentSet) -> bool:
    """In the group algebra Q[Z/n], E_d(sigma) has rank phi(d) on the regular representation."""
    n = ids.n
    action = GroupAction.trivial(GroupTable.cyclic(n), NumberField.rationals())
    elements = [SkewElement(action, {k: c for k, c in enumerate(e.idempotent.coeffs)}) for e in ids.entries]
    ranks = component_dims(action, elements)
    ok = ranks == [euler_phi(e.d) for e in ids.entries]
    if not ok:
        raise ConsistencyError(f"idempotent ranks {ranks} differ from phi(d)")
    return ok


@dataclass(frozen=True)
class CrossCheck:
    agree: bool
    cyclic: CyclicComponentReport
    oracle: Decomposition
    curve: tuple[int, int]


def cross_check_finite(p: int, t: int, n: int) -> CrossCheck:
    """Compare the cyclotomic prediction with the point-counting oracle for an ordinary curve."""
    if t % p == 0 or t * t >= 4 * p:
        raise InvalidInput(f"trace {t} does not give an ordinary elliptic curve over F_{p}")
    D = fundamental_discriminant(t * t - 4 * p)
    report = decompose_cyclic(n, 1, D)
    E = curve_with_trace(p, t)
    dec = oracle_decompose(E, n)
    oracle_dims = sorted(c.dim for c, k in dec.components for _ in range(k))
    return CrossCheck(report.dims() == oracle_dims, report, dec, (E.a4, E.a6))


__all__ = [
    "IdempotentEntry",
    "IdempotentSet",
    "CyclicComponent",
    "CyclicComponentReport",
    "CrossCheck",
    "cyclotomic_idempotents",
    "decompose_cyclic",
    "cross_check_finite",
]
