"""Brute-force ground truth from elliptic curves over small prime fields.

Point counts give the trace t of Frobenius.  Base change to F_{p^n} has
Frobenius trace s_n (the power-sum recurrence), and the Weil restriction back
to F_p has characteristic polynomial chi(T^n).  Factoring that over Q and
applying Honda-Tate to each factor decomposes the restriction without ever
looking at the center of its endomorphism algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra.arith import is_prime, iroot
from .algebra.poly import Poly
from .errors import ConsistencyError, InvalidInput, SingularCurve, UnsupportedSize
from .honda_tate import WeilNumber, isogeny_class
from .restriction import CHARPOLY_ORACLE, Decomposition, classes_from_charpoly

MAX_N = 12


@dataclass(frozen=True)
class EllipticCurveParams:
    """y^2 = x^3 + a4*x + a6 over F_p, p >= 5."""

    p: int
    a4: int
    a6: int

    def __post_init__(self):
        if self.p < 5 or not is_prime(self.p):
            raise InvalidInput(f"p={self.p} must be a prime >= 5")
        object.__setattr__(self, "a4", self.a4 % self.p)
        object.__setattr__(self, "a6", self.a6 % self.p)
        if (4 * self.a4**3 + 27 * self.a6**2) % self.p == 0:
            raise SingularCurve(f"y^2 = x^3 + {self.a4}x + {self.a6} is singular mod {self.p}")


@lru_cache(maxsize=64)
def _legendre_table(p: int) -> tuple[int, ...]:
    table = [-1] * p
    table[0] = 0
    for y in range(1, p):
        table[y * y % p] = 1
    return tuple(table)


def count_points(E: EllipticCurveParams) -> tuple[int, int]:
    """(#E(F_p), trace of Frobenius) by summing the quadratic character."""
    p = E.p
    chi = _legendre_table(p)
    count = 1 + sum(1 + chi[(x * x * x + E.a4 * x + E.a6) % p] for x in range(p))
    t = p + 1 - count
    if t * t > 4 * p:
        raise ConsistencyError(f"trace {t} violates the Hasse bound for p={p}")
    return count, t


def power_traces(t: int, p: int, n: int) -> list[int]:
    """s_0..s_n with s_0 = 2, s_1 = t, s_{m+1} = t*s_m - p*s_{m-1}."""
    s = [2, t]
    while len(s) <= n:
        s.append(t * s[-1] - p * s[-2])
    return s[: n + 1]


def frobenius_power_charpoly(t: int, p: int, n: int) -> Poly:
    if t * t > 4 * p:
        raise InvalidInput(f"|t| = {abs(t)} exceeds 2*sqrt({p})")
    if n < 1:
        raise InvalidInput("n must be a positive integer")
    s_n = power_traces(t, p, n)[n]
    return Poly([p**n, -s_n, 1])


def oracle_decompose(E: EllipticCurveParams, n: int) -> Decomposition:
    _, t = count_points(E)
    return oracle_decompose_trace(E.p, t, n)


@lru_cache(maxsize=4096)
def oracle_decompose_trace(p: int, t: int, n: int) -> Decomposition:
    """Decomposition of Res_{F_{p^n}/F_p} of the base change of a trace-t curve."""
    if not 1 <= n <= MAX_N:
        raise UnsupportedSize(f"n must lie in 1..{MAX_N}")
    chi = frobenius_power_charpoly(t, p, n)
    s_n = -chi[1]
    if s_n * s_n == 4 * p**n:
        # base change has rational Frobenius s_n/2, so its charpoly is a square
        root = s_n / 2
        chi_W = (Poly.monomial(n) - root) ** 2
        branch = "square"
    else:
        chi_W = chi.substitute_power(n)
        branch = "generic"
    dec = classes_from_charpoly(chi_W, p, 1, CHARPOLY_ORACLE)
    if 2 * dec.total_dim != 2 * n:
        raise ConsistencyError("oracle dimensions do not add up to n")
    return Decomposition(dec.components, CHARPOLY_ORACLE, dec.checks + (("branch-" + branch, True),))


def oracle_decompose_weil(w: WeilNumber, n: int) -> Decomposition:
    """Same pipeline started from a Weil number over F_{p^a} instead of a curve; n must divide a."""
    if w.a % n:
        raise InvalidInput(f"n={n} does not divide a={w.a}")
    if not 1 <= n <= MAX_N:
        raise UnsupportedSize(f"n must lie in 1..{MAX_N}")
    cls = isogeny_class(w)
    chi_W = (w.minpoly**cls.m).substitute_power(n)
    return classes_from_charpoly(chi_W, w.p, w.a // n, CHARPOLY_ORACLE)


@lru_cache(maxsize=64)
def curves_by_trace(p: int) -> dict[int, tuple[int, int]]:
    """First nonsingular (a4, a6), in lexicographic order, for each trace that occurs."""
    found: dict[int, tuple[int, int]] = {}
    for a4, a6 in nonsingular_pairs(p):
        _, t = count_points(EllipticCurveParams(p, a4, a6))
        found.setdefault(t, (a4, a6))
    return found


def nonsingular_pairs(p: int):
    for a4 in range(p):
        for a6 in range(p):
            if (4 * a4**3 + 27 * a6**2) % p:
                yield a4, a6


def curve_with_trace(p: int, t: int) -> EllipticCurveParams:
    table = curves_by_trace(p)
    if t not in table:
        bound = iroot(4 * p, 2)
        raise InvalidInput(f"no short Weierstrass curve over F_{p} has trace {t} (|t| <= {bound})")
    a4, a6 = table[t]
    return EllipticCurveParams(p, a4, a6)
