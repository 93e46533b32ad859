"""Weil numbers and the isogeny-class data attached to them by Honda-Tate theory.

A Weil number is given by its minimal polynomial over Q together with q = p^a.
The endomorphism algebra of the matching simple abelian variety is a central
division algebra over Q(pi) whose local invariants are

* v(pi) * f_v / a  at a place v above p (v normalized, f_v the residue degree),
* 1/2 at each real place,
* 0 everywhere else,

and its Brauer order m gives dim A = m * [Q(pi):Q] / 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .algebra.arith import is_prime
from .algebra.factor import is_irreducible
from .algebra.poly import Poly
from .algebra.sturm import real_root_count
from .errors import ConsistencyError, InvalidInput, InvalidWeilNumber
from .padic import LocalPlace, splitting_data

__all__ = ["WeilNumber", "IsogenyClass", "validate_weil", "isogeny_class", "char_poly_of_class"]


def validate_weil(minpoly: Poly, p: int, a: int) -> bool:
    """Exact test that ``minpoly`` is irreducible with every root of modulus sqrt(p^a)."""
    if not minpoly.is_monic() or not minpoly.is_integral():
        raise InvalidInput("minpoly must be monic with integer coefficients")
    if not is_prime(p) or a < 1:
        return False
    if minpoly.degree < 1 or not is_irreducible(minpoly):
        return False
    q = p**a
    if minpoly.degree == 1:
        return minpoly[0] ** 2 == q
    if real_root_count(minpoly) > 0:
        # the only irreducible real case left is x^2 - q with q not a square
        return minpoly == Poly([-q, 0, 1])
    if minpoly.degree % 2:
        return False
    h = _trace_polynomial(minpoly, q)
    return h is not None and real_root_count(h) == h.degree


def _trace_polynomial(g: Poly, q: int) -> Poly | None:
    """h with g(x) = x^k h(x + q/x), or None when g is not q-symmetric."""
    k = g.degree // 2
    rest = g
    h = [Fraction(0)] * (k + 1)
    step = Poly([q, 0, 1])
    for j in range(k, -1, -1):
        c = rest[k + j]
        if c:
            h[j] = c
            rest = rest - Poly.monomial(k - j, c) * step**j
    if rest:
        return None
    return Poly(h)


@dataclass(frozen=True)
class WeilNumber:
    minpoly: Poly
    p: int
    a: int

    def __post_init__(self):
        if not validate_weil(self.minpoly, self.p, self.a):
            raise InvalidWeilNumber(
                f"{self.minpoly} is not the minimal polynomial of a Weil {self.q}-number"
            )

    @property
    def q(self) -> int:
        return self.p**self.a

    @property
    def degree(self) -> int:
        return self.minpoly.degree


@dataclass(frozen=True)
class IsogenyClass:
    weil: WeilNumber
    invariants: tuple[tuple[str, Fraction], ...]
    m: int
    dim: int
    places: tuple[LocalPlace, ...] = field(repr=False)
    real_places: int = 0

    @property
    def center_degree(self) -> int:
        return self.weil.degree

    @property
    def minpoly(self) -> Poly:
        return self.weil.minpoly


def isogeny_class(w: WeilNumber) -> IsogenyClass:
    return _isogeny_class_cached(w.minpoly, w.p, w.a)


@lru_cache(maxsize=8192)
def _isogeny_class_cached(minpoly: Poly, p: int, a: int) -> IsogenyClass:
    w = WeilNumber(minpoly, p, a)
    places = tuple(splitting_data(minpoly, p))
    reals = real_root_count(minpoly)

    at_p = [Fraction(pl.v_gen * pl.f, a) % 1 for pl in places]
    at_inf = [Fraction(1, 2)] * reals
    if sum(at_p + at_inf) % 1 != 0:
        raise ConsistencyError(f"local invariants of {minpoly} over q={p}^{a} do not sum to 0 mod 1")

    labelled = _label(str(p), at_p) + _label("real", at_inf)
    nonzero = tuple((k, v) for k, v in labelled if v)
    invariants = nonzero if nonzero else (("all", Fraction(0)),)
    m = lcm(*(v.denominator for _, v in labelled)) if labelled else 1
    if (m * minpoly.degree) % 2:
        raise ConsistencyError(f"odd value of m*deg for {minpoly}; dimension is not integral")
    return IsogenyClass(w, invariants, m, m * minpoly.degree // 2, places, reals)


def _label(prefix: str, values):
    if len(values) == 1:
        return [(prefix, values[0])]
    return [(f"{prefix}.{i}", v) for i, v in enumerate(values, 1)]


def char_poly_of_class(c: IsogenyClass) -> Poly:
    return c.minpoly**c.m
