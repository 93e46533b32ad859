"""Cyclotomic polynomials and the conductor test for quadratic subfields."""

from __future__ import annotations

from functools import lru_cache

from ..errors import InvalidInput, NotFundamental
from .arith import divisors, is_fundamental_discriminant
from .poly import Poly


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> Poly:
    """The d-th cyclotomic polynomial, obtained by dividing x^d - 1 by the lower ones."""
    if d < 1:
        raise InvalidInput("d must be a positive integer")
    f = Poly.monomial(d) - 1
    for e in divisors(d):
        if e < d:
            f = f.exact_div(cyclotomic(e))
    return f


def quad_in_cyclotomic(disc: int, d: int) -> bool:
    """Whether Q(sqrt(disc)) lies in Q(zeta_d); the conductor of that field is |disc|."""
    if d < 1:
        raise InvalidInput("d must be a positive integer")
    if disc == 1 or not is_fundamental_discriminant(disc):
        raise NotFundamental(f"{disc} is not the discriminant of a quadratic field")
    return d % abs(disc) == 0
