"""Exact real-root counting with Sturm sequences over Q."""

from __future__ import annotations

from fractions import Fraction

from .poly import Poly, poly_gcd


def sturm_sequence(f: Poly) -> list[Poly]:
    seq = [f, f.derivative()]
    while seq[-1]:
        r = -(seq[-2] % seq[-1])
        if not r:
            break
        seq.append(r)
    return seq


def _sign_changes(values) -> int:
    signs = [v for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def _at(seq, x):
    if x == "-inf":
        return [s.lc * (-1) ** s.degree for s in seq]
    if x == "+inf":
        return [s.lc for s in seq]
    return [s(Fraction(x)) for s in seq]


def real_root_count(f: Poly, lo=None, hi=None) -> int:
    """Number of distinct real roots of ``f`` in the half-open interval (lo, hi]."""
    if f.degree < 1:
        return 0
    f = f // poly_gcd(f, f.derivative())
    seq = sturm_sequence(f)
    a = _at(seq, "-inf" if lo is None else lo)
    b = _at(seq, "+inf" if hi is None else hi)
    return _sign_changes(a) - _sign_changes(b)
