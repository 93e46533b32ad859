"""Factorization over Q by the Zassenhaus method.

Squarefree decomposition, factorization modulo a small prime of good
reduction, multifactor Hensel lifting past a Mignotte bound, then exhaustive
recombination of the lifted modular factors.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import isqrt

from ..errors import UnsupportedDegree
from . import modp
from .poly import Poly, squarefree_decomposition

MAX_DEGREE = 48

_SMALL_PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157]


def factor_over_Q(f: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factors of ``f`` with multiplicities, in canonical order.

    ``f`` equals ``f.lc`` times the product of the returned powers.
    """
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    if not f.is_rational():
        raise TypeError("factor_over_Q needs rational coefficients")
    if f.degree > MAX_DEGREE:
        raise UnsupportedDegree(f"degree {f.degree} exceeds the factorization cap {MAX_DEGREE}")
    return list(_factor_cached(f))


@lru_cache(maxsize=8192)
def _factor_cached(f: Poly) -> tuple[tuple[Poly, int], ...]:
    out = []
    for part, mult in squarefree_decomposition(f):
        for g in _factor_squarefree(part):
            out.append((g, mult))
    out.sort(key=lambda fe: (fe[0].sort_key(), fe[1]))
    return tuple(out)


def is_irreducible(f: Poly) -> bool:
    facs = factor_over_Q(f)
    return f.degree >= 1 and len(facs) == 1 and facs[0][1] == 1


def _factor_squarefree(f: Poly) -> list[Poly]:
    F = f.primitive().to_ints()
    out = []
    if F[0] == 0:
        out.append(Poly([0, 1]))
        F = F[1:]
    if len(F) > 1:
        for g in _zassenhaus(F):
            out.append(Poly(g).monic())
    return out


def _symmetric(c: int, m: int) -> int:
    c %= m
    return c - m if c > m // 2 else c


def _choose_prime(F):
    lc = F[-1]
    best = None
    tried = 0
    for p in _SMALL_PRIMES:
        if lc % p == 0:
            continue
        Fp = modp.reduce(F, p)
        if not modp.is_squarefree(Fp, p):
            continue
        facs = modp.factor_squarefree(Fp, p)
        if best is None or len(facs) < len(best[1]):
            best = (p, facs)
        tried += 1
        if len(facs) == 1 or tried >= 5:
            break
    if best is None:
        raise ArithmeticError("no prime of good reduction among the small primes")
    return best


def _zassenhaus(F: list[int]) -> list[list[int]]:
    n = len(F) - 1
    if n == 1:
        return [F]
    p, facs = _choose_prime(F)
    if len(facs) == 1:
        return [F]
    lc = F[-1]
    norm2 = isqrt(sum(c * c for c in F)) + 1
    bound = abs(lc) * (2**n) * norm2
    k = 1
    pk = p
    while pk <= 2 * bound:
        k += 1
        pk *= p
    lifted = hensel_lift(F, facs, p, k)
    return _recombine(F, lifted, pk)


def _recombine(F, lifted, pk):
    result = []
    G = list(F)
    r = list(lifted)
    s = 1
    while 2 * s <= len(r):
        hit = None
        for S in combinations(range(len(r)), s):
            lcG = G[-1]
            cand = [lcG % pk]
            for i in S:
                cand = _mul_mod(cand, r[i], pk)
            cand = [_symmetric(c, pk) for c in cand]
            # constant-term screen before the full division
            if cand[0] == 0 or (lcG * G[0]) % cand[0]:
                continue
            cont = 0
            for c in cand:
                cont = _gcd(cont, c)
            cand = [c // cont for c in cand]
            if cand[-1] < 0:
                cand = [-c for c in cand]
            q = _exact_div_int(G, cand)
            if q is not None:
                hit = (S, cand, q)
                break
        if hit is None:
            s += 1
            continue
        S, cand, q = hit
        result.append(cand)
        G = q
        r = [g for i, g in enumerate(r) if i not in S]
    if len(G) > 1:
        if G[-1] < 0:
            G = [-c for c in G]
        result.append(G)
    return result


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _mul_mod(a, b, m):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return [c % m for c in out]


def _exact_div_int(a, b):
    """Quotient a/b in Z[x] if b divides a exactly, else None."""
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return None
    q = [0] * (len(r) - db)
    lb = b[-1]
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db]
        if c % lb:
            return None
        c //= lb
        q[k] = c
        if c:
            for j, y in enumerate(b):
                r[k + j] -= c * y
    if any(r[:db]):
        return None
    return q


def hensel_lift(F, facs, p, k):
    """Lift ``F = lc * prod(facs) mod p`` to monic factors modulo p^k."""
    pk = p**k
    if len(facs) == 1:
        inv = pow(F[-1], -1, pk)
        return [[(c * inv) % pk for c in F]]
    half = len(facs) // 2
    g0 = [1]
    for f in facs[:half]:
        g0 = modp.mul(g0, f, p)
    h0 = [F[-1] % p]
    for f in facs[half:]:
        h0 = modp.mul(h0, f, p)
    g, h = _lift_pair(F, g0, h0, p, k)
    return hensel_lift(g, facs[:half], p, k) + hensel_lift(h, facs[half:], p, k)


def _lift_pair(F, g, h, p, k):
    """Linear Hensel lifting of F = g*h from mod p to mod p^k, keeping g monic."""
    _, s, t = modp.xgcd(g, h, p)
    pj = p
    g = list(g)
    h = list(h)
    for _ in range(k - 1):
        gh = _mul_mod(g, h, pj * p)
        n = max(len(F), len(gh))
        e = [((F[i] if i < len(F) else 0) - (gh[i] if i < len(gh) else 0)) for i in range(n)]
        e = modp.trim([(c // pj) % p for c in e])
        if e:
            te = modp.mul(t, e, p)
            q, dg = modp.divmod_p(te, g, p)
            dh = modp.add(modp.mul(s, e, p), modp.mul(q, h, p), p)
            g = _add_scaled(g, dg, pj, pj * p)
            h = _add_scaled(h, dh, pj, pj * p)
        pj *= p
    return g, h


def _add_scaled(a, b, scale_, m):
    n = max(len(a), len(b))
    return [((a[i] if i < len(a) else 0) + scale_ * (b[i] if i < len(b) else 0)) % m for i in range(n)]
