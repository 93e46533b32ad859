"""Polynomials over F_p as plain integer lists (lowest degree first).

Used by the rational factorizer (modular images + Hensel lifting) and by
the local splitting code.  All routines assume ``p`` is prime.
"""

from __future__ import annotations

import random


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def reduce(a, p: int) -> list[int]:
    return trim([c % p for c in a])


def add(a, b, p):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def sub(a, b, p):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def scale(a, c, p):
    return trim([(x * c) % p for x in a])


def mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([c % p for c in out])


def divmod_p(a, b, p):
    if not b:
        raise ZeroDivisionError("division by zero polynomial mod p")
    r = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    if len(r) - 1 < db:
        return [], trim(r)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = (r[k + db] * inv) % p
        q[k] = c
        if c:
            for j, y in enumerate(b):
                r[k + j] = (r[k + j] - c * y) % p
    return trim(q), trim(r[:db])


def rem(a, b, p):
    return divmod_p(a, b, p)[1]


def monic(a, p):
    if not a:
        return a
    return scale(a, pow(a[-1], -1, p), p)


def gcd(a, b, p):
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def xgcd(a, b, p):
    """Return (g, s, t) with s*a + t*b = g monic."""
    r0, r1 = trim(list(a)), trim(list(b))
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        q, r = divmod_p(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    return scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)


def powmod(base, e: int, mod, p):
    result = [1]
    base = rem(base, mod, p)
    while e:
        if e & 1:
            result = rem(mul(result, base, p), mod, p)
        e >>= 1
        if e:
            base = rem(mul(base, base, p), mod, p)
    return result


def derivative(a, p):
    return trim([(i * c) % p for i, c in enumerate(a)][1:])


def is_squarefree(a, p) -> bool:
    return len(gcd(a, derivative(a, p), p)) == 1


def distinct_degree(f, p):
    """Split monic squarefree f into (product of degree-d irreducibles, d)."""
    out = []
    x = [0, 1]
    h = x
    i = 0
    rest = list(f)
    while len(rest) - 1 >= 2 * (i + 1):
        i += 1
        h = powmod(h, p, rest, p)
        g = gcd(sub(h, x, p), rest, p)
        if len(g) > 1:
            out.append((g, i))
            rest = divmod_p(rest, g, p)[0]
            h = rem(h, rest, p)
    if len(rest) > 1:
        out.append((rest, len(rest) - 1))
    return out


def equal_degree(f, d, p, rng):
    """Cantor-Zassenhaus splitting of monic f whose irreducible factors all have degree d (p odd)."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        g = gcd(a, f, p)
        if 1 < len(g) < len(f):
            break
        b = powmod(a, (p**d - 1) // 2, f, p)
        g = gcd(sub(b, [1], p), f, p)
        if 1 < len(g) < len(f):
            break
    h = divmod_p(f, g, p)[0]
    return equal_degree(g, d, p, rng) + equal_degree(monic(h, p), d, p, rng)


def factor_squarefree(f, p) -> list[list[int]]:
    """Monic irreducible factors of a squarefree polynomial mod an odd prime, sorted."""
    f = monic(reduce(f, p), p)
    if len(f) <= 2:
        return [f] if len(f) == 2 else []
    rng = random.Random(1_000_003 * p + len(f))
    out = []
    for g, d in distinct_degree(f, p):
        out.extend(equal_degree(g, d, p, rng))
    return sorted(out, key=lambda g: (len(g), g))


def roots(f, p) -> list[int]:
    """Distinct roots of f in F_p."""
    f = reduce(f, p)
    if not f:
        raise ValueError("zero polynomial has every element as a root")
    if p < 512:
        return [x for x in range(p) if _eval(f, x, p) == 0]
    g = gcd(f, sub(powmod([0, 1], p, f, p), [0, 1], p), p)
    return sorted((-lin[0]) % p for lin in factor_squarefree(g, p))


def _eval(f, x, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc
