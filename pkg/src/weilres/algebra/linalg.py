"""Exact linear algebra: Gaussian elimination over a field, over F_p, and
Hermite normal form over Z.  Matrices are lists of rows."""

from __future__ import annotations

from fractions import Fraction


def rref(rows):
    """Reduced row echelon form over any exact field; returns (rows, pivot columns).

    Plain integers are promoted to Fraction so that division stays exact.
    """
    m = [[Fraction(x) if isinstance(x, int) else x for x in r] for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows, ncols: int):
    """Basis of {v : M v = 0} over the coefficient field."""
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def inverse(rows):
    n = len(rows)
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def vecmat(v, m):
    n = len(m[0])
    out = [Fraction(0)] * n
    for x, row in zip(v, m):
        if x != 0:
            for j in range(n):
                out[j] += x * row[j]
    return out


# -- F_p ---------------------------------------------------------------------

def rref_mod_p(rows, p: int):
    m = [[x % p for x in r] for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank_mod_p(rows, p: int) -> int:
    return len(rref_mod_p(rows, p)[1]) if rows else 0


def nullspace_mod_p(rows, ncols: int, p: int):
    """Basis of {v : M v = 0 mod p}."""
    red, pivots = rref_mod_p(rows, p) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(red, pivots):
            v[pc] = (-row[f]) % p
        basis.append(v)
    return basis


def left_kernel_mod_p(rows, p: int):
    """Basis of {c : c M = 0 mod p} for an m x n matrix M."""
    if not rows:
        return []
    return nullspace_mod_p([list(col) for col in zip(*rows)], len(rows), p)


# -- Z -----------------------------------------------------------------------

def hnf(rows):
    """Row-style Hermite normal form; returns the nonzero rows (a Z-basis of the row lattice)."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return []
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        # gcd-combine column c over rows r.. into row r
        nz = [i for i in range(r, len(m)) if m[i][c]]
        if not nz:
            continue
        i0 = nz[0]
        m[r], m[i0] = m[i0], m[r]
        for i in range(r + 1, len(m)):
            if m[i][c]:
                a, b = m[r][c], m[i][c]
                g, x, y = _egcd(a, b)
                ra, rb = m[r], m[i]
                m[r] = [x * u + y * v for u, v in zip(ra, rb)]
                m[i] = [(a // g) * v - (b // g) * u for u, v in zip(ra, rb)]
        if m[r][c] < 0:
            m[r] = [-u for u in m[r]]
        d = m[r][c]
        for i in range(r):
            q = m[i][c] // d
            if q:
                m[i] = [u - q * v for u, v in zip(m[i], m[r])]
        r += 1
        m = m[:r] + [row for row in m[r:] if any(row)]
        if r == len(m):
            break
    return m[:r]


def _egcd(a: int, b: int):
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0
