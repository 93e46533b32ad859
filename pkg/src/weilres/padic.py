"""Splitting of a rational prime in Q[x]/(g): ramification, residue degree and
the valuation of the generator x at every place above p.

The computation enlarges Z[x] to an order that is maximal at p (Round 2:
repeatedly replace the order by the multiplier ring of its p-radical), then
reads the places off the primitive idempotents of O/pO.  Those idempotents
span the subalgebra fixed by Frobenius, which is linear in characteristic p.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import modp
from .algebra.arith import is_prime, valuation
from .algebra.factor import is_irreducible
from .algebra.linalg import hnf, left_kernel_mod_p, rank_mod_p, rref_mod_p
from .algebra.poly import Poly
from .errors import InvalidInput, NotIrreducible, UnsupportedDegree

MAX_DEGREE = 12


@dataclass(frozen=True, order=True)
class LocalPlace:
    p: int
    e: int
    f: int
    v_gen: int


def splitting_data(g: Poly, p: int) -> list[LocalPlace]:
    """Places of Q[x]/(g) above ``p``, sorted by (e, f, v_gen)."""
    if not g.is_monic() or not g.is_integral():
        raise InvalidInput("g must be monic with integer coefficients")
    if not is_prime(p):
        raise InvalidInput(f"{p} is not prime")
    if g.degree > MAX_DEGREE:
        raise UnsupportedDegree(f"degree {g.degree} exceeds the local splitting cap {MAX_DEGREE}")
    if not is_irreducible(g):
        raise NotIrreducible(f"{g} is reducible over Q")
    return list(_splitting_cached(g, p))


@lru_cache(maxsize=4096)
def _splitting_cached(g: Poly, p: int) -> tuple[LocalPlace, ...]:
    n = g.degree
    c0 = int(g[0])
    if c0 == 0:
        raise InvalidInput("the generator must be nonzero")
    if n == 1:
        return (LocalPlace(p, 1, 1, valuation(-c0, p)),)
    order = _p_maximal_order(g, p)
    places = _decompose(order, p, c0)
    if sum(pl.e * pl.f for pl in places) != n:
        raise ArithmeticError("sum of e*f over places does not equal the degree")
    if sum(pl.f * pl.v_gen for pl in places) != valuation(c0, p):
        raise ArithmeticError("valuations of the generator disagree with its norm")
    return tuple(sorted(places))


class _Order:
    """A full-rank order, stored by its integer multiplication table.

    ``unit_c`` and ``gen_c`` are the coordinates of 1 and of the generator x.
    """

    def __init__(self, table, unit_c, gen_c):
        self.n = len(unit_c)
        self.table = table
        self.unit_c = unit_c
        self.gen_c = gen_c

    @classmethod
    def equation_order(cls, g: Poly) -> "_Order":
        """Z[x] with its power basis."""
        n = g.degree
        gc = [int(c) for c in g.coeffs]
        powers = []
        for k in range(2 * n - 1):
            if k < n:
                powers.append([int(i == k) for i in range(n)])
            else:
                prev = powers[-1]
                top = prev[-1]
                nxt = [0] + prev[:-1]
                powers.append([a - top * gc[i] for i, a in enumerate(nxt)])
        table = [[powers[i + j] for j in range(n)] for i in range(n)]
        unit = [int(i == 0) for i in range(n)]
        gen = [int(i == 1) for i in range(n)]
        return cls(table, unit, gen)

    def enlarge(self, H, p: int) -> "_Order":
        """The order with basis h_i / p, h_i the rows of an upper-triangular H."""
        n = self.n

        def coords(v, scale):
            # new coordinates c satisfy c H = p * v for v in old coordinates;
            # products of two new basis vectors carry an extra 1/p^2
            x = _solve_upper(H, [scale * a for a in v])
            if any(a % p for a in x):
                raise ArithmeticError("enlarged basis does not span an order")
            return [a // p for a in x]

        table = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                table[i][j] = table[j][i] = coords(self.mul(H[i], H[j]), 1)
        return _Order(table, coords(self.unit_c, p * p), coords(self.gen_c, p * p))

    def mul(self, x, y, m: int | None = None):
        n = self.n
        out = [0] * n
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    if yj:
                        c = xi * yj
                        row = self.table[i][j]
                        for k in range(n):
                            out[k] += c * row[k]
        if m is not None:
            out = [v % m for v in out]
        return out

    def power(self, x, e: int, m: int):
        result = [v % m for v in self.unit_c]
        base = [v % m for v in x]
        while e:
            if e & 1:
                result = self.mul(result, base, m)
            e >>= 1
            if e:
                base = self.mul(base, base, m)
        return result

    def unit(self):
        return list(self.unit_c)

    def gen(self):
        return list(self.gen_c)

    def e(self, i):
        return [int(k == i) for k in range(self.n)]


def _solve_upper(H, v):
    """Integer x with x H = v for upper-triangular H (exact division asserted)."""
    n = len(H)
    x = [0] * n
    for j in range(n):
        acc = v[j] - sum(x[i] * H[i][j] for i in range(j))
        q, r = divmod(acc, H[j][j])
        if r:
            raise ArithmeticError("vector is not in the lattice")
        x[j] = q
    return x


def _radical_mod_p(order: _Order, p: int):
    """F_p-basis of the nilradical of O/pO, as kernel of x -> x^(p^j) with p^j >= n."""
    q = p
    while q < order.n:
        q *= p
    frob = [order.power(order.e(i), q, p) for i in range(order.n)]
    return left_kernel_mod_p(frob, p)


def _lattice(vectors, p: int, n: int):
    """Upper-triangular Z-basis of the lattice spanned by ``vectors`` and p*Z^n."""
    rows = [list(v) for v in vectors] + [[p * int(i == j) for j in range(n)] for i in range(n)]
    H = hnf(rows)
    if len(H) != n or any(H[i][i] == 0 for i in range(n)):
        raise ArithmeticError("lattice is not of full rank")
    return H


def _p_maximal_order(g: Poly, p: int) -> _Order:
    n = g.degree
    order = _Order.equation_order(g)
    while True:
        rad = _radical_mod_p(order, p)
        if not rad:
            return order
        ideal = _lattice(rad, p, n)
        rows = []
        for i in range(n):
            row = []
            for w in ideal:
                c = _solve_upper(ideal, order.mul(order.e(i), w))
                row.extend(x % p for x in c)
            rows.append(row)
        kernel = left_kernel_mod_p(rows, p)
        if not kernel:
            return order
        order = order.enlarge(_lattice(kernel, p, n), p)


def _decompose(order: _Order, p: int, c0: int) -> list[LocalPlace]:
    n = order.n
    one = order.unit()
    frob_minus_id = []
    for i in range(n):
        img = order.power(order.e(i), p, p)
        frob_minus_id.append([(a - int(i == k)) % p for k, a in enumerate(img)])
    fixed = left_kernel_mod_p(frob_minus_id, p)
    idems = [[v % p for v in one]]
    for b in fixed:
        nxt = []
        for lam in _lagrange_idempotents(order, b, p):
            for e in idems:
                prod = order.mul(e, lam, p)
                if any(prod):
                    nxt.append(prod)
        idems = nxt
    if len(idems) != len(fixed):
        raise ArithmeticError("idempotent refinement did not reach the expected count")

    rad = _radical_mod_p(order, p)
    theta = order.gen()
    N = valuation(c0, p) + 1
    pN = p**N
    places = []
    for e in idems:
        ef = rank_mod_p([order.mul(e, order.e(i), p) for i in range(n)], p)
        rad_part = rank_mod_p([order.mul(e, r, p) for r in rad], p) if rad else 0
        f = ef - rad_part
        if f <= 0 or ef % f:
            raise ArithmeticError("inconsistent residue degree")
        ramification = ef // f
        ehat = list(e)
        for _ in range(N.bit_length() + 1):
            e2 = order.mul(ehat, ehat, pN)
            e3 = order.mul(e2, ehat, pN)
            ehat = [(3 * a - 2 * b) % pN for a, b in zip(e2, e3)]
        comp = [(u - v) % pN for u, v in zip(one, ehat)]
        gens = [order.mul(theta, order.e(i)) for i in range(n)]
        gens += [order.mul(comp, order.e(i), pN) for i in range(n)]
        gens += [[pN * int(i == j) for j in range(n)] for i in range(n)]
        lat = hnf(gens)
        index = 1
        for row in lat:
            index *= row[next(j for j, x in enumerate(row) if x)]
        v_index = valuation(index, p)
        if v_index % f:
            raise ArithmeticError("generator valuation is not an integer")
        places.append(LocalPlace(p, ramification, f, v_index // f))
    return places


def _lagrange_idempotents(order: _Order, b, p: int):
    """Idempotents 1_{b = r} for the distinct eigenvalues r of a Frobenius-fixed element b."""
    one = [v % p for v in order.unit()]
    powers = [one]
    rows = [one]
    while True:
        nxt = order.mul(powers[-1], b, p)
        if rank_mod_p(rows + [nxt], p) == len(rows):
            break
        powers.append(nxt)
        rows.append(nxt)
    # minimal polynomial: express b^k in terms of lower powers
    k = len(powers)
    target = order.mul(powers[-1], b, p)
    coeffs = _solve_mod_p(powers, target, p)
    minpoly = [(-c) % p for c in coeffs] + [1]
    roots = modp.roots(minpoly, p)
    if len(roots) != k:
        raise ArithmeticError("Frobenius-fixed element has a non-split minimal polynomial")
    out = []
    for r in roots:
        acc = one
        denom = 1
        for s in roots:
            if s != r:
                shifted = [(a - s * u) % p for a, u in zip(b, one)]
                acc = order.mul(acc, shifted, p)
                denom = denom * (r - s) % p
        inv = pow(denom, -1, p)
        out.append([(a * inv) % p for a in acc])
    return out


def _solve_mod_p(vectors, target, p: int):
    """Coefficients c with sum c_i * vectors[i] == target (mod p)."""
    k = len(vectors)
    aug = [list(col) + [t] for col, t in zip(zip(*vectors), target)]
    red, pivots = rref_mod_p(aug, p)
    if k in pivots:
        raise ArithmeticError("target is not in the span")
    sol = [0] * k
    for row, pc in zip(red, pivots):
        sol[pc] = row[k]
    return sol
