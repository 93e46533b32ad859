from fractions import Fraction

import sympy
from sympy import GF
from sympy.polys.matrices import DomainMatrix
from hypothesis import given
from hypothesis import strategies as st

from weilres.algebra.arith import (
    euler_phi,
    factorize,
    fundamental_discriminant,
    iroot,
    is_fundamental_discriminant,
    is_prime,
    valuation,
)
from weilres.algebra.linalg import hnf, inverse, matmul, nullspace, rank, rank_mod_p


@given(st.integers(-10**6, 10**6))
def test_arith_against_sympy(n):
    assert is_prime(n) == (n > 1 and sympy.isprime(n))
    if n > 0:
        assert factorize(n) == dict(sympy.factorint(n))
        assert euler_phi(n) == sympy.totient(n)
    if n != 0:
        assert valuation(n, 3) == sympy.multiplicity(3, abs(n))


@given(st.integers(0, 10**12), st.integers(1, 5))
def test_iroot(n, k):
    r = iroot(n, k)
    assert r**k <= n < (r + 1) ** k


def test_fundamental_discriminants():
    assert [d for d in range(-20, 0) if is_fundamental_discriminant(d)] == [-20, -19, -15, -11, -8, -7, -4, -3]
    assert fundamental_discriminant(-16) == -4
    assert fundamental_discriminant(2 * 2 - 4 * 5) == -4
    assert fundamental_discriminant(-99) == -11


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@given(matrices)
def test_rank_and_nullspace(m):
    ref = sympy.Matrix(m)
    assert rank(m) == ref.rank()
    ns = nullspace(m, len(m[0]))
    assert len(ns) == len(m[0]) - ref.rank()
    for v in ns:
        assert all(sum(Fraction(a) * b for a, b in zip(row, v)) == 0 for row in m)
    gf7 = DomainMatrix([[GF(7)(x) for x in row] for row in m], (len(m), len(m[0])), GF(7))
    assert rank_mod_p(m, 7) == gf7.rank()


@given(matrices)
def test_hnf_spans_same_lattice(m):
    h = hnf(m)
    ref = sympy.Matrix(m)
    assert len(h) == ref.rank()
    # every original row is an integer combination of the HNF rows (upper triangular, positive pivots)
    for row in m:
        v = list(row)
        for hr in h:
            piv = next(j for j, x in enumerate(hr) if x)
            assert hr[piv] > 0
            q, r = divmod(v[piv], hr[piv])
            assert r == 0
            v = [a - q * b for a, b in zip(v, hr)]
        assert not any(v)


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=3, max_size=3))
def test_inverse(m):
    if sympy.Matrix(m).det() == 0:
        return
    inv = inverse(m)
    assert matmul(m, inv) == [[int(i == j) for j in range(3)] for i in range(3)]
