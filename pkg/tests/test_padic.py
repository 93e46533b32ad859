import pytest
from hypothesis import given
from hypothesis import strategies as st

from weilres.algebra.factor import is_irreducible
from weilres.algebra.poly import Poly, parse_poly
from weilres.errors import InvalidInput, NotIrreducible, UnsupportedDegree
from weilres.padic import LocalPlace, splitting_data


def places(text, p):
    return [(pl.e, pl.f, pl.v_gen) for pl in splitting_data(parse_poly(text), p)]


@pytest.mark.parametrize(
    "text, p, expected",
    [
        ("x^2 + 1", 5, [(1, 1, 0), (1, 1, 0)]),
        ("x^2 + 1", 2, [(2, 1, 0)]),
        ("x^4 + 25", 5, [(2, 1, 1), (2, 1, 1)]),
        ("x^2 - 2*x + 5", 5, [(1, 1, 0), (1, 1, 1)]),
        ("x + 25", 5, [(1, 1, 2)]),
        ("x^2 + 5*x + 25", 5, [(1, 2, 1)]),
        ("x^2 + 3", 3, [(2, 1, 1)]),
        ("x^4 - 14*x^2 + 81", 3, [(1, 2, 0), (1, 2, 2)]),
    ],
)
def test_examples(text, p, expected):
    assert places(text, p) == expected


# (g, p, sorted (e, f, v_p(x))), computed once with sympy's prime_decomp and frozen
SYMPY_TABLE = [
    ('x^3 - 12*x^2 + 3*x + 2', 3, [(3, 1, 0)]),
    ('x^2 - 6*x + 7', 2, [(2, 1, 0)]),
    ('x^4 + 8*x^3 + 10*x^2 + 8*x + 6', 7, [(1, 2, 0), (2, 1, 0)]),
    ('x^2 - x - 10', 5, [(1, 1, 0), (1, 1, 1)]),
    ('x^3 - 7*x^2 + 7', 5, [(1, 3, 0)]),
    ('x^2 + 8*x + 5', 2, [(2, 1, 0)]),
    ('x^6 - 6*x^5 - 10*x^4 + 11*x^3 - 9*x^2 - 11*x + 3', 7, [(1, 1, 0), (1, 5, 0)]),
    ('x^3 - 11*x^2 - 9*x - 81', 3, [(1, 1, 0), (1, 2, 2)]),
    ('x^3 + 2*x^2 + 10*x + 8', 7, [(1, 1, 0), (1, 2, 0)]),
    ('x^4 + 11*x^3 + 11*x^2 - 5*x + 12', 5, [(1, 1, 0), (1, 1, 0), (1, 2, 0)]),
    ('x^2 - 10*x + 6', 2, [(2, 1, 1)]),
    ('x^2 + 8*x - 8', 2, [(2, 1, 3)]),
    ('x^4 - 22*x^3 + 16*x^2 - 16*x - 28', 2, [(4, 1, 2)]),
    ('x^4 - 7*x^3 - 7*x^2 + 6*x - 11', 2, [(1, 1, 0), (1, 3, 0)]),
    ('x^4 - 12*x^3 + x^2 - 8', 5, [(1, 4, 0)]),
    ('x^4 + 7*x^3 - 11*x^2 + 4*x - 11', 2, [(1, 1, 0), (1, 3, 0)]),
    ('x^2 - 28*x - 11', 7, [(1, 1, 0), (1, 1, 0)]),
    ('x^2 - 99*x - 27', 3, [(2, 1, 3)]),
    ('x^3 - 7*x^2 - 5*x + 6', 7, [(1, 3, 0)]),
    ('x^2 - 6*x - 6', 7, [(1, 1, 0), (1, 1, 0)]),
    ('x^4 - 8*x^3 - 5*x^2 + x - 7', 2, [(1, 1, 0), (1, 3, 0)]),
    ('x^4 - 5*x^3 - 2*x^2 - 9*x + 4', 3, [(1, 4, 0)]),
    ('x^4 + 7*x^3 - x^2 + 8*x - 12', 2, [(1, 2, 0), (2, 1, 2)]),
    ('x^4 + 11*x^3 - 7*x^2 - 6', 7, [(1, 1, 0), (1, 3, 0)]),
    ('x^4 - 5*x^2 - 9*x + 2', 7, [(1, 1, 0), (1, 3, 0)]),
    ('x^6 + 7*x^5 + 36*x^3 + x^2 - 24*x + 24', 2, [(1, 4, 0), (2, 1, 3)]),
    ('x^6 + 40*x^5 + 9*x^4 - 28*x^3 + 8*x^2 - 12*x - 22', 2, [(1, 2, 0), (4, 1, 1)]),
    ('x^2 + 4*x + 5', 3, [(1, 2, 0)]),
    ('x^3 - x^2 - 7*x + 4', 7, [(1, 3, 0)]),
    ('x^3 + x^2 - 3*x + 3', 7, [(1, 3, 0)]),
]


@pytest.mark.parametrize("text, p, expected", SYMPY_TABLE)
def test_matches_frozen_reference(text, p, expected):
    assert places(text, p) == expected


def test_rejects_bad_input():
    with pytest.raises(NotIrreducible):
        splitting_data(parse_poly("x^2 - 1"), 5)
    with pytest.raises(InvalidInput):
        splitting_data(parse_poly("x^2 + 1"), 6)
    with pytest.raises(InvalidInput):
        splitting_data(parse_poly("2*x^2 + 1"), 5)
    with pytest.raises(UnsupportedDegree):
        splitting_data(Poly([5] + [0] * 12 + [1]), 5)


def test_place_ordering():
    assert LocalPlace(5, 1, 1, 0) < LocalPlace(5, 1, 1, 1) < LocalPlace(5, 2, 1, 0)


@given(
    st.lists(st.integers(-20, 20), min_size=2, max_size=6),
    st.sampled_from([2, 3, 5, 7]),
    st.integers(0, 3),
)
def test_local_degrees_and_norm(coeffs, p, scale):
    # scaling the lower coefficients by p pushes toward ramified and non-maximal cases
    coeffs = [c * p**scale if i < len(coeffs) // 2 else c for i, c in enumerate(coeffs)]
    if coeffs[0] == 0:
        coeffs[0] = p
    g = Poly(coeffs + [1])
    if not is_irreducible(g):
        return
    pls = splitting_data(g, p)
    assert sum(pl.e * pl.f for pl in pls) == g.degree
    # the norm of x is +-g(0), whose p-adic valuation is the weighted sum of v_gen
    c0, v = abs(coeffs[0]), 0
    while c0 % p == 0:
        c0 //= p
        v += 1
    assert sum(pl.f * pl.v_gen for pl in pls) == v
