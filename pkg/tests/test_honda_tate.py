from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weilres.algebra.poly import Poly, parse_poly
from weilres.errors import InvalidWeilNumber
from weilres.honda_tate import WeilNumber, char_poly_of_class, isogeny_class, validate_weil

half = Fraction(1, 2)


def cls(text, p, a):
    return isogeny_class(WeilNumber(parse_poly(text), p, a))


@pytest.mark.parametrize(
    "text, p, a, expected",
    [
        ("x^2 - 2*x + 5", 5, 1, True),
        ("x - 4", 2, 4, True),
        ("x^2 - 5*x + 5", 5, 1, False),
        ("x^2 - 5", 5, 1, True),
        ("x + 5", 5, 1, False),
        ("x^2 + 25", 5, 2, True),
        ("x^2 + 3*x + 6", 5, 1, False),
    ],
)
def test_validate_weil(text, p, a, expected):
    assert validate_weil(parse_poly(text), p, a) is expected


def test_reducible_is_not_weil():
    # (x - 5)(x + 5): both roots have the right modulus but the polynomial is not a minpoly
    assert validate_weil(parse_poly("x^2 - 25"), 5, 2) is False


def test_invalid_weil_number_rejected():
    with pytest.raises(InvalidWeilNumber):
        WeilNumber(parse_poly("x^2 - 5*x + 5"), 5, 1)


# (minpoly, p, a) -> (invariants, m, dim)
FROZEN = [
    ("x^2 - 2*x + 5", 5, 1, {"all": 0}, 1, 1),
    ("x + 25", 5, 4, {"5": half, "real": half}, 2, 1),
    ("x^4 + 25", 5, 1, {"all": 0}, 1, 2),
    ("x - 4", 2, 4, {"2": half, "real": half}, 2, 1),
    ("x^2 - 5", 5, 1, {"real.1": half, "real.2": half}, 2, 2),
    ("x^2 + 25", 5, 2, {"5.1": half, "5.2": half}, 2, 2),
    ("x^2 + 5*x + 25", 5, 2, {"all": 0}, 1, 1),
    ("x^2 + 5", 5, 1, {"all": 0}, 1, 1),
]


@pytest.mark.parametrize("text, p, a, invariants, m, dim", FROZEN)
def test_isogeny_class_examples(text, p, a, invariants, m, dim):
    c = cls(text, p, a)
    assert dict(c.invariants) == invariants
    assert (c.m, c.dim) == (m, dim)


def test_x4_plus_25_places():
    c = cls("x^4 + 25", 5, 1)
    assert [(pl.e, pl.f, pl.v_gen) for pl in c.places] == [(2, 1, 1), (2, 1, 1)]
    assert c.real_places == 0


def test_char_poly_of_class():
    assert char_poly_of_class(cls("x^2 - 2*x + 5", 5, 1)) == parse_poly("x^2 - 2*x + 5")
    assert char_poly_of_class(cls("x + 25", 5, 4)) == parse_poly("x + 25") ** 2
    assert char_poly_of_class(cls("x^4 + 25", 5, 1)) == parse_poly("x^4 + 25")


def test_rational_weil_numbers_over_squares():
    for p in (2, 3, 5, 7, 11, 13):
        for sign in (1, -1):
            c = isogeny_class(WeilNumber(Poly([sign * p, 1]), p, 2))
            assert (c.m, c.dim) == (2, 1)
            assert dict(c.invariants) == {str(p): half, "real": half}


@given(st.sampled_from([2, 3, 5, 7, 11, 13]), st.data())
def test_elliptic_classes(p, data):
    bound = int((4 * p) ** 0.5)
    t = data.draw(st.integers(-bound, bound).filter(lambda t: t * t < 4 * p))
    c = isogeny_class(WeilNumber(Poly([p, -t, 1]), p, 1))
    assert sum(v for _, v in c.invariants) % 1 == 0
    assert 2 * c.dim == c.m * 2
    if t % p:
        # ordinary: commutative endomorphism algebra
        assert c.m == 1 and all(v == 0 for _, v in c.invariants)
    assert c.dim == 1
    assert char_poly_of_class(c).degree == 2 * c.dim
