import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weilres.algebra.numberfield import NumberField
from weilres.errors import ActionMismatch, InvalidInput, NotIdempotentSystem, UnsupportedSize
from weilres.skew import (
    GroupAction,
    GroupTable,
    SkewElement,
    center_basis,
    component_dims,
    conjugation_dagger,
    left_regular_matrix,
    matmul_field,
    rosati_involute,
    skew_multiply,
)

Qi = NumberField.quadratic(-1)
Q = NumberField.rationals()
CONJ2 = GroupAction.conjugation(GroupTable.cyclic(2), Qi)
TRIV6 = GroupAction.trivial(GroupTable.cyclic(6), Q)
i = Qi.gen


def test_crossed_product_relations():
    s = SkewElement.group_element(CONJ2, 1)
    I = SkewElement.scalar(CONJ2, i)
    assert s * s == SkewElement.one(CONJ2)
    assert s * I == SkewElement.scalar(CONJ2, -i) * s
    assert (I * s) * (I * s) == SkewElement.one(CONJ2)


def test_left_regular_examples():
    tau = SkewElement.group_element(GroupAction.trivial(GroupTable.cyclic(3), Q), 1)
    L = left_regular_matrix(tau)
    assert [[int(v == 1) for v in row] for row in L] == [[0, 0, 1], [1, 0, 0], [0, 1, 0]]
    L = left_regular_matrix(SkewElement.scalar(CONJ2, i))
    assert L == [[i, Qi.zero], [Qi.zero, -i]]


def test_rosati_examples():
    G = GroupTable.cyclic(3)
    A = GroupAction.trivial(G, Q)
    assert rosati_involute(SkewElement.group_element(A, 1)) == SkewElement.group_element(A, 2)
    x = SkewElement(CONJ2, {1: Qi(2) + 3 * i})
    # s^-1 = s, and s(conj(2 + 3i)) = 2 + 3i
    assert rosati_involute(x, conjugation_dagger(Qi)) == SkewElement(CONJ2, {1: Qi(2) + 3 * i})


@pytest.mark.parametrize(
    "action, dim",
    [
        (GroupAction.trivial(GroupTable.cyclic(2), Q), 2),
        (CONJ2, 1),
        (GroupAction.trivial(GroupTable.cyclic(2), Qi), 4),
        (GroupAction.conjugation(GroupTable.cyclic(4), Qi), 2),
        (TRIV6, 6),
    ],
)
def test_center_dimension(action, dim):
    basis = center_basis(action)
    assert len(basis) == dim


def test_component_dims_examples():
    one = SkewElement.one(CONJ2)
    assert component_dims(CONJ2, [one]) == [2]
    A = GroupAction.trivial(GroupTable.cyclic(2), Q)
    s = SkewElement.group_element(A, 1)
    e = (SkewElement.one(A) + s) * Fraction(1, 2)
    assert component_dims(A, [e, SkewElement.one(A) - e]) == [1, 1]
    e = (one + SkewElement.group_element(CONJ2, 1)) * Fraction(1, 2)
    assert component_dims(CONJ2, [e, one - e]) == [1, 1]


def test_component_dims_rejects_bad_systems():
    one = SkewElement.one(CONJ2)
    s = SkewElement.group_element(CONJ2, 1)
    with pytest.raises(NotIdempotentSystem):
        component_dims(CONJ2, [s])
    with pytest.raises(NotIdempotentSystem):
        component_dims(CONJ2, [one, one])
    with pytest.raises(NotIdempotentSystem):
        component_dims(CONJ2, [])


def test_mismatched_rings():
    with pytest.raises(ActionMismatch):
        skew_multiply(SkewElement.one(CONJ2), SkewElement.one(TRIV6))


def test_invalid_tables_and_actions():
    with pytest.raises(InvalidInput):
        GroupTable(((0, 1), (0, 1)))
    with pytest.raises(InvalidInput):
        GroupAction(GroupTable.cyclic(3), Qi, (i, -i, i))
    with pytest.raises(InvalidInput):
        GroupAction.conjugation(GroupTable.cyclic(3), Qi)
    with pytest.raises(UnsupportedSize):
        center_basis(GroupAction.trivial(GroupTable.cyclic(13), Q))


def test_nonabelian_group_table():
    # S3 as permutations of {0,1,2}; trivial action on Q: center has dimension 3 (class count)
    perms = list(itertools.permutations(range(3)))
    idx = {p: k for k, p in enumerate(perms)}
    mul = tuple(tuple(idx[tuple(a[b[j]] for j in range(3))] for b in perms) for a in perms)
    G = GroupTable(mul, idx[(0, 1, 2)])
    assert len(center_basis(GroupAction.trivial(G, Q))) == 3
    assert G.opposite().order == 6


small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def elements(action):
    F = action.field
    coeff = st.tuples(small, small).map(lambda uv: F(uv[0]) + uv[1] * F.gen) if F.degree == 2 else small
    return st.dictionaries(st.integers(0, action.group.order - 1), coeff, max_size=action.group.order).map(
        lambda d: SkewElement(action, d)
    )


def _laws(action, x, y):
    dagger = conjugation_dagger(action.field)
    assert left_regular_matrix(x * y) == matmul_field(left_regular_matrix(x), left_regular_matrix(y))
    r = lambda z: rosati_involute(z, dagger)
    assert r(x * y) == r(y) * r(x)
    assert r(r(x)) == x
    L, Lr = left_regular_matrix(x), left_regular_matrix(r(x))
    n = action.group.order
    assert all(Lr[s][t] == dagger(L[t][s]) for s in range(n) for t in range(n))


@given(elements(CONJ2), elements(CONJ2))
def test_laws_gaussian_conjugation(x, y):
    _laws(CONJ2, x, y)


@given(elements(TRIV6), elements(TRIV6))
def test_laws_rational_z6(x, y):
    _laws(TRIV6, x, y)


@given(elements(CONJ2), elements(CONJ2), elements(CONJ2))
def test_associative_and_distributive(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
