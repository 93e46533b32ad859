"""Skew group rings Lambda^t[G] over a number field Lambda.

Elements are finite sums of lambda_s * s with s in a finite group G that acts on
Lambda through t.  Multiplication is (lambda s)(mu r) = lambda * t(s)(mu) * (s r).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .algebra.linalg import nullspace, rank
from .algebra.numberfield import NFElement, NumberField
from .errors import ActionMismatch, InvalidInput, NotIdempotentSystem, UnsupportedSize

MAX_GROUP_ORDER = 12
MAX_FIELD_DEGREE = 2


@dataclass(frozen=True)
class GroupTable:
    """A finite group on {0, ..., order-1} given by its multiplication table."""

    mul: tuple[tuple[int, ...], ...]
    identity: int = 0

    def __post_init__(self):
        n = len(self.mul)
        if n == 0 or any(len(row) != n for row in self.mul):
            raise InvalidInput("multiplication table must be square and nonempty")
        if any(not 0 <= x < n for row in self.mul for x in row):
            raise InvalidInput("table entries out of range")
        e = self.identity
        if any(self.mul[e][i] != i or self.mul[i][e] != i for i in range(n)):
            raise InvalidInput(f"{e} is not a two-sided identity")
        for i in range(n):
            if e not in self.mul[i]:
                raise InvalidInput(f"element {i} has no inverse")
        for a in range(n):
            for b in range(n):
                ab = self.mul[a][b]
                for c in range(n):
                    if self.mul[ab][c] != self.mul[a][self.mul[b][c]]:
                        raise InvalidInput("table is not associative")

    @classmethod
    def cyclic(cls, n: int) -> "GroupTable":
        if n < 1:
            raise InvalidInput("group order must be positive")
        return cls(tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))

    @property
    def order(self) -> int:
        return len(self.mul)

    def opposite(self) -> "GroupTable":
        n = self.order
        return GroupTable(tuple(tuple(self.mul[j][i] for j in range(n)) for i in range(n)), self.identity)

    def inverse(self, i: int) -> int:
        return self.mul[i].index(self.identity)

    def __iter__(self):
        return iter(range(self.order))


@dataclass(frozen=True)
class GroupAction:
    """Homomorphism G -> Aut(Lambda), each automorphism given by the image of the generator."""

    group: GroupTable
    field: NumberField
    images: tuple[NFElement, ...]

    def __post_init__(self):
        G, F = self.group, self.field
        if len(self.images) != G.order:
            raise InvalidInput("need one generator image per group element")
        if F.degree > MAX_FIELD_DEGREE:
            raise UnsupportedSize(f"coefficient fields of degree > {MAX_FIELD_DEGREE} are not supported")
        for img in self.images:
            if img.parent != F:
                raise InvalidInput("generator image lies in the wrong field")
            if F.defining(img) != 0:
                raise InvalidInput(f"{img} is not a root of the defining polynomial")
        if F.degree > 1:
            if self.images[G.identity] != F.gen:
                raise InvalidInput("identity must act trivially")
            for s in G:
                for t in G:
                    if self.images[G.mul[s][t]] != self.act(s, self.images[t]):
                        raise InvalidInput("action does not respect the group law")

    @classmethod
    def trivial(cls, group: GroupTable, field: NumberField) -> "GroupAction":
        return cls(group, field, tuple(field.gen for _ in group))

    @classmethod
    def conjugation(cls, group: GroupTable, field: NumberField, generator: int = 1) -> "GroupAction":
        """Cyclic group acting on a quadratic field: generator^k acts by conjugation^k."""
        n = group.order
        if n % 2:
            raise InvalidInput("conjugation needs a group of even order")
        powers = [group.identity]
        for _ in range(n - 1):
            powers.append(group.mul[powers[-1]][generator])
        if sorted(powers) != list(range(n)):
            raise InvalidInput(f"{generator} does not generate the group")
        images = [None] * n
        for k, s in enumerate(powers):
            images[s] = field.conjugate_gen() if k % 2 else field.gen
        return cls(group, field, tuple(images))

    def act(self, s: int, lam: NFElement) -> NFElement:
        if self.field.degree == 1:
            return lam
        return lam.apply(self.images[s])


class SkewElement:
    """A finite sum of lambda_s * s; missing keys are zero coefficients."""

    __slots__ = ("action", "coeffs")

    def __init__(self, action: GroupAction, coeffs: Mapping[int, object] = ()):
        F = action.field
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean = {}
        for s, lam in items:
            if not 0 <= s < action.group.order:
                raise InvalidInput(f"group index {s} out of range")
            lam = F(lam)
            if lam != 0:
                clean[s] = clean.get(s, F.zero) + lam
        self.action = action
        self.coeffs = {s: v for s, v in sorted(clean.items()) if v != 0}

    @classmethod
    def group_element(cls, action: GroupAction, s: int) -> "SkewElement":
        return cls(action, {s: 1})

    @classmethod
    def scalar(cls, action: GroupAction, lam) -> "SkewElement":
        return cls(action, {action.group.identity: lam})

    @classmethod
    def one(cls, action: GroupAction) -> "SkewElement":
        return cls.scalar(action, 1)

    def coeff(self, s: int) -> NFElement:
        return self.coeffs.get(s, self.action.field.zero)

    def _same(self, other: "SkewElement"):
        if not isinstance(other, SkewElement):
            return NotImplemented
        if other.action is not self.action and other.action != self.action:
            raise ActionMismatch("operands live in different skew group rings")
        return other

    def __add__(self, other):
        o = self._same(other)
        if o is NotImplemented:
            return o
        merged = dict(self.coeffs)
        for s, v in o.coeffs.items():
            merged[s] = merged.get(s, self.action.field.zero) + v
        return SkewElement(self.action, merged)

    def __neg__(self):
        return SkewElement(self.action, {s: -v for s, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SkewElement):
            return skew_multiply(self, other)
        return SkewElement(self.action, {s: v * other for s, v in self.coeffs.items()})

    def __rmul__(self, other):
        return SkewElement.scalar(self.action, other) * self

    def __eq__(self, other):
        if not isinstance(other, SkewElement):
            return NotImplemented
        return self.action == other.action and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "SkewElement(0)"
        return "SkewElement(" + " + ".join(f"({v})*g{s}" for s, v in self.coeffs.items()) + ")"


def skew_multiply(x: SkewElement, y: SkewElement) -> SkewElement:
    x._same(y)
    A = x.action
    mul = A.group.mul
    out: dict[int, NFElement] = {}
    for s, lam in x.coeffs.items():
        for r, mu in y.coeffs.items():
            k = mul[s][r]
            term = lam * A.act(s, mu)
            out[k] = out[k] + term if k in out else term
    return SkewElement(A, out)


def left_regular_matrix(x: SkewElement):
    """Matrix over Lambda with entry (s, r) equal to s^-1(lambda_{s r^-1})."""
    A = x.action
    G = A.group
    rows = []
    for s in G:
        s_inv = G.inverse(s)
        rows.append([A.act(s_inv, x.coeff(G.mul[s][G.inverse(r)])) for r in G])
    return rows


def matmul_field(a, b):
    n = len(b[0])
    out = []
    for row in a:
        acc = []
        for j in range(n):
            total = row[0] * b[0][j]
            for k in range(1, len(row)):
                total = total + row[k] * b[k][j]
            acc.append(total)
        out.append(acc)
    return out


def conjugation_dagger(field: NumberField) -> Callable[[NFElement], NFElement]:
    if field.degree == 1:
        return lambda lam: lam
    return lambda lam: lam.conjugate()


def rosati_involute(x: SkewElement, dagger: Callable[[NFElement], NFElement] | None = None) -> SkewElement:
    """sum lambda_s s  ->  sum s^-1(dagger(lambda_s)) s^-1."""
    A = x.action
    G = A.group
    dagger = dagger or (lambda lam: lam)
    out = {}
    for s, lam in x.coeffs.items():
        s_inv = G.inverse(s)
        out[s_inv] = A.act(s_inv, dagger(lam))
    return SkewElement(A, out)


def _basis(action: GroupAction):
    F = action.field
    powers = [F.one]
    for _ in range(F.degree - 1):
        powers.append(powers[-1] * F.gen)
    return [(k, s, SkewElement(action, {s: powers[k]})) for s in action.group for k in range(F.degree)]


def _rational_coords(x: SkewElement, action: GroupAction):
    d = action.field.degree
    out = []
    for s in action.group:
        c = x.coeff(s).c
        out.extend(c[k] if k < len(c) else Fraction(0) for k in range(d))
    return out


def center_basis(action: GroupAction) -> list[SkewElement]:
    """A Q-basis of the center, found by solving the commutator equations."""
    G, F = action.group, action.field
    if G.order > MAX_GROUP_ORDER:
        raise UnsupportedSize(f"group order {G.order} exceeds {MAX_GROUP_ORDER}")
    if F.degree > MAX_FIELD_DEGREE:
        raise UnsupportedSize(f"field degree {F.degree} exceeds {MAX_FIELD_DEGREE}")
    basis = _basis(action)
    generators = [SkewElement.group_element(action, s) for s in G]
    if F.degree > 1:
        generators.append(SkewElement.scalar(action, F.gen))
    # one block of equations per generator y: coordinates of e*y - y*e
    columns = []
    for _, _, e in basis:
        col = []
        for y in generators:
            col.extend(_rational_coords(e * y - y * e, action))
        columns.append(col)
    rows = [list(r) for r in zip(*columns)]
    out = []
    for v in nullspace(rows, len(basis)):
        z = SkewElement(action, {})
        for coef, (_, _, e) in zip(v, basis):
            if coef:
                z = z + e * coef
        for y in generators:
            if z * y != y * z:
                raise ArithmeticError("computed center element does not commute")
        out.append(z)
    return out


def component_dims(action: GroupAction, idempotents: list[SkewElement]) -> list[int]:
    """Lambda-ranks of the left-regular matrices of a complete orthogonal idempotent system."""
    if not idempotents:
        raise NotIdempotentSystem("empty idempotent list")
    one = SkewElement.one(action)
    total = SkewElement(action, {})
    for i, e in enumerate(idempotents):
        if e.action != action:
            raise ActionMismatch("idempotent from a different ring")
        if e * e != e:
            raise NotIdempotentSystem(f"element {i} is not idempotent")
        for j, f in enumerate(idempotents):
            if i != j and e * f:
                raise NotIdempotentSystem(f"elements {i} and {j} are not orthogonal")
        total = total + e
    if total != one:
        raise NotIdempotentSystem("idempotents do not sum to 1")
    dims = [rank(left_regular_matrix(e)) for e in idempotents]
    if sum(dims) != action.group.order:
        raise ArithmeticError("component ranks do not add up to |G|")
    return dims
