"""Number fields Q[x]/(g), their elements, and factorization over quadratic fields."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..errors import InvalidInput, NotIrreducible, UnsupportedDegree
from .arith import iroot
from .factor import factor_over_Q, is_irreducible
from .poly import Poly, X, format_poly, poly_gcd, poly_xgcd, squarefree_decomposition

__all__ = [
    "NumberField",
    "NFElement",
    "factor_over_field",
    "is_nth_power",
    "is_minus4_fourth",
]


class NumberField:
    """Q[x]/(defining) with ``defining`` monic, integral and irreducible."""

    def __init__(self, defining: Poly, name: str = "a", check: bool = True):
        if not defining.is_monic() or not defining.is_integral():
            raise InvalidInput(f"defining polynomial {defining} must be monic with integer coefficients")
        if check and not is_irreducible(defining):
            raise NotIrreducible(f"{defining} is reducible over Q")
        self.defining = defining
        self.degree = defining.degree
        self.name = name

    @classmethod
    def rationals(cls) -> "NumberField":
        return cls(X, check=False)

    @classmethod
    def quadratic(cls, D: int, name: str = "a") -> "NumberField":
        """Q(sqrt(D)) presented as Q[x]/(x^2 - D) for a non-square integer D."""
        return cls(Poly([-D, 0, 1]), name=name)

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberField) and self.defining == other.defining

    def __hash__(self) -> int:
        return hash(("NumberField", self.defining))

    def __repr__(self) -> str:
        return f"NumberField({format_poly(self.defining)!r})"

    @property
    def gen(self) -> "NFElement":
        if self.degree == 1:
            return NFElement(self, (-self.defining[0],))
        return NFElement(self, (0, 1))

    @property
    def one(self) -> "NFElement":
        return NFElement(self, (1,))

    @property
    def zero(self) -> "NFElement":
        return NFElement(self, ())

    def __call__(self, value) -> "NFElement":
        if isinstance(value, NFElement):
            if value.parent != self:
                raise InvalidInput("element belongs to a different field")
            return value
        if isinstance(value, Poly):
            return NFElement(self, (value % self.defining).coeffs)
        if isinstance(value, (list, tuple)):
            return NFElement(self, (Poly(value) % self.defining).coeffs)
        return NFElement(self, (Fraction(value),))

    def conjugate_gen(self) -> "NFElement":
        """Image of the generator under the nontrivial automorphism of a quadratic field."""
        if self.degree != 2:
            raise UnsupportedDegree("conjugation is only defined here for quadratic fields")
        return NFElement(self, (-self.defining[1], -1))


class NFElement:
    __slots__ = ("parent", "c")

    def __init__(self, parent: NumberField, coeffs):
        n = parent.degree
        cs = [Fraction(x) for x in coeffs]
        if len(cs) > n:
            cs = list((Poly(cs) % parent.defining).coeffs)
        cs += [Fraction(0)] * (n - len(cs))
        self.parent = parent
        self.c = tuple(cs)

    # -- coercion -----------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, NFElement):
            if other.parent is not self.parent and other.parent != self.parent:
                raise InvalidInput("mixing elements of different number fields")
            return other
        if isinstance(other, (int, Fraction)):
            return NFElement(self.parent, (other,))
        return NotImplemented

    def poly(self) -> Poly:
        return Poly(self.c)

    def is_rational(self) -> bool:
        return all(x == 0 for x in self.c[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.c[0] if self.c else Fraction(0)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return NFElement(self.parent, [a + b for a, b in zip(self.c, o.c)])

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.parent, [-a for a in self.c])

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return NFElement(self.parent, [a - b for a, b in zip(self.c, o.c)])

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElement(self.parent, [a * other for a in self.c])
        o = self._lift(other)
        if o is NotImplemented:
            return o
        n = self.parent.degree
        if n == 1:
            return NFElement(self.parent, (self.c[0] * o.c[0],))
        prod = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        prod[i + j] += a * b
        return NFElement(self.parent, _reduce(prod, self.parent.defining))

    __rmul__ = __mul__

    def inverse(self) -> "NFElement":
        if self == 0:
            raise ZeroDivisionError("inverse of zero in a number field")
        g, s, _ = poly_xgcd(self.poly(), self.parent.defining)
        return NFElement(self.parent, (s * (1 / g.lc)).coeffs)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElement(self.parent, [a / other for a in self.c])
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.parent.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, NFElement):
            return self.parent == other.parent and self.c == other.c
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and (self.c[0] if self.c else 0) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.c[0] if self.c else Fraction(0))
        return hash((self.parent.defining, self.c))

    # -- field-theoretic data -----------------------------------------------

    def apply(self, image: "NFElement") -> "NFElement":
        """Evaluate this element's representative polynomial at ``image``."""
        acc = self.parent.zero
        for a in reversed(self.c):
            acc = acc * image + a
        return acc

    def conjugate(self) -> "NFElement":
        return self.apply(self.parent.conjugate_gen())

    def mult_matrix(self):
        """Matrix of multiplication by self in the power basis (row i = self * x^i)."""
        n = self.parent.degree
        rows = []
        basis = self.parent.one
        x = self.parent.gen if n > 1 else self.parent.one
        for _ in range(n):
            rows.append(list((self * basis).c))
            basis = basis * x
        return rows

    def charpoly(self) -> Poly:
        return _charpoly(self.mult_matrix())

    def minpoly(self) -> Poly:
        facs = factor_over_Q(self.charpoly())
        assert len(facs) == 1
        return facs[0][0]

    def norm(self) -> Fraction:
        cp = self.charpoly()
        return cp[0] * (-1) ** cp.degree

    def trace(self) -> Fraction:
        return -self.charpoly()[self.parent.degree - 1]

    def __str__(self) -> str:
        return format_poly(self.poly(), self.parent.name)

    def __repr__(self) -> str:
        return f"NFElement({self})"


def _reduce(coeffs, g: Poly):
    """Reduce a coefficient list modulo monic g."""
    r = list(coeffs)
    n = g.degree
    gc = g.coeffs
    for k in range(len(r) - 1, n - 1, -1):
        c = r[k]
        if c:
            for j in range(n):
                r[k - n + j] -= c * gc[j]
        r[k] = Fraction(0)
    return r[:n]


def _charpoly(m) -> Poly:
    """Characteristic polynomial by the Faddeev-LeVerrier recursion."""
    n = len(m)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    M = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M <- A*M + c_{n-k+1} I
        AM = [[sum(m[i][l] * M[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            AM[i][i] += coeffs[n - k + 1]
        M = AM
        AMk = [[sum(m[i][l] * M[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        coeffs[n - k] = -sum(AMk[i][i] for i in range(n)) / k
    return Poly(coeffs)


# -- factorization over small fields --------------------------------------------------


def _as_field_poly(F: NumberField, f: Poly) -> Poly:
    return Poly([F(c) for c in f.coeffs])


def _field_sort_key(g: Poly):
    return (g.degree, tuple(c.c if isinstance(c, NFElement) else (c,) for c in g.coeffs))


def factor_over_field(F: NumberField, f: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factors of ``f`` over ``F`` (degree at most 2), canonically ordered."""
    if F.degree > 2:
        raise UnsupportedDegree(f"factorization over a degree-{F.degree} field is not supported")
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    f = _as_field_poly(F, f)
    if F.degree == 1:
        rat = Poly([F(c).to_fraction() for c in f.coeffs])
        return [(_as_field_poly(F, g), e) for g, e in factor_over_Q(rat)]
    return list(_factor_quadratic_cached(F, f))


@lru_cache(maxsize=4096)
def _factor_quadratic_cached(F: NumberField, f: Poly):
    out = []
    for part, mult in squarefree_decomposition(f):
        for g in _trager(F, part):
            out.append((g, mult))
    out.sort(key=lambda ge: (_field_sort_key(ge[0]), ge[1]))
    return tuple(out)


def _trager(F: NumberField, h: Poly) -> list[Poly]:
    if h.degree <= 1:
        return [h.monic()]
    theta = F.gen
    conj = F.conjugate_gen()
    s = 0
    while True:
        shift = Poly([-s * theta, 1])
        hs = h.compose(shift)
        norm = hs * hs.map_coeffs(lambda c: F(c).apply(conj))
        rat = Poly([F(c).to_fraction() for c in norm.coeffs])
        if poly_gcd(rat, rat.derivative()).degree == 0:
            break
        s = -s if s > 0 else 1 - s
    rational_factors = factor_over_Q(rat)
    if len(rational_factors) == 1:
        return [h.monic()]
    back = Poly([s * theta, 1])
    out = []
    for g, _ in rational_factors:
        d = poly_gcd(hs, _as_field_poly(F, g))
        if d.degree > 0:
            out.append(d.compose(back).monic())
    assert sum(g.degree for g in out) == h.degree
    return out


def is_nth_power(F: NumberField, alpha, n: int):
    """Some beta in F with beta**n == alpha, or None."""
    if F.degree > 2:
        raise UnsupportedDegree(f"root extraction over a degree-{F.degree} field is not supported")
    alpha = F(alpha)
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return alpha
    if F.degree == 1:
        beta = _rational_root(alpha.to_fraction(), n)
        return None if beta is None else F(beta)
    for g, _ in factor_over_field(F, Poly.monomial(n) - Poly([alpha])):
        if g.degree == 1:
            beta = -g[0]
            if beta**n != alpha:
                raise ArithmeticError("root witness failed re-expansion")
            return beta
    return None


def _rational_root(a: Fraction, n: int):
    if a < 0 and n % 2 == 0:
        return None
    num, den = abs(a.numerator), a.denominator
    r, s = iroot(num, n), iroot(den, n)
    if r**n != num or s**n != den:
        return None
    beta = Fraction(r, s)
    return -beta if a < 0 else beta


def is_minus4_fourth(F: NumberField, alpha):
    """Some beta in F with alpha == -4*beta**4, or None."""
    alpha = F(alpha)
    beta = is_nth_power(F, -alpha / 4, 4)
    if beta is not None and -4 * beta**4 != alpha:
        raise ArithmeticError("-4*beta^4 witness failed re-expansion")
    return beta
