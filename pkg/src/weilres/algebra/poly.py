"""Dense univariate polynomials over Q or over a number field.

Coefficients are stored lowest degree first.  Rational coefficients are
``fractions.Fraction``; number-field coefficients are ``NFElement`` values,
which interoperate with ``Fraction`` through the usual operators.  The zero
polynomial has an empty coefficient tuple and degree -1.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm, gcd

__all__ = ["Poly", "X", "parse_poly", "poly_gcd", "poly_xgcd", "squarefree_decomposition"]


def _coerce(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    return c


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, n: int, c=1) -> "Poly":
        return cls([0] * n + [c])

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            other = Poly([other])
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __lt__(self, other: "Poly") -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        """Canonical ordering: by degree, then lexicographically on coefficients."""
        return (self.degree, self.coeffs)

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __add__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly([other])
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return Poly([other]) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = _coerce(other)
            return Poly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Poly(out)

    def __rmul__(self, other) -> "Poly":
        return self * other

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative polynomial power")
        result, base = Poly([1]), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other: "Poly"):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree
        inv = 1 / other.lc
        if len(r) - 1 < db:
            return Poly(), self
        q = [Fraction(0)] * (len(r) - db)
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db]
            if c == 0:
                continue
            c = c * inv
            q[k] = c
            for j, b in enumerate(other.coeffs):
                r[k + j] = r[k + j] - c * b
        return Poly(q), Poly(r[:db])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        return not (other % self)

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Poly":
        if not self:
            return self
        inv = 1 / self.lc
        return Poly([c * inv for c in self.coeffs])

    def compose(self, other: "Poly") -> "Poly":
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def substitute_power(self, n: int) -> "Poly":
        """Return f(x^n)."""
        out = [Fraction(0)] * (n * self.degree + 1) if self else []
        for i, c in enumerate(self.coeffs):
            out[n * i] = c
        return Poly(out)

    def map_coeffs(self, fn) -> "Poly":
        return Poly([fn(c) for c in self.coeffs])

    # -- integrality --------------------------------------------------------

    def is_rational(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.coeffs)

    def is_integral(self) -> bool:
        return all(isinstance(c, Fraction) and c.denominator == 1 for c in self.coeffs)

    def is_monic(self) -> bool:
        return bool(self) and self.lc == 1

    def to_ints(self) -> list[int]:
        if not self.is_integral():
            raise ValueError(f"polynomial {self} does not have integer coefficients")
        return [int(c) for c in self.coeffs]

    def content(self) -> Fraction:
        """Rational c with self/c primitive in Z[x] and positive leading coefficient."""
        if not self:
            return Fraction(0)
        den = lcm(*(c.denominator for c in self.coeffs))
        num = 0
        for c in self.coeffs:
            num = gcd(num, c.numerator * (den // c.denominator))
        c = Fraction(num, den)
        return c if self.lc > 0 else -c

    def primitive(self) -> "Poly":
        return self * (1 / self.content()) if self else self

    # -- display ------------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"


X = Poly((0, 1))


def format_poly(f: Poly, var: str = "x") -> str:
    if not f:
        return "0"
    parts = []
    for i in range(f.degree, -1, -1):
        c = f.coeffs[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not isinstance(c, Fraction) and c.is_rational():
            c = c.to_fraction()
        if isinstance(c, Fraction):
            neg = c < 0
            a = -c if neg else c
            if mono and a == 1:
                body = mono
            else:
                body = str(a) + (f"*{mono}" if mono else "")
        else:
            neg = False
            body = f"({c})" + (f"*{mono}" if mono else "")
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


_TERM = re.compile(r"^(?:(\d+(?:/\d+)?)(\*)?)?(?:([A-Za-z])(?:(?:\^|\*\*)(\d+))?)?$")


def parse_poly(text: str, var: str = "x") -> Poly:
    """Parse text such as ``x^4 - 2*x + 5`` or ``3/2*x^2 + 1``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    if s[0] not in "+-":
        s = "+" + s
    pieces = re.findall(r"[+-][^+-]*", s)
    if "".join(pieces) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    coeffs: dict[int, Fraction] = {}
    for piece in pieces:
        sign, body = piece[0], piece[1:]
        m = _TERM.match(body)
        if not body or not m or (m.group(1) is None and m.group(3) is None):
            raise ValueError(f"cannot parse term {piece!r} in {text!r}")
        num, star, letter, exp = m.groups()
        if star and letter is None:
            raise ValueError(f"dangling '*' in term {piece!r}")
        if letter is not None and letter != var:
            raise ValueError(f"unexpected variable {letter!r}; expected {var!r}")
        c = Fraction(num) if num is not None else Fraction(1)
        if sign == "-":
            c = -c
        deg = 0 if letter is None else (int(exp) if exp is not None else 1)
        coeffs[deg] = coeffs.get(deg, Fraction(0)) + c
    top = max(coeffs)
    return Poly([coeffs.get(i, 0) for i in range(top + 1)])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over the coefficient field (zero if both inputs are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly):
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = Poly([1]), Poly()
    t0, t1 = Poly(), Poly([1])
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    inv = 1 / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm in characteristic zero; factors are monic and nonconstant."""
    f = f.monic()
    out = []
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f // a
    c = df // a - b.derivative()
    i = 1
    while b.degree > 0:
        d = poly_gcd(b, c)
        if d.degree > 0:
            out.append((d, i))
        b = b // d
        c = c // d - b.derivative()
        i += 1
    return out
