"""Print the decompositions behind the hand-checkable examples.

Covers the supersingular restriction of pi_K = -25 to F_5, the restriction of
the F_81 curve with Frobenius trace 14 down to F_3, the trace-2 curve over F_5
over F_625, and the cyclic CM splittings for n = 4 and n = 5.
"""

from weilres.algebra.poly import format_poly, parse_poly
from weilres.cyclic import cross_check_finite, decompose_cyclic
from weilres.honda_tate import WeilNumber, isogeny_class
from weilres.restriction import (
    RestrictionProblem,
    descent_obstructions,
    frobenius_field,
    radical_irreducible,
    simplicity_verdict,
)


def show_restriction(minpoly, p, a, n):
    w = WeilNumber(parse_poly(minpoly), p, a)
    cls = isogeny_class(w)
    inv = ", ".join(f"{k}: {v}" for k, v in cls.invariants)
    print(f"pi_K = root of {format_poly(w.minpoly)} over F_{p}^{a}  (m = {cls.m}, dim = {cls.dim}, inv {{{inv}}})")
    prob = RestrictionProblem(w, n)
    v = simplicity_verdict(prob)
    for c, k in v.decomposition.components:
        print(f"  component {format_poly(c.minpoly):<24} dim {c.dim}  multiplicity {k}")
    print(f"  center  Q[X]/({format_poly(v.decomposition.center_poly)})")
    if w.degree <= 2:
        F, pi = frobenius_field(w)
        roots = [(q, str(b)) for q, b in descent_obstructions(prob) if b is not None]
        rad = radical_irreducible(F, pi, n)
        print(f"  descent obstructions {roots}; X^{n} - pi_K: {rad.kind}"
              + (f" (beta = {rad.witness})" if rad.witness is not None else ""))
    print(f"  verdict {v.kind}: {v.reason}\n")


def main():
    show_restriction("x+25", 5, 4, 4)
    show_restriction("x^2-14*x+81", 3, 4, 4)
    show_restriction("x^2+x+25", 5, 2, 2)

    r = cross_check_finite(5, 2, 4)
    print(f"trace-2 curve {r.curve} over F_5, n = 4: cyclic dims {r.cyclic.dims()}, agree = {r.agree}")
    for c, k in r.oracle.components:
        print(f"  {format_poly(c.minpoly)}  x{k}")
    print()

    for n in (4, 5):
        rep = decompose_cyclic(n, 1, -4)
        parts = ", ".join(f"d={c.d}: {list(c.parts)}" for c in rep.components)
        print(f"cyclic n={n}, CM by Q(i): {parts}")


if __name__ == "__main__":
    main()
