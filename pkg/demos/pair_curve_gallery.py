"""The plane curve of unordered point pairs attached to a pencil.

Unordered pairs of points of P^1 form a projective plane with coordinates
(u, v, w); a pencil of degree-k binary forms sweeps out a curve of degree k-1
there, recording which pairs sit inside a common member.  The demo computes a
few of these curves, locates their intersections with the diagonal conic
(ramification!), and shows how base points degrade the picture.

Run:  python3 demos/pair_curve_gallery.py
"""

from pencillab import (
    BinaryForm,
    Pencil,
    ProjPoint,
    base_locus,
    bezoutian_curve,
    diagonal_conic,
    has_multiple_base_points,
    intersect_with_conic,
    is_reduced_curve,
    rational_roots,
    sym_point,
    wronskian,
)
from pencillab.fields import QQ


def form(coeffs):
    return BinaryForm(QQ, len(coeffs) - 1, coeffs)


def pt(x0, x1):
    return ProjPoint(QQ, QQ.coerce(x0), QQ.coerce(x1))


def describe(name, pen):
    curve = bezoutian_curve(pen)
    terms = []
    for (a, b, c), coef in sorted(curve.monomial_dict().items(), reverse=True):
        mono = " ".join(s if e == 1 else f"{s}^{e}"
                        for s, e in zip("uvw", (a, b, c)) if e)
        terms.append(f"({coef}) {mono}")
    print(f"{name}")
    print(f"  pair curve : {' + '.join(terms)}  (degree {curve.degree})")
    print(f"  reduced    : {is_reduced_curve(curve)}")
    print(f"  base locus : degree {base_locus(pen).degree}"
          f"{' with a multiple point' if has_multiple_base_points(pen) else ''}")
    print()
    return curve


def ramification_on_the_diagonal():
    pen = Pencil(form([0, 0, 1]), form([1, -2, 1]))
    curve = describe("pencil <x1^2, (x0 - x1)^2>", pen)
    w = wronskian(pen)
    print("  ramification points read off the Wronskian:",
          [(p.to_json(), m) for p, m in rational_roots(w)])
    for t in (0, 1, 2):
        p = pt(1, t)
        print(f"  doubled point 2*[1:{t}] on the curve: "
              f"{curve.contains(sym_point(p, p))}")
    print()


def conic_transversality():
    pen = Pencil(form([0, 0, 0, 1]), form([1, 0, 0, 0]))
    curve = describe("pencil <x1^3, x0^3>", pen)
    rep = intersect_with_conic(curve, diagonal_conic(QQ))
    print("  against the diagonal conic:"
          f" resultant degree {rep.degree} (expected {rep.expected_degree}),"
          f" squarefree={rep.squarefree} -> transversal={rep.transversal}")
    print("  (tangency along the diagonal is exactly total ramification)")
    print()


def a_degenerate_example():
    pen = Pencil(form([0, 1, 0, 0]), form([-1, 1, 0, 0]))
    describe("pencil <x0^2 x1, x0^2 (x1 - x0)> with a double base point", pen)


if __name__ == "__main__":
    ramification_on_the_diagonal()
    conic_transversality()
    a_degenerate_example()
