"""Pencils of binary forms and their plane-curve geometry on the symmetric square.

The symmetric square of the projective line is identified with the plane
through (u, v, w) = (x0*y0, x0*y1 + x1*y0, x1*y1); the diagonal maps to the
conic v^2 = 4uw.  A pencil spanned by two degree-k binary forms f, g induces
a plane curve of degree k-1: the quotient of f(x)g(y) - f(y)g(x) by
(x0*y1 - x1*y0), rewritten in (u, v, w).  Its points are exactly the images
of unordered pairs lying in a single member of the pencil, which is what
same_fiber checks directly on evaluations.

Coefficient conventions: a BinaryForm of degree d stores coeffs[i] as the
coefficient of x0^(d-i) * x1^i, so the coefficient list read in order is also
the Taylor expansion at [1:0] in the local coordinate x1/x0.  Plane curves
store coefficients over curve_monomials(d): exponent triples (a, b, c) for
u^a v^b w^c, ordered by a descending then b descending.

Everything is exact (Fraction over Q, residues over F_q); no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, lcm

import sympy

from .errors import (
    BasePointAmbiguity,
    BasePointPresent,
    CharacteristicObstruction,
    CoincidentPoints,
    DegeneratePencil,
)
from .fields import Element, Field

# ---------------------------------------------------------------------------
# points


@dataclass(frozen=True)
class ProjPoint:
    """A point of the projective line, normalized so equality is syntactic."""

    field: Field
    x0: Element
    x1: Element

    def __post_init__(self):
        x0 = self.field.coerce(self.x0)
        x1 = self.field.coerce(self.x1)
        if self.field.is_zero(x0) and self.field.is_zero(x1):
            raise ValueError("(0, 0) is not a projective point")
        if not self.field.is_zero(x0):
            x0, x1 = self.field.one, self.field.div(x1, x0)
        else:
            x0, x1 = self.field.zero, self.field.one
        object.__setattr__(self, "x0", x0)
        object.__setattr__(self, "x1", x1)

    def coords(self) -> tuple[Element, Element]:
        return (self.x0, self.x1)

    def to_json(self) -> list[str]:
        return [self.field.to_str(self.x0), self.field.to_str(self.x1)]


@dataclass(frozen=True)
class SymPoint:
    """A point of the plane receiving the symmetric square, normalized."""

    field: Field
    u: Element
    v: Element
    w: Element

    def __post_init__(self):
        coords = [self.field.coerce(c) for c in (self.u, self.v, self.w)]
        pivot = next((c for c in coords if not self.field.is_zero(c)), None)
        if pivot is None:
            raise ValueError("(0, 0, 0) is not a projective point")
        coords = [self.field.div(c, pivot) for c in coords]
        for name, val in zip(("u", "v", "w"), coords):
            object.__setattr__(self, name, val)

    def coords(self) -> tuple[Element, Element, Element]:
        return (self.u, self.v, self.w)

    def on_diagonal(self) -> bool:
        """Whether the point is the image of a doubled point, v^2 = 4uw."""
        F = self.field
        lhs = F.mul(self.v, self.v)
        rhs = F.mul(F.coerce(4), F.mul(self.u, self.w))
        return F.eq(lhs, rhs)

    def to_json(self) -> list[str]:
        return [self.field.to_str(c) for c in self.coords()]


def sym_point(p: ProjPoint, q: ProjPoint) -> SymPoint:
    """Image of the unordered pair {p, q} in the plane."""
    if p.field != q.field:
        raise ValueError("points live over different fields")
    F = p.field
    u = F.mul(p.x0, q.x0)
    v = F.add(F.mul(p.x0, q.x1), F.mul(p.x1, q.x0))
    w = F.mul(p.x1, q.x1)
    return SymPoint(F, u, v, w)


# ---------------------------------------------------------------------------
# binary forms


@dataclass(frozen=True)
class BinaryForm:
    field: Field
    degree: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(self.field.coerce(c) for c in self.coeffs)
        if self.degree < 0 or len(coeffs) != self.degree + 1:
            raise ValueError(
                f"degree {self.degree} needs {self.degree + 1} coefficients, "
                f"got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, field: Field, coeffs) -> "BinaryForm":
        coeffs = tuple(coeffs)
        return cls(field, len(coeffs) - 1, coeffs)

    def is_zero(self) -> bool:
        return all(self.field.is_zero(c) for c in self.coeffs)

    def evaluate(self, p: ProjPoint) -> Element:
        F = self.field
        if p.field != F:
            raise ValueError("point and form fields differ")
        acc = F.zero
        for i, c in enumerate(self.coeffs):
            if F.is_zero(c):
                continue
            term = F.mul(c, F.mul(F.pow(p.x0, self.degree - i), F.pow(p.x1, i)))
            acc = F.add(acc, term)
        return acc

    def normalized(self) -> "BinaryForm":
        F = self.field
        pivot = next((c for c in self.coeffs if not F.is_zero(c)), None)
        if pivot is None or F.eq(pivot, F.one):
            return self
        inv = F.inv(pivot)
        return BinaryForm(F, self.degree, tuple(F.mul(inv, c) for c in self.coeffs))

    def scale(self, c) -> "BinaryForm":
        c = self.field.coerce(c)
        return BinaryForm(
            self.field, self.degree, tuple(self.field.mul(c, a) for a in self.coeffs)
        )

    def add(self, other: "BinaryForm") -> "BinaryForm":
        if other.degree != self.degree or other.field != self.field:
            raise ValueError("can only add forms of equal degree over one field")
        F = self.field
        return BinaryForm(
            F, self.degree, tuple(F.add(a, b) for a, b in zip(self.coeffs, other.coeffs))
        )

    def multiply(self, other: "BinaryForm") -> "BinaryForm":
        if other.field != self.field:
            raise ValueError("field mismatch")
        F = self.field
        out = [F.zero] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if F.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
        return BinaryForm(F, self.degree + other.degree, tuple(out))

    def derivative_x0(self) -> "BinaryForm":
        F, d = self.field, self.degree
        out = tuple(F.mul(F.coerce(d - i), self.coeffs[i]) for i in range(d))
        return BinaryForm(F, d - 1, out)

    def derivative_x1(self) -> "BinaryForm":
        F, d = self.field, self.degree
        out = tuple(F.mul(F.coerce(i), self.coeffs[i]) for i in range(1, d + 1))
        return BinaryForm(F, d - 1, out)

    def substituted(self, a, b, c, d) -> "BinaryForm":
        """f(a*X + b*Y, c*X + d*Y) as a form in (X, Y) of the same degree."""
        F, deg = self.field, self.degree
        a, b, c, d = (F.coerce(t) for t in (a, b, c, d))
        pow1 = [[F.one]]
        pow2 = [[F.one]]
        for _ in range(deg):
            pow1.append(_linear_multiply(F, pow1[-1], a, b))
            pow2.append(_linear_multiply(F, pow2[-1], c, d))
        out = [F.zero] * (deg + 1)
        for i, fi in enumerate(self.coeffs):
            if F.is_zero(fi):
                continue
            p1, p2 = pow1[deg - i], pow2[i]
            for s, cs in enumerate(p1):
                if F.is_zero(cs):
                    continue
                for t, ct in enumerate(p2):
                    out[s + t] = F.add(out[s + t], F.mul(fi, F.mul(cs, ct)))
        return BinaryForm(F, deg, tuple(out))

    def vanishing_order_at(self, p: ProjPoint) -> int:
        """Multiplicity of p as a root (0 if none); degree+1 flags the zero form."""
        moved = _move_to_origin(self, p)
        for i, c in enumerate(moved.coeffs):
            if not self.field.is_zero(c):
                return i
        return self.degree + 1

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "coeffs": [self.field.to_str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json_dict(cls, field: Field, data: dict) -> "BinaryForm":
        return cls(field, int(data["degree"]), tuple(data["coeffs"]))


def _linear_multiply(F: Field, coeffs: list, a, b) -> list:
    """Multiply a coefficient list (over Y-degree) by (a*X + b*Y)."""
    out = [F.zero] * (len(coeffs) + 1)
    for t, c in enumerate(coeffs):
        out[t] = F.add(out[t], F.mul(a, c))
        out[t + 1] = F.add(out[t + 1], F.mul(b, c))
    return out


def _move_to_origin(form: BinaryForm, p: ProjPoint) -> BinaryForm:
    """Substitute so p becomes [1:0]; coefficients become Taylor coefficients at p."""
    if not form.field.is_zero(p.x0):
        return form.substituted(p.x0, 0, p.x1, 1)
    return form.substituted(p.x0, 1, p.x1, 0)


def linear_form(p: ProjPoint) -> BinaryForm:
    """The degree-1 form vanishing exactly at p."""
    F = p.field
    return BinaryForm(F, 1, (p.x1, F.neg(p.x0)))


def form_power(form: BinaryForm, k: int) -> BinaryForm:
    out = BinaryForm(form.field, 0, (form.field.one,))
    for _ in range(k):
        out = out.multiply(form)
    return out


# ---------------------------------------------------------------------------
# univariate helpers (coefficient lists ascending in the chart coordinate x1/x0)


def _trim(F: Field, p: list) -> list:
    while p and F.is_zero(p[-1]):
        p.pop()
    return p


def _poly_divmod(F: Field, a: list, b: list) -> tuple[list, list]:
    a, b = _trim(F, list(a)), _trim(F, list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], a
    quot = [F.zero] * (len(a) - len(b) + 1)
    inv_lead = F.inv(b[-1])
    rem = a
    while len(rem) >= len(b):
        shift = len(rem) - len(b)
        factor = F.mul(rem[-1], inv_lead)
        quot[shift] = factor
        for i, bc in enumerate(b):
            rem[shift + i] = F.sub(rem[shift + i], F.mul(factor, bc))
        rem.pop()  # leading entry is exactly zero now
        rem = _trim(F, rem)
    return quot, rem


def _poly_gcd(F: Field, a: list, b: list) -> list:
    a, b = _trim(F, list(a)), _trim(F, list(b))
    while b:
        _, r = _poly_divmod(F, a, b)
        a, b = b, r
    if a:
        inv = F.inv(a[-1])
        a = [F.mul(inv, c) for c in a]
    return a


def _poly_derivative(F: Field, p: list) -> list:
    return _trim(F, [F.mul(F.coerce(i), c) for i, c in enumerate(p)][1:])


def _poly_squarefree(F: Field, p: list) -> bool:
    """Squarefreeness test, valid in every characteristic.

    Over a perfect field irreducibles are separable, so gcd(p, p') is constant
    exactly when p is squarefree; p' = 0 with deg p >= 1 means a p-th power.
    """
    p = _trim(F, list(p))
    if len(p) <= 1:
        return True
    d = _poly_derivative(F, p)
    if not d:
        return False
    return len(_poly_gcd(F, p, d)) == 1


def _yun_decomposition(F: Field, p: list) -> list[tuple[list, int]]:
    """Squarefree decomposition p = prod part^mult over a characteristic-0 field."""
    if F.q != 0:
        raise CharacteristicObstruction(
            "multiplicity decomposition implemented for characteristic 0 only"
        )
    p = _trim(F, list(p))
    if len(p) <= 1:
        return []
    dp = _poly_derivative(F, p)
    a = _poly_gcd(F, p, dp)
    b, _ = _poly_divmod(F, p, a)
    c, _ = _poly_divmod(F, dp, a)
    out = []
    m = 1
    while len(b) > 1:
        d = _trim(F, [F.sub(x, y) for x, y in _zip_pad(F, c, _poly_derivative(F, b))])
        part = _poly_gcd(F, b, d)
        if len(part) > 1:
            out.append((part, m))
        b, _ = _poly_divmod(F, b, part)
        c, _ = _poly_divmod(F, d, part)
        m += 1
    return out


def _zip_pad(F: Field, a: list, b: list):
    n = max(len(a), len(b))
    return zip(a + [F.zero] * (n - len(a)), b + [F.zero] * (n - len(b)))


def binary_gcd(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Greatest common divisor of two binary forms, first nonzero coefficient 1.

    The chart polynomial is the coefficient list itself; the residual power of
    x0 accounts for common vanishing at [0:1].
    """
    if f.field != g.field:
        raise ValueError("field mismatch")
    F = f.field
    pf, pg = _trim(F, list(f.coeffs)), _trim(F, list(g.coeffs))
    if not pf and not pg:
        raise ValueError("gcd of two zero forms")
    if not pf:
        return g.normalized()
    if not pg:
        return f.normalized()
    x0_mult = min(f.degree - (len(pf) - 1), g.degree - (len(pg) - 1))
    core = _poly_gcd(F, pf, pg)
    coeffs = core + [F.zero] * x0_mult
    return BinaryForm(F, len(coeffs) - 1, tuple(coeffs)).normalized()


def squarefree_form(f: BinaryForm) -> bool:
    """Whether f has no repeated root in the algebraic closure."""
    F = f.field
    p = _trim(F, list(f.coeffs))
    if not p:
        raise ValueError("zero form")
    x0_mult = f.degree - (len(p) - 1)
    return x0_mult <= 1 and _poly_squarefree(F, p)


def total_vanishing_multiplicity(f: BinaryForm) -> int:
    """Sum of root multiplicities over the algebraic closure (rationals only).

    Computed from the Yun squarefree decomposition plus the residual x0 power,
    so it doubles as a consistency check on the factor bookkeeping: the result
    equals the degree exactly when no factor was lost.
    """
    F = f.field
    p = _trim(F, list(f.coeffs))
    if not p:
        raise ValueError("zero form")
    x0_mult = f.degree - (len(p) - 1)
    parts = _yun_decomposition(F, p)
    return x0_mult + sum((len(part) - 1) * m for part, m in parts)


def rational_roots(f: BinaryForm) -> list[tuple[ProjPoint, int]]:
    """Roots defined over the base field, with multiplicities.

    Over F_q all q+1 points are scanned.  Over Q the divisor candidates of the
    cleared trailing and leading coefficients are walked, so this is meant for
    small hand-built forms; irrational roots are simply not reported (they stay
    visible through squarefree decompositions instead).
    """
    F = f.field
    if f.is_zero():
        raise ValueError("zero form")
    out: list[tuple[ProjPoint, int]] = []
    if F.q != 0:
        for pt in [ProjPoint(F, 0, 1)] + [ProjPoint(F, 1, t) for t in range(F.q)]:
            m = f.vanishing_order_at(pt)
            if m > 0:
                out.append((pt, m))
        return out
    p = _trim(F, list(f.coeffs))
    x0_mult = f.degree - (len(p) - 1)
    if x0_mult > 0:
        out.append((ProjPoint(F, 0, 1), x0_mult))
    m0 = next(i for i, c in enumerate(p) if not F.is_zero(c))
    if m0 > 0:
        out.append((ProjPoint(F, 1, 0), m0))
        p = p[m0:]
    if len(p) == 1:
        return out
    denominators = lcm(*(c.denominator for c in p))
    ints = [int(c * denominators) for c in p]
    candidates: set[Fraction] = set()
    for num in _divisors(abs(ints[0])):
        for den in _divisors(abs(ints[-1])):
            candidates.add(Fraction(num, den))
            candidates.add(Fraction(-num, den))
    for t in sorted(candidates):
        pt = ProjPoint(F, 1, t)
        mult = f.vanishing_order_at(pt)
        if mult > 0:
            out.append((pt, mult))
    return out


def _divisors(n: int) -> list[int]:
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


# ---------------------------------------------------------------------------
# plane curves


@lru_cache(maxsize=None)
def curve_monomials(degree: int) -> tuple[tuple[int, int, int], ...]:
    """Exponent triples (a, b, c) for u^a v^b w^c, a descending then b descending."""
    out = []
    for a in range(degree, -1, -1):
        for b in range(degree - a, -1, -1):
            out.append((a, b, degree - a - b))
    return tuple(out)


@dataclass(frozen=True)
class PlaneCurve:
    field: Field
    degree: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(self.field.coerce(c) for c in self.coeffs)
        if len(coeffs) != len(curve_monomials(self.degree)):
            raise ValueError("coefficient count does not match the degree")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_monomial_dict(cls, field: Field, degree: int, data: dict) -> "PlaneCurve":
        index = {m: i for i, m in enumerate(curve_monomials(degree))}
        coeffs = [field.zero] * len(index)
        for expo, c in data.items():
            coeffs[index[tuple(expo)]] = field.coerce(c)
        return cls(field, degree, tuple(coeffs))

    def monomial_dict(self) -> dict:
        return {
            m: c
            for m, c in zip(curve_monomials(self.degree), self.coeffs)
            if not self.field.is_zero(c)
        }

    def is_zero(self) -> bool:
        return all(self.field.is_zero(c) for c in self.coeffs)

    def evaluate(self, sp: SymPoint) -> Element:
        F = self.field
        if sp.field != F:
            raise ValueError("point and curve fields differ")
        acc = F.zero
        for (a, b, c), coef in zip(curve_monomials(self.degree), self.coeffs):
            if F.is_zero(coef):
                continue
            term = F.mul(
                coef, F.mul(F.pow(sp.u, a), F.mul(F.pow(sp.v, b), F.pow(sp.w, c)))
            )
            acc = F.add(acc, term)
        return acc

    def contains(self, sp: SymPoint) -> bool:
        return self.field.is_zero(self.evaluate(sp))

    def normalized(self) -> "PlaneCurve":
        F = self.field
        pivot = next((c for c in self.coeffs if not F.is_zero(c)), None)
        if pivot is None or F.eq(pivot, F.one):
            return self
        inv = F.inv(pivot)
        return PlaneCurve(F, self.degree, tuple(F.mul(inv, c) for c in self.coeffs))

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "coeffs": [self.field.to_str(c) for c in self.coeffs],
        }


def sum_line(p: ProjPoint) -> PlaneCurve:
    """The line swept by sym_point(p, .), tangent to the diagonal conic at 2p."""
    F = p.field
    a, b = p.x0, p.x1
    return PlaneCurve(F, 1, (F.mul(b, b), F.neg(F.mul(a, b)), F.mul(a, a)))


def diagonal_conic(field: Field) -> PlaneCurve:
    """v^2 - 4uw, the image of the diagonal."""
    return PlaneCurve.from_monomial_dict(
        field, 2, {(0, 2, 0): 1, (1, 0, 1): -4}
    )


# ---------------------------------------------------------------------------
# pencils


@dataclass(frozen=True)
class Pencil:
    """Two linearly independent binary forms of one degree, spanning the pencil."""

    f: BinaryForm
    g: BinaryForm

    def __post_init__(self):
        if self.f.field != self.g.field:
            raise ValueError("generators live over different fields")
        if self.f.degree != self.g.degree:
            raise ValueError("generators must have equal degree")
        if self.f.degree < 1:
            raise ValueError("degree must be at least 1")
        if _dependent(self.f, self.g):
            raise DegeneratePencil("generators are linearly dependent")

    @property
    def field(self) -> Field:
        return self.f.field

    @property
    def degree(self) -> int:
        return self.f.degree

    def member(self, lam, mu) -> BinaryForm:
        return self.f.scale(lam).add(self.g.scale(mu))

    def to_json_dict(self) -> dict:
        return {
            "field": self.field.label(),
            "f": self.f.to_json_dict(),
            "g": self.g.to_json_dict(),
        }


def _dependent(f: BinaryForm, g: BinaryForm) -> bool:
    F = f.field
    if f.is_zero() or g.is_zero():
        return True
    i0 = next(i for i, c in enumerate(f.coeffs) if not F.is_zero(c))
    if F.is_zero(g.coeffs[i0]):
        return False
    ratio = F.div(g.coeffs[i0], f.coeffs[i0])
    return all(F.eq(gc, F.mul(ratio, fc)) for fc, gc in zip(f.coeffs, g.coeffs))


def change_basis(pencil: Pencil, a, b, c, d) -> Pencil:
    """The same pencil presented by generators (a f + b g, c f + d g)."""
    F = pencil.field
    a, b, c, d = (F.coerce(t) for t in (a, b, c, d))
    det = F.sub(F.mul(a, d), F.mul(b, c))
    if F.is_zero(det):
        raise DegeneratePencil("basis change has zero determinant")
    return Pencil(
        pencil.f.scale(a).add(pencil.g.scale(b)),
        pencil.f.scale(c).add(pencil.g.scale(d)),
    )


def plucker_coordinates(pencil: Pencil) -> dict[tuple[int, int], Element]:
    """The minors f_i g_j - f_j g_i for i < j."""
    F = pencil.field
    f, g = pencil.f.coeffs, pencil.g.coeffs
    return {
        (i, j): F.sub(F.mul(f[i], g[j]), F.mul(f[j], g[i]))
        for i in range(len(f))
        for j in range(i + 1, len(f))
    }


# ---------------------------------------------------------------------------
# the induced plane curve


@lru_cache(maxsize=None)
def _power_sum_table(m: int) -> tuple[int, ...]:
    """Coefficients c_l with A^m + B^m = sum_l c_l (A+B)^(m-2l) (AB)^l."""
    if m == 0:
        return (2,)
    if m == 1:
        return (1,)
    prev, prev2 = _power_sum_table(m - 1), _power_sum_table(m - 2)
    out = []
    for l in range(m // 2 + 1):
        val = prev[l] if l < len(prev) else 0
        if l >= 1:
            val -= prev2[l - 1]
        out.append(val)
    return tuple(out)


@lru_cache(maxsize=None)
def _complete_homogeneous_table(m: int) -> tuple[int, ...]:
    """Coefficients c_l with sum_t A^(m-t) B^t = sum_l c_l (A+B)^(m-2l) (AB)^l."""
    return tuple((-1) ** l * comb(m - l, l) for l in range(m // 2 + 1))


def bezoutian_curve(pencil: Pencil) -> PlaneCurve:
    """The degree k-1 plane curve swept by the pairs lying in single members.

    Divides f(x)g(y) - f(y)g(x) by x0*y1 - x1*y0 (the remainder must vanish
    identically, which is asserted), then rewrites the symmetric quotient in
    (u, v, w) through power sums in x0*y1 and x1*y0.  The result is normalized
    so its first nonzero coefficient is 1.
    """
    F = pencil.field
    k = pencil.degree
    f, g = pencil.f.coeffs, pencil.g.coeffs
    M = [
        [F.sub(F.mul(f[i], g[j]), F.mul(f[j], g[i])) for j in range(k + 1)]
        for i in range(k + 1)
    ]
    # solve M[i][j] = Q[i][j-1] - Q[i-1][j] for the k x k quotient Q
    Q = [[F.zero] * k for _ in range(k)]
    for b in range(k):
        Q[0][b] = M[0][b + 1]
    for i in range(1, k):
        for b in range(k):
            above = Q[i - 1][b + 1] if b + 1 < k else F.zero
            Q[i][b] = F.add(M[i][b + 1], above)
    # zero-remainder checks: the defining equations not consumed above
    for i in range(1, k + 1):
        if not F.eq(M[i][0], F.neg(Q[i - 1][0])):
            raise AssertionError("nonzero remainder dividing by the diagonal")
    for j in range(1, k):
        if not F.eq(M[k][j], F.neg(Q[k - 1][j])):
            raise AssertionError("nonzero remainder dividing by the diagonal")
    acc: dict[tuple[int, int, int], Element] = {}

    def bump(expo, val):
        acc[expo] = F.add(acc[expo], val) if expo in acc else val

    for a in range(k):
        if not F.is_zero(Q[a][a]):
            bump((k - 1 - a, 0, a), Q[a][a])
        for b in range(a + 1, k):
            coef = Q[a][b]
            if F.is_zero(coef):
                continue
            m = b - a
            for l, c_l in enumerate(_power_sum_table(m)):
                bump((k - 1 - b + l, m - 2 * l, a + l), F.mul(coef, F.coerce(c_l)))
    curve = PlaneCurve.from_monomial_dict(F, k - 1, acc)
    if curve.is_zero():
        raise DegeneratePencil("zero quotient: generators were dependent")
    return curve.normalized()


def wedge_basis_curve(field: Field, k: int, i: int, j: int) -> PlaneCurve:
    """Plane curve induced by the coordinate pencil (x0^(k-i) x1^i, x0^(k-j) x1^j).

    Any pencil's curve is the Plucker-coordinate combination of these, which
    gives a second code path independent of polynomial division; the incidence
    compiler of the finite-field search is built on it.
    """
    if not 0 <= i < j <= k:
        raise ValueError("need 0 <= i < j <= k")
    m = j - i - 1
    acc: dict[tuple[int, int, int], int] = {}
    for l, c_l in enumerate(_complete_homogeneous_table(m)):
        expo = (k - j + l, m - 2 * l, i + l)
        acc[expo] = acc.get(expo, 0) + c_l
    return PlaneCurve.from_monomial_dict(field, k - 1, acc)


# ---------------------------------------------------------------------------
# fibers, base loci, ramification


def is_base_point(pencil: Pencil, p: ProjPoint) -> bool:
    F = pencil.field
    return F.is_zero(pencil.f.evaluate(p)) and F.is_zero(pencil.g.evaluate(p))


def same_fiber(pencil: Pencil, p: ProjPoint, q: ProjPoint, strict: bool = True) -> bool:
    """Whether some member of the pencil vanishes at both p and q.

    Decided by the vanishing of det [[f(p), g(p)], [f(q), g(q)]].  When both
    points lie in the base locus every member works; strict=True raises
    BasePointAmbiguity there, strict=False returns True.
    """
    F = pencil.field
    fp, gp = pencil.f.evaluate(p), pencil.g.evaluate(p)
    fq, gq = pencil.f.evaluate(q), pencil.g.evaluate(q)
    if all(F.is_zero(t) for t in (fp, gp, fq, gq)):
        if strict:
            raise BasePointAmbiguity(
                "both points are base points; every member contains both"
            )
        return True
    return F.is_zero(F.sub(F.mul(fp, gq), F.mul(fq, gp)))


def base_locus(pencil: Pencil) -> BinaryForm:
    """gcd of the generators; degree 0 means base point free."""
    return binary_gcd(pencil.f, pencil.g)


def has_multiple_base_points(pencil: Pencil) -> bool:
    """Whether the base divisor contains a point twice."""
    return not squarefree_form(base_locus(pencil))


def wronskian(pencil: Pencil) -> BinaryForm:
    """f dg - g df with respect to the chart coordinate, assembled as a form.

    Computed on both standard charts (f*d1(g) - g*d1(f) divided by x0, and the
    x1-chart companion), which must agree up to sign; vanishing orders are the
    ramification indices minus one.  Base points and characteristic <= degree
    are refused.
    """
    F = pencil.field
    k = pencil.degree
    if 0 < F.q <= k:
        raise CharacteristicObstruction(
            f"characteristic {F.q} too small for degree {k} Wronskians"
        )
    if base_locus(pencil).degree > 0:
        raise BasePointPresent("remove the base divisor first: see base_locus")
    f, g = pencil.f, pencil.g
    h1 = f.multiply(g.derivative_x1()).add(g.multiply(f.derivative_x1()).scale(-1))
    if not F.is_zero(h1.coeffs[-1]):
        raise AssertionError("chart-1 Wronskian not divisible by x0")
    w1 = BinaryForm(F, 2 * k - 2, tuple(h1.coeffs[:-1]))
    h0 = f.multiply(g.derivative_x0()).add(g.multiply(f.derivative_x0()).scale(-1))
    if not F.is_zero(h0.coeffs[0]):
        raise AssertionError("chart-0 Wronskian not divisible by x1")
    w0 = BinaryForm(F, 2 * k - 2, tuple(h0.coeffs[1:]))
    if any(not F.eq(c1, F.neg(c0)) for c1, c0 in zip(w1.coeffs, w0.coeffs)):
        raise AssertionError("chart Wronskians disagree")
    return w1


def has_ramification_at(pencil: Pencil, p: ProjPoint, order: int) -> bool:
    """Whether some nonzero member vanishes to order >= `order` at p.

    Moves p to [1:0] and checks that the 2 x order matrix of leading Taylor
    coefficients of the generators has rank <= 1 (all 2x2 minors vanish).
    Valid in every odd characteristic: no derivatives are taken.
    """
    if not 2 <= order <= pencil.degree:
        raise ValueError(f"order must lie in 2..{pencil.degree}")
    F = pencil.field
    ft = _move_to_origin(pencil.f, p).coeffs[:order]
    gt = _move_to_origin(pencil.g, p).coeffs[:order]
    for a in range(order):
        for b in range(a + 1, order):
            if not F.is_zero(F.sub(F.mul(ft[a], gt[b]), F.mul(ft[b], gt[a]))):
                return False
    return True


def total_ramification_pencil(a: ProjPoint, b: ProjPoint, k: int) -> Pencil:
    """The unique pencil spanned by the k-th powers of the lines through a and b."""
    if a.field != b.field:
        raise ValueError("points live over different fields")
    if a == b:
        raise CoincidentPoints("total ramification needs two distinct points")
    if k < 2:
        raise ValueError("k must be at least 2")
    fa = form_power(linear_form(a), k).normalized()
    fb = form_power(linear_form(b), k).normalized()
    return Pencil(fa, fb)


# ---------------------------------------------------------------------------
# reducedness of plane curves (gcd with partial derivatives)

_SYM_U, _SYM_V, _SYM_W = sympy.symbols("u v w")


def curve_to_sympy(curve: PlaneCurve):
    """The curve as a sympy expression in (u, v, w); exact in both fields."""
    F = curve.field
    expr = sympy.Integer(0)
    for (a, b, c), coef in zip(curve_monomials(curve.degree), curve.coeffs):
        if F.is_zero(coef):
            continue
        if F.q == 0:
            s = sympy.Rational(coef.numerator, coef.denominator)
        else:
            s = sympy.Integer(int(coef))
        expr += s * _SYM_U**a * _SYM_V**b * _SYM_W**c
    return expr


def _specialized_coeffs(curve: PlaneCurve, var: int, p0, p1) -> list:
    """Coefficient list in the chosen variable after plugging the point into the
    other two (taken in (u, v, w) order)."""
    F = curve.field
    out = [F.zero] * (curve.degree + 1)
    for (a, b, c), coef in zip(curve_monomials(curve.degree), curve.coeffs):
        expos = [a, b, c]
        main = expos.pop(var)
        term = F.mul(coef, F.mul(F.pow(p0, expos[0]), F.pow(p1, expos[1])))
        out[main] = F.add(out[main], term)
    return out


def _variable_has_repeated_factor(curve: PlaneCurve, var: int) -> bool | None:
    """Whether some repeated factor of the curve involves the chosen variable.

    Decided through the discriminant with respect to that variable, evaluated
    on specialization lines: one squarefree specialization (at full degree)
    witnesses a nonzero discriminant; deg*(2*deg - 1) + 1 full-degree
    specializations that are all non-squarefree prove it vanishes identically.
    Returns None when the field has too few points to conclude.
    """
    F = curve.field
    q = F.q
    d = curve.degree
    var_degree = max(
        (expo[var] for expo, c in zip(curve_monomials(d), curve.coeffs) if not F.is_zero(c)),
        default=0,
    )
    if var_degree <= 1:
        return False  # a repeated factor would need degree >= 2 here
    needed = d * (2 * d - 1) + 1
    seen = 0
    for pt in [(t, F.one) for t in range(q)] + [(F.one, F.zero)]:
        special = _trim(F, _specialized_coeffs(curve, var, F.coerce(pt[0]), pt[1]))
        if len(special) - 1 != var_degree:
            continue  # leading coefficient vanished; specialization dishonest
        seen += 1
        if _poly_squarefree(F, special):
            return False
        if seen >= needed:
            return True
    return None


def is_reduced_curve(curve: PlaneCurve) -> bool:
    """Whether the curve is squarefree (no repeated factor).

    Over the rationals this is a gcd with the partial derivatives.  Over F_q
    (valid for q > degree, else CharacteristicObstruction) each variable is
    cleared by a discriminant specialization scan, falling back to a direct
    modular gcd when q is too small to carry the scan.
    """
    if curve.is_zero():
        raise ValueError("zero curve")
    q = curve.field.q
    if 0 < q <= curve.degree:
        raise CharacteristicObstruction(
            f"characteristic {q} too small for degree {curve.degree}"
        )
    if q > 0:
        verdicts = [_variable_has_repeated_factor(curve, var) for var in range(3)]
        if any(v is True for v in verdicts):
            return False
        if all(v is False for v in verdicts):
            return True
    opts = {"modulus": q} if q else {}
    poly = sympy.Poly(curve_to_sympy(curve), _SYM_U, _SYM_V, _SYM_W, **opts)
    g = poly
    for s in (_SYM_U, _SYM_V, _SYM_W):
        g = g.gcd(poly.diff(s))
    return g.total_degree() == 0
