"""Exact coefficient fields: the rationals and odd prime fields.

Elements are plain Python values (fractions.Fraction over Q, canonical
residues 0..q-1 over F_q); the Field object supplies the arithmetic.  All
operations are exact; nothing in this package touches floating point except
the final logarithmic exponent fit in the dimension experiments.

Characteristic 2 is rejected outright: the diagonal conic v^2 = 4uw that the
plane-curve geometry leans on degenerates there.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import CharacteristicObstruction

Element = Union[Fraction, int]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """q = 0 means the rationals, otherwise an odd prime modulus."""

    q: int = 0

    def __post_init__(self):
        if self.q == 0:
            return
        if self.q == 2:
            raise CharacteristicObstruction(
                "characteristic 2 not supported (diagonal conic degenerates)"
            )
        if not _is_prime(self.q):
            raise ValueError(f"modulus {self.q} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    @property
    def characteristic(self) -> int:
        return self.q

    def label(self):
        """JSON form: "Q" or {"q": q}."""
        return "Q" if self.q == 0 else {"q": self.q}

    # -- element construction -------------------------------------------------

    def coerce(self, value) -> Element:
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Fraction):
            if self.q == 0:
                return value
            num, den = value.numerator, value.denominator
            if den % self.q == 0:
                raise ZeroDivisionError(
                    f"denominator {den} not invertible mod {self.q}"
                )
            return (num * pow(den, -1, self.q)) % self.q
        if isinstance(value, int):
            return Fraction(value) if self.q == 0 else value % self.q
        raise TypeError(f"cannot coerce {value!r} into {self}")

    @property
    def zero(self) -> Element:
        return self.coerce(0)

    @property
    def one(self) -> Element:
        return self.coerce(1)

    # -- arithmetic -----------------------------------------------------------

    def add(self, a: Element, b: Element) -> Element:
        return (a + b) if self.q == 0 else (a + b) % self.q

    def sub(self, a: Element, b: Element) -> Element:
        return (a - b) if self.q == 0 else (a - b) % self.q

    def mul(self, a: Element, b: Element) -> Element:
        return (a * b) if self.q == 0 else (a * b) % self.q

    def neg(self, a: Element) -> Element:
        return -a if self.q == 0 else (-a) % self.q

    def inv(self, a: Element) -> Element:
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a) if self.q == 0 else pow(a, -1, self.q)

    def div(self, a: Element, b: Element) -> Element:
        return self.mul(a, self.inv(b))

    def pow(self, a: Element, n: int) -> Element:
        if n < 0:
            return self.pow(self.inv(a), -n)
        return a**n if self.q == 0 else pow(a, n, self.q)

    def is_zero(self, a: Element) -> bool:
        return a == 0

    def eq(self, a: Element, b: Element) -> bool:
        return a == b

    def to_str(self, a: Element) -> str:
        return str(a)

    def __str__(self):
        return "Q" if self.q == 0 else f"F_{self.q}"


#: The rational field, shared default.
QQ = Field(0)


def prime_field(q: int) -> Field:
    return Field(q)


def field_from_label(label) -> Field:
    """Inverse of Field.label: "Q" -> rationals, {"q": p} -> F_p."""
    if label == "Q":
        return QQ
    if isinstance(label, dict) and set(label) == {"q"}:
        return Field(int(label["q"]))
    raise ValueError(f"unrecognized field label {label!r}")
