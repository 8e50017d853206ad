"""Shared builders for the test suite."""

import random

from pencillab import BinaryForm, DegeneratePencil, Pencil, ProjPoint
from pencillab.fields import QQ, Field


def form(field, coeffs):
    return BinaryForm(field, len(coeffs) - 1, coeffs)


def point(field, x0, x1):
    return ProjPoint(field, field.coerce(x0), field.coerce(x1))


def random_form(field, k, rng, span=9):
    return form(field, [rng.randint(-span, span) for _ in range(k + 1)])


def random_pencil(field, k, rng, span=9):
    # rejection-sample until the two generators are independent
    while True:
        try:
            return Pencil(random_form(field, k, rng, span),
                          random_form(field, k, rng, span))
        except DegeneratePencil:
            continue


def projective_points(field):
    """All points of the projective line over a finite field."""
    q = field.q
    pts = [point(field, 1, t) for t in range(q)]
    pts.append(point(field, 0, 1))
    return pts
