import random
from fractions import Fraction

from kronlift.group import GroupElement, GroupShape
from kronlift.numfield import QQ, make_field

SQRT2 = make_field([-2, 0, 1], (1, 2))
CBRT2 = make_field([-2, 0, 0, 1], (1, 2))
# x^3 - 3x - 1, totally real cubic with a root in (1, 2)
CUBIC = make_field([-1, -3, 0, 1], (1, 2))
FIELDS = [QQ, SQRT2, CBRT2, CUBIC]


def el(shape, field, *coords):
    """Element from coordinates given as coefficient lists, ints or field elements."""
    vals = []
    for c in coords:
        if isinstance(c, (list, tuple)):
            vals.append(field.element(c))
        else:
            vals.append(field(c) if not hasattr(c, "field") else c)
    return GroupElement(shape, vals)


def random_coord(rng: random.Random, field, height=4, sparsity=0.4):
    coeffs = []
    for _ in range(field.degree):
        if rng.random() < sparsity:
            coeffs.append(0)
        else:
            coeffs.append(Fraction(rng.randint(-height, height), rng.choice([1, 1, 2, 3])))
    return field.element(coeffs)


def random_element(rng, shape, field, height=4, sparsity=0.4):
    return GroupElement(shape, [random_coord(rng, field, height, sparsity) for _ in range(shape.dim)])


SMALL_SHAPES = [GroupShape(n, m) for n in range(3) for m in range(3) if n + m <= 2]
