"""Seeded random scalars, polynomials and algebra elements for the property suites.

Each case gets its own generator derived from ``(seed, salt, case)``, so a
report does not depend on the order in which cases are run.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .gwa import GWA, AffineAuto, GWAElement
from .poly import Poly
from .scalar import Field

__all__ = ["case_rng", "random_scalar", "random_nonzero_scalar", "random_poly",
           "random_element", "random_auto", "random_presentation"]


def case_rng(seed: int, case: int, salt: str = "") -> random.Random:
    return random.Random(f"{seed}:{salt}:{case}")


def random_scalar(field: Field, rng: random.Random, height: int = 10):
    if field.generic and rng.random() < 0.3:
        q = field.q
        return field(rng.randint(-height, height)) * q ** rng.randint(-2, 2) + rng.randint(-3, 3)
    num = rng.randint(-height, height)
    den = rng.choice((1, 1, 1, 2, 3))
    return field(num) / den


def random_nonzero_scalar(field: Field, rng: random.Random, height: int = 10):
    while True:
        c = random_scalar(field, rng, height)
        if c:
            return c


def random_poly(field: Field, rng: random.Random, max_degree: int = 3, height: int = 10) -> Poly:
    deg = rng.randint(0, max_degree)
    return Poly([random_scalar(field, rng, height) for _ in range(deg + 1)], field)


def random_element(pres: GWA, rng: random.Random, max_deg: int = 4, poly_degree: int = 3,
                   height: int = 10, terms: int | None = None, nonzero: bool = False) -> GWAElement:
    """Sum of 1-3 homogeneous terms with degrees in [-max_deg, max_deg]."""
    n = rng.randint(1, 3) if terms is None else terms
    comps = {}
    for _ in range(n):
        d = rng.randint(-max_deg, max_deg)
        comps[d] = random_poly(pres.field, rng, poly_degree, height)
    u = pres.element(comps)
    while nonzero and not u:
        u = pres.element({rng.randint(-max_deg, max_deg): random_poly(pres.field, rng, poly_degree, height)})
    return u


def random_auto(field: Field, rng: random.Random, height: int = 5) -> AffineAuto:
    return AffineAuto(random_nonzero_scalar(field, rng, height), random_scalar(field, rng, height), field)


def random_presentation(field: Field, rng: random.Random, max_degree: int = 3) -> GWA:
    """A random presentation; q is drawn from a small set so every branch is hit."""
    if field.generic:
        q = rng.choice([field.one, field.q, field.q ** 2, -field.one, field(2)])
    else:
        q = field(rng.choice([1, 1, -1, 2, 3, Fraction(1, 2), Fraction(-2, 3)]))
    h0 = field(rng.choice([0, 0, 1, -1, 2, Fraction(1, 2)]))
    P = random_poly(field, rng, max_degree, height=6)
    return GWA(AffineAuto(q, h0, field), P)
