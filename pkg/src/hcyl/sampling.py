"""Seeded random labels, Y-sums and relation instances."""

from __future__ import annotations

import random

from .special import PElem
from .symplectic import HClass
from .ygraph import Y, YExpr, symplectic_relations

RELATION_KINDS = ("as", "multilinear", "slide", "symplectic")


def random_p(rng: random.Random, g: int, bound: int = 2) -> PElem:
    coords = [rng.randint(-bound, bound) for _ in range(2 * g)]
    return PElem(g, HClass(g, coords), rng.randint(0, 1))


def random_labels(rng: random.Random, g: int, bound: int = 2) -> tuple[PElem, PElem, PElem]:
    return tuple(random_p(rng, g, bound) for _ in range(3))


def random_yexpr(rng: random.Random, g: int, terms: int = 4, bound: int = 2, coeff: int = 3) -> YExpr:
    out = YExpr.zero(g)
    for _ in range(terms):
        c = rng.randint(-coeff, coeff) or 1
        out = out + Y(*random_labels(rng, g, bound), coefficient=c)
    return out


def as_instance(z1, z2, z3) -> YExpr:
    return Y(z1, z2, z3) + Y(z2, z1, z3)


def multilinear_instance(z1, z1p, z2, z3) -> YExpr:
    return Y(z1 + z1p, z2, z3) - Y(z1, z2, z3) - Y(z1p, z2, z3)


def slide_instance(z1, z2) -> YExpr:
    s = PElem(z1.genus, HClass.zero(z1.genus), 1)
    return Y(z1, z1, z2) - Y(s, z1, z2)


def random_relation(rng: random.Random, g: int, kind: str, bound: int = 2) -> YExpr:
    """One instance of the given relation family; every instance is zero in the graph group."""
    if kind == "as":
        return as_instance(*random_labels(rng, g, bound))
    if kind == "multilinear":
        return multilinear_instance(*random_labels(rng, g, bound), random_p(rng, g, bound))
    if kind == "slide":
        return slide_instance(random_p(rng, g, bound), random_p(rng, g, bound))
    if kind == "symplectic":
        rels = symplectic_relations(g)
        return rels[rng.randrange(len(rels))]
    raise ValueError(f"unknown relation kind {kind!r}")


def random_relation_sum(rng: random.Random, g: int, count: int, closed: bool = False) -> YExpr:
    kinds = RELATION_KINDS if closed else RELATION_KINDS[:3]
    out = YExpr.zero(g)
    for _ in range(count):
        out = out + random_relation(rng, g, rng.choice(kinds)) * rng.choice((-1, 1))
    return out
