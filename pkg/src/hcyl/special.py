"""Special Abelian groups and the label group P = H x_{H_(2)} B^(1).

An element of P is stored as the pair (h, eps) standing for
(h, affine(h) + eps * 1).  Addition picks up the mod-2 intersection
cocycle, which keeps the Boolean component additive.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import abelian
from .boolean import BoolPoly, affine_of_h
from .symplectic import GenusMismatch, HClass, intersection


@dataclass(frozen=True)
class SpecialGroup:
    """An Abelian group together with an element of order at most 2."""

    group: abelian.FGGroup
    special: abelian.GroupElem

    def __post_init__(self):
        if self.special.group is not self.group:
            raise abelian.GroupError("special element lies in another group")
        if not (self.special * 2).is_zero():
            raise abelian.GroupError("special element must have order at most 2")


@dataclass(frozen=True)
class PElem:
    genus: int
    h: HClass
    eps: int

    def __post_init__(self):
        if not isinstance(self.h, HClass):
            object.__setattr__(self, "h", HClass(self.genus, self.h))
        if self.h.genus != self.genus:
            raise GenusMismatch("label class has the wrong genus")
        object.__setattr__(self, "eps", int(self.eps) % 2)

    @classmethod
    def make(cls, g: int, coords, eps: int = 0) -> "PElem":
        return cls(g, HClass(g, coords), eps)

    @classmethod
    def zero(cls, g: int) -> "PElem":
        return cls(g, HClass.zero(g), 0)

    def __add__(self, other: "PElem") -> "PElem":
        return p_add(self, other)

    def __neg__(self) -> "PElem":
        # (h, e) + (-h, e) = (0, 2e - h.h) = 0
        return PElem(self.genus, -self.h, self.eps)

    def __sub__(self, other: "PElem") -> "PElem":
        return p_add(self, -other)

    def __mul__(self, n: int) -> "PElem":
        # h.h = 0, so n * (h, e) = (n h, n e)
        return PElem(self.genus, self.h * n, self.eps * n)

    __rmul__ = __mul__

    def sort_key(self):
        return self.h.coords + (self.eps,)

    def __str__(self):
        return f"({','.join(str(c) for c in self.h.coords)};{self.eps})"


def p_add(z1: PElem, z2: PElem) -> PElem:
    if z1.genus != z2.genus:
        raise GenusMismatch(f"genus {z1.genus} vs {z2.genus}")
    return PElem(z1.genus, z1.h + z2.h, z1.eps + z2.eps + intersection(z1.h, z2.h))


def p_proj(z: PElem) -> HClass:
    return z.h


def e_map(z: PElem) -> BoolPoly:
    f = affine_of_h(z.h)
    return f + BoolPoly.one(z.genus) if z.eps else f


def section_s(h: HClass) -> PElem:
    return PElem(h.genus, h, 0)


def special_of_p(g: int) -> PElem:
    return PElem(g, HClass.zero(g), 1)


def standard_generators(g: int) -> list[PElem]:
    """(e_j, affine(e_j)) for j = 1..2g, then the special element."""
    return [section_s(HClass.basis(g, j)) for j in range(2 * g)] + [special_of_p(g)]


def decompose(z: PElem) -> tuple[tuple[int, ...], int]:
    """Coefficients on (e_j, 0), summed left to right, and the correcting multiple of (0, 1)."""
    g = z.genus
    acc = PElem.zero(g)
    for j, c in enumerate(z.h.coords):
        if c:
            acc = acc + section_s(HClass.basis(g, j)) * c
    return z.h.coords, (z.eps - acc.eps) % 2


def recompose(g: int, coeffs, delta: int) -> PElem:
    acc = PElem.zero(g)
    for j, c in enumerate(coeffs):
        if c:
            acc = acc + section_s(HClass.basis(g, j)) * c
    return acc + special_of_p(g) * delta


def p_group(g: int) -> SpecialGroup:
    """P as Z^{2g} (+) Z/2 on the standard generators, coordinates given by ``decompose``."""
    n = 2 * g + 1
    rel = [0] * n
    rel[-1] = 2
    G = abelian.FGGroup(n, [rel], name="P")
    s = [0] * n
    s[-1] = 1
    return SpecialGroup(G, G.element(s))


def p_coords(z: PElem) -> list[int]:
    coeffs, delta = decompose(z)
    return list(coeffs) + [delta]
