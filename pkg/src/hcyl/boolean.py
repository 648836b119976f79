"""Boolean polynomials on the set of quadratic forms.

A polynomial is a set of squarefree monomials, each monomial a bit mask
over the 2g basis functions; the empty mask is the constant function.
Idempotency t*t = t is therefore structural: products are unions of masks.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from . import linalg
from .quadforms import QForm
from .symplectic import GenusMismatch, H2Class, HClass, basis_name, wedge_index


@dataclass(frozen=True)
class BoolPoly:
    genus: int
    support: frozenset

    def __post_init__(self):
        object.__setattr__(self, "support", frozenset(self.support))
        limit = 1 << (2 * self.genus)
        for m in self.support:
            if not 0 <= m < limit:
                raise ValueError(f"monomial mask {m} outside genus {self.genus}")

    @classmethod
    def from_monomials(cls, g: int, masks: Iterable[int]) -> "BoolPoly":
        acc: set[int] = set()
        for m in masks:
            acc ^= {m}
        return cls(g, acc)

    @classmethod
    def zero(cls, g: int) -> "BoolPoly":
        return cls(g, frozenset())

    @classmethod
    def one(cls, g: int) -> "BoolPoly":
        return cls(g, frozenset({0}))

    @classmethod
    def var(cls, g: int, j: int) -> "BoolPoly":
        """The affine function of the basis class e_j (0-based index)."""
        return cls(g, frozenset({1 << j}))

    @classmethod
    def monomial(cls, g: int, indices: Iterable[int]) -> "BoolPoly":
        m = 0
        for j in indices:
            m |= 1 << j
        return cls(g, frozenset({m}))

    def _check(self, other):
        if not isinstance(other, BoolPoly):
            raise TypeError(f"expected BoolPoly, got {type(other).__name__}")
        if other.genus != self.genus:
            raise GenusMismatch(f"genus {self.genus} vs {other.genus}")

    def __add__(self, other: "BoolPoly") -> "BoolPoly":
        self._check(other)
        return BoolPoly(self.genus, self.support ^ other.support)

    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, int):
            return self if other % 2 else BoolPoly.zero(self.genus)
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def __call__(self, q: QForm) -> int:
        return evaluate(self, q)

    @property
    def degree(self) -> int:
        return max((bin(m).count("1") for m in self.support), default=0)

    def is_zero(self) -> bool:
        return not self.support

    def sort_key(self):
        return tuple(sorted(self.support))

    def __str__(self):
        return format_poly(self)


def multiply(f: BoolPoly, h: BoolPoly) -> BoolPoly:
    f._check(h)
    acc: set[int] = set()
    for a in f.support:
        for b in h.support:
            acc ^= {a | b}
    return BoolPoly(f.genus, acc)


def evaluate(f: BoolPoly, q: QForm) -> int:
    """Substitute t_j = q(e_j)."""
    if f.genus != q.genus:
        raise GenusMismatch(f"polynomial of genus {f.genus} at a form of genus {q.genus}")
    qm = q.mask
    return sum(1 for m in f.support if m & qm == m) % 2


def affine_of_h(h: HClass) -> BoolPoly:
    """The function q -> q(h) as sum_j c_j t_j + (sum_i c_{x_i} c_{y_i}) * 1."""
    g = h.genus
    c = h.coords
    masks = [1 << j for j in range(2 * g) if c[j] % 2]
    if sum(c[i] * c[g + i] for i in range(g)) % 2:
        masks.append(0)
    return BoolPoly.from_monomials(g, masks)


def arf(g: int) -> BoolPoly:
    return BoolPoly.from_monomials(g, [(1 << i) | (1 << (g + i)) for i in range(g)])


def kappa(f: BoolPoly) -> H2Class:
    """B^(1) -> B^(1)/B^(0) = H_(2): drop the constant, t_j -> e_j."""
    if f.degree > 1:
        raise ValueError(f"kappa needs degree <= 1, got degree {f.degree}")
    bits = [0] * (2 * f.genus)
    for m in f.support:
        if m:
            bits[m.bit_length() - 1] ^= 1
    return H2Class(f.genus, bits)


def deg3_shadow(f: BoolPoly) -> tuple[int, ...]:
    """Cubic part of f as mod-2 coordinates on the third exterior power basis."""
    if f.degree > 3:
        raise ValueError(f"deg3_shadow needs degree <= 3, got degree {f.degree}")
    g = f.genus
    idx = wedge_index(g, 3)
    out = [0] * len(idx)
    for m in f.support:
        if bin(m).count("1") == 3:
            out[idx[_mask_indices(m)]] ^= 1
    return tuple(out)


def _mask_indices(m: int) -> tuple[int, ...]:
    return tuple(j for j in range(m.bit_length()) if (m >> j) & 1)


def arf_ideal_generators(g: int) -> list[BoolPoly]:
    """alpha * 1 followed by alpha * t_j for j = 1..2g."""
    a = arf(g)
    return [a] + [multiply(a, BoolPoly.var(g, j)) for j in range(2 * g)]


@lru_cache(maxsize=None)
def b3_basis(g: int) -> tuple[int, ...]:
    """Monomial masks of degree <= 3: constant, then degree 1, 2, 3, each lexicographic."""
    out = []
    for k in range(4):
        for t in combinations(range(2 * g), k):
            out.append(sum(1 << j for j in t))
    return tuple(out)


@lru_cache(maxsize=None)
def b3_index(g: int) -> dict:
    return {m: i for i, m in enumerate(b3_basis(g))}


def b3_vector(f: BoolPoly) -> list[int]:
    if f.degree > 3:
        raise ValueError("polynomial has degree above 3")
    idx = b3_index(f.genus)
    v = [0] * len(idx)
    for m in f.support:
        v[idx[m]] = 1
    return v


def b3_from_vector(g: int, v) -> BoolPoly:
    basis = b3_basis(g)
    return BoolPoly(g, frozenset(m for m, c in zip(basis, v) if c % 2))


def cubic_shadow_matrix(g: int) -> list[list[int]]:
    """Matrix of deg3_shadow from B^(3) coordinates to the cubic wedge basis."""
    basis = b3_basis(g)
    idx = wedge_index(g, 3)
    M = [[0] * len(basis) for _ in range(len(idx))]
    for col, m in enumerate(basis):
        if bin(m).count("1") == 3:
            M[idx[_mask_indices(m)]][col] = 1
    return M


class ArfQuotient:
    """Canonical representatives of B^(3) modulo alpha * B^(1).

    Reduction clears the highest-indexed monomials first, so a
    representative has the lowest degree available in its coset.
    """

    def __init__(self, g: int):
        self.genus = g
        self._basis = linalg.gf2_echelon(b3_vector(f) for f in arf_ideal_generators(g))

    @property
    def dimension(self) -> int:
        return len(b3_basis(self.genus)) - len(self._basis)

    def contains(self, f: BoolPoly) -> bool:
        return self.reduce(f).is_zero()

    def reduce(self, f: BoolPoly) -> BoolPoly:
        w = linalg.pack_bits(b3_vector(f))
        w = linalg.gf2_reduce(self._basis, w)
        return b3_from_vector(self.genus, linalg.unpack_bits(w, len(b3_basis(self.genus))))


@lru_cache(maxsize=None)
def arf_quotient(g: int) -> ArfQuotient:
    return ArfQuotient(g)


def format_poly(f: BoolPoly) -> str:
    if f.is_zero():
        return "0"
    g = f.genus
    terms = []
    for m in sorted(f.support, key=lambda m: (-bin(m).count("1"), _mask_indices(m))):
        if m == 0:
            terms.append("1")
        else:
            terms.append("*".join(basis_name(g, j) for j in _mask_indices(m)))
    return " + ".join(terms)


_TOKEN = re.compile(r"^(x|y)(\d+)$")


def parse_poly(g: int, text: str) -> BoolPoly:
    """Parse sums of products such as ``x1*y1 + x2 + 1``."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    masks = []
    for term in text.split("+"):
        term = term.strip()
        if term == "0":
            continue
        m = 0
        for factor in term.split("*"):
            factor = factor.strip()
            if factor == "1":
                continue
            match = _TOKEN.match(factor)
            if not match:
                raise ValueError(f"bad factor {factor!r}")
            i = int(match.group(2))
            if not 1 <= i <= g:
                raise ValueError(f"variable {factor} outside genus {g}")
            j = i - 1 if match.group(1) == "x" else g + i - 1
            m |= 1 << j
        masks.append(m)
    return BoolPoly.from_monomials(g, masks)
