"""The lattice H = Z^{2g} with its symplectic basis and exterior powers.

Coordinates are ordered (x_1..x_g, y_1..y_g) throughout; index j < g is
x_{j+1}, index j >= g is y_{j-g+1}.  Exterior power bases are the
increasing index tuples in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence


class GenusMismatch(ValueError):
    pass


def _same_genus(*items):
    g = items[0].genus
    for it in items[1:]:
        if it.genus != g:
            raise GenusMismatch(f"genus {g} vs genus {it.genus}")
    return g


def basis_name(g: int, j: int) -> str:
    return f"x{j + 1}" if j < g else f"y{j - g + 1}"


def intersection_matrix(g: int) -> list[list[int]]:
    """Block form [[0, I], [-I, 0]]: entry (a, b) is e_a . e_b."""
    n = 2 * g
    J = [[0] * n for _ in range(n)]
    for i in range(g):
        J[i][g + i] = 1
        J[g + i][i] = -1
    return J


def pair_index(g: int, a: int, b: int) -> int:
    """e_a . e_b for basis indices."""
    if a < g and b == a + g:
        return 1
    if b < g and a == b + g:
        return -1
    return 0


@dataclass(frozen=True)
class HClass:
    genus: int
    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        if len(self.coords) != 2 * self.genus:
            raise ValueError(f"expected {2 * self.genus} coordinates, got {len(self.coords)}")

    @classmethod
    def zero(cls, g: int) -> "HClass":
        return cls(g, (0,) * (2 * g))

    @classmethod
    def basis(cls, g: int, j: int) -> "HClass":
        c = [0] * (2 * g)
        c[j] = 1
        return cls(g, c)

    @classmethod
    def x(cls, g: int, i: int) -> "HClass":
        """x_i, 1-based."""
        return cls.basis(g, i - 1)

    @classmethod
    def y(cls, g: int, i: int) -> "HClass":
        return cls.basis(g, g + i - 1)

    @classmethod
    def parse(cls, g: int, text: str) -> "HClass":
        parts = [p.strip() for p in text.split(",")] if text.strip() else []
        return cls(g, [int(p) for p in parts])

    def __add__(self, other: "HClass") -> "HClass":
        _same_genus(self, other)
        return HClass(self.genus, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "HClass") -> "HClass":
        _same_genus(self, other)
        return HClass(self.genus, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "HClass":
        return HClass(self.genus, [-a for a in self.coords])

    def __mul__(self, n: int) -> "HClass":
        return HClass(self.genus, [n * a for a in self.coords])

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def sort_key(self):
        return self.coords

    def __str__(self):
        return ",".join(str(c) for c in self.coords)


@dataclass(frozen=True)
class H2Class:
    genus: int
    bits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(int(b) & 1 for b in self.bits))
        if len(self.bits) != 2 * self.genus:
            raise ValueError(f"expected {2 * self.genus} bits, got {len(self.bits)}")

    @classmethod
    def zero(cls, g: int) -> "H2Class":
        return cls(g, (0,) * (2 * g))

    def __add__(self, other: "H2Class") -> "H2Class":
        _same_genus(self, other)
        return H2Class(self.genus, [a ^ b for a, b in zip(self.bits, other.bits)])

    __sub__ = __add__

    def __neg__(self):
        return self

    def is_zero(self) -> bool:
        return not any(self.bits)

    def sort_key(self):
        return self.bits


def intersection(a: HClass, b: HClass) -> int:
    g = _same_genus(a, b)
    return sum(a.coords[i] * b.coords[g + i] - a.coords[g + i] * b.coords[i] for i in range(g))


def intersection2(a: H2Class, b: H2Class) -> int:
    g = _same_genus(a, b)
    return sum(a.bits[i] * b.bits[g + i] + a.bits[g + i] * b.bits[i] for i in range(g)) % 2


def mod2(a: HClass) -> H2Class:
    return H2Class(a.genus, [c % 2 for c in a.coords])


@lru_cache(maxsize=None)
def wedge_basis(g: int, k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(combinations(range(2 * g), k))


@lru_cache(maxsize=None)
def wedge_index(g: int, k: int) -> dict:
    return {t: i for i, t in enumerate(wedge_basis(g, k))}


def _sort_sign(idx: Sequence[int]):
    """Sorted tuple and the sign of the sorting permutation, or (None, 0) on repeats."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return None, 0
    sign = 1
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
    return tuple(idx), sign


@dataclass(frozen=True)
class Wedge:
    """Element of the k-th exterior power of H in the fixed basis."""

    genus: int
    degree: int
    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        if len(self.coords) != len(wedge_basis(self.genus, self.degree)):
            raise ValueError("coordinate count does not match the exterior power basis")

    @classmethod
    def zero(cls, g: int, k: int) -> "Wedge":
        return cls(g, k, (0,) * len(wedge_basis(g, k)))

    @classmethod
    def basis_vector(cls, g: int, idx: Sequence[int]) -> "Wedge":
        k = len(idx)
        key, sign = _sort_sign(idx)
        w = [0] * len(wedge_basis(g, k))
        if key is not None:
            w[wedge_index(g, k)[key]] = sign
        return cls(g, k, w)

    def _check(self, other):
        if self.genus != other.genus or self.degree != other.degree:
            raise GenusMismatch("exterior powers differ")

    def __add__(self, other: "Wedge") -> "Wedge":
        self._check(other)
        return Wedge(self.genus, self.degree, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "Wedge") -> "Wedge":
        self._check(other)
        return Wedge(self.genus, self.degree, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "Wedge":
        return Wedge(self.genus, self.degree, [-a for a in self.coords])

    def __mul__(self, n: int) -> "Wedge":
        return Wedge(self.genus, self.degree, [n * a for a in self.coords])

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def mod2(self) -> tuple[int, ...]:
        return tuple(c % 2 for c in self.coords)

    def items(self):
        """Nonzero (index tuple, coefficient) pairs."""
        for t, c in zip(wedge_basis(self.genus, self.degree), self.coords):
            if c:
                yield t, c

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for t, c in self.items():
            name = "^".join(basis_name(self.genus, j) for j in t)
            parts.append(f"{c:+d}*{name}" if c not in (1, -1) else f"{'+' if c > 0 else '-'}{name}")
        s = " ".join(parts)
        return s[1:] if s.startswith("+") else s


Wedge2 = Wedge
Wedge3 = Wedge


def wedge(*hs: HClass) -> Wedge:
    """Alternating product h_1 ^ ... ^ h_k in basis coordinates (minors of the coordinate rows)."""
    g = _same_genus(*hs)
    k = len(hs)
    out = []
    for t in wedge_basis(g, k):
        minor = [[h.coords[j] for j in t] for h in hs]
        out.append(_det_small(minor))
    return Wedge(g, k, out)


def _det_small(m):
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0
    for j in range(n):
        if m[0][j]:
            sub = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * m[0][j] * _det_small(sub)
    return total


def wedge3(a: HClass, b: HClass, c: HClass) -> Wedge:
    return wedge(a, b, c)


def wedge_product(w: Wedge, h: HClass) -> Wedge:
    """w ^ h for w in the k-th exterior power."""
    if w.genus != h.genus:
        raise GenusMismatch("genus mismatch")
    g, k = w.genus, w.degree
    out = [0] * len(wedge_basis(g, k + 1))
    idx = wedge_index(g, k + 1)
    for t, c in w.items():
        for j, hj in enumerate(h.coords):
            if hj:
                key, sign = _sort_sign(t + (j,))
                if key is not None:
                    out[idx[key]] += sign * c * hj
    return Wedge(g, k + 1, out)


def symplectic_element(g: int) -> Wedge:
    """omega = sum_i x_i ^ y_i."""
    w = Wedge.zero(g, 2)
    for i in range(g):
        w = w + Wedge.basis_vector(g, (i, g + i))
    return w


def wedge_omega_h(h: HClass) -> Wedge:
    return wedge_product(symplectic_element(h.genus), h)


def omega_wedge_matrix(g: int) -> list[list[int]]:
    """Columns are omega ^ e_j in the third exterior power basis."""
    cols = [wedge_omega_h(HClass.basis(g, j)).coords for j in range(2 * g)]
    n = len(wedge_basis(g, 3))
    return [[c[i] for c in cols] for i in range(n)]
