"""Quadratic forms on H_(2) whose polarization is the intersection form."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .symplectic import GenusMismatch, H2Class, HClass, mod2


@dataclass(frozen=True)
class QForm:
    """Stored by its values on the basis (q(x_1)..q(x_g), q(y_1)..q(y_g))."""

    genus: int
    bits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(int(b) & 1 for b in self.bits))
        if len(self.bits) != 2 * self.genus:
            raise ValueError(f"a genus {self.genus} form needs {2 * self.genus} bits")

    @property
    def mask(self) -> int:
        return sum(b << j for j, b in enumerate(self.bits))

    @classmethod
    def parse(cls, g: int, text: str) -> "QForm":
        text = text.strip()
        if text.startswith("q="):
            text = text[2:]
        if any(ch not in "01" for ch in text):
            raise ValueError(f"form must be a string of bits, got {text!r}")
        return cls(g, [int(ch) for ch in text])

    def __str__(self):
        return "".join(str(b) for b in self.bits)

    def __call__(self, h) -> int:
        return q_value(self, h)


def q_value(q: QForm, h) -> int:
    """q(h), extended from basis values by q(a+b) = q(a) + q(b) + a.b."""
    if isinstance(h, HClass):
        h = mod2(h)
    if q.genus != h.genus:
        raise GenusMismatch(f"form of genus {q.genus} on a class of genus {h.genus}")
    g = q.genus
    linear = sum(hb & qb for hb, qb in zip(h.bits, q.bits))
    cross = sum(h.bits[i] & h.bits[g + i] for i in range(g))
    return (linear + cross) % 2


def act(x: H2Class, q: QForm) -> QForm:
    """x . q = q + x.(-)."""
    if x.genus != q.genus:
        raise GenusMismatch("genus mismatch")
    g = q.genus
    # x . x_i = x's y_i bit, x . y_i = x's x_i bit (mod 2)
    partner = [x.bits[g + j] for j in range(g)] + [x.bits[j] for j in range(g)]
    return QForm(g, [a ^ b for a, b in zip(q.bits, partner)])


def enumerate_forms(g: int) -> list[QForm]:
    return [QForm(g, bits[::-1]) for bits in product((0, 1), repeat=2 * g)]


def arf_value(q: QForm) -> int:
    g = q.genus
    return sum(q.bits[i] & q.bits[g + i] for i in range(g)) % 2
