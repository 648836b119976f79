"""Surgery presentations, the invariants eta_1 and beta, and the Y_2-equivalence test.

File format, one item per line::

    genus <g>
    case boundary|closed
    <+-int> Y (<2g ints>;<0|1>) (<2g ints>;<0|1>) (<2g ints>;<0|1>)

``#`` starts a comment and blank lines are ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from . import abelian
from .boolean import BoolPoly, arf_quotient, evaluate
from .quadforms import QForm
from .special import PElem, e_map
from .symplectic import GenusMismatch, HClass, Wedge, omega_wedge_matrix, wedge_basis
from .ygraph import ClosedClass, YExpr, close, closed_model, presentation_group, pullback_model, rho

CASES = ("boundary", "closed")


class PresentationError(ValueError):
    """Malformed presentation text; ``line`` is 1-based."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class SurgeryPresentation:
    genus: int
    case: str
    expr: YExpr

    def __post_init__(self):
        if self.case not in CASES:
            raise ValueError(f"unknown case {self.case!r}")
        if self.expr.genus != self.genus:
            raise GenusMismatch("expression genus differs from the header")

    def __add__(self, other: "SurgeryPresentation") -> "SurgeryPresentation":
        _compatible(self, other)
        return SurgeryPresentation(self.genus, self.case, self.expr + other.expr)


def _compatible(m1: SurgeryPresentation, m2: SurgeryPresentation):
    if m1.genus != m2.genus:
        raise GenusMismatch(f"genus {m1.genus} vs {m2.genus}")
    if m1.case != m2.case:
        raise ValueError(f"case {m1.case} vs {m2.case}")


_LABEL = re.compile(r"\(\s*([^;()]*?)\s*;\s*([^;()]*?)\s*\)")
_TERM = re.compile(r"^([+-]?\d+)\s+Y\s+(.*)$")


def _parse_label(g: int, lineno: int, coords: str, eps: str) -> PElem:
    parts = [p.strip() for p in coords.split(",")] if coords.strip() else []
    if len(parts) != 2 * g:
        raise PresentationError(lineno, f"label has {len(parts)} coordinates, genus {g} needs {2 * g}")
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise PresentationError(lineno, f"non-integer coordinate in ({coords};{eps})") from None
    if eps not in ("0", "1"):
        raise PresentationError(lineno, f"epsilon must be 0 or 1, got {eps!r}")
    return PElem(g, HClass(g, values), int(eps))


def parse_presentation(text: str) -> SurgeryPresentation:
    genus = case = None
    expr = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if genus is None:
            m = re.fullmatch(r"genus\s+(\d+)", line)
            if not m:
                raise PresentationError(lineno, "expected 'genus <g>'")
            genus = int(m.group(1))
            expr = YExpr.zero(genus)
            continue
        if case is None:
            m = re.fullmatch(r"case\s+(\S+)", line)
            if not m:
                raise PresentationError(lineno, "expected 'case boundary|closed'")
            if m.group(1) not in CASES:
                raise PresentationError(lineno, f"unknown case {m.group(1)!r}")
            case = m.group(1)
            continue
        m = _TERM.match(line)
        if not m:
            raise PresentationError(lineno, "malformed term, expected '<int> Y (..;e) (..;e) (..;e)'")
        coeff = int(m.group(1))
        rest = m.group(2)
        labels = []
        pos = 0
        for lm in _LABEL.finditer(rest):
            if rest[pos:lm.start()].strip():
                raise PresentationError(lineno, f"unexpected text {rest[pos:lm.start()].strip()!r}")
            labels.append(_parse_label(genus, lineno, lm.group(1), lm.group(2)))
            pos = lm.end()
        if rest[pos:].strip():
            raise PresentationError(lineno, f"unexpected text {rest[pos:].strip()!r}")
        if len(labels) != 3:
            raise PresentationError(lineno, f"a Y-graph needs 3 labels, got {len(labels)}")
        expr = expr + YExpr.Y(*labels, coefficient=coeff)
    if genus is None:
        raise PresentationError(1, "missing genus header")
    if case is None:
        raise PresentationError(1, "missing case header")
    return SurgeryPresentation(genus, case, expr)


def format_presentation(m: SurgeryPresentation) -> str:
    lines = [f"genus {m.genus}", f"case {m.case}"]
    for t in m.expr:
        labels = " ".join(str(z) for z in t.labels)
        lines.append(f"{t.coefficient:+d} Y {labels}")
    return "\n".join(lines) + "\n"


def read_presentation(path) -> SurgeryPresentation:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read())


# ------------------------------------------------------------------ invariants


def beta_polynomial(expr: YExpr) -> BoolPoly:
    """sum over terms of the product of the three e-images of the labels."""
    f = BoolPoly.zero(expr.genus)
    for t in expr:
        if t.coefficient % 2:
            z1, z2, z3 = t.labels
            f = f + e_map(z1) * e_map(z2) * e_map(z3)
    return f


def beta(m: SurgeryPresentation) -> BoolPoly:
    """Boundary: the cubic polynomial itself.  Closed: its reduced coset representative."""
    f = beta_polynomial(m.expr)
    if m.case == "closed":
        return arf_quotient(m.genus).reduce(f)
    return f


class WedgeQuotient:
    """Lambda^3 H modulo omega ^ H."""

    def __init__(self, g: int):
        self.genus = g
        C = len(wedge_basis(g, 3))
        OM = omega_wedge_matrix(g)
        cols = [[OM[i][j] for i in range(C)] for j in range(2 * g)]
        self.group = abelian.FGGroup(C, cols, name="L3H/omega^H")

    def reduce(self, u: Wedge) -> Wedge:
        return Wedge(self.genus, 3, self.group.canonical(u.coords))

    def key(self, u: Wedge) -> tuple:
        return self.group.invariant_coords(u.coords)


@lru_cache(maxsize=None)
def wedge_quotient(g: int) -> WedgeQuotient:
    return WedgeQuotient(g)


def eta1(m: SurgeryPresentation) -> Wedge:
    """Boundary: wedge part of rho.  Closed: its canonical representative modulo omega ^ H."""
    u = rho(m.expr).u
    if m.case == "closed":
        return wedge_quotient(m.genus).reduce(u)
    return u


def rochlin_delta(z1: PElem, z2: PElem, z3: PElem, q: QForm) -> int:
    """Variation of the Rochlin invariant in Z/16: 8 * prod_k e(z_k)(q)."""
    for z in (z1, z2, z3):
        if z.genus != q.genus:
            raise GenusMismatch("label and form have different genus")
    prod = evaluate(e_map(z1), q) & evaluate(e_map(z2), q) & evaluate(e_map(z3), q)
    return (8 * prod) % 16


def rochlin_terms(m: SurgeryPresentation, q: QForm) -> list[tuple[int, tuple, int]]:
    """(coefficient, labels, coefficient * delta mod 16) for each term."""
    out = []
    for t in m.expr:
        d = rochlin_delta(*t.labels, q)
        out.append((t.coefficient, t.labels, (t.coefficient * d) % 16))
    return out


def normal_form(m: SurgeryPresentation):
    """rho coordinates (boundary) or the class modulo S (closed)."""
    if m.case == "closed":
        return close(m.expr)
    return rho(m.expr)


@dataclass
class EquivalenceReport:
    equivalent: bool
    case: str
    eta1: tuple
    beta: tuple

    def lines(self) -> list[str]:
        suffix = " mod S" if self.case == "closed" else ""
        return [
            f"equivalent: {'yes' if self.equivalent else 'no'}",
            f"case: {self.case}",
            f"eta1[1]: {self.eta1[0]}{suffix}",
            f"eta1[2]: {self.eta1[1]}{suffix}",
            f"beta[1]: {self.beta[0]}{suffix}",
            f"beta[2]: {self.beta[1]}{suffix}",
        ]


def y2_equivalent(m1: SurgeryPresentation, m2: SurgeryPresentation) -> tuple[bool, EquivalenceReport]:
    _compatible(m1, m2)
    n1, n2 = normal_form(m1), normal_form(m2)
    same = n1 == n2
    rep = EquivalenceReport(same, m1.case, (eta1(m1), eta1(m2)), (beta(m1), beta(m2)))
    return same, rep


def same_class_by_presentation(m1: SurgeryPresentation, m2: SurgeryPresentation) -> bool:
    """The same question decided in the finitely presented group, without rho."""
    from .ygraph import presentation_coords

    _compatible(m1, m2)
    G = presentation_group(m1.genus, m1.case)
    return G.is_zero_vector(presentation_coords(m1.expr - m2.expr))


# ------------------------------------------------------------------- structure


@dataclass
class StructureReport:
    genus: int
    case: str
    pullback: tuple[int, list[int]]
    presentation: tuple[int, list[int]]
    expected: tuple[int, list[int]]

    @property
    def agree(self) -> bool:
        return self.pullback == self.presentation

    @property
    def matches_expected(self) -> bool:
        return self.pullback == self.expected

    def lines(self) -> list[str]:
        rank, tors = self.pullback
        return [
            f"genus: {self.genus}",
            f"case: {self.case}",
            f"free_rank: {rank}",
            f"torsion: {' '.join(map(str, tors)) if tors else '-'}",
            f"torsion_count: {len(tors)}",
            f"presentation_free_rank: {self.presentation[0]}",
            f"presentation_torsion_count: {len(self.presentation[1])}",
            f"routes_agree: {'yes' if self.agree else 'no'}",
            f"expected_free_rank: {self.expected[0]}",
            f"expected_torsion_count: {len(self.expected[1])}",
            f"matches_expected: {'yes' if self.matches_expected else 'no'}",
        ]


def expected_structure(g: int, case: str) -> tuple[int, list[int]]:
    """Counts read off the direct-sum description of the group."""
    from .linalg import rank

    if case == "boundary":
        return comb(2 * g, 3), [2] * (comb(2 * g, 2) + 2 * g + 1)
    r = rank(omega_wedge_matrix(g), 2 * g) if g else 0
    l2 = comb(2 * g, 2) - 1 if g else 0
    return comb(2 * g, 3) - r, [2] * (l2 + 2 * g + 1)


def structure(g: int, case: str = "boundary") -> StructureReport:
    if case == "boundary":
        via_pullback = pullback_model(g).group.invariants
    elif case == "closed":
        via_pullback = closed_model(g).group.invariants
    else:
        raise ValueError(f"unknown case {case!r}")
    via_presentation = presentation_group(g, case).invariants
    return StructureReport(g, case, via_pullback, via_presentation, expected_structure(g, case))


__all__ = [
    "ClosedClass",
    "EquivalenceReport",
    "PresentationError",
    "StructureReport",
    "SurgeryPresentation",
    "beta",
    "beta_polynomial",
    "eta1",
    "format_presentation",
    "normal_form",
    "parse_presentation",
    "read_presentation",
    "rochlin_delta",
    "rochlin_terms",
    "same_class_by_presentation",
    "structure",
    "y2_equivalent",
]
