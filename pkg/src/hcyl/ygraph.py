"""Formal Y-graph sums over a special group and the degree-1 graph group of P.

``rho`` sends a Y-graph sum to the pair (wedge part, Boolean part) in
Lambda^3 H x_{Lambda^3 H_(2)} B^(3).  That map is an isomorphism, so its
output is used as the normal form of a class.  ``presentation_matrix``
builds the same group from generators and relations without going
through ``rho``; the two routes are compared in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Optional

from . import abelian, linalg
from .boolean import (
    BoolPoly,
    arf,
    b3_basis,
    b3_from_vector,
    b3_vector,
    cubic_shadow_matrix,
    deg3_shadow,
    multiply,
)
from .special import PElem, e_map, p_coords, special_of_p, standard_generators
from .symplectic import GenusMismatch, HClass, Wedge, wedge3, wedge_basis, wedge_omega_h


def canonical_rotation(labels: tuple) -> tuple:
    """The cyclic rotation whose sequence of sort keys is smallest."""
    rots = [labels[i:] + labels[:i] for i in range(3)]
    return min(rots, key=lambda r: tuple(z.sort_key() for z in r))


@dataclass(frozen=True)
class YTerm:
    coefficient: int
    labels: tuple


class YExpr:
    """Integer combination of Y[z1, z2, z3] generators before any relation is imposed.

    Triples are stored in canonical rotation, so cyclically permuted
    labels name the same generator.
    """

    __slots__ = ("genus", "_terms")

    def __init__(self, genus: int, terms: Optional[dict] = None):
        self.genus = genus
        self._terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def zero(cls, g: int) -> "YExpr":
        return cls(g)

    @classmethod
    def Y(cls, z1, z2, z3, coefficient: int = 1) -> "YExpr":
        g = z1.genus
        if z2.genus != g or z3.genus != g:
            raise GenusMismatch("labels of one Y-graph must share a genus")
        return cls(g, {canonical_rotation((z1, z2, z3)): coefficient})

    @classmethod
    def from_terms(cls, g: int, terms: Iterable[YTerm]) -> "YExpr":
        out = cls(g)
        for t in terms:
            out = out + cls.Y(*t.labels, coefficient=t.coefficient)
        return out

    def terms(self) -> list[YTerm]:
        return [YTerm(c, k) for k, c in self._terms.items()]

    def __iter__(self):
        return iter(self.terms())

    def __len__(self):
        return len(self._terms)

    def _check(self, other):
        if not isinstance(other, YExpr):
            raise TypeError("expected a YExpr")
        if other.genus != self.genus:
            raise GenusMismatch(f"genus {self.genus} vs {other.genus}")

    def __add__(self, other: "YExpr") -> "YExpr":
        self._check(other)
        terms = dict(self._terms)
        for k, c in other._terms.items():
            terms[k] = terms.get(k, 0) + c
        return YExpr(self.genus, terms)

    def __neg__(self) -> "YExpr":
        return YExpr(self.genus, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "YExpr") -> "YExpr":
        return self + (-other)

    def __mul__(self, n: int) -> "YExpr":
        return YExpr(self.genus, {k: n * c for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, YExpr):
            return NotImplemented
        return self.genus == other.genus and self._terms == other._terms

    def __hash__(self):
        return hash((self.genus, frozenset(self._terms.items())))

    def __repr__(self):
        if not self._terms:
            return f"YExpr(genus={self.genus}, 0)"
        body = " ".join(f"{c:+d} Y{tuple(str(z) for z in k)}" for k, c in self._terms.items())
        return f"YExpr(genus={self.genus}, {body})"


Y = YExpr.Y


@dataclass(frozen=True)
class PullbackElem:
    """A pair (u, f) with u in Lambda^3 H, f in B^(3) and u = cubic part of f mod 2."""

    u: Wedge
    f: BoolPoly

    def __post_init__(self):
        if self.u.degree != 3:
            raise ValueError("wedge component must lie in the third exterior power")
        if self.u.genus != self.f.genus:
            raise GenusMismatch("components have different genus")
        if self.f.degree > 3:
            raise ValueError("Boolean component has degree above 3")
        if self.u.mod2() != deg3_shadow(self.f):
            raise ValueError("pair is not compatible: wedge part mod 2 differs from the cubic part")

    @property
    def genus(self) -> int:
        return self.f.genus

    @classmethod
    def zero(cls, g: int) -> "PullbackElem":
        return cls(Wedge.zero(g, 3), BoolPoly.zero(g))

    def __add__(self, other: "PullbackElem") -> "PullbackElem":
        return PullbackElem(self.u + other.u, self.f + other.f)

    def __neg__(self) -> "PullbackElem":
        return PullbackElem(-self.u, self.f)

    def __sub__(self, other: "PullbackElem") -> "PullbackElem":
        return PullbackElem(self.u - other.u, self.f + other.f)

    def __mul__(self, n: int) -> "PullbackElem":
        return PullbackElem(self.u * n, self.f * n)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.u.is_zero() and self.f.is_zero()

    def __str__(self):
        return f"({self.u} | {self.f})"


def _rho_term(z1: PElem, z2: PElem, z3: PElem) -> tuple[Wedge, BoolPoly]:
    u = wedge3(z1.h, z2.h, z3.h)
    f = multiply(multiply(e_map(z1), e_map(z2)), e_map(z3))
    return u, f


def rho(x: YExpr) -> PullbackElem:
    """Y[z1,z2,z3] -> (p(z1)^p(z2)^p(z3), e(z1) e(z2) e(z3)), extended additively."""
    g = x.genus
    u = Wedge.zero(g, 3)
    f = BoolPoly.zero(g)
    for t in x:
        z1, z2, z3 = t.labels
        if not all(isinstance(z, PElem) for z in t.labels):
            raise TypeError("rho needs labels in P")
        if not z1.genus == z2.genus == z3.genus == g:
            raise GenusMismatch("label genus differs from the expression genus")
        du, df = _rho_term(z1, z2, z3)
        u = u + du * t.coefficient
        if t.coefficient % 2:
            f = f + df
    return PullbackElem(u, f)


def normalize(x: YExpr) -> PullbackElem:
    """Canonical form of the class of ``x``; two sums are equal in the group iff these agree."""
    return rho(x)


def _eps_labels(g: int, indices) -> tuple:
    s = special_of_p(g)
    labels = [PElem(g, HClass.basis(g, j), 0) for j in indices]
    return tuple(labels + [s] * (3 - len(labels)))


def epsilon(v: PullbackElem) -> YExpr:
    """Section of rho built on the basis e_i^e_j^e_k, e_i^e_j, e_i, 1."""
    g = v.genus
    out = YExpr.zero(g)
    for t, c in v.u.items():
        out = out + Y(*_eps_labels(g, t), coefficient=c)
    for m in v.f.support:
        k = bin(m).count("1")
        if k < 3:
            idx = [j for j in range(2 * g) if (m >> j) & 1]
            out = out + Y(*_eps_labels(g, idx))
    return out


def gamma(x: YExpr) -> BoolPoly:
    """Multiply the labels of a sum of Y-graphs labelled by affine Boolean functions."""
    f = BoolPoly.zero(x.genus)
    for t in x:
        if t.coefficient % 2:
            a, b, c = t.labels
            f = f + multiply(multiply(a, b), c)
    return f


def epsilon_boolean(f: BoolPoly) -> YExpr:
    """Section of ``gamma``: a monomial of degree k <= 3 gets k variable labels padded by 1."""
    g = f.genus
    one = BoolPoly.one(g)
    out = YExpr.zero(g)
    for m in f.support:
        labels = [BoolPoly.var(g, j) for j in range(2 * g) if (m >> j) & 1]
        if len(labels) > 3:
            raise ValueError("degree above 3")
        out = out + Y(*(labels + [one] * (3 - len(labels))))
    return out


def wedge_of(x: YExpr) -> Wedge:
    """Identify a sum of Y-graphs labelled in (H, 0) with its element of Lambda^3 H."""
    u = Wedge.zero(x.genus, 3)
    for t in x:
        u = u + wedge3(*t.labels) * t.coefficient
    return u


def a1_map(
    fp: Callable,
    x: YExpr,
    target_special,
    generators: Optional[list] = None,
    special=None,
) -> YExpr:
    """Relabel every generator through ``fp``.

    ``fp`` must be a map of special groups; this is spot-checked on the
    standard generators of the source (P by default): the special element
    must go to ``target_special`` and sums of two generators must map to
    sums of images.
    """
    g = x.genus
    gens = generators if generators is not None else standard_generators(g)
    s = special if special is not None else special_of_p(g)
    if fp(s) != target_special:
        raise ValueError("map does not preserve the special element")
    images = [fp(a) for a in gens]
    for i, a in enumerate(gens):
        for j in range(i, len(gens)):
            if fp(a + gens[j]) != images[i] + images[j]:
                raise ValueError("map is not additive on the standard generators")
    out = YExpr.zero(g)
    for t in x:
        out = out + Y(*(fp(z) for z in t.labels), coefficient=t.coefficient)
    return out


def symplectic_relations(g: int) -> list[YExpr]:
    """sum_i Y[(x_i,0),(y_i,0),z] for z running over the standard generators of P."""
    out = []
    for z in standard_generators(g):
        r = YExpr.zero(g)
        for i in range(1, g + 1):
            r = r + Y(PElem(g, HClass.x(g, i), 0), PElem(g, HClass.y(g, i), 0), z)
        out.append(r)
    return out


# Group-theoretic models of the target, built once per genus.

class PullbackModel:
    """Lambda^3 H x_{Lambda^3 H_(2)} B^(3) as a presented group."""

    def __init__(self, g: int):
        self.genus = g
        C = len(wedge_basis(g, 3))
        d = len(b3_basis(g))
        self.wedge_group = abelian.free_group(C, name="L3H")
        self.boolean_group = abelian.elementary_2_group(d, name="B3")
        self.shadow_group = abelian.elementary_2_group(C, name="L3H2")
        self.reduction = abelian.Hom(self.wedge_group, self.shadow_group, linalg.identity(C))
        self.shadow = abelian.Hom(self.boolean_group, self.shadow_group, cubic_shadow_matrix(g))
        self.group, self.pr1, self.pr2 = abelian.pullback(self.reduction, self.shadow, name="pullback")

    def element(self, v: PullbackElem) -> abelian.GroupElem:
        return self.group.lift(v.u.coords, b3_vector(v.f))

    def pair(self, coords) -> PullbackElem:
        a, b = self.group.components(coords)
        return PullbackElem(Wedge(self.genus, 3, a), b3_from_vector(self.genus, b))


@lru_cache(maxsize=None)
def pullback_model(g: int) -> PullbackModel:
    return PullbackModel(g)


def s_generators(g: int) -> list[PullbackElem]:
    """(omega ^ e_j, alpha * t_j) for each j, then (0, alpha)."""
    a = arf(g)
    out = []
    for j in range(2 * g):
        out.append(PullbackElem(wedge_omega_h(HClass.basis(g, j)), multiply(a, BoolPoly.var(g, j))))
    out.append(PullbackElem(Wedge.zero(g, 3), a))
    return out


@dataclass(frozen=True)
class ClosedClass:
    """A class of the pullback modulo S, keyed by its Smith coordinates."""

    genus: int
    key: tuple
    representative: PullbackElem

    def __eq__(self, other):
        if not isinstance(other, ClosedClass):
            return NotImplemented
        return self.genus == other.genus and self.key == other.key

    def __hash__(self):
        return hash((self.genus, self.key))

    def is_zero(self) -> bool:
        return not any(self.key)


class ClosedModel:
    def __init__(self, g: int):
        self.genus = g
        self.pullback = pullback_model(g)
        gens = [self.pullback.element(v) for v in s_generators(g)]
        self.group, self.projection = abelian.quotient(self.pullback.group, gens, name="pullback/S")

    def classify(self, v: PullbackElem) -> ClosedClass:
        coords = self.pullback.element(v).coords
        key = self.group.invariant_coords(coords)
        rep = self.pullback.pair(self.group.canonical(coords))
        return ClosedClass(self.genus, key, rep)


@lru_cache(maxsize=None)
def closed_model(g: int) -> ClosedModel:
    return ClosedModel(g)


def close(x: YExpr) -> ClosedClass:
    """Class of rho(x) modulo S."""
    return closed_model(x.genus).classify(rho(x))


# Independent finite presentation of the graph group on standard labels.

def _rotate_indices(t: tuple) -> tuple:
    return min(t[i:] + t[:i] for i in range(3))


@dataclass
class Presentation:
    genus: int
    generators: list
    index: dict
    relators: list

    @property
    def matrix(self) -> list[list[int]]:
        return linalg.from_columns(self.relators, len(self.generators))

    def expand(self, label_vectors) -> dict:
        """Trilinear expansion of Y over label coordinate vectors on the standard generators."""
        a, b, c = label_vectors
        out: dict = {}
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if not bj:
                    continue
                for k, ck in enumerate(c):
                    if ck:
                        key = self.index[_rotate_indices((i, j, k))]
                        out[key] = out.get(key, 0) + ai * bj * ck
        return out

    def coords(self, x: YExpr) -> list[int]:
        v = [0] * len(self.generators)
        for t in x:
            vecs = [p_coords(z) for z in t.labels]
            for key, c in self.expand(vecs).items():
                v[key] += t.coefficient * c
        return v

    def vector(self, terms: dict) -> list[int]:
        v = [0] * len(self.generators)
        for k, c in terms.items():
            v[k] += c
        return v


def _unit(n, i):
    v = [0] * n
    v[i] = 1
    return v


def _p_vector(z: PElem) -> list[int]:
    return p_coords(z)


@lru_cache(maxsize=None)
def presentation(g: int) -> Presentation:
    """Generators: Y over standard labels up to rotation.  Relators: AS, slide and
    multilinearity instances on standard labels and their pairwise sums, and the
    2-torsion forced by the special element."""
    labels = standard_generators(g)
    n = len(labels)
    s = n - 1
    gens = sorted({_rotate_indices(t) for t in product(range(n), repeat=3)})
    pres = Presentation(g, gens, {t: i for i, t in enumerate(gens)}, [])
    unit = [_unit(n, i) for i in range(n)]
    seen = set()

    def add(terms: dict):
        v = pres.vector(terms)
        nz = [c for c in v if c]
        if not nz:
            return
        if nz[0] < 0:
            v = [-c for c in v]
        key = tuple(v)
        if key not in seen:
            seen.add(key)
            pres.relators.append(v)

    def combine(*parts):
        out: dict = {}
        for sign, terms in parts:
            for k, c in terms.items():
                out[k] = out.get(k, 0) + sign * c
        return out

    for t in product(range(n), repeat=3):
        a, b, c = t
        add(combine((1, pres.expand((unit[a], unit[b], unit[c]))),
                    (1, pres.expand((unit[b], unit[a], unit[c])))))

    sums = [(i, j) for i in range(n) for j in range(i, n)]
    slide_labels = [unit[i] for i in range(n)] + [_p_vector(labels[i] + labels[j]) for i, j in sums]
    for z in slide_labels:
        for w in range(n):
            add(combine((1, pres.expand((z, z, unit[w]))),
                        (-1, pres.expand((unit[s], z, unit[w])))))

    for i, j in sums:
        zsum = _p_vector(labels[i] + labels[j])
        for pos in range(3):
            for c, d in product(range(n), repeat=2):
                def at(vec):
                    others = [unit[c], unit[d]]
                    others.insert(pos, vec)
                    return pres.expand(tuple(others))
                add(combine((1, at(zsum)), (-1, at(unit[i])), (-1, at(unit[j]))))

    for t in gens:
        if s in t:
            add({pres.index[t]: 2})
    return pres


def presentation_matrix(g: int) -> list[list[int]]:
    return presentation(g).matrix


def presentation_generators(g: int) -> list:
    return list(presentation(g).generators)


def presentation_coords(x: YExpr) -> list[int]:
    return presentation(x.genus).coords(x)


@lru_cache(maxsize=None)
def presentation_group(g: int, case: str = "boundary") -> abelian.FGGroup:
    pres = presentation(g)
    rels = list(pres.relators)
    if case == "closed":
        rels += [pres.coords(r) for r in symplectic_relations(g)]
    elif case != "boundary":
        raise ValueError(f"unknown case {case!r}")
    return abelian.FGGroup(len(pres.generators), rels, name=f"A1(P) {case}")
