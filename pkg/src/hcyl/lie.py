"""Degree 2 and 3 of the free Lie ring on H, and the first Johnson homomorphism side.

L_2(H) has basis [e_i, e_j] (i < j).  L_3(H) uses the Lyndon basis for the
letter order e_1 < ... < e_2g.  Lie elements are decomposed through their
expansion in the tensor algebra: the smallest word of a Lie polynomial is
Lyndon and has coefficient 1 in its basis element, so peeling off smallest
words is exact over Z.

H (x) L_2(H) is coordinatized row-major: index = h_index * dim L_2 + l2_index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb

from . import linalg
from .symplectic import (
    GenusMismatch,
    HClass,
    Wedge,
    intersection,
    intersection_matrix,
    wedge_basis,
    wedge_omega_h,
)

# ---------------------------------------------------------------- Lyndon words


def lyndon_words(n: int, length: int) -> list[tuple[int, ...]]:
    """Lyndon words of exactly ``length`` letters over 0..n-1 (Duval's generator)."""
    out = []
    if n == 0 or length == 0:
        return out
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == length:
            out.append(tuple(w))
        while len(w) < length:
            w.append(w[len(w) - m])
        while w and w[-1] == n - 1:
            w.pop()
    return out


def witt_count(n: int, length: int = 3) -> int:
    """(n^3 - n) / 3 for length 3."""
    if length != 3:
        raise ValueError("only length 3 is needed")
    return (n ** 3 - n) // 3


def standard_bracketing(w: tuple[int, ...]):
    """Nested-pair bracketing of a Lyndon word by its standard factorization."""
    if len(w) == 1:
        return w[0]
    for i in range(1, len(w)):
        v = w[i:]
        if _is_lyndon(v):
            return (standard_bracketing(w[:i]), standard_bracketing(v))
    raise ValueError(f"{w} is not a Lyndon word")


def _is_lyndon(w) -> bool:
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


def expand_bracket(b) -> dict:
    """Tensor-algebra expansion of a bracketed word: [a, b] = ab - ba."""
    if isinstance(b, int):
        return {(b,): 1}
    left, right = expand_bracket(b[0]), expand_bracket(b[1])
    out: dict = {}
    for u, cu in left.items():
        for v, cv in right.items():
            out[u + v] = out.get(u + v, 0) + cu * cv
            out[v + u] = out.get(v + u, 0) - cu * cv
    return {k: c for k, c in out.items() if c}


@lru_cache(maxsize=None)
def l2_basis(g: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(2 * g), 2))


@lru_cache(maxsize=None)
def l2_index(g: int) -> dict:
    return {t: i for i, t in enumerate(l2_basis(g))}


@lru_cache(maxsize=None)
def l3_basis(g: int) -> tuple[tuple[int, ...], ...]:
    return tuple(lyndon_words(2 * g, 3))


@lru_cache(maxsize=None)
def _l3_expansions(g: int) -> dict:
    return {w: expand_bracket(standard_bracketing(w)) for w in l3_basis(g)}


def l3_decompose(poly: dict, g: int) -> list[int]:
    """Coordinates on the Lyndon basis of a degree-3 Lie polynomial given by its word expansion."""
    idx = {w: i for i, w in enumerate(l3_basis(g))}
    exps = _l3_expansions(g)
    poly = {k: c for k, c in poly.items() if c}
    out = [0] * len(idx)
    while poly:
        w = min(poly)
        c = poly[w]
        if w not in idx:
            raise ValueError(f"word {w} is not Lyndon; input is not a Lie element")
        out[idx[w]] += c
        for u, cu in exps[w].items():
            poly[u] = poly.get(u, 0) - c * cu
            if not poly[u]:
                del poly[u]
    return out


# ------------------------------------------------------------------- elements


@dataclass(frozen=True)
class LieElem:
    genus: int
    degree: int
    coords: tuple[int, ...]

    def __add__(self, other):
        if (self.genus, self.degree) != (other.genus, other.degree):
            raise GenusMismatch("Lie elements of different type")
        return LieElem(self.genus, self.degree, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return LieElem(self.genus, self.degree, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self) -> bool:
        return not any(self.coords)


LieElem2 = LieElem
LieElem3 = LieElem


def l2_zero(g: int) -> LieElem:
    return LieElem(g, 2, (0,) * comb(2 * g, 2))


def l2_basis_vector(g: int, i: int, j: int) -> LieElem:
    """[e_i, e_j] with sign handling."""
    v = [0] * comb(2 * g, 2)
    if i < j:
        v[l2_index(g)[(i, j)]] = 1
    elif i > j:
        v[l2_index(g)[(j, i)]] = -1
    return LieElem(g, 2, tuple(v))


def bracket(a: HClass, b: HClass) -> LieElem:
    if a.genus != b.genus:
        raise GenusMismatch("genus mismatch")
    g = a.genus
    v = [0] * comb(2 * g, 2)
    for k, (i, j) in enumerate(l2_basis(g)):
        v[k] = a.coords[i] * b.coords[j] - a.coords[j] * b.coords[i]
    return LieElem(g, 2, tuple(v))


def _l2_words(m: LieElem) -> dict:
    poly: dict = {}
    for (i, j), c in zip(l2_basis(m.genus), m.coords):
        if c:
            poly[(i, j)] = poly.get((i, j), 0) + c
            poly[(j, i)] = poly.get((j, i), 0) - c
    return poly


def bracket3(a: HClass, m: LieElem) -> LieElem:
    """[a, m] for a in H and m in L_2(H)."""
    if a.genus != m.genus or m.degree != 2:
        raise GenusMismatch("need an element of L_2 of the same genus")
    g = a.genus
    inner = _l2_words(m)
    poly: dict = {}
    for l, al in enumerate(a.coords):
        if not al:
            continue
        for w, c in inner.items():
            for key, sign in (((l,) + w, 1), (w + (l,), -1)):
                poly[key] = poly.get(key, 0) + sign * al * c
    return LieElem(g, 3, tuple(l3_decompose(poly, g)))


# --------------------------------------------------------- H (x) L_2 and maps


def hl2_dim(g: int) -> int:
    return 2 * g * comb(2 * g, 2)


def tensor(h: HClass, m: LieElem) -> list[int]:
    """h (x) m in H (x) L_2 coordinates."""
    d = len(m.coords)
    out = [0] * (2 * h.genus * d)
    for a, ha in enumerate(h.coords):
        if ha:
            for k, c in enumerate(m.coords):
                out[a * d + k] += ha * c
    return out


def _add(u, v, s=1):
    return [a + s * b for a, b in zip(u, v)]


def nu(w: Wedge) -> list[int]:
    """x^y^z -> x (x) [y,z] + y (x) [z,x] + z (x) [x,y], extended linearly."""
    g = w.genus
    out = [0] * hl2_dim(g)
    for (i, j, k), c in w.items():
        e = [HClass.basis(g, t) for t in (i, j, k)]
        term = tensor(e[0], bracket(e[1], e[2]))
        term = _add(term, tensor(e[1], bracket(e[2], e[0])))
        term = _add(term, tensor(e[2], bracket(e[0], e[1])))
        out = _add(out, term, c)
    return out


@lru_cache(maxsize=None)
def nu_matrix(g: int) -> list[list[int]]:
    cols = [nu(Wedge.basis_vector(g, t)) for t in wedge_basis(g, 3)]
    return linalg.from_columns(cols, hl2_dim(g))


@lru_cache(maxsize=None)
def bracket_matrix(g: int) -> list[list[int]]:
    """H (x) L_2 -> L_3, e_a (x) [e_i, e_j] -> [e_a, [e_i, e_j]]."""
    cols = []
    for a in range(2 * g):
        for (i, j) in l2_basis(g):
            cols.append(bracket3(HClass.basis(g, a), l2_basis_vector(g, i, j)).coords)
    return linalg.from_columns(cols, len(l3_basis(g)))


def omega_l2(g: int) -> LieElem:
    """omega = sum_i [x_i, y_i]."""
    m = l2_zero(g)
    for i in range(g):
        m = m + l2_basis_vector(g, i, g + i)
    return m


def a_g1_generators(g: int) -> list[list[int]]:
    """sum_i (x_i (x) [h, y_i] - y_i (x) [h, x_i]) for h = e_1..e_2g."""
    out = []
    for j in range(2 * g):
        h = HClass.basis(g, j)
        v = [0] * hl2_dim(g)
        for i in range(1, g + 1):
            x, y = HClass.x(g, i), HClass.y(g, i)
            v = _add(v, tensor(x, bracket(h, y)))
            v = _add(v, tensor(y, bracket(h, x)), -1)
        out.append(v)
    return out


def a_g_generators(g: int) -> list[list[int]]:
    """A_{g,1} generators followed by e_j (x) omega."""
    om = omega_l2(g)
    return a_g1_generators(g) + [tensor(HClass.basis(g, j), om) for j in range(2 * g)]


# ------------------------------------------------------------- eta_1 formula


@dataclass(frozen=True)
class HomHL2:
    """A map H -> L_2(H) given by the images of e_1..e_2g."""

    genus: int
    columns: tuple[LieElem, ...]

    def __call__(self, h: HClass) -> LieElem:
        out = l2_zero(self.genus)
        for c, col in zip(h.coords, self.columns):
            if c:
                out = out + LieElem(self.genus, 2, tuple(c * x for x in col.coords))
        return out

    def to_tensor(self) -> list[int]:
        """The element t of H (x) L_2 with f(h) = sum (a . h) l over t = sum a (x) l."""
        g = self.genus
        J = intersection_matrix(g)
        # f(e_j) = sum_a J[a][j] l_a and J^{-1} = J^T, so l_a = sum_j J[a][j] f(e_j)
        d = comb(2 * g, 2)
        out = [0] * hl2_dim(g)
        for a in range(2 * g):
            for j in range(2 * g):
                if J[a][j]:
                    for k, c in enumerate(self.columns[j].coords):
                        out[a * d + k] += J[a][j] * c
        return out


def eta1_hom(x) -> HomHL2:
    """h -> -sum_{i in Z/3} (h . p(z_i)) [p(z_{i+1}), p(z_{i+2})], summed over the terms of x."""
    g = x.genus
    cols = []
    for j in range(2 * g):
        h = HClass.basis(g, j)
        acc = l2_zero(g)
        for t in x:
            ps = [z.h for z in t.labels]
            for i in range(3):
                s = intersection(h, ps[i])
                if s:
                    b = bracket(ps[(i + 1) % 3], ps[(i + 2) % 3])
                    acc = acc + LieElem(g, 2, tuple(-t.coefficient * s * c for c in b.coords))
        cols.append(acc)
    return HomHL2(g, tuple(cols))


# ----------------------------------------------------------------- exactness


@dataclass
class ExactnessReport:
    genus: int
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(ok for ok, _ in self.checks.values())

    def lines(self) -> list[str]:
        return [f"{name}: {'pass' if ok else 'FAIL'} ({detail})" for name, (ok, detail) in self.checks.items()]


def _lattice_preimage(M, A) -> list[list[int]]:
    """Basis of {w : M w in colspan(A)}."""
    rows = len(M)
    k = len(M[0]) if rows else 0
    if not k:
        return []
    big = [list(M[i]) + [-A[i][j] for j in range(len(A[i]))] for i in range(rows)]
    width = k + (len(A[0]) if rows and A else 0)
    ker = linalg.kernel_basis(big, width) if rows else [[1 if i == j else 0 for i in range(k)] for j in range(k)]
    proj = [v[:k] for v in ker]
    return linalg.column_span_basis(linalg.from_columns(proj, k), len(proj))


def check_exactness(g: int) -> ExactnessReport:
    rep = ExactnessReport(g)
    C = comb(2 * g, 3)
    N = nu_matrix(g)
    B = bracket_matrix(g)
    dim_hl2 = hl2_dim(g)
    dim_l3 = len(l3_basis(g))

    r = linalg.rank(N, C)
    rep.checks["nu_injective"] = (r == C, f"rank {r} of {C}")

    comp = linalg.matmul(B, N) if dim_l3 and C else []
    rep.checks["bracket_nu_zero"] = (not any(any(row) for row in comp), "[-,-] o nu = 0")

    kr = dim_hl2 - linalg.rank(B, dim_hl2)
    expected = 2 * g * comb(2 * g, 2) - witt_count(2 * g)
    rep.checks["bracket_kernel_rank"] = (
        kr == C and expected == C and dim_l3 == witt_count(2 * g),
        f"kernel rank {kr}, 2g*C(2g,2) - dim L3 = {expected}, C(2g,3) = {C}",
    )

    om = omega_l2(g)
    cols = [bracket3(HClass.basis(g, j), om).coords for j in range(2 * g)]
    W = linalg.from_columns(cols, dim_l3)
    rw = linalg.rank(W, 2 * g)
    rep.checks["h_bracket_omega_injective"] = (rw == 2 * g, f"rank {rw} of {2 * g}")

    A1 = linalg.from_columns(a_g1_generators(g), dim_hl2)
    ra1 = linalg.rank(A1, 2 * g)
    rep.checks["a_g1_rank"] = (ra1 == 2 * g, f"rank {ra1} of {2 * g}")

    pre = _lattice_preimage(N, A1)
    rep.checks["nu_injective_mod_a_g1"] = (not pre, f"preimage lattice rank {len(pre)}")

    Ag = linalg.from_columns(a_g_generators(g), dim_hl2)
    OM = omega_wedge_columns(g)
    inside = all(linalg.solve_integer(Ag, nu(Wedge(g, 3, c)), 4 * g) is not None for c in OM) if g else True
    rep.checks["nu_omega_h_in_a_g"] = (inside, "nu(omega ^ e_j) in span A_g")

    pre = _lattice_preimage(N, Ag)
    om_matrix = linalg.from_columns(OM, C)
    same = all(linalg.solve_integer(om_matrix, v, 2 * g) is not None for v in pre)
    rank_pre = len(pre)
    rank_om = linalg.rank(om_matrix, 2 * g)
    rep.checks["nu_injective_mod_a_g"] = (
        same and inside and rank_pre == rank_om,
        f"preimage lattice rank {rank_pre} equals omega^H rank {rank_om}",
    )
    return rep


def omega_wedge_columns(g: int) -> list[tuple[int, ...]]:
    return [wedge_omega_h(HClass.basis(g, j)).coords for j in range(2 * g)]
