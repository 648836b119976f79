import random
from itertools import product
from math import comb

import pytest
from hypothesis import given, settings

from hcyl import linalg
from hcyl.lie import (
    HomHL2,
    a_g1_generators,
    a_g_generators,
    bracket,
    bracket3,
    bracket_matrix,
    check_exactness,
    eta1_hom,
    expand_bracket,
    hl2_dim,
    l2_basis_vector,
    l2_zero,
    l3_basis,
    lyndon_words,
    nu,
    nu_matrix,
    standard_bracketing,
    tensor,
    witt_count,
)
from hcyl.sampling import random_yexpr
from hcyl.selftest import eta_consistent
from hcyl.special import PElem
from hcyl.symplectic import HClass, Wedge, wedge3, wedge_basis, wedge_omega_h
from hcyl.ygraph import Y, YExpr
from strategies import hclass


def rewrite(p, q, r) -> dict:
    """[p, [q, r]] on letters, reduced to Lyndon words by antisymmetry and Jacobi.

    Basis elements for a < b < c: abc = [a,[b,c]], acb = [[a,c],b],
    aab = [a,[a,b]], abb = [[a,b],b].
    """
    if q == r:
        return {}
    sign = 1
    if q > r:
        q, r, sign = r, q, -1
    if p == q:
        return {(q, q, r): sign}
    if p == r:
        return {(q, r, r): -sign}
    if p < q:
        return {(p, q, r): sign}
    if p < r:
        # [p,[q,r]] with q < p < r is -[[q,r],p]
        return {(q, r, p): -sign}
    # r < p: [p,[q,r]] = -[q,[r,p]] - [[q,p],r]
    return {(q, r, p): -sign, (q, p, r): -sign}


def oracle_vector(g, terms: dict) -> tuple:
    idx = {w: i for i, w in enumerate(l3_basis(g))}
    v = [0] * len(idx)
    for w, c in terms.items():
        v[idx[w]] += c
    return tuple(v)


def test_lyndon_words_brute_force():
    for n in range(1, 7):
        brute = [w for w in product(range(n), repeat=3) if all(w < w[i:] + w[:i] for i in (1, 2))]
        assert lyndon_words(n, 3) == brute
        assert len(brute) == witt_count(n)


def test_rewrite_oracle_is_sound():
    # each rewrite must have the same tensor-algebra expansion as the input bracket
    for p, q, r in product(range(4), repeat=3):
        lhs = expand_bracket((p, (q, r)))
        rhs: dict = {}
        for w, c in rewrite(p, q, r).items():
            for u, cu in expand_bracket(standard_bracketing(w)).items():
                rhs[u] = rhs.get(u, 0) + c * cu
        assert lhs == {k: c for k, c in rhs.items() if c}


@pytest.mark.parametrize("g", [1, 2])
def test_bracket3_matches_rewrite_oracle(g):
    n = 2 * g
    for p, q, r in product(range(n), repeat=3):
        got = bracket3(HClass.basis(g, p), l2_basis_vector(g, q, r))
        assert got.coords == oracle_vector(g, rewrite(p, q, r))


def test_bracket_examples():
    x, y = HClass.x(1, 1), HClass.y(1, 1)
    assert bracket(x, x).is_zero()
    assert bracket(x, y).coords == (1,)
    # [x1, [x1, y1]] is the Lyndon basis element aab
    assert bracket3(x, bracket(x, y)).coords == oracle_vector(1, {(0, 0, 1): 1})


@given(hclass(2), hclass(2), hclass(2))
def test_jacobi(a, b, c):
    total = bracket3(a, bracket(b, c)) + bracket3(b, bracket(c, a)) + bracket3(c, bracket(a, b))
    assert total.is_zero()


def test_nu_examples():
    g = 2
    assert not any(nu(Wedge.zero(g, 3)))
    x1, y1, x2 = HClass.x(g, 1), HClass.y(g, 1), HClass.x(g, 2)
    w = wedge3(x1, y1, x2)
    expect = [a + b + c for a, b, c in zip(tensor(x1, bracket(y1, x2)), tensor(y1, bracket(x2, x1)), tensor(x2, bracket(x1, y1)))]
    assert nu(w) == expect


@pytest.mark.parametrize("g", [1, 2, 3])
def test_bracket_kills_nu(g):
    B, N = bracket_matrix(g), nu_matrix(g)
    C = comb(2 * g, 3)
    if C:
        assert not any(any(row) for row in linalg.matmul(B, N))


def test_a_generators():
    assert a_g1_generators(0) == [] and a_g_generators(0) == []
    g = 1
    x, y = HClass.x(g, 1), HClass.y(g, 1)
    assert a_g1_generators(g)[0] == tensor(x, bracket(x, y))
    A = linalg.from_columns(a_g1_generators(2), hl2_dim(2))
    assert linalg.rank(A, 4) == 4
    assert len(a_g_generators(2)) == 8


def test_eta1_hom_examples():
    g = 2
    assert all(c.is_zero() for c in eta1_hom(YExpr.zero(g)).columns)
    x = Y(PElem.make(g, [1, 0, 0, 0]), PElem.make(g, [0, 0, 1, 0]), PElem.make(g, [0, 1, 0, 0]))
    f = eta1_hom(x)
    assert f(HClass.y(g, 2)) == bracket(HClass.x(g, 1), HClass.y(g, 1))


def test_eta1_consistency_random():
    rng = random.Random(5)
    for _ in range(40):
        assert eta_consistent(random_yexpr(rng, 2))


@given(hclass(2))
def test_hom_tensor_duality(h):
    # the tensor a (x) l acts as h -> (a . h) l
    g = 2
    cols = tuple(bracket(h, HClass.basis(g, j)) for j in range(2 * g))
    t = HomHL2(g, cols).to_tensor()
    rebuilt = []
    for j in range(2 * g):
        acc = [0] * comb(2 * g, 2)
        for a in range(2 * g):
            ip = 1 if a < g and j == a + g else -1 if a >= g and j == a - g else 0
            for k in range(len(acc)):
                acc[k] += ip * t[a * len(acc) + k]
        rebuilt.append(tuple(acc))
    assert rebuilt == [c.coords for c in cols]


@pytest.mark.parametrize("g", [0, 1, 2, 3])
def test_check_exactness(g):
    rep = check_exactness(g)
    assert rep.passed, rep.lines()
    assert len(l3_basis(g)) == witt_count(2 * g)


def test_nu_omega_h_in_a_g():
    for g in (1, 2, 3):
        A = linalg.from_columns(a_g_generators(g), hl2_dim(g))
        for j in range(2 * g):
            assert linalg.solve_integer(A, nu(wedge_omega_h(HClass.basis(g, j))), 4 * g) is not None


def test_l2_zero_shape():
    assert l2_zero(2).coords == (0,) * 6
    assert len(wedge_basis(2, 2)) == 6
