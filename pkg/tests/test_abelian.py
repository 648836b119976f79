import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hcyl import abelian, linalg
from hcyl.boolean import arf_ideal_generators, b3_basis, b3_vector
from hcyl.sampling import slide_instance
from hcyl.special import PElem
from hcyl.symplectic import omega_wedge_matrix
from hcyl.ygraph import Y, presentation_coords, presentation_group, pullback_model, rho


def test_presentation_examples():
    assert abelian.group_from_presentation(1, [[2]]).invariants == (0, [2])
    assert abelian.group_from_presentation(2, []).invariants == (2, [])
    with pytest.raises(abelian.GroupError):
        abelian.group_from_presentation(2, [[1]])


def test_a1_presentation_g2():
    assert presentation_group(2).invariants == (4, [2] * 11)


def test_normalize_examples():
    G = abelian.group_from_presentation(1, [[2]])
    assert G.canonical([3]) == (1,)
    H = abelian.group_from_presentation(3, [[2, 4, 6], [0, 3, 3]])
    assert H.canonical([0, 0, 0]) == (0, 0, 0)


def test_slide_instance_is_zero_in_presentation():
    g = 1
    x1 = PElem.make(g, [1, 0])
    s = PElem.make(g, [0, 0], 1)
    expr = Y(x1, x1, s) - Y(s, x1, s)
    G = presentation_group(g)
    assert G.is_zero_vector(presentation_coords(expr))
    assert rho(expr).is_zero()
    assert G.is_zero_vector(presentation_coords(slide_instance(x1, s)))


def test_owner_mismatch():
    G = abelian.free_group(2)
    H = abelian.free_group(2)
    with pytest.raises(abelian.GroupError):
        G.element([1, 0]) + H.element([1, 0])
    with pytest.raises(abelian.GroupError):
        abelian.quotient(G, [H.element([1, 0])])


def random_group(rng, n=4, k=3):
    rels = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(k)]
    return abelian.group_from_presentation(n, rels)


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False))
def test_canonical_idempotent_and_equality_matches_span(rng):
    G = random_group(rng)
    a = [rng.randint(-9, 9) for _ in range(4)]
    b = [rng.randint(-9, 9) for _ in range(4)]
    assert G.canonical(G.canonical(a)) == G.canonical(a)
    in_span = linalg.solve_integer(G.relation_matrix, [x - y for x, y in zip(a, b)], len(G.relators)) is not None
    assert (G.element(a) == G.element(b)) == in_span
    s = G.element(a) + G.element(b)
    assert G.canonical(s.coords) == G.canonical([x + y for x, y in zip(G.canonical(a), G.canonical(b))])


def test_quotient_examples():
    Z = abelian.free_group(1)
    Q, proj = abelian.quotient(Z, [Z.element([2])])
    assert Q.invariants == (0, [2])
    assert proj(Z.element([3])) == Q.element([1])

    g = 2
    C = len(omega_wedge_matrix(g))
    L3 = abelian.free_group(C)
    OM = omega_wedge_matrix(g)
    Q, _ = abelian.quotient(L3, [[OM[i][j] for i in range(C)] for j in range(2 * g)])
    r = linalg.rank(OM, 2 * g)
    assert Q.free_rank == C - r == 0

    B = abelian.elementary_2_group(len(b3_basis(g)))
    Q, _ = abelian.quotient(B, [b3_vector(f) for f in arf_ideal_generators(g)])
    assert Q.invariants == (0, [2] * 10)


@settings(max_examples=30, deadline=None)
@given(st.randoms(use_true_random=False))
def test_quotient_in_stages(rng):
    G = random_group(rng, 4, 2)
    s1 = [[rng.randint(-3, 3) for _ in range(4)]]
    s2 = [[rng.randint(-3, 3) for _ in range(4)]]
    Q1, p1 = abelian.quotient(G, s1)
    Q12, _ = abelian.quotient(Q1, [p1(G.element(v)).coords for v in s2])
    Q, _ = abelian.quotient(G, s1 + s2)
    assert Q12.invariants == Q.invariants


def test_pullback_identity_is_diagonal():
    Z = abelian.free_group(1)
    idm = abelian.Hom(Z, Z, [[1]])
    PB, pr1, pr2 = abelian.pullback(idm, idm)
    assert PB.invariants == (1, [])
    x = PB.lift([5], [5])
    assert tuple(pr1(x).coords) == (5,) and tuple(pr2(x).coords) == (5,)
    with pytest.raises(abelian.GroupError):
        PB.lift([1], [2])


def test_pullback_g1_g2():
    assert pullback_model(1).group.invariants == (0, [2] * 4)
    assert pullback_model(2).group.invariants == (4, [2] * 11)


def test_pullback_equalizer_random():
    rng = random.Random(7)
    m = pullback_model(2)
    n = m.group.gen_count
    for _ in range(200):
        x = m.group.element([rng.randint(-5, 5) for _ in range(n)])
        assert m.reduction(m.pr1(x)) == m.shadow(m.pr2(x))


def test_hom_checks_relators():
    Z2 = abelian.elementary_2_group(1)
    Z = abelian.free_group(1)
    with pytest.raises(abelian.GroupError):
        abelian.Hom(Z2, Z, [[1]])
    f = abelian.Hom(Z, Z2, [[1]])
    assert f(Z.element([3])) == Z2.element([1])


def test_direct_sum_invariants():
    assert abelian.direct_sum_invariants((1, [2]), (0, [3])) == (1, [6])
