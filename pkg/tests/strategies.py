"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from hcyl.boolean import BoolPoly, b3_basis
from hcyl.quadforms import QForm
from hcyl.special import PElem
from hcyl.symplectic import H2Class, HClass
from hcyl.ygraph import Y, YExpr

small = st.integers(-3, 3)


def hclass(g, lo=-3, hi=3):
    return st.lists(st.integers(lo, hi), min_size=2 * g, max_size=2 * g).map(lambda c: HClass(g, c))


def h2class(g):
    return st.lists(st.integers(0, 1), min_size=2 * g, max_size=2 * g).map(lambda c: H2Class(g, c))


def qform(g):
    return st.lists(st.integers(0, 1), min_size=2 * g, max_size=2 * g).map(lambda c: QForm(g, c))


def pelem(g, lo=-2, hi=2):
    return st.builds(lambda h, e: PElem(g, h, e), hclass(g, lo, hi), st.integers(0, 1))


def boolpoly(g, max_degree=None):
    masks = [m for m in range(1 << (2 * g)) if max_degree is None or bin(m).count("1") <= max_degree]
    return st.sets(st.sampled_from(masks)).map(lambda s: BoolPoly(g, s))


def b3poly(g):
    return st.sets(st.sampled_from(b3_basis(g))).map(lambda s: BoolPoly(g, s))


def yexpr(g, max_terms=4):
    term = st.builds(lambda a, b, c, k: Y(a, b, c, coefficient=k), pelem(g), pelem(g), pelem(g), st.integers(-3, 3))
    return st.lists(term, max_size=max_terms).map(lambda ts: sum(ts, YExpr.zero(g)))


genus = st.integers(0, 3)
