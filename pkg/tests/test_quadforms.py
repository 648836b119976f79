from itertools import product

import pytest

from hcyl.boolean import arf, evaluate
from hcyl.quadforms import QForm, act, arf_value, enumerate_forms, q_value
from hcyl.symplectic import H2Class, HClass, intersection2


def test_q_value_examples():
    q0 = QForm(1, [0, 0])
    assert q_value(q0, H2Class(1, [1, 1])) == 1
    for q in enumerate_forms(1):
        assert q_value(q, H2Class.zero(1)) == 0
    assert q_value(QForm(1, [1, 0]), H2Class(1, [1, 0])) == 1


def test_act_examples():
    q0 = QForm(1, [0, 0])
    assert act(H2Class.zero(1), q0) == q0
    q1 = act(H2Class(1, [1, 0]), q0)
    assert q1(H2Class(1, [0, 1])) == 1 and q1(H2Class(1, [1, 0])) == 0
    for x in (H2Class(2, b) for b in product((0, 1), repeat=4)):
        for q in enumerate_forms(2):
            assert act(x, act(x, q)) == q


def test_enumerate_counts():
    assert [len(enumerate_forms(g)) for g in range(3)] == [1, 4, 16]
    assert len(set(enumerate_forms(2))) == 16


def test_arf_value_examples():
    assert arf_value(QForm(2, [0, 0, 0, 0])) == 0
    assert arf_value(QForm(1, [1, 1])) == 1
    assert arf_value(QForm(2, [1, 1, 1, 1])) == 0


@pytest.mark.parametrize("g", [0, 1, 2])
def test_polarization_exhaustive(g):
    classes = [H2Class(g, b) for b in product((0, 1), repeat=2 * g)]
    for q in enumerate_forms(g):
        for a in classes:
            for b in classes:
                assert (q(a + b) - q(a) - q(b)) % 2 == intersection2(a, b)


@pytest.mark.parametrize("g", [0, 1, 2])
def test_action_simply_transitive(g):
    classes = [H2Class(g, b) for b in product((0, 1), repeat=2 * g)]
    for q in enumerate_forms(g):
        orbit = {act(x, q) for x in classes}
        assert len(orbit) == 4 ** g
        for x in classes:
            qq = act(x, q)
            for h in classes:
                assert qq(h) == (q(h) + intersection2(x, h)) % 2


@pytest.mark.parametrize("g", [1, 2, 3])
def test_arf_zero_count(g):
    forms = enumerate_forms(g)
    assert sum(1 for q in forms if arf_value(q) == 0) == 2 ** (2 * g - 1) + 2 ** (g - 1)
    assert all(arf_value(q) == evaluate(arf(g), q) for q in forms)


def test_q_value_accepts_integral_classes():
    q = QForm(1, [1, 1])
    assert q(HClass(1, [3, 1])) == q(H2Class(1, [1, 1]))


def test_parse():
    assert QForm.parse(2, "q=1010").bits == (1, 0, 1, 0)
    with pytest.raises(ValueError):
        QForm.parse(2, "10")
    with pytest.raises(ValueError):
        QForm.parse(1, "1x")
