from __future__ import annotations

import math

import pytest

import tightgroupoid as tg
from tightgroupoid import errors


def test_named_fixture_cardinalities():
    assert tg.build_fixture("I2").size == 7
    assert tg.build_fixture("B2").size == 5
    assert tg.build_fixture("Z2z").size == 3
    assert tg.build_fixture("E4").size == 4
    assert len(tg.build_fixture("E4").idempotents) == 4


def test_parameterized_fixtures():
    assert tg.build_fixture("In(2)").size == 7
    expected = sum(math.comb(3, k) ** 2 * math.factorial(k) for k in range(4))
    assert tg.build_fixture("In(3)").size == expected == 34
    assert tg.build_fixture("Bn(3)").size == 10
    assert tg.build_fixture("Cz(1)").size == 2
    assert tg.build_fixture("Cz(3)").size == 4
    assert tg.build_fixture("Pow(3)").size == 8


def test_symmetric_cap():
    with pytest.raises(errors.CapExceeded):
        tg.build_fixture("In(5)")


def test_unknown_fixture():
    with pytest.raises(errors.DegreeMismatch):
        tg.build_fixture("nope")


def test_group_with_zero():
    assert tg.group_with_zero([[0]]).size == 2
    c2 = tg.group_with_zero([[0, 1], [1, 0]])
    assert c2.size == 3 and c2.idempotents == {0, 1}


def test_group_with_zero_rejects_monoids():
    # a two-chain semilattice is a monoid but not a group
    with pytest.raises(errors.TightGroupoidError):
        tg.group_with_zero([[0, 0], [0, 1]])


def test_z2z_equals_cyclic_construction():
    a = tg.build_fixture("Z2z")
    b = tg.cyclic_group_with_zero(2)
    assert a.table == b.table and a.zero == b.zero


def test_corpus_is_deterministic():
    first = tg.corpus(6, 42)
    second = tg.corpus(6, 42)
    assert [sg.table for _, sg in first] == [sg.table for _, sg in second]
    assert [name for name, _ in first] == [name for name, _ in second]


def test_corpus_respects_bounds():
    for _, sg in tg.corpus(15, 11):
        assert sg.size <= 300
        assert len(sg.idempotents) >= 2


def test_random_instances_are_generator_closed_models():
    import random

    rng = random.Random(5)
    for _ in range(5):
        sg = tg.random_instance(rng)
        assert sg.partial_maps is not None
        empty = sg.partial_maps[sg.zero]
        assert all(v is None for v in empty)
