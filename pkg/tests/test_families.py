"""Structured families with known groupoids, as regression anchors:
groups with zero give their own group over a single point, matrix-unit
semigroups give pair groupoids, and pure semilattices give unit spaces
indexed by their atoms."""

from __future__ import annotations

import pytest

import tightgroupoid as tg


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_cyclic_groups_with_zero(n):
    sg = tg.cyclic_group_with_zero(n)
    analysis, _ = tg.verify_instance(sg, f"Cz({n})")
    g = analysis.groupoid
    assert len(g.units) == 1 and len(g.arrows) == n
    flags = analysis.report.cstar_flags
    assert flags["a"] and flags["c"] and not flags["d"]
    assert flags["b"] == (n == 1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_matrix_unit_semigroups(n):
    sg = tg.brandt_semigroup(n)
    analysis, _ = tg.verify_instance(sg, f"Bn({n})")
    g = analysis.groupoid
    assert len(g.units) == n and len(g.arrows) == n * n
    hom_sets = {(g.source[i], g.target[i]) for i in range(len(g.arrows))}
    assert len(hom_sets) == n * n
    assert analysis.report.cstar_flags == {"a": True, "b": True,
                                           "c": True, "d": False}


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_subset_semilattices(k):
    sg = tg.meet_semilattice_of_subsets(k)
    analysis, _ = tg.verify_instance(sg, f"Pow({k})")
    g = analysis.groupoid
    assert len(g.units) == len(g.arrows) == k
    flags = analysis.report.cstar_flags
    assert flags["a"] and flags["b"] and not flags["d"]
    assert flags["c"] == (k == 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_symmetric_inverse_monoids(n):
    sg = tg.symmetric_inverse_monoid(n)
    analysis, _ = tg.verify_instance(sg, f"In({n})")
    g = analysis.groupoid
    # the n singleton-domain partial identities are the tight points and
    # every pair of them is connected by a unique germ
    assert len(g.units) == n and len(g.arrows) == n * n
    assert analysis.report.cstar_flags == {"a": True, "b": True,
                                           "c": True, "d": False}
