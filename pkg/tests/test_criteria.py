from __future__ import annotations

import pytest

import tightgroupoid as tg
from tightgroupoid import criteria, errors

import oracles


def byname(sg):
    return {sg.name_of(s): s for s in sg.elements()}


# -------------------------------------------------------------- hausdorff

def test_hausdorff_criterion_fixtures(named_fixtures):
    for name, sg in named_fixtures.items():
        result = tg.hausdorff_criterion(sg)
        assert result.value
        covers = result.witness["covers"]
        for e in sg.idempotents:
            if e != sg.zero:
                assert covers[e] == (e,)
        for s, cover in covers.items():
            assert sg.is_cover(cover, sg.fixed_idempotents(s))


def test_e_star_unitary_gets_empty_covers():
    z2z = tg.build_fixture("Z2z")
    assert tg.hausdorff_criterion(z2z).witness["covers"][2] == ()


# ------------------------------------------------------------ weakly fixed

def test_fixed_implies_weakly_fixed(named_fixtures):
    for sg in named_fixtures.values():
        for s in sg.elements():
            ss = sg.mul(sg.star[s], s)
            for e in sg.below(ss):
                if e != sg.zero and sg.mul(s, e) == e:
                    assert tg.weakly_fixed(sg, e, s)


def test_weakly_fixed_examples():
    z2z = tg.build_fixture("Z2z")
    assert tg.weakly_fixed(z2z, 1, 2)        # conjugation fixes 1 though g*1 != 1
    b2 = tg.build_fixture("B2")
    n = byname(b2)
    assert not tg.weakly_fixed(b2, n["e22"], n["e12"])
    with pytest.raises(errors.PreconditionViolated):
        tg.weakly_fixed(b2, n["e11"], n["e12"])


# --------------------------------------------------- topological freeness

def test_top_free_criterion_fixtures(named_fixtures):
    assert tg.top_free_criterion(named_fixtures["I2"]).value
    assert tg.top_free_criterion(named_fixtures["B2"]).value
    res = tg.top_free_criterion(named_fixtures["Z2z"])
    assert not res.value
    first = res.witness["failures"][0]
    assert (first["s"], first["e"]) == (2, 1)


def test_fixed_cover_reduction_matches_bruteforce():
    # a fixed cover exists iff the full fixed candidate set covers
    for name in ("I2", "B2", "Z2z", "E4", "Pow(3)"):
        sg = tg.build_fixture(name)
        for s in sg.elements():
            ss = sg.mul(sg.star[s], s)
            for e in sg.below(ss):
                if e == sg.zero or not tg.weakly_fixed(sg, e, s):
                    continue
                cands = [c for c in sg.below(e)
                         if c != sg.zero and sg.mul(s, c) == c]
                ideal = sg.principal_ideal(e)
                exists = any(
                    sg.is_cover(cov, ideal)
                    for cov in oracles.powerset(cands)
                )
                assert exists == sg.is_outer_cover(cands, ideal)


# --------------------------------------------------------------- minimality

def test_minimal_criterion_fixtures(named_fixtures):
    assert tg.minimal_criterion(named_fixtures["I2"]).value
    assert tg.minimal_criterion(named_fixtures["Z2z"]).value
    b2 = named_fixtures["B2"]
    res = tg.minimal_criterion(b2)
    assert res.value
    n = byname(b2)
    pairs = dict(res.witness["conjugate_covers"][(n["e11"], n["e22"])])
    assert n["e11"] in pairs and pairs[n["e11"]] == n["e12"]
    e4 = named_fixtures["E4"]
    res = tg.minimal_criterion(e4)
    assert not res.value
    assert {"e": 1, "f": 2, "uncovered": 1} in res.witness["failures"]


def test_minimal_witness_families_cover(named_fixtures):
    for sg in named_fixtures.values():
        res = tg.minimal_criterion(sg)
        if not res.value:
            continue
        for (e, _f), pairs in res.witness["conjugate_covers"].items():
            cover = [c for c, _ in pairs]
            assert sg.is_outer_cover(cover, sg.principal_ideal(e))


# ------------------------------------------------------- local contraction

def brute_locally_contracting(sg):
    nz = sg.nonzero_idempotents()
    if not nz:
        return True
    for e in nz:
        ok = False
        for s in sg.elements():
            t = sg.mul(e, sg.mul(sg.star[s], s))
            cands = [f for f in sg.below(t) if f != sg.zero]
            for family in oracles.powerset(cands):
                if not family:
                    continue
                for f0 in family:
                    annihilates = all(
                        sg.mul(sg.mul(f0, s), fi) == sg.zero for fi in family)
                    if not annihilates:
                        continue
                    covers = all(
                        sg.is_outer_cover(
                            family,
                            sg.principal_ideal(
                                sg.mul(sg.mul(s, fi), sg.star[s])))
                        for fi in family)
                    if covers:
                        ok = True
                        break
                if ok:
                    break
            if ok:
                break
        if not ok:
            return False
    return True


def test_contraction_criterion_fixtures(named_fixtures):
    for name, sg in named_fixtures.items():
        res = tg.locally_contracting_criterion(sg)
        assert res.value is False
        assert not res.cap_exceeded
        assert res.value == brute_locally_contracting(sg)


def test_contraction_refutation_at_e4_atom():
    e4 = tg.build_fixture("E4")
    res = tg.locally_contracting_criterion(e4)
    assert res.witness["e"] in (1, 2)


def test_degenerate_semigroup_is_vacuously_contracting():
    trivial = tg.from_table([[0]], 0)
    res = tg.locally_contracting_criterion(trivial)
    assert res.value is True and res.vacuous
    easier = tg.easier_loc_contr_criterion(trivial)
    assert easier.value is True and easier.vacuous


def test_capped_result_refuses_boolean_use():
    res = criteria.LocalContractionResult(None, cap_exceeded=True)
    with pytest.raises(errors.SearchCapExceeded):
        bool(res)


def test_easier_criterion_fixtures(named_fixtures):
    for name, sg in named_fixtures.items():
        easier = tg.easier_loc_contr_criterion(sg)
        assert easier.value is False
        # material implication with the main criterion
        main = tg.locally_contracting_criterion(sg)
        assert not easier.value or main.value


# -------------------------------------------------------------- conjunction

def test_hausdorff_and_principal_conjunction(named_fixtures):
    assert tg.ess_principal_and_hausdorff_criterion(named_fixtures["I2"]).value
    assert tg.ess_principal_and_hausdorff_criterion(named_fixtures["B2"]).value
    assert not tg.ess_principal_and_hausdorff_criterion(named_fixtures["Z2z"]).value


# -------------------------------------------------------------- full report

def test_full_report_flags(analyses):
    expect = {
        "I2": {"a": True, "b": True, "c": True, "d": False},
        "B2": {"a": True, "b": True, "c": True, "d": False},
        "Z2z": {"a": True, "b": False, "c": True, "d": False},
        "E4": {"a": True, "b": True, "c": False, "d": False},
    }
    for name, analysis in analyses.items():
        assert analysis.report.cstar_flags == expect[name]


def test_report_pairs_agree(analyses):
    for analysis in analyses.values():
        rep = analysis.report
        for pair in (rep.hausdorff, rep.essentially_principal,
                     rep.minimal, rep.locally_contracting):
            assert pair.criterion == pair.direct


def test_conclusions_track_flags(analyses):
    i2 = analyses["I2"].report
    assert any("simple" in line for line in i2.conclusions)
    assert not any("purely infinite" in line for line in i2.conclusions)
    e4 = analyses["E4"].report
    assert not any("simple" in line for line in e4.conclusions)


def test_full_report_requires_points():
    with pytest.raises(errors.EmptySpectrum):
        tg.full_report(tg.from_table([[0]], 0))


def test_pair_mismatch_is_loud():
    with pytest.raises(errors.TheoremViolation):
        criteria._pair("demo", "inst", True, False, {})


def test_verify_instance_runs_everything(named_fixtures):
    for name, sg in named_fixtures.items():
        _, checks = tg.verify_instance(sg, name)
        assert {"tight_equals_ultra", "weakly_fixed_vs_fixed_points",
                "outer_cover_vs_domain_union", "conjugated_domains",
                "ultrafilter_preserved", "topfree_three_way",
                "groupoid_axioms"} <= set(checks)


def test_conjunction_matches_direct_groupoid(analyses, named_fixtures):
    for name, sg in named_fixtures.items():
        combined = tg.ess_principal_and_hausdorff_criterion(sg)
        g = analyses[name].groupoid
        assert combined.value == (g.is_hausdorff() and g.is_essentially_principal())


def test_larger_instances_smoke():
    # the full symmetric inverse monoid on four points, and a subset
    # semilattice big enough to engage the capped tightness search
    i4 = tg.build_fixture("In(4)")
    assert i4.size == 209
    _, checks = tg.verify_instance(i4, "In(4)")
    assert checks["groupoid_axioms"]

    pow5 = tg.meet_semilattice_of_subsets(5)
    assert len(pow5.idempotents) == 32
    tight = {f.min for f in tg.tight_spectrum(pow5).points}
    ultra = {f.min for f in tg.ultrafilters(pow5)}
    assert tight == ultra and len(tight) == 5
