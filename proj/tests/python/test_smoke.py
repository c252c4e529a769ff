import math
from fractions import Fraction

import pytest

import spexpy as sp


def test_graph_basics():
    g = sp.make_complete(4)
    assert g.order == 4
    assert sp.edge_count(g) == 6
    assert sp.is_connected(g)
    assert sp.parse_graph6(sp.emit_graph6(g)) == g


def test_family_and_spectral_radius():
    spec = sp.FamilySpec.fke_extremal_a(11, 1)
    g = sp.build_family(spec)
    assert g.order == 11
    assert sp.edge_count(g) == 47
    rho = sp.spectral_radius(g)
    assert 9.0 < rho < 9.1
    assert sp.spectral_radius(sp.make_complete(10)) == pytest.approx(9.0, abs=1e-9)


def test_hong_bound():
    star = sp.make_star(3)
    hb = sp.hong_bound(star)
    assert hb["defined"]
    assert hb["value"] == pytest.approx(math.sqrt(3.0))
    assert hb["equality"]


def test_fpm_certificate():
    r = sp.has_fpm(sp.make_cycle(5))
    assert r["exists"]
    assert all(w == Fraction(1, 2) for _, _, w in r["certificate"])
    assert not sp.has_fpm(sp.make_complete(1))["exists"]


def test_fke_verdicts():
    assert sp.is_fractional_k_extendable(sp.make_cycle(4), 1)["value"]
    v = sp.is_fractional_k_extendable(sp.build_family(sp.FamilySpec.fke_extremal_a(11, 1)), 1)
    assert not v["value"]
    assert v["witness"]["S"] == [0, 1]
    assert v["witness"]["lhs"] == Fraction(1)


def test_spanning_tree_search():
    found = sp.spanning_tree_leafdist(sp.make_cycle(6), 5)
    assert found["verdict"] == "found"
    assert found["certificate"]["leaf_distance"] >= 5
    absent = sp.spanning_tree_leafdist(sp.make_cycle(6), 6)
    assert absent["verdict"] == "absent"


def test_thresholds():
    t = sp.threshold_tree(16, 4)
    assert 14.0 < t["value"] < 15.0
    assert t["method_agreement"] < 1e-8
    f = sp.threshold_fke(11, 1, 2)
    assert 9.0 < f["value"] < 9.1


def test_audits():
    assert sp.audit_psi1(16, 4)["pass"]
    assert sp.audit_claim1(11, 1, 3)["pass"]
    assert sp.audit_gamma2(11, 1, 3)["pass"]
    assert sp.audit_case2(16, 1, 3, 4)["pass"]
    assert sp.audit_lemma31(16, 4, 2)["pass"]


def test_verify_reports():
    r1 = sp.verify_thm1(16, 4, samples=20, seed=3)
    assert r1["counts"]["fail"] == 0
    assert r1["counts"]["unknown"] == 0
    r2 = sp.verify_thm2(11, 1, 2, max_deletions=2)
    assert r2["counts"]["fail"] == 0
    assert not r2["counterexamples"]


def test_isomorphism():
    a = sp.build_family(sp.FamilySpec.fke_extremal_a(11, 1))
    b = sp.build_family(sp.FamilySpec.fke_extremal_b(11, 1, 2))
    assert sp.is_isomorphic(a, b)
    assert not sp.is_isomorphic(a, sp.make_complete(11))
