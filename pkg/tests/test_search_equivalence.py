import pytest
from hypothesis import given, settings, strategies as st

from picard import catalog
from picard.equivalence import (find_equivalence, invariants_fingerprint, is_equivalence, is_essentially_surjective,
                                is_faithful, is_full, quasi_inverse)
from picard.errors import BudgetExceeded
from picard.rmodule import biproduct, identity_mod_hom
from picard.search import SearchBudget, enumerate_homs, enumerate_two_morphisms
from picard.twogroup import validate_hom

from oracles import fingerprint

MODULES = catalog.module_names()


def test_budget_from_env(monkeypatch):
    monkeypatch.setenv("PICARD_BUDGET", "77")
    assert SearchBudget.from_env().max_candidates == 77
    assert SearchBudget.from_env(5).max_candidates == 5
    monkeypatch.setenv("PICARD_BUDGET", "lots")
    with pytest.raises(ValueError):
        SearchBudget.from_env()
    with pytest.raises(ValueError):
        SearchBudget(max_candidates=0)


def test_tiny_budget_is_exceeded():
    with pytest.raises(BudgetExceeded):
        enumerate_homs(catalog.twogroup("B4"), catalog.twogroup("B4"), SearchBudget(max_candidates=3))


def test_size_cap_applies_before_enumeration():
    with pytest.raises(BudgetExceeded):
        enumerate_homs(catalog.twogroup("D6"), catalog.twogroup("D6"), SearchBudget(max_objects=4))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6])
def test_discrete_hom_counts_match_additive_maps(n):
    from oracles import additive_endomaps
    A = catalog.twogroup(f"D{n}")
    homs = enumerate_homs(A, A)
    assert len(homs) == len(additive_endomaps(n))
    assert {tuple(F.omap[str(i)] for i in range(n)) for F in homs} \
        == {tuple(map(str, m)) for m in additive_endomaps(n)}


def test_enumerated_homs_are_valid_and_distinct():
    homs = enumerate_homs(catalog.twogroup("B2"), catalog.twogroup("B2"))
    assert len({F.table_key() for F in homs}) == len(homs) == 4
    assert all(validate_hom(F).ok for F in homs)


def test_identity_on_b2_has_only_the_trivial_two_morphism():
    # additivity forces c = c + c
    one = identity_mod_hom(catalog.module("B2@Z2"))
    mors = enumerate_two_morphisms(one, one)
    assert [e.component for e in mors] == [{"0": "0"}]


def test_fingerprint_agrees_with_oracle(module_name):
    M = catalog.module(module_name)
    assert invariants_fingerprint(M) == fingerprint(M)


@pytest.mark.parametrize("name", MODULES)
def test_every_module_is_equivalent_to_itself(name):
    M = catalog.module(name)
    w = find_equivalence(M, M)
    assert w is not None
    assert w.validate().ok


def test_quasi_inverse_of_identity():
    w = quasi_inverse(identity_mod_hom(catalog.module("D4@Z4")))
    assert w.validate().ok


def test_fingerprint_mismatch_reports_invariants():
    stats = {}
    assert find_equivalence(catalog.module("D2@Z6"), catalog.module("D3@Z6"), stats=stats) is None
    assert stats["fingerprints"] == ((2, 1, (1, 1)), (3, 1, (1, 1, 1)))


def test_same_fingerprint_without_equivalence():
    # D(Z/4) and D(Z/2 ⊕ Z/2) share the fingerprint but the groups differ
    M = catalog.module("D4@Z4")
    N = biproduct(catalog.module("D2@Z4"), catalog.module("D2@Z4"))[0]
    stats = {}
    assert fingerprint(M) == fingerprint(N)
    assert find_equivalence(M, N, stats=stats) is None
    assert stats["nodes"] > 0


def test_functor_property_witnesses():
    F = catalog.hom("mod2-D4-D2@Z4")
    assert not is_faithful(catalog.hom("mod2-B4-B2@Z4"))
    full = is_full(F)
    assert not full and full.witness == ("0", "2", "i0")
    assert is_faithful(F)
    assert is_essentially_surjective(F)
    assert not is_equivalence(F)
    G = catalog.hom("times2-D2-D4@Z4")
    v = is_essentially_surjective(G)
    assert not v and v.witness == ("1",)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(MODULES), st.sampled_from(MODULES))
def test_equivalence_needs_equal_fingerprints(a, b):
    M, N = catalog.module(a), catalog.module(b)
    if M.ring is not N.ring:
        return
    w = find_equivalence(M, N)
    if w is not None:
        assert fingerprint(M) == fingerprint(N)
        assert w.validate().ok
    if fingerprint(M) != fingerprint(N):
        assert w is None
