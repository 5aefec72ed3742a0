from dataclasses import replace
from itertools import product

import pytest

from picard import catalog
from picard.errors import NotAModule, NotARing, RingMismatch
from picard.homspace import add_homs
from picard.rmodule import (RModHom, RModMor, biproduct, build_deloop_module, build_discrete_module,
                            hom_two_group, identity_mod_hom, validate_mod_hom, validate_mod_two_morphism,
                            validate_module, zero_hom)
from picard.tworing import RingTable, build_discrete_ring, cyclic_ring, validate_two_ring
from picard.twogroup import compose_hom, cyclic, validate_two_group

from oracles import fingerprint


@pytest.mark.parametrize("name", catalog.ring_names())
def test_catalog_rings_validate(name):
    report = validate_two_ring(catalog.ring(name))
    assert report.ok, report.summary()


def test_non_distributive_multiplication_is_not_a_ring():
    R = cyclic_ring(4)
    mul = dict(R.mul)
    mul[("1", "1")] = "3"
    with pytest.raises(NotARing):
        build_discrete_ring(RingTable(R.group, mul, R.one))


def test_rewired_ring_multiplication_fails_bifunctor():
    R = catalog.ring("Z4")
    mm = dict(R.mult_mor)
    mm[("i1", "i1")] = "i3"
    report = validate_two_ring(replace(R, mult_mor=mm))
    assert not report.entry("ring.mult.bifunctor").passed
    assert report.entry("twogroup.pentagon").passed


def test_module_catalog_validates(module_name):
    report = validate_module(catalog.module(module_name))
    assert report.ok, report.summary()


def test_z4_is_not_a_module_over_z2():
    R = catalog.ring("Z2")
    act = {(r, m): str(int(r) * int(m) % 4) for r in R.objects for m in map(str, range(4))}
    with pytest.raises(NotAModule):
        build_discrete_module(R, cyclic(4), act)
    with pytest.raises(NotAModule):
        build_deloop_module(R, cyclic(4), act)


def test_unknown_catalog_names():
    for bad in ("D5", "Z3", "D4@Z2", "mod3", "B8@Z4"):
        with pytest.raises(KeyError):
            catalog.get(bad)
    assert len(catalog.names()) == len(set(catalog.names()))


def test_catalog_homs_validate(hom_name):
    report = validate_mod_hom(catalog.hom(hom_name))
    assert report.ok, report.summary()


def test_hom_composition_across_rings_is_refused():
    with pytest.raises(RingMismatch):
        validate_mod_hom(zero_hom(catalog.module("D2@Z2"), catalog.module("D2@Z4")))


# ---------------------------------------------------------------------------
# biproducts


PAIRS = [("D2@Z4", "D4@Z4"), ("B2@Z4", "D2@Z4"), ("D2@Z6", "D3@Z6"), ("B2@Z2", "B2@Z2")]


def tables(F):
    return F.table_key()


@pytest.mark.parametrize("left,right", PAIRS)
def test_biproduct_identities_hold_table_for_table(left, right):
    M, N = catalog.module(left), catalog.module(right)
    P, p1, p2, i1, i2 = biproduct(M, N)
    assert validate_module(P).ok
    for F in (p1, p2, i1, i2):
        assert validate_mod_hom(F).ok
    assert tables(compose_hom(i1, p1)) == tables(identity_mod_hom(M))
    assert tables(compose_hom(i2, p2)) == tables(identity_mod_hom(N))
    assert tables(compose_hom(i1, p2)) == tables(zero_hom(M, N))
    assert tables(compose_hom(i2, p1)) == tables(zero_hom(N, M))
    # i1p1 + i2p2 is the identity, coherence components included
    total = add_homs(compose_hom(p1, i1), compose_hom(p2, i2))
    assert tables(total) == tables(identity_mod_hom(P))


def test_biproduct_counts_multiply():
    P = biproduct(catalog.module("D2@Z6"), catalog.module("D3@Z6"))[0]
    assert (len(P.objects), len(P.morphisms)) == (6, 6)
    Q = biproduct(catalog.module("B2@Z4"), catalog.module("D4@Z4"))[0]
    assert (len(Q.objects), len(Q.morphisms)) == (4, 8)
    assert fingerprint(Q) == (4, 2, (2, 2, 2, 2))


# ---------------------------------------------------------------------------
# hom 2-groups against brute force


def brute_force_b2_homs():
    """Every candidate table B2 -> B2 over Z2, kept when the validator accepts it."""
    M = catalog.module("B2@Z2")
    z2 = ("0", "1")
    homs = []
    for g1, fp, fz, t0, t1 in product(z2, repeat=5):
        F = RModHom(M, M, {"0": "0"}, {"0": "0", "1": g1}, {("0", "0"): fp}, fz,
                    {("0", "0"): t0, ("1", "0"): t1})
        if validate_mod_hom(F).ok:
            homs.append(F)
    mors = 0
    for F in homs:
        for G in homs:
            for c in z2:
                if validate_mod_two_morphism(RModMor(F, G, {"0": c})).ok:
                    mors += 1
    return homs, mors


def test_hom_two_group_of_b2_over_z2_matches_brute_force():
    homs, mors = brute_force_b2_homs()
    assert (len(homs), mors) == (4, 8)
    H = hom_two_group(catalog.module("B2@Z2"), catalog.module("B2@Z2"))
    assert (len(H.objects), len(H.morphisms)) == (4, 8)
    assert validate_two_group(H).ok
