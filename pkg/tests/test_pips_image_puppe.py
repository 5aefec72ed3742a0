import time

import pytest

from picard import catalog
from picard.constructions import (copip, coroot, factorize, factorize_pl, full_submodule, im1, im1_pl, im2, im2_pl,
                                  omega_pl_inverse, pip, puppe_check, quotient_module, root)
from picard.equivalence import find_equivalence
from picard.errors import BoundaryError, NotClosed
from picard.rmodule import RModMor, identity_mod_hom, validate_mod_hom, validate_mod_two_morphism, validate_module
from picard.twogroup import compose_hom

from oracles import copip_class_count, fingerprint, pip_elements


def test_pip_elements_match_oracle(hom_name):
    F = catalog.hom(hom_name)
    P = pip(F)
    assert sorted(P.module.objects) == sorted(pip_elements(F))
    assert validate_module(P.module).ok
    assert validate_mod_two_morphism(P.sigma).ok


def test_copip_classes_match_oracle(hom_name):
    F = catalog.hom(hom_name)
    P = copip(F)
    assert len(P.module.morphisms) == copip_class_count(F)
    assert validate_module(P.module).ok
    assert validate_mod_two_morphism(P.sigma).ok


def test_pip_of_b_reduction_is_discrete_z2():
    P = pip(catalog.hom("mod2-B4-B2@Z4"))
    assert P.module.objects == ("0", "2")
    assert find_equivalence(P.module, catalog.module("D2@Z4")) is not None


def test_copip_of_doubling_is_b2():
    P = copip(catalog.hom("times2-D2-D4@Z4"))
    assert find_equivalence(P.module, catalog.module("B2@Z4")) is not None


def test_root_of_copip_is_the_image():
    P = copip(catalog.hom("times2-D2-D4@Z4"))
    R = root(P.sigma)
    assert R.module.objects == ("0", "2")
    assert validate_mod_hom(R.map).ok


def test_coroot_of_pip_divides_out_the_pip():
    P = pip(catalog.hom("mod2-B4-B2@Z4"))
    C = coroot(P.sigma)
    assert len(C.module.morphisms) == 2
    assert validate_mod_hom(C.map).ok


def test_root_needs_zero_to_zero():
    F = catalog.hom("id-D2@Z2")
    e = RModMor(F, F, {a: F.cod.ident(a) for a in F.dom.objects})
    with pytest.raises(BoundaryError):
        root(e)


def test_quotient_of_b4_by_two():
    Q, proj = quotient_module(catalog.module("B4@Z4"), [("0", "2")])
    assert len(Q.morphisms) == 2
    assert validate_module(Q).ok
    assert validate_mod_hom(proj).ok


def test_full_submodule_must_be_closed():
    M = catalog.module("D4@Z4")
    S = full_submodule(M, ["0", "2"])
    assert validate_module(S).ok
    with pytest.raises(NotClosed):
        full_submodule(M, ["0", "1"])


# ---------------------------------------------------------------------------
# images


def test_image_modules_validate(hom_name):
    F = catalog.hom(hom_name)
    for X in (im1_pl(F)[0], im2_pl(F), im1(F)[0], im2(F)[0]):
        assert validate_module(X).ok


def test_factorizations_compose_to_f(hom_name):
    F = catalog.hom(hom_name)
    for fac in (factorize_pl(F), factorize(F)):
        assert fac.report.ok, fac.report.summary()
        assert compose_hom(compose_hom(fac.E, fac.Omega), fac.M).table_key() == F.table_key()
        assert all(fac.flags.values())


def test_omega_pl_inverse_is_a_quasi_inverse(hom_name):
    F = catalog.hom(hom_name)
    I1, _ = im1_pl(F)
    I2 = im2_pl(F)
    back, tau = omega_pl_inverse(F, I1, I2)
    assert validate_mod_hom(back).ok
    assert validate_mod_two_morphism(tau).ok
    assert tau.target.table_key() == identity_mod_hom(I2).table_key()


def test_both_halves_of_each_image_agree(hom_name):
    F = catalog.hom(hom_name)
    assert fingerprint(im1_pl(F)[0]) == fingerprint(im2_pl(F))
    assert fingerprint(im1(F)[0]) == fingerprint(im2(F)[0])


def test_image_invariants_of_reduction():
    F = catalog.hom("mod2-D4-D2@Z4")
    # Im¹_pl is the essential image; Im¹ keeps every component of the domain
    assert fingerprint(im1_pl(F)[0]) == fingerprint(F.cod)
    assert fingerprint(im1(F)[0]) == fingerprint(F.dom)


# ---------------------------------------------------------------------------
# exactness


def test_puppe_entries_pass_on_every_catalog_hom(hom_name):
    report = puppe_check(catalog.hom(hom_name))
    assert sorted(report.axioms()) == ["puppe.coker_ker", "puppe.coroot_pip",
                                       "puppe.ker_coker", "puppe.root_copip"]
    assert report.ok, report.summary()


def test_puppe_is_fast_enough():
    start = time.monotonic()
    for name in catalog.hom_names():
        puppe_check(catalog.hom(name))
    assert time.monotonic() - start < 60
