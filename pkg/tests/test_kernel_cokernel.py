import pytest

from picard import catalog
from picard.constructions import cokernel, cokernel_factor, kernel, kernel_factor
from picard.equivalence import find_equivalence
from picard.errors import BoundaryError
from picard.rmodule import RModMor, biproduct, identity_mod_hom, validate_mod_hom, validate_mod_two_morphism, \
    validate_module, zero_hom
from picard.twogroup import compose_hom

from oracles import cokernel_class_counts, fingerprint, group_kernel_size, kernel_pairs
from probes import cokernel_competitors, cokernel_probes, kernel_competitors, kernel_probes


def test_kernel_objects_match_oracle(hom_name):
    F = catalog.hom(hom_name)
    K = kernel(F)
    assert sorted(K.ker.objects) == sorted(kernel_pairs(F))


def test_kernel_is_a_module_with_valid_e_and_eps(hom_name):
    K = kernel(catalog.hom(hom_name))
    assert validate_module(K.ker).ok
    assert validate_mod_hom(K.e).ok
    assert validate_mod_two_morphism(K.eps).ok


def test_kernel_of_reduction_mod_two():
    F = catalog.hom("mod2-D4-D2@Z4")
    K = kernel(F)
    assert len(K.ker.objects) == group_kernel_size(4, 2, lambda g: g) == 2
    assert find_equivalence(K.ker, catalog.module("D2@Z4")) is not None


def test_cokernel_morphisms_match_oracle(hom_name):
    F = catalog.hom(hom_name)
    C = cokernel(F)
    counts = cokernel_class_counts(F)
    for (b1, b2), n in counts.items():
        assert len(C.coker.hom(b1, b2)) == n


def test_cokernel_is_a_module_with_valid_p_and_pi(hom_name):
    C = cokernel(catalog.hom(hom_name))
    assert validate_module(C.coker).ok
    assert validate_mod_hom(C.p).ok
    assert validate_mod_two_morphism(C.pi).ok


def test_cokernel_of_doubling():
    C = cokernel(catalog.hom("times2-D2-D4@Z4"))
    assert find_equivalence(C.coker, catalog.module("D2@Z4")) is not None


def test_cokernel_of_zero_map_is_a_biproduct():
    C = cokernel(catalog.hom("zero-D2-D3@Z6"))
    target = biproduct(catalog.module("D3@Z6"), catalog.module("B2@Z6"))[0]
    assert find_equivalence(C.coker, target) is not None


def test_kernel_and_cokernel_of_identity_are_trivial():
    F = catalog.hom("id-D2@Z2")
    zero = catalog.module("D1@Z2")
    assert find_equivalence(kernel(F).ker, zero) is not None
    assert find_equivalence(cokernel(F).coker, zero) is not None


def test_kernel_of_b_reduction_is_connected():
    K = kernel(catalog.hom("mod2-B4-B2@Z4"))
    # odd elements of Z/4 join the two labels; automorphisms are the kernel {0, 2}
    assert fingerprint(K.ker) == (1, 2, (2,))
    assert find_equivalence(K.ker, catalog.module("B2@Z4")) is not None


@pytest.mark.parametrize("name", ["mod2-D4-D2@Z4", "mod2-B4-B2@Z4", "zero-D2-D3@Z6"])
def test_kernel_factorizations_are_unique(name):
    F = catalog.hom(name)
    K = kernel(F)
    for probe in kernel_probes(F, 12):
        fac = kernel_factor(K, probe.G, probe.phi)
        assert fac.report.ok, fac.report.summary()
        assert compose_hom(fac.hom, K.e).table_key() == probe.G.table_key()
        competitors = kernel_competitors(K, probe.G, probe.phi)
        assert competitors
        for G2, phi2 in competitors:
            psi, report = fac.psi(G2, phi2)
            assert report.ok, report.summary()


@pytest.mark.parametrize("name", ["times2-D2-D4@Z4", "mod2-D4-D2@Z4", "id-B2@Z2"])
def test_cokernel_factorizations_are_unique(name):
    F = catalog.hom(name)
    C = cokernel(F)
    for probe in cokernel_probes(F, 12):
        fac = cokernel_factor(C, probe.G, probe.phi)
        assert fac.report.ok, fac.report.summary()
        assert compose_hom(C.p, fac.hom).table_key() == probe.G.table_key()
        for G2, phi2 in cokernel_competitors(C, probe.G, probe.phi):
            psi, report = fac.psi(G2, phi2)
            assert report.ok, report.summary()


def test_factoring_rejects_wrong_boundary():
    F = catalog.hom("mod2-D4-D2@Z4")
    K = kernel(F)
    G = identity_mod_hom(F.dom)
    wrong = RModMor(G, G, {a: F.dom.ident(a) for a in F.dom.objects})
    with pytest.raises(BoundaryError):
        kernel_factor(K, G, wrong)
    C = cokernel(F)
    Z = zero_hom(F.dom, F.cod)
    with pytest.raises(BoundaryError):
        cokernel_factor(C, identity_mod_hom(F.cod),
                        RModMor(Z, Z, {a: F.cod.ident(F.cod.unit) for a in F.dom.objects}))
