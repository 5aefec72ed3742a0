from dataclasses import replace

import pytest
from hypothesis import given, settings, strategies as st

from picard import catalog
from picard.errors import DomainMismatch, NotAGroup
from picard.twogroup import (GroupTable, TwoGroupHom, TwoGroupMor, build_deloop, build_discrete, compose_hom,
                             cyclic, direct_sum, discrete_morphism, hcomp, identity_hom, identity_mor, interchange,
                             interchange_alt, inverse_mor, validate_hom, validate_two_group, validate_two_morphism,
                             vcomp)


def reduce_hom(n, k):
    """D(Z/n) -> D(Z/k), x ↦ x mod k, strict."""
    A, B = build_discrete(cyclic(n)), build_discrete(cyclic(k))
    om = {a: str(int(a) % k) for a in A.objects}
    return TwoGroupHom(A, B, om, {discrete_morphism(a): discrete_morphism(om[a]) for a in A.objects},
                       {(a, b): discrete_morphism(om[A.add(a, b)]) for a in A.objects for b in A.objects},
                       discrete_morphism("0"))


@pytest.mark.parametrize("name", catalog.twogroup_names())
def test_catalog_two_groups_validate(name):
    report = validate_two_group(catalog.twogroup(name))
    assert report.ok, report.summary()


def test_discrete_and_deloop_sizes():
    D, B = build_discrete(cyclic(3)), build_deloop(cyclic(4))
    assert (len(D.objects), len(D.morphisms)) == (3, 3)
    assert (len(B.objects), len(B.morphisms)) == (1, 4)


def test_non_abelian_table_is_rejected():
    # S3 as permutations of "abc"; the group is closed, unital, invertible but not commutative
    from itertools import permutations
    els = ["".join(p) for p in permutations("abc")]

    def comp(p, q):
        return "".join(p["abc".index(c)] for c in q)
    T = GroupTable(tuple(els), {(p, q): comp(p, q) for p in els for q in els})
    with pytest.raises(NotAGroup) as info:
        build_discrete(T)
    assert info.value.code == "NOT_ABELIAN"


def test_missing_inverse_is_not_a_group():
    T = GroupTable(("0", "1"), {("0", "0"): "0", ("0", "1"): "1", ("1", "0"): "1", ("1", "1"): "1"})
    with pytest.raises(NotAGroup) as info:
        build_deloop(T)
    assert info.value.code == "NOT_GROUP"


def test_direct_sum_is_the_product_group():
    T = direct_sum(cyclic(2), cyclic(3))
    assert len(T.elements) == 6
    assert validate_two_group(build_discrete(T)).ok


def test_flipped_symmetry_on_b2_breaks_the_hexagon_only():
    B = build_deloop(cyclic(2))
    bad = replace(B, sym={k: "1" for k in B.sym})
    report = validate_two_group(bad)
    assert report.entry("twogroup.sym.involution").passed
    assert not report.entry("twogroup.hexagon").passed
    a, b, c = report.entry("twogroup.hexagon").witness
    assert (a, b, c) == ("0", "0", "0")


def test_identity_hom_and_zero_component_mor():
    B = build_deloop(cyclic(2))
    one = identity_hom(B)
    assert validate_hom(one).ok
    assert validate_two_morphism(identity_mor(one)).ok
    bad = TwoGroupMor(one, one, {"0": "1"})
    report = validate_two_morphism(bad)
    assert report.entry("mor.natural").passed
    assert not report.entry("mor.additive").passed
    assert report.entry("mor.additive").witness == ("0", "0")


def test_shifted_object_map_fails_unit_typing():
    F = reduce_hom(4, 4)
    om = {a: str((int(a) + 1) % 4) for a in F.dom.objects}
    bad = TwoGroupHom(F.dom, F.cod, om, {discrete_morphism(a): discrete_morphism(om[a]) for a in om},
                      F.fplus, F.fzero)
    report = validate_hom(bad)
    assert not report.ok
    assert not report.entry("hom.fzero.typing").passed
    assert not report.entry("hom.fplus.typing").passed


def test_reduction_composites_agree_with_direct_reduction():
    via = compose_hom(reduce_hom(8, 4), reduce_hom(4, 2))
    direct = reduce_hom(8, 2)
    assert validate_hom(via).ok
    assert via.table_key() == direct.table_key()


def test_composition_needs_matching_ends():
    with pytest.raises(DomainMismatch):
        compose_hom(reduce_hom(4, 2), reduce_hom(4, 2))


@pytest.mark.parametrize("name", catalog.twogroup_names())
def test_interchange_forms_agree(name):
    A = catalog.twogroup(name)
    objs = A.objects
    for a in objs:
        for b in objs:
            for c in objs:
                for d in objs:
                    assert interchange(A, a, b, c, d) == interchange_alt(A, a, b, c, d)


# ---------------------------------------------------------------------------
# 2-category laws on generated 2-morphisms of B(Z/4)


B4 = build_deloop(cyclic(4))


def scalar_hom(k, d=0):
    """B(Z/4) -> B(Z/4), g ↦ k·g, with constant coherence F₊ = d and F₀ = -d."""
    return TwoGroupHom(B4, B4, {"0": "0"}, {g: str(k * int(g) % 4) for g in B4.morphisms},
                       {("0", "0"): str(d % 4)}, str(-d % 4))


def mor_at(k, d, d2):
    """The unique 2-morphism (k, d) => (k, d2); its component is d2 - d."""
    return TwoGroupMor(scalar_hom(k, d), scalar_hom(k, d2), {"0": str((d2 - d) % 4)})


scalars = st.integers(0, 3)
mors = st.tuples(scalars, scalars, scalars).map(lambda t: mor_at(*t))


@given(scalars, scalars)
def test_constant_coherence_homs_are_valid(k, d):
    assert validate_hom(scalar_hom(k, d)).ok


@given(scalars, scalars, scalars)
def test_generated_two_morphisms_are_valid(k, d, d2):
    assert validate_two_morphism(mor_at(k, d, d2)).ok


def test_two_morphisms_need_equal_scalars_and_forced_components():
    assert not validate_two_morphism(TwoGroupMor(scalar_hom(0), scalar_hom(1), {"0": "0"})).ok
    assert not validate_two_morphism(TwoGroupMor(scalar_hom(1), scalar_hom(1), {"0": "1"})).ok


@settings(max_examples=40)
@given(st.tuples(scalars, scalars, scalars, scalars), st.tuples(scalars, scalars, scalars, scalars))
def test_exchange_law(left, right):
    f, x, x2, x3 = left
    g, y, y2, y3 = right
    a1, a2 = mor_at(f, x, x2), mor_at(f, x2, x3)
    b1, b2 = mor_at(g, y, y2), mor_at(g, y2, y3)
    lhs = hcomp(vcomp(a1, a2), vcomp(b1, b2))
    rhs = vcomp(hcomp(a1, b1), hcomp(a2, b2))
    assert lhs.component == rhs.component
    assert lhs.source.table_key() == rhs.source.table_key()
    assert validate_two_morphism(lhs).ok


@given(mors, scalars, scalars)
def test_vertical_associativity_and_units(e, d3, d4):
    k, d2 = int(e.source.mmap["1"]), int(e.target.fplus[("0", "0")])
    e2, e3 = mor_at(k, d2, d3), mor_at(k, d3, d4)
    assert vcomp(vcomp(e, e2), e3).component == vcomp(e, vcomp(e2, e3)).component
    assert vcomp(identity_mor(e.source), e).component == e.component
    assert vcomp(e, identity_mor(e.target)).component == e.component
    assert vcomp(e, inverse_mor(e)).component == identity_mor(e.source).component


@given(mors, mors, mors)
def test_horizontal_associativity_and_units(a, b, c):
    lhs = hcomp(hcomp(a, b), c)
    rhs = hcomp(a, hcomp(b, c))
    assert lhs.component == rhs.component
    assert lhs.source.table_key() == rhs.source.table_key()
    unit = identity_mor(identity_hom(B4))
    assert hcomp(unit, a).component == a.component
    assert hcomp(a, unit).component == a.component
