import pytest

from picard import catalog
from picard.errors import NotEndRing
from picard.homspace import end_ring
from picard.representation import action_hom, module_from_rep, rep_from_module
from picard.rmodule import validate_module
from picard.tworing import validate_ring_hom, validate_two_ring
from picard.twogroup import validate_hom

from oracles import additive_endomaps


def scalar_of(E, x):
    """The endomorphism behind object x of End(D(Z/n)) is multiplication by its value at 1."""
    return int(E.homs[x].omap["1"])


@pytest.mark.parametrize("n", [2, 3])
def test_end_ring_of_discrete_cyclic_is_zn(n):
    E = end_ring(catalog.twogroup(f"D{n}"))
    assert validate_two_ring(E).ok
    maps = additive_endomaps(n)
    assert len(E.objects) == len(maps)
    # each object is one of the oracle maps, and every oracle map occurs once
    seen = sorted(tuple(int(E.homs[x].omap[str(i)]) for i in range(n)) for x in E.objects)
    assert seen == sorted(maps)
    assert all(E.base.is_identity(f) for f in E.morphisms)
    k = {x: scalar_of(E, x) for x in E.objects}
    assert k[E.unit] == 0 and k[E.one] == 1
    for x in E.objects:
        for y in E.objects:
            assert k[E.add(x, y)] == (k[x] + k[y]) % n
            assert k[E.mul(x, y)] == (k[x] * k[y]) % n


def test_end_ring_of_b2_has_four_objects():
    E = end_ring(catalog.twogroup("B2"))
    assert (len(E.objects), len(E.morphisms)) == (4, 8)
    assert validate_two_ring(E).ok


@pytest.mark.parametrize("name", catalog.module_names())
def test_action_homs_are_homs(name):
    M = catalog.module(name)
    for r in M.ring.objects:
        assert validate_hom(action_hom(M, r)).ok


@pytest.mark.parametrize("name", catalog.module_names())
def test_rep_round_trip_is_table_identity(name):
    M = catalog.module(name)
    rep = rep_from_module(M)
    assert validate_ring_hom(rep).ok
    back = module_from_rep(rep)
    assert validate_module(back).ok
    assert back == M


def test_module_from_rep_needs_an_end_ring():
    from picard.tworing import TwoRingHom
    from picard.twogroup import identity_hom
    R = catalog.ring("Z2")
    ident = identity_hom(R)
    F = TwoRingHom(R, R, ident.omap, ident.mmap, ident.fplus, ident.fzero,
                   {(r, s): R.ident(R.mul(r, s)) for r in R.objects for s in R.objects}, R.ident(R.one))
    with pytest.raises(NotEndRing):
        module_from_rep(F)
