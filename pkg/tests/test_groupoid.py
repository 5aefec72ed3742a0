import pytest

from picard.errors import NotParallel
from picard.groupoid import (FinGroupoid, MorRelation, is_groupoid_isomorphism, product, quotient_morphisms,
                             validate_groupoid)
from picard.twogroup import build_deloop, build_discrete, cyclic


def deloop(n):
    return build_deloop(cyclic(n)).base


def discrete(n):
    return build_discrete(cyclic(n)).base


def rewired(G, key, value):
    comp = dict(G.comp)
    comp[key] = value
    return FinGroupoid(G.objects, G.src, G.tgt, G.id_of, comp, G.inv)


def test_discrete_z2_passes():
    G = discrete(2)
    assert (len(G.objects), len(G.morphisms)) == (2, 2)
    assert validate_groupoid(G).ok


def test_deloop_z4_passes_and_associativity_table_is_complete():
    G = deloop(4)
    assert len(G.comp) == 16
    report = validate_groupoid(G)
    assert report.ok
    assert report.entry("groupoid.associativity").passed


def test_rewired_composite_fails_associativity_with_triple():
    G = rewired(deloop(4), ("1", "1"), "3")
    report = validate_groupoid(G)
    entry = report.entry("groupoid.associativity")
    assert not entry.passed
    h, g, f = entry.witness
    # the witness is a genuine counterexample in the mutated table
    assert G.comp[(G.comp[(h, g)], f)] != G.comp[(h, G.comp[(g, f)])]


def test_product_of_discrete_groupoids():
    P = product(discrete(2), discrete(3))
    assert (len(P.objects), len(P.morphisms)) == (6, 6)
    assert validate_groupoid(P).ok


def test_product_of_deloops_adds_componentwise():
    P = product(deloop(2), deloop(2))
    assert (len(P.objects), len(P.morphisms)) == (1, 4)
    for (g1, g2), (f1, f2) in P.comp:
        assert P.comp[((g1, g2), (f1, f2))] == (str((int(g1) + int(f1)) % 2), str((int(g2) + int(f2)) % 2))


def test_product_with_zero_is_isomorphic():
    from picard.groupoid import FunctorData
    Z = deloop(1)
    G = deloop(4)
    P = product(Z, G)
    F = FunctorData(P, G, {a: a[1] for a in P.objects}, {f: f[1] for f in P.morphisms})
    assert is_groupoid_isomorphism(F)


def test_product_is_symmetric_up_to_swap():
    from picard.groupoid import FunctorData, validate_functor
    G, H = discrete(2), deloop(3)
    P, Q = product(G, H), product(H, G)
    swap = FunctorData(P, Q, {(a, b): (b, a) for a, b in P.objects}, {(f, g): (g, f) for f, g in P.morphisms})
    assert validate_functor(swap).ok
    assert is_groupoid_isomorphism(swap)


def test_quotient_of_deloop_z4_by_two():
    Q, proj = quotient_morphisms(deloop(4), MorRelation.of([("0", "2")]))
    assert len(Q.morphisms) == 2
    assert validate_groupoid(Q).ok
    for (g, f), h in Q.comp.items():
        assert int(h) % 2 == (int(g) + int(f)) % 2


def test_quotient_by_empty_relation_is_bijective():
    G = deloop(4)
    Q, proj = quotient_morphisms(G, MorRelation.of([]))
    assert is_groupoid_isomorphism(proj)


def test_quotient_requires_parallel_pairs():
    G = discrete(2)
    with pytest.raises(NotParallel):
        quotient_morphisms(G, MorRelation.of([(G.id_of["0"], G.id_of["1"])]))


def test_quotient_composition_is_well_defined():
    G = deloop(4)
    Q, proj = quotient_morphisms(G, MorRelation.of([("0", "2")]))
    rep = proj.mmap
    for (g, f), h in G.comp.items():
        assert Q.comp[(rep[g], rep[f])] == rep[h]
