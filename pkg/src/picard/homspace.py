"""Hom 2-groups and endomorphism 2-rings, built from exhaustive enumeration.

Objects of a hom space are the homs themselves, numbered ``"0", "1", ...`` in
canonical order; morphisms are triples ``(i, j, k)``, the k-th 2-morphism from
hom i to hom j.  Addition is pointwise in the codomain.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from .errors import MalformedTable
from .groupoid import FinGroupoid
from .search import SearchBudget, Tracker, enumerate_homs, enumerate_two_morphisms
from .tworing import TwoRing
from .twogroup import (SymTwoGroup, TwoGroupHom, TwoGroupMor, assemble_two_group, compose_hom, identity_hom,
                       interchange, vcomp)


def _key(e: TwoGroupMor) -> frozenset:
    return frozenset(e.component.items())


def add_homs(F: TwoGroupHom, G: TwoGroupHom) -> TwoGroupHom:
    """Pointwise sum F+G, with (F+G)₊ through the interchange of the codomain."""
    A, B = F.dom, F.cod
    objs = A.objects
    om = {a: B.add(F.omap[a], G.omap[a]) for a in objs}
    mm = {f: B.addm(F.mmap[f], G.mmap[f]) for f in A.morphisms}
    fp = {(a, b): B.then(B.addm(F.fplus[(a, b)], G.fplus[(a, b)]),
                         interchange(B, F.omap[a], F.omap[b], G.omap[a], G.omap[b]))
          for a in objs for b in objs}
    fz = B.then(B.addm(F.fzero, G.fzero), B.lunit[B.unit])
    from .rmodule import RModHom
    if isinstance(F, RModHom) and isinstance(G, RModHom):
        ftwo = {(r, m): B.then(B.addm(F.ftwo[(r, m)], G.ftwo[(r, m)]),
                               B.inv(B.adist[(r, F.omap[m], G.omap[m])]))
                for r in A.ring.objects for m in objs}
        return RModHom(A, B, om, mm, fp, fz, ftwo)
    return TwoGroupHom(A, B, om, mm, fp, fz)


def add_mors(e1: TwoGroupMor, e2: TwoGroupMor) -> TwoGroupMor:
    B = e1.source.cod
    return type(e1)(add_homs(e1.source, e2.source), add_homs(e1.target, e2.target),
                    {a: B.addm(e1.component[a], e2.component[a]) for a in e1.component})


@dataclass(frozen=True, eq=False)
class HomSpace:
    group: SymTwoGroup
    homs: Mapping      # object id -> hom
    mors: Mapping      # morphism id -> 2-morphism
    index: Mapping     # hom table key -> object id
    mor_index: Mapping  # (src id, tgt id, component key) -> morphism id

    def obj_of(self, F: TwoGroupHom):
        try:
            return self.index[F.table_key()]
        except KeyError:
            raise MalformedTable("hom is not among the enumerated homs") from None

    def mor_of(self, e: TwoGroupMor):
        try:
            return self.mor_index[(self.obj_of(e.source), self.obj_of(e.target), _key(e))]
        except KeyError:
            raise MalformedTable("2-morphism is not among the enumerated 2-morphisms") from None

    def mor_with(self, F: TwoGroupHom, G: TwoGroupHom, component: Mapping):
        return self.mor_index[(self.obj_of(F), self.obj_of(G), frozenset(component.items()))]


def build_hom_space(homs: list, zero: TwoGroupHom, budget: SearchBudget | None = None) -> HomSpace:
    tracker = Tracker(budget)
    ids = [str(i) for i in range(len(homs))]
    homd = dict(zip(ids, homs))
    index = {F.table_key(): i for i, F in homd.items()}
    mors, mindex = {}, {}
    for i in ids:
        for j in ids:
            for k, e in enumerate(enumerate_two_morphisms(homd[i], homd[j], tracker)):
                m = (i, j, str(k))
                mors[m] = e
                mindex[(i, j, _key(e))] = m

    def compose(g, f):
        return mindex[(f[0], g[1], _key(vcomp(mors[f], mors[g])))]

    base = FinGroupoid.tabulate(ids, {m: (m[0], m[1]) for m in mors}, compose)
    space = HomSpace(None, homd, mors, index, mindex)
    B = zero.cod
    dom_objs = zero.dom.objects

    sums = {(i, j): space.obj_of(add_homs(homd[i], homd[j])) for i in ids for j in ids}
    unit = space.obj_of(zero)

    def at(i, j, fn):
        """Morphism i => j with component fn(a) at each object a of the domain."""
        return mindex[(i, j, frozenset((a, fn(a)) for a in dom_objs))]

    def add(i, j):
        return sums[(i, j)]

    def addm(f, g):
        e1, e2 = mors[f], mors[g]
        return at(add(f[0], g[0]), add(f[1], g[1]), lambda a: B.addm(e1.component[a], e2.component[a]))

    def assoc(i, j, k):
        F, G, H = homd[i], homd[j], homd[k]
        return at(add(add(i, j), k), add(i, add(j, k)), lambda a: B.assoc[(F.omap[a], G.omap[a], H.omap[a])])

    def lunit(i):
        F = homd[i]
        return at(add(unit, i), i, lambda a: B.lunit[F.omap[a]])

    def runit(i):
        F = homd[i]
        return at(add(i, unit), i, lambda a: B.runit[F.omap[a]])

    def sym(i, j):
        F, G = homd[i], homd[j]
        return at(add(i, j), add(j, i), lambda a: B.sym[(F.omap[a], G.omap[a])])

    duals = {}
    for i in ids:
        for j in ids:
            loops = base.hom(add(j, i), unit)
            if loops:
                duals[i] = (j, loops[0])
                break
        else:
            raise MalformedTable(f"hom {i} has no additive inverse among the enumerated homs")

    group = assemble_two_group(base, add=add, addm=addm, unit=unit, assoc=assoc, lunit=lunit, runit=runit,
                               sym=sym, dual=lambda i: duals[i][0], eta=lambda i: duals[i][1])
    return HomSpace(group, homd, mors, index, mindex)


def two_group_hom_space(A: SymTwoGroup, B: SymTwoGroup, budget: SearchBudget | None = None) -> HomSpace:
    A, B = A.carrier, B.carrier
    homs = enumerate_homs(A, B, budget, module=False)
    u = B.unit
    zero = TwoGroupHom(A, B, {a: u for a in A.objects}, {f: B.ident(u) for f in A.morphisms},
                       {(a, b): B.inv(B.lunit[u]) for a in A.objects for b in A.objects}, B.ident(u))
    return build_hom_space(homs, zero, budget)


def module_hom_space(M, N, budget: SearchBudget | None = None) -> HomSpace:
    from .rmodule import zero_hom
    zero = zero_hom(M, N)
    homs = enumerate_homs(M, N, budget, module=True)
    return build_hom_space(homs, zero, budget)


# ---------------------------------------------------------------------------
# End(A)


@dataclass(frozen=True, eq=False)
class EndRing(TwoRing):
    """End(A) together with the hom tables behind each object and morphism."""

    over: SymTwoGroup
    homs: Mapping
    mors: Mapping

    @cached_property
    def _index(self) -> dict:
        return {F.table_key(): i for i, F in self.homs.items()}

    @cached_property
    def _mor_index(self) -> dict:
        return {(m[0], m[1], _key(e)): m for m, e in self.mors.items()}

    def obj_of(self, F: TwoGroupHom):
        try:
            return self._index[F.table_key()]
        except KeyError:
            raise MalformedTable("hom is not an object of this endomorphism ring") from None

    def mor_with(self, F: TwoGroupHom, G: TwoGroupHom, component: Mapping):
        try:
            return self._mor_index[(self.obj_of(F), self.obj_of(G), frozenset(component.items()))]
        except KeyError:
            raise MalformedTable("2-morphism is not a morphism of this endomorphism ring") from None


def end_ring(A: SymTwoGroup, budget: SearchBudget | None = None) -> EndRing:
    A = A.carrier
    space = two_group_hom_space(A, A, budget)
    S = space.group
    homs, mors = space.homs, space.mors

    products = {(i, j): space.obj_of(compose_hom(homs[j], homs[i])) for i in S.objects for j in S.objects}

    def mul(i, j):
        return products[(i, j)]

    def mulm(t, s):
        # τ·τ′ is the horizontal composite τ′ then τ (see hcomp)
        tau, tau2 = mors[t], mors[s]
        F, G2 = tau.source, tau2.target
        comp = frozenset((a, A.comp(tau.component[G2.omap[a]], F.mmap[tau2.component[a]])) for a in A.objects)
        return space.mor_index[(mul(t[0], s[0]), mul(t[1], s[1]), comp)]

    def ldist(i, j, k):
        F, G, G2 = homs[i], homs[j], homs[k]
        comp = frozenset((a, F.fplus[(G.omap[a], G2.omap[a])]) for a in A.objects)
        return space.mor_index[(mul(i, S.add(j, k)), S.add(mul(i, j), mul(i, k)), comp)]

    objs, mrs = S.objects, S.morphisms
    trip = [(a, b, c) for a in objs for b in objs for c in objs]
    return EndRing(
        S.base, S.tensor_obj, S.tensor_mor, S.unit, S.assoc, S.lunit, S.runit, S.sym, S.dual, S.eta,
        {(a, b): mul(a, b) for a in objs for b in objs},
        {(f, g): mulm(f, g) for f in mrs for g in mrs},
        space.obj_of(identity_hom(A)),
        {t: S.ident(mul(mul(t[0], t[1]), t[2])) for t in trip},
        {a: S.ident(a) for a in objs},
        {a: S.ident(a) for a in objs},
        {t: ldist(*t) for t in trip},
        {t: S.ident(mul(S.add(t[0], t[1]), t[2])) for t in trip},
        A, homs, mors,
    )
