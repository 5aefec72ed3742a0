"""Functor properties, quasi-inverses and equivalence search.

An equivalence is certified by a witness: forth, back, and invertible unit
and counit 2-morphisms, all of which pass their validators.  The search only
tries skeletal candidates: every component of the source goes to the least
object of one component of the target, with identity images along the
chosen paths.  Any equivalence is isomorphic to one of that shape, so the
search is complete.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .errors import MalformedTable
from .ids import least
from .report import Checker, CheckReport
from .rmodule import RModHom, RModMor, RModule, _same_ring, identity_mod_hom, validate_mod_hom, \
    validate_mod_two_morphism
from .search import SearchBudget, Tracker, iter_homs
from .twogroup import (SymTwoGroup, TwoGroupHom, TwoGroupMor, compose_hom, identity_hom, validate_hom,
                       validate_two_morphism)


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.holds


def is_faithful(F: TwoGroupHom) -> Verdict:
    A = F.dom
    for a in A.objects:
        for b in A.objects:
            seen = {}
            for f in A.hom(a, b):
                g = F.mmap[f]
                if g in seen:
                    return Verdict(False, (seen[g], f))
                seen[g] = f
    return Verdict(True)


def is_full(F: TwoGroupHom) -> Verdict:
    A, B = F.dom, F.cod
    for a in A.objects:
        for b in A.objects:
            image = {F.mmap[f] for f in A.hom(a, b)}
            for g in B.hom(F.omap[a], F.omap[b]):
                if g not in image:
                    return Verdict(False, (a, b, g))
    return Verdict(True)


def is_essentially_surjective(F: TwoGroupHom) -> Verdict:
    B = F.cod
    reached = {B.base.component_of[F.omap[a]] for a in F.dom.objects}
    for b in B.objects:
        if B.base.component_of[b] not in reached:
            return Verdict(False, (b,))
    return Verdict(True)


def is_surjective(F: TwoGroupHom) -> Verdict:
    """Surjective on objects."""
    image = set(F.omap.values())
    for b in F.cod.objects:
        if b not in image:
            return Verdict(False, (b,))
    return Verdict(True)


def invariants_fingerprint(M: SymTwoGroup) -> tuple:
    """(π₀ size, |Aut(0)|, sorted automorphism-group sizes per component)."""
    G = M.base
    sizes = sorted(len(G.hom(c[0], c[0])) for c in G.components)
    return (len(G.components), len(G.hom(M.unit, M.unit)), tuple(sizes))


# ---------------------------------------------------------------------------
# witnesses


@dataclass(frozen=True, eq=False)
class EquivalenceWitness:
    forth: TwoGroupHom
    back: TwoGroupHom
    unit: TwoGroupMor    # back∘forth => 1
    counit: TwoGroupMor  # forth∘back => 1

    def validate(self) -> CheckReport:
        ck = Checker()
        module = isinstance(self.forth, RModHom)
        vhom = validate_mod_hom if module else validate_hom
        vmor = validate_mod_two_morphism if module else validate_two_morphism
        ck.extend(vhom(self.forth), "forth.")
        ck.extend(vhom(self.back), "back.")
        ck.extend(vmor(self.unit), "unit.")
        ck.extend(vmor(self.counit), "counit.")
        A, B = self.forth.dom, self.forth.cod
        ck.run("unit.boundary", [()],
               lambda: _same_tables(self.unit.source, compose_hom(self.forth, self.back))
               and _same_tables(self.unit.target, _identity(A, module)))
        ck.run("counit.boundary", [()],
               lambda: _same_tables(self.counit.source, compose_hom(self.back, self.forth))
               and _same_tables(self.counit.target, _identity(B, module)))
        return ck.report()


def _identity(A, module: bool) -> TwoGroupHom:
    return identity_mod_hom(A) if module else identity_hom(A)


def _same_tables(F: TwoGroupHom, G: TwoGroupHom) -> bool:
    return type(F) is type(G) and F.table_key() == G.table_key()


def quasi_inverse(F: TwoGroupHom) -> EquivalenceWitness:
    """Witness for a fully faithful, essentially surjective hom F."""
    for verdict, what in ((is_faithful(F), "faithful"), (is_full(F), "full"),
                          (is_essentially_surjective(F), "essentially surjective")):
        if not verdict:
            raise MalformedTable(f"hom is not {what}: {verdict.witness!r}")
    A, B = F.dom, F.cod
    module = isinstance(F, RModHom)
    back_obj, theta = {}, {}
    for n in B.objects:
        m = least(a for a in A.objects if B.hom(F.omap[a], n))
        back_obj[n] = m
        theta[n] = least(B.hom(F.omap[m], n))
    pre = {}
    for f in A.morphisms:
        pre[(A.src(f), A.tgt(f), F.mmap[f])] = f

    def lift(a, b, g):
        return pre[(a, b, g)]

    th, inv = theta, B.inv
    bmap = {g: lift(back_obj[B.src(g)], back_obj[B.tgt(g)], B.then(th[B.src(g)], g, inv(th[B.tgt(g)])))
            for g in B.morphisms}
    bplus = {}
    for n in B.objects:
        for p in B.objects:
            a, b = back_obj[n], back_obj[p]
            g = B.then(th[B.add(n, p)], B.addm(inv(th[n]), inv(th[p])), inv(F.fplus[(a, b)]))
            bplus[(n, p)] = lift(back_obj[B.add(n, p)], A.add(a, b), g)
    bzero = lift(back_obj[B.unit], A.unit, B.then(th[B.unit], inv(F.fzero)))
    if module:
        R = A.ring
        btwo = {}
        for r in R.objects:
            for n in B.objects:
                a = back_obj[n]
                g = B.then(th[B.act(r, n)], B.ract(r, inv(th[n])), inv(F.ftwo[(r, a)]))
                btwo[(r, n)] = lift(back_obj[B.act(r, n)], A.act(r, a), g)
        back = RModHom(B, A, back_obj, bmap, bplus, bzero, btwo)
    else:
        back = TwoGroupHom(B, A, back_obj, bmap, bplus, bzero)
    cls = RModMor if module else TwoGroupMor
    unit = cls(compose_hom(F, back), _identity(A, module),
               {m: lift(back_obj[F.omap[m]], m, th[F.omap[m]]) for m in A.objects})
    counit = cls(compose_hom(back, F), _identity(B, module), dict(theta))
    return EquivalenceWitness(F, back, unit, counit)


def find_equivalence(M: SymTwoGroup, N: SymTwoGroup, budget: SearchBudget | None = None,
                     stats: dict | None = None) -> EquivalenceWitness | None:
    """Search for an equivalence M ≃ N; None means definitively absent."""
    module = isinstance(M, RModule) and isinstance(N, RModule)
    if module:
        _same_ring(M, N)
    if stats is not None:
        stats.update(fingerprints=(invariants_fingerprint(M), invariants_fingerprint(N)), nodes=0)
    if invariants_fingerprint(M) != invariants_fingerprint(N):
        return None
    tracker = Tracker(budget)
    try:
        for F in iter_homs(M, N, tracker, module=module, skeletal=True, injective=True):
            witness = quasi_inverse(F)
            if not witness.validate().ok:
                raise MalformedTable("quasi-inverse construction failed validation")
            return witness
        return None
    finally:
        if stats is not None:
            stats["nodes"] = tracker.nodes


def is_equivalence(F: TwoGroupHom) -> Verdict:
    for v in (is_faithful(F), is_full(F), is_essentially_surjective(F)):
        if not v:
            return v
    return Verdict(True)


__all__ = ["Verdict", "EquivalenceWitness", "is_faithful", "is_full", "is_essentially_surjective",
           "is_surjective", "is_equivalence", "invariants_fingerprint", "quasi_inverse", "find_equivalence"]
