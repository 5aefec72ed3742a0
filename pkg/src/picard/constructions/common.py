"""Shared plumbing for the constructions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from ..errors import BoundaryError
from ..groupoid import FinGroupoid
from ..report import Checker, CheckReport
from ..rmodule import RModHom, RModule, assemble_module, validate_mod_two_morphism, zero_hom
from ..search import SearchBudget, Tracker, enumerate_two_morphisms
from ..tworing import TwoRing
from ..twogroup import TwoGroupMor, assemble_two_group, compose_hom


def module_from_callables(ring: TwoRing, base: FinGroupoid, *, add: Callable, addm: Callable, unit,
                          assoc: Callable, lunit: Callable, runit: Callable, sym: Callable, dual: Callable,
                          eta: Callable, act: Callable, actm: Callable, adist: Callable, bdist: Callable,
                          bassoc: Callable, iunit: Callable, zzero: Callable) -> RModule:
    A = assemble_two_group(base, add=add, addm=addm, unit=unit, assoc=assoc, lunit=lunit, runit=runit,
                           sym=sym, dual=dual, eta=eta)
    return assemble_module(ring, A, act=act, actm=actm, adist=adist, bdist=bdist, bassoc=bassoc,
                           iunit=iunit, zzero=zzero)


def strict_hom(M: RModule, N: RModule, omap: Mapping, mmap: Mapping) -> RModHom:
    """A hom whose structure components are all identities."""
    objs, ro = M.objects, M.ring.objects
    return RModHom(M, N, dict(omap), dict(mmap),
                   {(a, b): N.ident(omap[M.add(a, b)]) for a in objs for b in objs},
                   N.ident(omap[M.unit]),
                   {(r, m): N.ident(omap[M.act(r, m)]) for r in ro for m in objs})


def same_tables(F, G) -> bool:
    return F.table_key() == G.table_key()


def require_boundary(phi: TwoGroupMor, source: RModHom, target: RModHom, what: str) -> None:
    if not (same_tables(phi.source, source) and same_tables(phi.target, target)):
        raise BoundaryError(f"2-morphism does not have the boundary {what}")


def require_zero_to_zero(alpha: TwoGroupMor) -> None:
    Z = zero_hom(alpha.source.dom, alpha.source.cod)
    require_boundary(alpha, Z, Z, "0 => 0")


def composite(*homs):
    """Diagrammatic composite: composite(F, G, H) = H∘G∘F."""
    out = homs[0]
    for G in homs[1:]:
        out = compose_hom(out, G)
    return out


@dataclass(frozen=True, eq=False)
class Factoring:
    """A factorization (G′, φ′) through a (co)kernel, with its checks.

    ``psi(G2, phi2)`` builds the comparison 2-morphism to another
    factorization and reports whether it is valid and unique.
    """

    hom: RModHom
    mor: TwoGroupMor
    report: CheckReport
    _psi: Callable

    def psi(self, other_hom: RModHom, other_mor: TwoGroupMor) -> tuple[TwoGroupMor, CheckReport]:
        return self._psi(other_hom, other_mor)


def unique_psi(ck: Checker, psi: TwoGroupMor, source: RModHom, target: RModHom,
               condition: Callable[[TwoGroupMor], bool], budget: SearchBudget | None) -> None:
    """Check psi is valid, satisfies ``condition`` and is the only such 2-morphism."""
    ck.extend(validate_mod_two_morphism(psi), "psi.")
    ck.run("psi.condition", [()], lambda: condition(psi))
    hits = [e for e in enumerate_two_morphisms(source, target, Tracker(budget)) if condition(e)]
    ck.run("psi.unique", [()], lambda: len(hits) == 1 and hits[0].component == psi.component)
