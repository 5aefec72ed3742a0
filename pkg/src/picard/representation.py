"""Representations R -> End(M) and the modules they determine."""

from __future__ import annotations

from .errors import MalformedTable, NotEndRing
from .homspace import EndRing, end_ring
from .rmodule import RModule, assemble_module
from .search import SearchBudget
from .tworing import TwoRingHom
from .twogroup import TwoGroupHom

__all__ = ["end_ring", "rep_from_module", "module_from_rep", "action_hom"]


def action_hom(M: RModule, r) -> TwoGroupHom:
    """The endomorphism m ↦ r·m of the carrier, with structure a^r and z_r."""
    A = M.carrier
    return TwoGroupHom(A, A, {m: M.act(r, m) for m in M.objects}, {f: M.ract(r, f) for f in M.morphisms},
                       {(m, n): M.adist[(r, m, n)] for m in M.objects for n in M.objects}, M.zzero[r])


def _zero_components(M: RModule) -> dict:
    """ζ_m: 0·m -> 0, the unique solution of the unit equation at r = 0.

    ζ_m + 1 must equal l⁻¹ ∘ (λ_0·1_m) ∘ (b^{0,0}_m)⁻¹ as maps 0m+0m -> 0+0m.
    """
    R = M.ring
    z = R.unit
    out = {}
    for m in M.objects:
        zm = M.act(z, m)
        want = M.then(M.inv(M.bdist[(z, z, m)]), M.actm(R.lunit[z], M.ident(m)), M.inv(M.lunit[zm]))
        hits = [x for x in M.hom(zm, M.unit) if M.addm(x, M.ident(zm)) == want]
        if len(hits) != 1:
            raise MalformedTable(f"no unique zero component at {m!r}")
        out[m] = hits[0]
    return out


def rep_from_module(M: RModule, budget: SearchBudget | None = None, E: EndRing | None = None) -> TwoRingHom:
    """The representation R -> End(carrier) given by the action of M."""
    R = M.ring
    E = E or end_ring(M.carrier, budget)
    objs = M.objects
    acts = {r: action_hom(M, r) for r in R.objects}
    omap = {r: E.obj_of(F) for r, F in acts.items()}

    def mor(F, G, comp):
        return E.mor_with(F, G, comp)

    mmap = {p: mor(acts[R.src(p)], acts[R.tgt(p)], {m: M.actm(p, M.ident(m)) for m in objs})
            for p in R.morphisms}
    fplus = {(r, s): E.mor_with(acts[R.add(r, s)], E.homs[E.add(omap[r], omap[s])],
                                {m: M.bdist[(r, s, m)] for m in objs})
             for r in R.objects for s in R.objects}
    zeta = _zero_components(M)
    fzero = E.mor_with(acts[R.unit], E.homs[E.unit], zeta)
    fdot = {(r, s): E.mor_with(acts[R.mul(r, s)], E.homs[E.mul(omap[r], omap[s])],
                               {m: M.bassoc[(r, s, m)] for m in objs})
            for r in R.objects for s in R.objects}
    fone = E.mor_with(acts[R.one], E.homs[E.one], {m: M.iunit[m] for m in objs})
    return TwoRingHom(R, E, omap, mmap, fplus, fzero, fdot, fone)


def module_from_rep(F: TwoRingHom) -> RModule:
    """The module structure on the carrier of End(M) determined by F."""
    E = F.cod
    if not isinstance(E, EndRing):
        raise NotEndRing("codomain of the representation is not an endomorphism ring")
    R, A = F.dom, E.over
    homs, mors = E.homs, E.mors
    at = lambda r: homs[F.omap[r]]
    return assemble_module(
        R, A,
        act=lambda r, m: at(r).omap[m],
        actm=lambda p, f: A.comp(mors[F.mmap[p]].component[A.tgt(f)], at(R.src(p)).mmap[f]),
        adist=lambda r, m, n: at(r).fplus[(m, n)],
        bdist=lambda r, s, m: mors[F.fplus[(r, s)]].component[m],
        bassoc=lambda r, s, m: mors[F.fdot[(r, s)]].component[m],
        iunit=lambda m: mors[F.fone].component[m],
        zzero=lambda r: at(r).fzero)
