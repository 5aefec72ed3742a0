"""Pips, copips, roots, coroots and quotient modules."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Iterable

from ..errors import NotClosed
from ..groupoid import DisjointSet, FinGroupoid, congruence_closure, quotient_by
from ..ids import ordered
from ..rmodule import RModHom, RModMor, RModule, build_deloop_module, build_discrete_module, zero_hom
from ..twogroup import GroupTable
from .common import require_zero_to_zero, strict_hom


@dataclass(frozen=True, eq=False)
class PipResult:
    hom: RModHom
    module: RModule
    sigma: RModMor


def pip(F: RModHom) -> PipResult:
    """Endomorphisms a of 0 with Fa = 1, added by composition; σ: 0 => 0 into the domain."""
    M, N = F.dom, F.cod
    R = M.ring
    u = M.unit
    one = N.ident(F.omap[u])
    els = tuple(ordered(a for a in M.hom(u, u) if F.mmap[a] == one))
    T = GroupTable(els, {(a, b): M.comp(a, b) for a in els for b in els})
    act = {(r, a): M.then(M.inv(M.zzero[r]), M.ract(r, a), M.zzero[r]) for r in R.objects for a in els}
    P = build_discrete_module(R, T, act)
    Z = zero_hom(P, M)
    return PipResult(F, P, RModMor(Z, Z, {a: a for a in P.objects}))


COPIP_OBJECT = "*"


def copip(F: RModHom) -> PipResult:
    """One object; morphisms are codomain objects up to B1 ~ B2 when some B1 -> FA + B2 exists."""
    M, N = F.dom, F.cod
    R = M.ring
    ds = DisjointSet(N.objects)
    for B1, B2 in _cartesian(N.objects, N.objects):
        if any(N.hom(B1, N.add(F.omap[A], B2)) for A in M.objects):
            ds.union(B1, B2)
    reps = tuple(ordered({ds.find(b) for b in N.objects}))
    T = GroupTable(reps, {(x, y): ds.find(N.add(x, y)) for x in reps for y in reps})
    act = {(r, x): ds.find(N.act(r, x)) for r in R.objects for x in reps}
    P = build_deloop_module(R, T, act, obj=COPIP_OBJECT)
    Z = zero_hom(N, P)
    return PipResult(F, P, RModMor(Z, Z, {b: ds.find(b) for b in N.objects}))


# ---------------------------------------------------------------------------
# sub-modules and quotients


def full_submodule(M: RModule, keep: Iterable) -> RModule:
    """Full sub-module on ``keep``; raises NOT_CLOSED unless closed under the structure."""
    S = set(keep)
    bad = ([(M.unit,)] if M.unit not in S else []) \
        + [(a, b) for a in S for b in S if M.add(a, b) not in S] \
        + [(a,) for a in S if M.dual[a] not in S] \
        + [(r, a) for r in M.ring.objects for a in S if M.act(r, a) not in S]
    if bad:
        raise NotClosed(f"selected objects are not closed at {bad[0]!r}")
    G = M.base
    objs = tuple(o for o in G.objects if o in S)
    mors = [f for f in G.morphisms if G.src[f] in S and G.tgt[f] in S]
    ms = set(mors)
    base = FinGroupoid(objs, {f: G.src[f] for f in mors}, {f: G.tgt[f] for f in mors},
                       {a: G.id_of[a] for a in objs},
                       {k: v for k, v in G.comp.items() if k[0] in ms and k[1] in ms},
                       {f: G.inv[f] for f in mors})
    pairs = list(_cartesian(objs, objs))
    rmors = M.ring.morphisms
    return RModule(
        base, {k: M.tensor_obj[k] for k in pairs},
        {(f, g): M.tensor_mor[(f, g)] for f in mors for g in mors}, M.unit,
        {k: M.assoc[k] for k in _cartesian(objs, objs, objs)},
        {a: M.lunit[a] for a in objs}, {a: M.runit[a] for a in objs},
        {k: M.sym[k] for k in pairs}, {a: M.dual[a] for a in objs}, {a: M.eta[a] for a in objs},
        M.ring, {(r, a): M.act_obj[(r, a)] for r in M.ring.objects for a in objs},
        {(p, f): M.act_mor[(p, f)] for p in rmors for f in mors},
        {(r, a, b): M.adist[(r, a, b)] for r in M.ring.objects for a, b in pairs},
        {(r, s, a): M.bdist[(r, s, a)] for r in M.ring.objects for s in M.ring.objects for a in objs},
        {(r, s, a): M.bassoc[(r, s, a)] for r in M.ring.objects for s in M.ring.objects for a in objs},
        {a: M.iunit[a] for a in objs}, dict(M.zzero))


def quotient_module(M: RModule, pairs: Iterable[tuple]) -> tuple[RModule, RModHom]:
    """Quotient by the smallest congruence (for ∘, + and the action) containing ``pairs``."""
    G = M.base
    rmors = M.ring.morphisms

    def saturate(ds: DisjointSet) -> bool:
        changed = False
        for f, g in _cartesian(G.morphisms, G.morphisms):
            if ds.union(M.addm(f, g), M.addm(ds.find(f), ds.find(g))):
                changed = True
        for p, f in _cartesian(rmors, G.morphisms):
            if ds.union(M.actm(p, f), M.actm(p, ds.find(f))):
                changed = True
        return changed

    ds = congruence_closure(G, pairs, saturate)
    base, proj = quotient_by(G, ds)
    rep = proj.mmap
    mors = base.morphisms
    objs = base.objects
    Q = RModule(
        base, dict(M.tensor_obj), {(f, g): rep[M.addm(f, g)] for f in mors for g in mors}, M.unit,
        {k: rep[v] for k, v in M.assoc.items()}, {k: rep[v] for k, v in M.lunit.items()},
        {k: rep[v] for k, v in M.runit.items()}, {k: rep[v] for k, v in M.sym.items()},
        dict(M.dual), {k: rep[v] for k, v in M.eta.items()},
        M.ring, dict(M.act_obj), {(p, f): rep[M.actm(p, f)] for p in rmors for f in mors},
        {k: rep[v] for k, v in M.adist.items()}, {k: rep[v] for k, v in M.bdist.items()},
        {k: rep[v] for k, v in M.bassoc.items()}, {k: rep[v] for k, v in M.iunit.items()},
        {k: rep[v] for k, v in M.zzero.items()})
    return Q, strict_hom(M, Q, {a: a for a in objs}, rep)


@dataclass(frozen=True, eq=False)
class RootResult:
    alpha: RModMor
    module: RModule
    map: RModHom


def root(alpha: RModMor) -> RootResult:
    """Full sub-module of the domain on objects a with α_a = 1; R is the inclusion."""
    require_zero_to_zero(alpha)
    P, Q = alpha.source.dom, alpha.source.cod
    one = Q.ident(Q.unit)
    S = full_submodule(P, [a for a in P.objects if alpha.component[a] == one])
    return RootResult(alpha, S, strict_hom(S, P, {a: a for a in S.objects}, {f: f for f in S.morphisms}))


def coroot(alpha: RModMor) -> RootResult:
    """Quotient of the codomain identifying f with r∘(f + α_p)∘r⁻¹; R is the projection."""
    require_zero_to_zero(alpha)
    Q = alpha.source.cod
    twists = ordered(set(alpha.component.values()))
    pairs = []
    for f in Q.morphisms:
        b1, b2 = Q.boundary(f)
        for x in twists:
            pairs.append((f, Q.then(Q.inv(Q.runit[b1]), Q.addm(f, x), Q.runit[b2])))
    C, proj = quotient_module(Q, pairs)
    return RootResult(alpha, C, proj)


def whisker_right(alpha: RModMor, G: RModHom) -> dict:
    """Components of G∗α (G applied to each component of α)."""
    return {a: G.mmap[m] for a, m in alpha.component.items()}


def whisker_left(alpha: RModMor, G: RModHom) -> dict:
    """Components of α∗G (α at the image of G)."""
    return {x: alpha.component[G.omap[x]] for x in G.dom.objects}


__all__ = ["PipResult", "RootResult", "pip", "copip", "root", "coroot", "full_submodule", "quotient_module",
           "whisker_left", "whisker_right", "COPIP_OBJECT"]
