"""Cokernels of R-homs.

Objects of Coker F are those of the codomain.  A raw morphism B1 -> B2 is a
triple (f, A, B2) with f: B1 -> B2 + FA; two raw morphisms are identified
when (1 + Fα)∘f = f' for some α: A -> A'.  Each class is named by its least
raw member.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ..groupoid import DisjointSet, FinGroupoid
from ..report import Checker
from ..rmodule import RModHom, RModMor, RModule, validate_mod_hom, validate_mod_two_morphism, zero_hom
from ..search import SearchBudget
from ..twogroup import compose_hom, interchange
from .common import Factoring, module_from_callables, require_boundary, strict_hom, unique_psi


@dataclass(frozen=True, eq=False)
class CokernelResult:
    hom: RModHom
    coker: RModule
    p: RModHom
    pi: RModMor
    classes: Mapping  # raw morphism -> class name

    def cls(self, raw):
        return self.classes[raw]


def cokernel(F: RModHom) -> CokernelResult:
    M, N = F.dom, F.cod
    R = M.ring
    then, inv, addm, ident = N.then, N.inv, N.addm, N.ident
    FA = F.omap

    raws = []
    for B1 in N.objects:
        for B2 in N.objects:
            for A in M.objects:
                for f in N.hom(B1, N.add(B2, FA[A])):
                    raws.append((f, A, B2))
    ds = DisjointSet(raws)
    for f, A, B2 in raws:
        for alpha in M.base.out_of(A):
            ds.union((f, A, B2), (then(f, N.id_addm(B2, F.mmap[alpha])), M.tgt(alpha), B2))
    classes = {x: ds.find(x) for x in raws}

    def name(f, A, B2):
        return classes[(f, A, B2)]

    reps = set(classes.values())
    arrows = {x: (N.src(x[0]), x[2]) for x in reps}

    def compose(g, f):
        f1, A1, B2 = f
        f2, A2, B3 = g
        h = then(f1, addm(f2, ident(FA[A1])), N.assoc[(B3, FA[A2], FA[A1])],
                 N.id_addm(B3, inv(F.fplus[(A2, A1)])))
        return name(h, M.add(A2, A1), B3)

    base = FinGroupoid.tabulate(N.objects, arrows, compose)

    def p(g):
        B2 = N.tgt(g)
        return name(then(g, inv(N.runit[B2]), N.id_addm(B2, inv(F.fzero))), M.unit, B2)

    def tensor(x, y):
        (f, A, B2), (g, A2, C2) = x, y
        h = then(addm(f, g), interchange(N, B2, FA[A], C2, FA[A2]),
                 N.id_addm(N.add(B2, C2), inv(F.fplus[(A, A2)])))
        return name(h, M.add(A, A2), N.add(B2, C2))

    def actm(phi, x):
        f, A, B2 = x
        r2 = R.tgt(phi)
        h = then(N.actm(phi, ident(N.src(f))), N.ract(r2, f), N.adist[(r2, B2, FA[A])],
                 N.id_addm(N.act(r2, B2), inv(F.ftwo[(r2, A)])))
        return name(h, M.act(r2, A), N.act(r2, B2))

    C = module_from_callables(
        R, base,
        add=N.add, addm=tensor, unit=N.unit,
        assoc=lambda a, b, c: p(N.assoc[(a, b, c)]),
        lunit=lambda a: p(N.lunit[a]), runit=lambda a: p(N.runit[a]),
        sym=lambda a, b: p(N.sym[(a, b)]),
        dual=lambda a: N.dual[a], eta=lambda a: p(N.eta[a]),
        act=N.act, actm=actm,
        adist=lambda r, a, b: p(N.adist[(r, a, b)]),
        bdist=lambda r, s, a: p(N.bdist[(r, s, a)]),
        bassoc=lambda r, s, a: p(N.bassoc[(r, s, a)]),
        iunit=lambda a: p(N.iunit[a]),
        zzero=lambda r: p(N.zzero[r]))
    pF = strict_hom(N, C, {b: b for b in N.objects}, {g: p(g) for g in N.morphisms})
    pi = RModMor(compose_hom(F, pF), zero_hom(M, C),
                 {A: name(inv(N.lunit[FA[A]]), A, N.unit) for A in M.objects})
    return CokernelResult(F, C, pF, pi, classes)


def _descend(C: CokernelResult, G: RModHom, phi_c: Mapping, raw) -> object:
    """G′ on a raw morphism (f, A, B2): r∘(1 + φ_A)∘G₊∘G(f)."""
    P = G.cod
    f, A, B2 = raw
    GB2 = G.omap[B2]
    return P.then(G.mmap[f], G.fplus[(B2, C.hom.omap[A])], P.id_addm(GB2, phi_c[A]), P.runit[GB2])


def cokernel_factor(C: CokernelResult, G: RModHom, phi: RModMor,
                    budget: SearchBudget | None = None) -> Factoring:
    """Factor G: N -> P with φ: G∘F => 0 through the cokernel."""
    F, Co, N = C.hom, C.coker, C.hom.cod
    P = G.cod
    require_boundary(phi, compose_hom(F, G), zero_hom(F.dom, P), "G∘F => 0")
    c = phi.component
    G1 = RModHom(Co, P, dict(G.omap), {x: _descend(C, G, c, x) for x in Co.morphisms},
                 dict(G.fplus), G.fzero, dict(G.ftwo))
    phi1 = RModMor(compose_hom(C.p, G1), G, {b: P.ident(G.omap[b]) for b in N.objects})
    ck = Checker()
    ck.run("factor.well_defined", [(x,) for x in C.classes],
           lambda x: _descend(C, G, c, x) == G1.mmap[C.classes[x]])
    ck.extend(validate_mod_hom(G1), "factor.hom.")
    ck.extend(validate_mod_two_morphism(phi1), "factor.mor.")
    ck.run("factor.compatible", [(A,) for A in F.dom.objects],
           lambda A: P.comp(G1.fzero, G1.mmap[C.pi.component[A]])
           == P.comp(c[A], phi1.component[F.omap[A]]))

    def psi(G2: RModHom, phi2: RModMor):
        require_boundary(phi2, compose_hom(C.p, G2), G, "G″∘p => G")
        c2 = phi2.component
        out = RModMor(G2, G1, dict(c2))
        pk = Checker()
        unique_psi(pk, out, G2, G1, lambda e: all(e.component[b] == c2[b] for b in N.objects), budget)
        return out, pk.report()

    return Factoring(G1, phi1, ck.report(), psi)
