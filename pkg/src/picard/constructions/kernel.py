"""Kernels of R-homs.

Objects of Ker F are pairs (A, a) with a: FA -> 0.  A morphism is named
(f, a) after the underlying f: A -> A' and the label of its source; its
target label a∘F(f)⁻¹ is forced.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..groupoid import FinGroupoid
from ..report import Checker
from ..rmodule import RModHom, RModMor, RModule, validate_mod_hom, validate_mod_two_morphism, zero_hom
from ..search import SearchBudget
from ..twogroup import compose_hom
from .common import Factoring, module_from_callables, require_boundary, unique_psi


@dataclass(frozen=True, eq=False)
class KernelResult:
    hom: RModHom
    ker: RModule
    e: RModHom
    eps: RModMor


def kernel(F: RModHom) -> KernelResult:
    M, N = F.dom, F.cod
    R = M.ring
    u = N.unit
    then, inv = N.then, N.inv
    objs = [(A, a) for A in M.objects for a in N.hom(F.omap[A], u)]
    arrows = {}
    for A, a in objs:
        for f in M.base.out_of(A):
            arrows[(f, a)] = ((A, a), (M.tgt(f), then(inv(F.mmap[f]), a)))
    base = FinGroupoid.tabulate(objs, arrows, lambda g, f: (M.comp(g[0], f[0]), f[1]))

    def add(x, y):
        (A, a), (B, b) = x, y
        return (M.add(A, B), then(F.fplus[(A, B)], N.addm(a, b), N.lunit[u]))

    def act(r, x):
        A, a = x
        return (M.act(r, A), then(F.ftwo[(r, A)], N.ract(r, a), N.zzero[r]))

    def dual(x):
        A, a = x
        D = M.dual[A]
        FD = F.omap[D]
        return (D, then(inv(N.runit[FD]), N.id_addm(FD, inv(a)), inv(F.fplus[(D, A)]),
                        F.mmap[M.eta[A]], F.fzero))

    def lift(f, x):
        return (f, x[1])

    def src_obj(m):
        return base.src[m]

    zero_obj = (M.unit, F.fzero)
    K = module_from_callables(
        R, base,
        add=add,
        addm=lambda f, g: (M.addm(f[0], g[0]), add(src_obj(f), src_obj(g))[1]),
        unit=zero_obj,
        assoc=lambda x, y, z: lift(M.assoc[(x[0], y[0], z[0])], add(add(x, y), z)),
        lunit=lambda x: lift(M.lunit[x[0]], add(zero_obj, x)),
        runit=lambda x: lift(M.runit[x[0]], add(x, zero_obj)),
        sym=lambda x, y: lift(M.sym[(x[0], y[0])], add(x, y)),
        dual=dual,
        eta=lambda x: lift(M.eta[x[0]], add(dual(x), x)),
        act=act,
        actm=lambda p, f: (M.actm(p, f[0]), act(R.src(p), src_obj(f))[1]),
        adist=lambda r, x, y: lift(M.adist[(r, x[0], y[0])], act(r, add(x, y))),
        bdist=lambda r, s, x: lift(M.bdist[(r, s, x[0])], act(R.add(r, s), x)),
        bassoc=lambda r, s, x: lift(M.bassoc[(r, s, x[0])], act(R.mul(r, s), x)),
        iunit=lambda x: lift(M.iunit[x[0]], act(R.one, x)),
        zzero=lambda r: lift(M.zzero[r], act(r, zero_obj)))

    kobjs = K.objects
    e = RModHom(K, M, {x: x[0] for x in kobjs}, {f: f[0] for f in K.morphisms},
                {(x, y): M.ident(M.add(x[0], y[0])) for x in kobjs for y in kobjs},
                M.ident(M.unit),
                {(r, x): M.ident(M.act(r, x[0])) for r in R.objects for x in kobjs})
    eps = RModMor(compose_hom(e, F), zero_hom(K, N), {x: x[1] for x in kobjs})
    return KernelResult(F, K, e, eps)


def kernel_factor(K: KernelResult, G: RModHom, phi: RModMor,
                  budget: SearchBudget | None = None) -> Factoring:
    """Factor G: P -> M with φ: F∘G => 0 through the kernel."""
    F, Ker, M, N = K.hom, K.ker, K.hom.dom, K.hom.cod
    P = G.dom
    require_boundary(phi, compose_hom(G, F), zero_hom(P, N), "F∘G => 0")
    c = phi.component
    objs = P.objects
    G1 = RModHom(P, Ker, {x: (G.omap[x], c[x]) for x in objs},
                 {f: (G.mmap[f], c[P.src(f)]) for f in P.morphisms},
                 {(x, y): (G.fplus[(x, y)], c[P.add(x, y)]) for x in objs for y in objs},
                 (G.fzero, c[P.unit]),
                 {(r, x): (G.ftwo[(r, x)], c[P.act(r, x)]) for r in P.ring.objects for x in objs})
    phi1 = RModMor(compose_hom(G1, K.e), G, {x: M.ident(G.omap[x]) for x in objs})
    ck = Checker()
    ck.extend(validate_mod_hom(G1), "factor.hom.")
    ck.extend(validate_mod_two_morphism(phi1), "factor.mor.")
    ck.run("factor.compatible", [(x,) for x in objs],
           lambda x: N.comp(c[x], F.mmap[phi1.component[x]]) == K.eps.component[G1.omap[x]])

    def psi(G2: RModHom, phi2: RModMor):
        require_boundary(phi2, compose_hom(G2, K.e), G, "e∘G″ => G")
        c2 = phi2.component
        out = RModMor(G2, G1, {x: (c2[x], G2.omap[x][1]) for x in objs})
        pk = Checker()
        unique_psi(pk, out, G2, G1,
                   lambda e: all(K.e.mmap[e.component[x]] == c2[x] for x in objs), budget)
        return out, pk.report()

    return Factoring(G1, phi1, ck.report(), psi)
