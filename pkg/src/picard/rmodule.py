"""R-2-modules, R-homomorphisms and their 2-morphisms, zero homs and biproducts.

Module coherence is checked face by face.  Face identifiers:

``module.a.assoc``, ``module.a.sym``, ``module.a.lunit``, ``module.a.runit``
    the distributor ``a^r_{m,n}: r(m+n) -> rm+rn`` against the carrier's
    associator, symmetry and unitors (``z_r`` supplies ``r0 -> 0``);
``module.b.assoc``, ``module.b.sym``
    ``b^{r,s}_m: (r+s)m -> rm+sm`` against the ring's associator and symmetry;
``module.ab.interchange``
    the two ways of expanding ``(r+s)(m+n)``;
``module.bassoc.pentagon``, ``module.bassoc.a``, ``module.bassoc.ldist``, ``module.bassoc.rdist``
    ``b_{r,s,m}: (rs)m -> r(sm)`` against the ring associator, ``a``, and the
    ring's two distributors;
``module.i.lambda``, ``module.i.rho``, ``module.i.a``
    ``i_m: 1m -> m`` against the ring's unitors and against ``a``;
``module.z.b``, ``module.z.bassoc``, ``module.z.i``
    ``z_r`` against ``b^{r,s}``, ``b_{r,s,m}`` and ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Callable, Mapping

from .errors import NotAModule, Parallelism, RingMismatch
from .groupoid import validate_groupoid, product as groupoid_product
from .report import Checker, CheckReport
from .tworing import TwoRing
from .twogroup import (GroupTable, SymTwoGroup, TwoGroupHom, TwoGroupMor, _hom_shape, _parallel,
                       _require_keys, _two_group_shape, assemble_two_group, bifunctor_checks, build_deloop,
                       build_discrete, check_abelian_group, discrete_morphism, hom_checks,
                       interchange, mor_checks, natural_checks, same, two_group_checks, typing_checks)


@dataclass(frozen=True, eq=False)
class RModule(SymTwoGroup):
    ring: TwoRing
    act_obj: Mapping
    act_mor: Mapping
    adist: Mapping
    bdist: Mapping
    bassoc: Mapping
    iunit: Mapping
    zzero: Mapping

    def act(self, r, m):
        return self.act_obj[(r, m)]

    def actm(self, phi, f):
        return self.act_mor[(phi, f)]

    def ract(self, r, f):
        """1_r · f"""
        return self.act_mor[(self.ring.ident(r), f)]


def assemble_module(ring: TwoRing, A: SymTwoGroup, *, act: Callable, actm: Callable, adist: Callable,
                    bdist: Callable, bassoc: Callable, iunit: Callable, zzero: Callable) -> RModule:
    robjs, objs = ring.objects, A.objects
    return RModule(
        A.base, A.tensor_obj, A.tensor_mor, A.unit, A.assoc, A.lunit, A.runit, A.sym, A.dual, A.eta,
        ring,
        {(r, m): act(r, m) for r in robjs for m in objs},
        {(p, f): actm(p, f) for p in ring.morphisms for f in A.morphisms},
        {(r, m, n): adist(r, m, n) for r in robjs for m in objs for n in objs},
        {(r, s, m): bdist(r, s, m) for r in robjs for s in robjs for m in objs},
        {(r, s, m): bassoc(r, s, m) for r in robjs for s in robjs for m in objs},
        {m: iunit(m) for m in objs},
        {r: zzero(r) for r in robjs},
    )


def with_carrier(M: RModule, A: SymTwoGroup) -> RModule:
    """Same action data, different (table-equal on shared keys) carrier."""
    return RModule(A.base, A.tensor_obj, A.tensor_mor, A.unit, A.assoc, A.lunit, A.runit, A.sym, A.dual,
                   A.eta, M.ring, M.act_obj, M.act_mor, M.adist, M.bdist, M.bassoc, M.iunit, M.zzero)


def _ring_elements_discrete(R: TwoRing) -> None:
    if any(not R.base.is_identity(f) for f in R.morphisms):
        raise NotAModule("the ring is not discrete")


def _check_module_laws(R: TwoRing, els, add, act: Mapping) -> None:
    for r in R.objects:
        for m in els:
            if act.get((r, m)) not in els:
                raise NotAModule(f"action {r}*{m} missing or outside the module")
    for m in els:
        if act[(R.one, m)] != m:
            raise NotAModule(f"1*{m} != {m}")
        for r in R.objects:
            for n in els:
                if act[(r, add[(m, n)])] != add[(act[(r, m)], act[(r, n)])]:
                    raise NotAModule(f"{r}*({m}+{n}) != {r}*{m}+{r}*{n}")
            for s in R.objects:
                if act[(R.add(r, s), m)] != add[(act[(r, m)], act[(s, m)])]:
                    raise NotAModule(f"({r}+{s})*{m} != {r}*{m}+{s}*{m}")
                if act[(R.mul(r, s), m)] != act[(r, act[(s, m)])]:
                    raise NotAModule(f"({r}{s})*{m} != {r}*({s}*{m})")


def _strict_module(R: TwoRing, A: SymTwoGroup, act: Callable, actm: Callable) -> RModule:
    ident = A.ident
    return assemble_module(
        R, A, act=act, actm=actm,
        adist=lambda r, m, n: ident(act(r, A.add(m, n))),
        bdist=lambda r, s, m: ident(act(R.add(r, s), m)),
        bassoc=lambda r, s, m: ident(act(R.mul(r, s), m)),
        iunit=lambda m: ident(m),
        zzero=lambda r: ident(A.unit))


def build_discrete_module(R: TwoRing, M: GroupTable, act: Mapping) -> RModule:
    """D(M) for an honest finite module M over a discrete ring."""
    _ring_elements_discrete(R)
    check_abelian_group(M)
    _check_module_laws(R, M.elements, M.add, act)
    A = build_discrete(M)
    robj = {R.ident(r): r for r in R.objects}
    mobj = {discrete_morphism(m): m for m in M.elements}
    return _strict_module(R, A, lambda r, m: act[(r, m)],
                          lambda p, f: discrete_morphism(act[(robj[p], mobj[f])]))


def build_deloop_module(R: TwoRing, H: GroupTable, act: Mapping, obj: str = "0") -> RModule:
    """B(H) with the ring acting on morphisms through a module structure on H."""
    _ring_elements_discrete(R)
    check_abelian_group(H)
    _check_module_laws(R, H.elements, H.add, act)
    A = build_deloop(H, obj)
    robj = {R.ident(r): r for r in R.objects}
    return _strict_module(R, A, lambda r, m: A.unit, lambda p, f: act[(robj[p], f)])


def _module_shape(M: RModule) -> None:
    _two_group_shape(M)
    R = M.ring
    ro, mo = R.objects, M.objects
    O, Mm = set(mo), set(M.morphisms)
    _require_keys(M.act_obj, _cartesian(ro, mo), "action object", O)
    _require_keys(M.act_mor, _cartesian(R.morphisms, M.morphisms), "action morphism", Mm)
    _require_keys(M.adist, _cartesian(ro, mo, mo), "adist", Mm)
    _require_keys(M.bdist, _cartesian(ro, ro, mo), "bdist", Mm)
    _require_keys(M.bassoc, _cartesian(ro, ro, mo), "bassoc", Mm)
    _require_keys(M.iunit, mo, "iunit", Mm)
    _require_keys(M.zzero, ro, "zzero", Mm)


def module_checks(ck: Checker, M: RModule, prefix: str = "module.") -> None:
    R = M.ring
    G, RG = M.base, R.base
    ro, mo = R.objects, M.objects
    add, act, addm, actm, ract, ident, then = M.add, M.act, M.addm, M.actm, M.ract, M.ident, M.then
    a, b, ba, i, z = M.adist, M.bdist, M.bassoc, M.iunit, M.zzero
    rid = R.ident
    u = M.unit

    bifunctor_checks(ck, prefix + "action.bifunctor", RG, G, G, M.act_obj, M.act_mor)
    typing_checks(ck, prefix + "a.typing", _cartesian(ro, mo, mo), G, lambda r, m, n: a[(r, m, n)],
                  lambda r, m, n: (act(r, add(m, n)), add(act(r, m), act(r, n))))
    typing_checks(ck, prefix + "b.typing", _cartesian(ro, ro, mo), G, lambda r, s, m: b[(r, s, m)],
                  lambda r, s, m: (act(R.add(r, s), m), add(act(r, m), act(s, m))))
    typing_checks(ck, prefix + "bassoc.typing", _cartesian(ro, ro, mo), G, lambda r, s, m: ba[(r, s, m)],
                  lambda r, s, m: (act(R.mul(r, s), m), act(r, act(s, m))))
    typing_checks(ck, prefix + "i.typing", [(m,) for m in mo], G, lambda m: i[m],
                  lambda m: (act(R.one, m), m))
    typing_checks(ck, prefix + "z.typing", [(r,) for r in ro], G, lambda r: z[r],
                  lambda r: (act(r, u), u))

    natural_checks(ck, prefix + "a.natural", [RG, G, G], G, lambda r, m, n: a[(r, m, n)],
                   lambda p, f, g: actm(p, addm(f, g)), lambda p, f, g: addm(actm(p, f), actm(p, g)))
    natural_checks(ck, prefix + "b.natural", [RG, RG, G], G, lambda r, s, m: b[(r, s, m)],
                   lambda p, q, f: actm(R.addm(p, q), f), lambda p, q, f: addm(actm(p, f), actm(q, f)))
    natural_checks(ck, prefix + "bassoc.natural", [RG, RG, G], G, lambda r, s, m: ba[(r, s, m)],
                   lambda p, q, f: actm(R.mulm(p, q), f), lambda p, q, f: actm(p, actm(q, f)))
    natural_checks(ck, prefix + "i.natural", [G], G, lambda m: i[m],
                   lambda f: actm(rid(R.one), f), lambda f: f)
    natural_checks(ck, prefix + "z.natural", [RG], G, lambda r: z[r],
                   lambda p: actm(p, ident(u)), lambda p: ident(u))

    ck.run(prefix + "a.assoc", _cartesian(ro, mo, mo, mo),
           lambda r, m, n, p: then(ract(r, M.assoc[(m, n, p)]), a[(r, m, add(n, p))],
                                   addm(ident(act(r, m)), a[(r, n, p)]))
           == then(a[(r, add(m, n), p)], addm(a[(r, m, n)], ident(act(r, p))),
                   M.assoc[(act(r, m), act(r, n), act(r, p))]))
    ck.run(prefix + "a.sym", _cartesian(ro, mo, mo),
           lambda r, m, n: then(ract(r, M.sym[(m, n)]), a[(r, n, m)])
           == then(a[(r, m, n)], M.sym[(act(r, m), act(r, n))]))
    ck.run(prefix + "a.lunit", _cartesian(ro, mo),
           lambda r, m: then(a[(r, u, m)], addm(z[r], ident(act(r, m))), M.lunit[act(r, m)])
           == ract(r, M.lunit[m]))
    ck.run(prefix + "a.runit", _cartesian(ro, mo),
           lambda r, m: then(a[(r, m, u)], addm(ident(act(r, m)), z[r]), M.runit[act(r, m)])
           == ract(r, M.runit[m]))
    ck.run(prefix + "b.assoc", _cartesian(ro, ro, ro, mo),
           lambda r, s, t, m: then(actm(R.assoc[(r, s, t)], ident(m)), b[(r, R.add(s, t), m)],
                                   addm(ident(act(r, m)), b[(s, t, m)]))
           == then(b[(R.add(r, s), t, m)], addm(b[(r, s, m)], ident(act(t, m))),
                   M.assoc[(act(r, m), act(s, m), act(t, m))]))
    ck.run(prefix + "b.sym", _cartesian(ro, ro, mo),
           lambda r, s, m: then(actm(R.sym[(r, s)], ident(m)), b[(s, r, m)])
           == then(b[(r, s, m)], M.sym[(act(r, m), act(s, m))]))
    ck.run(prefix + "ab.interchange", _cartesian(ro, ro, mo, mo),
           lambda r, s, m, n: then(a[(R.add(r, s), m, n)], addm(b[(r, s, m)], b[(r, s, n)]))
           == then(b[(r, s, add(m, n))], addm(a[(r, m, n)], a[(s, m, n)]),
                   interchange(M, act(r, m), act(r, n), act(s, m), act(s, n))))
    ck.run(prefix + "bassoc.pentagon", _cartesian(ro, ro, ro, mo),
           lambda r, s, t, m: then(ba[(R.mul(r, s), t, m)], ba[(r, s, act(t, m))])
           == then(actm(R.massoc[(r, s, t)], ident(m)), ba[(r, R.mul(s, t), m)], ract(r, ba[(s, t, m)])))
    ck.run(prefix + "bassoc.a", _cartesian(ro, ro, mo, mo),
           lambda r, s, m, n: then(ba[(r, s, add(m, n))], ract(r, a[(s, m, n)]), a[(r, act(s, m), act(s, n))])
           == then(a[(R.mul(r, s), m, n)], addm(ba[(r, s, m)], ba[(r, s, n)])))
    ck.run(prefix + "bassoc.ldist", _cartesian(ro, ro, ro, mo),
           lambda r, s, t, m: then(ba[(r, R.add(s, t), m)], ract(r, b[(s, t, m)]),
                                   a[(r, act(s, m), act(t, m))])
           == then(actm(R.ldist[(r, s, t)], ident(m)), b[(R.mul(r, s), R.mul(r, t), m)],
                   addm(ba[(r, s, m)], ba[(r, t, m)])))
    ck.run(prefix + "bassoc.rdist", _cartesian(ro, ro, ro, mo),
           lambda r, s, t, m: then(ba[(R.add(r, s), t, m)], b[(r, s, act(t, m))])
           == then(actm(R.rdist[(r, s, t)], ident(m)), b[(R.mul(r, t), R.mul(s, t), m)],
                   addm(ba[(r, t, m)], ba[(s, t, m)])))
    ck.run(prefix + "i.lambda", _cartesian(ro, mo),
           lambda r, m: then(ba[(R.one, r, m)], i[act(r, m)]) == actm(R.mlunit[r], ident(m)))
    ck.run(prefix + "i.rho", _cartesian(ro, mo),
           lambda r, m: then(ba[(r, R.one, m)], ract(r, i[m])) == actm(R.mrunit[r], ident(m)))
    ck.run(prefix + "i.a", _cartesian(mo, mo),
           lambda m, n: then(a[(R.one, m, n)], addm(i[m], i[n])) == i[add(m, n)])
    ck.run(prefix + "z.b", _cartesian(ro, ro),
           lambda r, s: then(b[(r, s, u)], addm(z[r], z[s]), M.lunit[u]) == z[R.add(r, s)])
    ck.run(prefix + "z.bassoc", _cartesian(ro, ro),
           lambda r, s: then(ba[(r, s, u)], ract(r, z[s]), z[r]) == z[R.mul(r, s)])
    ck.run(prefix + "z.i", [(u,)], lambda x: i[x] == z[R.one])


def validate_module(M: RModule) -> CheckReport:
    ck = Checker()
    ck.extend(validate_groupoid(M.base))
    _module_shape(M)
    two_group_checks(ck, M)
    module_checks(ck, M)
    return ck.report()


# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class RModHom(TwoGroupHom):
    ftwo: Mapping

    def _composite_extra(self, G: "RModHom") -> dict:
        F, C = self, G.cod
        return {"ftwo": {(r, m): C.comp(G.ftwo[(r, F.omap[m])], G.mmap[F.ftwo[(r, m)]])
                         for (r, m) in F.ftwo}}


@dataclass(frozen=True, eq=False)
class RModMor(TwoGroupMor):
    pass


def mod_hom_checks(ck: Checker, F: RModHom, prefix: str = "modhom.") -> None:
    M, N = F.dom, F.cod
    R = M.ring
    om, mm, t, fp = F.omap, F.mmap, F.ftwo, F.fplus
    ro, mo = R.objects, M.objects
    H = N.base
    then, addm, ract = N.then, N.addm, N.ract
    u = M.unit

    typing_checks(ck, prefix + "ftwo.typing", _cartesian(ro, mo), H, lambda r, m: t[(r, m)],
                  lambda r, m: (om[M.act(r, m)], N.act(r, om[m])))
    natural_checks(ck, prefix + "ftwo.natural", [R.base, M.base], H, lambda r, m: t[(r, m)],
                   lambda p, f: mm[M.actm(p, f)], lambda p, f: N.actm(p, mm[f]))
    ck.run(prefix + "equivariant.a", _cartesian(ro, mo, mo),
           lambda r, m, n: then(mm[M.adist[(r, m, n)]], fp[(M.act(r, m), M.act(r, n))],
                                addm(t[(r, m)], t[(r, n)]))
           == then(t[(r, M.add(m, n))], ract(r, fp[(m, n)]), N.adist[(r, om[m], om[n])]))
    ck.run(prefix + "equivariant.b", _cartesian(ro, ro, mo),
           lambda r, s, m: then(mm[M.bdist[(r, s, m)]], fp[(M.act(r, m), M.act(s, m))],
                                addm(t[(r, m)], t[(s, m)]))
           == then(t[(R.add(r, s), m)], N.bdist[(r, s, om[m])]))
    ck.run(prefix + "equivariant.bassoc", _cartesian(ro, ro, mo),
           lambda r, s, m: then(mm[M.bassoc[(r, s, m)]], t[(r, M.act(s, m))], ract(r, t[(s, m)]))
           == then(t[(R.mul(r, s), m)], N.bassoc[(r, s, om[m])]))
    ck.run(prefix + "equivariant.i", [(m,) for m in mo],
           lambda m: then(t[(R.one, m)], N.iunit[om[m]]) == mm[M.iunit[m]])
    ck.run(prefix + "equivariant.z", [(r,) for r in ro],
           lambda r: then(t[(r, u)], ract(r, F.fzero), N.zzero[r]) == then(mm[M.zzero[r]], F.fzero))


def _same_ring(M: RModule, N: RModule) -> None:
    if not same(M.ring, N.ring):
        raise RingMismatch("modules are over different rings")


def validate_mod_hom(F: RModHom) -> CheckReport:
    _same_ring(F.dom, F.cod)
    _hom_shape(F)
    _require_keys(F.ftwo, _cartesian(F.dom.ring.objects, F.dom.objects), "ftwo", set(F.cod.morphisms))
    ck = Checker()
    hom_checks(ck, F)
    mod_hom_checks(ck, F)
    return ck.report()


def mod_mor_checks(ck: Checker, e: TwoGroupMor, prefix: str = "modmor.") -> None:
    F, G = e.source, e.target
    M, N = F.dom, F.cod
    c = e.component
    ck.run(prefix + "action", _cartesian(M.ring.objects, M.objects),
           lambda r, m: N.comp(G.ftwo[(r, m)], c[M.act(r, m)]) == N.comp(N.ract(r, c[m]), F.ftwo[(r, m)]))


def validate_mod_two_morphism(e: TwoGroupMor) -> CheckReport:
    if not _parallel(e.source, e.target):
        raise Parallelism("source and target homs do not share domain and codomain")
    _require_keys(e.component, e.source.dom.objects, "component", set(e.source.cod.morphisms))
    ck = Checker()
    mor_checks(ck, e)
    mod_mor_checks(ck, e)
    return ck.report()


def identity_mod_hom(M: RModule) -> RModHom:
    return RModHom(M, M, {a: a for a in M.objects}, {f: f for f in M.morphisms},
                   {(a, b): M.ident(M.add(a, b)) for a in M.objects for b in M.objects},
                   M.ident(M.unit),
                   {(r, m): M.ident(M.act(r, m)) for r in M.ring.objects for m in M.objects})


def zero_hom(M: RModule, N: RModule) -> RModHom:
    _same_ring(M, N)
    u = N.unit
    l0inv = N.inv(N.lunit[u])
    return RModHom(M, N, {a: u for a in M.objects}, {f: N.ident(u) for f in M.morphisms},
                   {(a, b): l0inv for a in M.objects for b in M.objects}, N.ident(u),
                   {(r, m): N.inv(N.zzero[r]) for r in M.ring.objects for m in M.objects})


def is_zero_hom(F: TwoGroupHom) -> bool:
    return F == zero_hom(F.dom, F.cod)


def mod_identity_mor(F: RModHom) -> RModMor:
    return RModMor(F, F, {a: F.cod.ident(F.omap[a]) for a in F.dom.objects})


# ---------------------------------------------------------------------------
# biproducts


def biproduct(M: RModule, N: RModule) -> tuple:
    """M ⊕ N with its projections and injections: (P, p1, p2, i1, i2)."""
    _same_ring(M, N)
    R = M.ring
    base = groupoid_product(M.base, N.base)
    A = assemble_two_group(
        base,
        add=lambda a, b: (M.add(a[0], b[0]), N.add(a[1], b[1])),
        addm=lambda f, g: (M.addm(f[0], g[0]), N.addm(f[1], g[1])),
        unit=(M.unit, N.unit),
        assoc=lambda a, b, c: (M.assoc[(a[0], b[0], c[0])], N.assoc[(a[1], b[1], c[1])]),
        lunit=lambda a: (M.lunit[a[0]], N.lunit[a[1]]),
        runit=lambda a: (M.runit[a[0]], N.runit[a[1]]),
        sym=lambda a, b: (M.sym[(a[0], b[0])], N.sym[(a[1], b[1])]),
        dual=lambda a: (M.dual[a[0]], N.dual[a[1]]),
        eta=lambda a: (M.eta[a[0]], N.eta[a[1]]))
    P = assemble_module(
        R, A,
        act=lambda r, m: (M.act(r, m[0]), N.act(r, m[1])),
        actm=lambda p, f: (M.actm(p, f[0]), N.actm(p, f[1])),
        adist=lambda r, m, n: (M.adist[(r, m[0], n[0])], N.adist[(r, m[1], n[1])]),
        bdist=lambda r, s, m: (M.bdist[(r, s, m[0])], N.bdist[(r, s, m[1])]),
        bassoc=lambda r, s, m: (M.bassoc[(r, s, m[0])], N.bassoc[(r, s, m[1])]),
        iunit=lambda m: (M.iunit[m[0]], N.iunit[m[1]]),
        zzero=lambda r: (M.zzero[r], N.zzero[r]))
    ro = R.objects

    def projection(first: bool) -> RModHom:
        X = M if first else N
        k = 0 if first else 1
        return RModHom(P, X, {a: a[k] for a in P.objects}, {f: f[k] for f in P.morphisms},
                       {(a, b): X.ident(X.add(a[k], b[k])) for a in P.objects for b in P.objects},
                       X.ident(X.unit),
                       {(r, m): X.ident(X.act(r, m[k])) for r in ro for m in P.objects})

    def injection(first: bool) -> RModHom:
        X, Y = (M, N) if first else (N, M)
        u = Y.unit
        iu = Y.ident(u)
        l0inv = Y.inv(Y.lunit[u])
        put = (lambda x, y: (x, y)) if first else (lambda x, y: (y, x))
        return RModHom(X, P, {a: put(a, u) for a in X.objects}, {f: put(f, iu) for f in X.morphisms},
                       {(a, b): put(X.ident(X.add(a, b)), l0inv) for a in X.objects for b in X.objects},
                       put(X.ident(X.unit), iu),
                       {(r, m): put(X.ident(X.act(r, m)), Y.inv(Y.zzero[r])) for r in ro for m in X.objects})

    return P, projection(True), projection(False), injection(True), injection(False)


def hom_two_group(M: RModule, N: RModule, budget=None) -> SymTwoGroup:
    """All R-homs M -> N and all 2-morphisms between them, added pointwise."""
    from .homspace import module_hom_space
    return module_hom_space(M, N, budget).group
