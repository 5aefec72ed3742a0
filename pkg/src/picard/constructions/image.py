"""The two image factorizations F = M∘Ω∘E.

``factorize_pl``: E is surjective on objects, Ω an equivalence, M full and
faithful.  ``factorize``: E is full and surjective, Ω an equivalence, M
faithful.

Object names: Im¹_pl has the objects of the domain and morphisms (A, g, A')
for every g: FA -> FA'.  Both Im² variants have triples (A, φ, B) with
φ: FA -> B; their morphisms are (s, g, t) for a codomain morphism g between
the B parts, and in Im² only when g lifts along some f: A -> A'.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..equivalence import is_equivalence, is_faithful, is_full, is_surjective
from ..errors import MalformedTable
from ..groupoid import FinGroupoid
from ..ids import least
from ..report import Checker, CheckReport
from ..rmodule import RModHom, RModMor, RModule, identity_mod_hom, validate_mod_hom
from ..twogroup import compose_hom
from .common import composite, module_from_callables, same_tables, strict_hom
from .pips import quotient_module


def im1_pl(F: RModHom) -> tuple[RModule, RModHom]:
    """Im¹_pl F with Ê: A -> Im¹_pl F."""
    M, N = F.dom, F.cod
    R = M.ring
    Fo, Fm, then, inv = F.omap, F.mmap, N.then, N.inv
    arrows = {(A, g, A2): (A, A2) for A in M.objects for A2 in M.objects for g in N.hom(Fo[A], Fo[A2])}
    base = FinGroupoid.tabulate(M.objects, arrows, lambda h, g: (g[0], N.comp(h[1], g[1]), h[2]))

    def E(f):
        return (M.src(f), Fm[f], M.tgt(f))

    def addm(x, y):
        (A, g, A2), (C, h, C2) = x, y
        return (M.add(A, C), then(F.fplus[(A, C)], N.addm(g, h), inv(F.fplus[(A2, C2)])), M.add(A2, C2))

    def actm(p, x):
        A, g, A2 = x
        r, r2 = R.src(p), R.tgt(p)
        return (M.act(r, A), then(F.ftwo[(r, A)], N.actm(p, g), inv(F.ftwo[(r2, A2)])), M.act(r2, A2))

    I = module_from_callables(
        R, base, add=M.add, addm=addm, unit=M.unit,
        assoc=lambda a, b, c: E(M.assoc[(a, b, c)]), lunit=lambda a: E(M.lunit[a]),
        runit=lambda a: E(M.runit[a]), sym=lambda a, b: E(M.sym[(a, b)]),
        dual=lambda a: M.dual[a], eta=lambda a: E(M.eta[a]),
        act=M.act, actm=actm,
        adist=lambda r, a, b: E(M.adist[(r, a, b)]), bdist=lambda r, s, a: E(M.bdist[(r, s, a)]),
        bassoc=lambda r, s, a: E(M.bassoc[(r, s, a)]), iunit=lambda a: E(M.iunit[a]),
        zzero=lambda r: E(M.zzero[r]))
    return I, strict_hom(M, I, {a: a for a in M.objects}, {f: E(f) for f in M.morphisms})


def _triples(F: RModHom) -> list:
    M, N = F.dom, F.cod
    return [(A, phi, B) for A in M.objects for B in N.objects for phi in N.hom(F.omap[A], B)]


def _triple_module(F: RModHom, arrows: dict, dual_label: Callable) -> RModule:
    """Module structure shared by Im²_pl and Im²; morphism names (s, g, t)."""
    M, N = F.dom, F.cod
    R = M.ring
    then = N.then
    base = FinGroupoid.tabulate(_triples(F), arrows, lambda h, g: (g[0], N.comp(h[1], g[1]), h[2]))

    def add(x, y):
        (A, p, B), (A2, p2, B2) = x, y
        return (M.add(A, A2), then(F.fplus[(A, A2)], N.addm(p, p2)), N.add(B, B2))

    def act(r, x):
        A, p, B = x
        return (M.act(r, A), then(F.ftwo[(r, A)], N.ract(r, p)), N.act(r, B))

    unit = (M.unit, F.fzero, N.unit)

    def dual(x):
        A, p, B = x
        return (M.dual[A], dual_label(x), N.dual[B])

    def b(x):
        return x[2]

    return module_from_callables(
        R, base, add=add,
        addm=lambda f, g: (add(f[0], g[0]), N.addm(f[1], g[1]), add(f[2], g[2])),
        unit=unit,
        assoc=lambda x, y, z: (add(add(x, y), z), N.assoc[(b(x), b(y), b(z))], add(x, add(y, z))),
        lunit=lambda x: (add(unit, x), N.lunit[b(x)], x),
        runit=lambda x: (add(x, unit), N.runit[b(x)], x),
        sym=lambda x, y: (add(x, y), N.sym[(b(x), b(y))], add(y, x)),
        dual=dual, eta=lambda x: (add(dual(x), x), N.eta[b(x)], unit),
        act=act,
        actm=lambda p, f: (act(R.src(p), f[0]), N.actm(p, f[1]), act(R.tgt(p), f[2])),
        adist=lambda r, x, y: (act(r, add(x, y)), N.adist[(r, b(x), b(y))], add(act(r, x), act(r, y))),
        bdist=lambda r, s, x: (act(R.add(r, s), x), N.bdist[(r, s, b(x))], add(act(r, x), act(s, x))),
        bassoc=lambda r, s, x: (act(R.mul(r, s), x), N.bassoc[(r, s, b(x))], act(r, act(s, x))),
        iunit=lambda x: (act(R.one, x), N.iunit[b(x)], x),
        zzero=lambda r: (act(r, unit), N.zzero[r], unit))


def im2_pl(F: RModHom) -> RModule:
    N = F.cod
    ts = _triples(F)
    arrows = {(s, g, t): (s, t) for s in ts for t in ts for g in N.hom(s[2], t[2])}
    return _triple_module(F, arrows, lambda x: least(N.hom(F.omap[F.dom.dual[x[0]]], N.dual[x[2]])))


def _im2_dual_label(F: RModHom, x) -> object:
    """The unique φ*: F(A*) -> B* making [η_A, η_B] a morphism."""
    M, N = F.dom, F.cod
    A, p, B = x
    D = M.dual[A]
    want = N.then(N.inv(F.fplus[(D, A)]), F.mmap[M.eta[A]], F.fzero, N.inv(N.eta[B]))
    hits = [y for y in N.hom(F.omap[D], N.dual[B]) if N.addm(y, p) == want]
    if len(hits) != 1:
        raise MalformedTable(f"no unique dual label at {x!r}")
    return hits[0]


def im2(F: RModHom) -> tuple[RModule, dict]:
    """Im² F, and for each morphism (s, g, t) the least f lifting g."""
    M, N = F.dom, F.cod
    ts = _triples(F)
    over = {}
    for x in ts:
        over.setdefault(x[0], []).append(x)
    arrows, lifts = {}, {}
    for f in M.morphisms:
        for s in over[M.src(f)]:
            for t in over[M.tgt(f)]:
                g = N.then(N.inv(s[1]), F.mmap[f], t[1])
                key = (s, g, t)
                arrows[key] = (s, t)
                lifts.setdefault(key, f)
    return _triple_module(F, arrows, lambda x: _im2_dual_label(F, x)), lifts


def im1(F: RModHom) -> tuple[RModule, RModHom]:
    """Im¹ F = domain with f1, f2 identified when Ff1 = Ff2, and E: A -> Im¹ F."""
    M = F.dom
    first = {}
    pairs = []
    for f in M.morphisms:
        key = (M.src(f), M.tgt(f), F.mmap[f])
        if key in first:
            pairs.append((first[key], f))
        else:
            first[key] = f
    return quotient_module(M, pairs)


# ---------------------------------------------------------------------------
# factorizations


@dataclass(frozen=True, eq=False)
class Factorization:
    hom: RModHom
    E: RModHom
    Omega: RModHom
    M: RModHom
    flags: dict  # name -> Verdict
    report: CheckReport


def _omega_maps(F: RModHom, I1: RModule, I2: RModule, mor_of: Callable) -> RModHom:
    """Ω on objects A ↦ (A, 1, FA) with components F₊, F₀, F₂."""
    M, N = F.dom, F.cod
    om = {A: (A, N.ident(F.omap[A]), F.omap[A]) for A in M.objects}
    mm = {x: (om[I1.src(x)], mor_of(x), om[I1.tgt(x)]) for x in I1.morphisms}
    objs = M.objects
    fplus = {(a, b): (om[M.add(a, b)], F.fplus[(a, b)], I2.add(om[a], om[b])) for a in objs for b in objs}
    fzero = (om[M.unit], F.fzero, I2.unit)
    ftwo = {(r, a): (om[M.act(r, a)], F.ftwo[(r, a)], I2.act(r, om[a])) for r in M.ring.objects for a in objs}
    return RModHom(I1, I2, om, mm, fplus, fzero, ftwo)


def _finish(F, E, Om, Mf, flags) -> Factorization:
    ck = Checker()
    for name, H in (("E", E), ("Omega", Om), ("M", Mf)):
        ck.extend(validate_mod_hom(H), f"factor.{name}.")
    ck.run("factor.composite", [()], lambda: same_tables(composite(E, Om, Mf), F))
    for name, v in flags.items():
        if v:
            ck.run("flag." + name, [()], lambda: True)
        else:
            ck.fail("flag." + name, tuple(v.witness) if isinstance(v.witness, tuple) else (v.witness,))
    return Factorization(F, E, Om, Mf, flags, ck.report())


def factorize_pl(F: RModHom) -> Factorization:
    I1, E = im1_pl(F)
    I2 = im2_pl(F)
    Om = _omega_maps(F, I1, I2, lambda x: x[1])
    Mf = strict_hom(I2, F.cod, {x: x[2] for x in I2.objects}, {x: x[1] for x in I2.morphisms})
    flags = {"E.surjective": is_surjective(E), "Omega.equivalence": is_equivalence(Om),
             "M.full": is_full(Mf), "M.faithful": is_faithful(Mf)}
    return _finish(F, E, Om, Mf, flags)


def omega_pl_inverse(F: RModHom, I1: RModule, I2: RModule) -> tuple[RModHom, RModMor]:
    """Ω̂⁻¹: (A, φ, B) ↦ A, g ↦ φ'⁻¹∘g∘φ, and τ: Ω̂∘Ω̂⁻¹ => 1 with τ = φ."""
    N = F.cod
    back = strict_hom(I2, I1, {x: x[0] for x in I2.objects},
                      {m: (m[0][0], N.then(m[0][1], m[1], N.inv(m[2][1])), m[2][0]) for m in I2.morphisms})
    Om = _omega_maps(F, I1, I2, lambda x: x[1])
    tau = RModMor(compose_hom(back, Om), identity_mod_hom(I2),
                  {x: (Om.omap[x[0]], x[1], x) for x in I2.objects})
    return back, tau


def factorize(F: RModHom) -> Factorization:
    I1, E = im1(F)
    I2, _ = im2(F)
    Om = _omega_maps(F, I1, I2, lambda x: F.mmap[x])
    Mf = strict_hom(I2, F.cod, {x: x[2] for x in I2.objects}, {x: x[1] for x in I2.morphisms})
    flags = {"E.surjective": is_surjective(E), "E.full": is_full(E),
             "Omega.equivalence": is_equivalence(Om), "M.faithful": is_faithful(Mf)}
    return _finish(F, E, Om, Mf, flags)


__all__ = ["im1_pl", "im2_pl", "im1", "im2", "Factorization", "factorize_pl", "factorize",
           "omega_pl_inverse"]
