"""2-rings (categorical rings), ring homomorphisms and their 2-morphisms.

The distributivity coherence is checked as ten named faces, grouped by what
they relate the distributors to: the additive associator (``dist.add_assoc.*``),
the multiplicative associator (``dist.mult_assoc.*``), the multiplicative
units (``dist.unit.*``), the symmetry (``dist.sym.*``) and the mixed
``(a+b)(c+d)`` square (``dist.interchange``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Callable, Hashable, Mapping

from .errors import MalformedTable, NotARing, Parallelism
from .groupoid import validate_groupoid
from .report import Checker, CheckReport
from .twogroup import (GroupTable, SymTwoGroup, TwoGroupHom, TwoGroupMor, _hom_shape, _parallel,
                       _require_keys, _two_group_shape, bifunctor_checks, build_discrete, check_abelian_group,
                       cyclic, discrete_morphism, hom_checks, interchange, natural_checks, two_group_checks,
                       typing_checks, validate_two_morphism)


@dataclass(frozen=True)
class RingTable:
    """A finite commutative unital ring given by its two tables."""

    group: GroupTable
    mul: Mapping
    one: str

    @property
    def elements(self) -> tuple:
        return self.group.elements

    @property
    def add(self) -> Mapping:
        return self.group.add


def cyclic_ring(n: int) -> RingTable:
    return RingTable(cyclic(n), {(str(i), str(j)): str((i * j) % n) for i in range(n) for j in range(n)},
                     str(1 % n))


def check_ring(R: RingTable) -> None:
    try:
        check_abelian_group(R.group)
    except Exception as exc:
        raise NotARing(f"additive group: {exc}") from None
    els = R.elements
    add, mul = R.add, R.mul
    for x in els:
        for y in els:
            if mul.get((x, y)) not in els:
                raise NotARing(f"{x}*{y} is missing or outside the ring")
    if R.one not in els:
        raise NotARing("unit is not an element")
    for x in els:
        if mul[(R.one, x)] != x or mul[(x, R.one)] != x:
            raise NotARing(f"1*{x} != {x}")
        for y in els:
            if mul[(x, y)] != mul[(y, x)]:
                raise NotARing(f"multiplication not commutative at {(x, y)}")
            for z in els:
                if mul[(mul[(x, y)], z)] != mul[(x, mul[(y, z)])]:
                    raise NotARing(f"multiplication not associative at {(x, y, z)}")
                if mul[(x, add[(y, z)])] != add[(mul[(x, y)], mul[(x, z)])]:
                    raise NotARing(f"left distributivity fails at {(x, y, z)}")
                if mul[(add[(x, y)], z)] != add[(mul[(x, z)], mul[(y, z)])]:
                    raise NotARing(f"right distributivity fails at {(x, y, z)}")


@dataclass(frozen=True, eq=False)
class TwoRing(SymTwoGroup):
    mult_obj: Mapping
    mult_mor: Mapping
    one: Hashable
    massoc: Mapping
    mlunit: Mapping
    mrunit: Mapping
    ldist: Mapping
    rdist: Mapping

    @property
    def additive(self) -> SymTwoGroup:
        return self.carrier

    def mul(self, r, s):
        return self.mult_obj[(r, s)]

    def mulm(self, f, g):
        return self.mult_mor[(f, g)]


def assemble_ring(A: SymTwoGroup, *, mul: Callable, mulm: Callable, one, massoc: Callable,
                  mlunit: Callable, mrunit: Callable, ldist: Callable, rdist: Callable) -> TwoRing:
    objs, mors = A.objects, A.morphisms
    trip = list(_cartesian(objs, objs, objs))
    return TwoRing(
        A.base, A.tensor_obj, A.tensor_mor, A.unit, A.assoc, A.lunit, A.runit, A.sym, A.dual, A.eta,
        {(a, b): mul(a, b) for a in objs for b in objs},
        {(f, g): mulm(f, g) for f in mors for g in mors},
        one,
        {t: massoc(*t) for t in trip},
        {a: mlunit(a) for a in objs},
        {a: mrunit(a) for a in objs},
        {t: ldist(*t) for t in trip},
        {t: rdist(*t) for t in trip},
    )


def build_discrete_ring(R: RingTable) -> TwoRing:
    check_ring(R)
    A = build_discrete(R.group)
    ident = A.base.id_of
    to_obj = {discrete_morphism(x): x for x in R.elements}
    mul = lambda a, b: R.mul[(a, b)]
    return assemble_ring(
        A, mul=mul, mulm=lambda f, g: ident[mul(to_obj[f], to_obj[g])], one=R.one,
        massoc=lambda a, b, c: ident[mul(mul(a, b), c)],
        mlunit=lambda a: ident[a], mrunit=lambda a: ident[a],
        ldist=lambda r, s, t: ident[mul(r, A.add(s, t))],
        rdist=lambda r, s, t: ident[mul(A.add(r, s), t)])


def _ring_shape(R: TwoRing) -> None:
    _two_group_shape(R)
    objs, mors = R.objects, R.morphisms
    O, M = set(objs), set(mors)
    if R.one not in O:
        raise MalformedTable(f"one {R.one!r} is not an object")
    _require_keys(R.mult_obj, _cartesian(objs, objs), "mult object", O)
    _require_keys(R.mult_mor, _cartesian(mors, mors), "mult morphism", M)
    for name in ("massoc", "ldist", "rdist"):
        _require_keys(getattr(R, name), _cartesian(objs, objs, objs), name, M)
    _require_keys(R.mlunit, objs, "mlunit", M)
    _require_keys(R.mrunit, objs, "mrunit", M)


def ring_checks(ck: Checker, R: TwoRing, prefix: str = "ring.") -> None:
    G = R.base
    objs = R.objects
    add, mul, addm, mulm, ident, then = R.add, R.mul, R.addm, R.mulm, R.ident, R.then
    L, Rd, MA = R.ldist, R.rdist, R.massoc
    trip = list(_cartesian(objs, objs, objs))
    quad = lambda: _cartesian(objs, objs, objs, objs)

    bifunctor_checks(ck, prefix + "mult.bifunctor", G, G, G, R.mult_obj, R.mult_mor)
    typing_checks(ck, prefix + "massoc.typing", trip, G, lambda a, b, c: MA[(a, b, c)],
                  lambda a, b, c: (mul(mul(a, b), c), mul(a, mul(b, c))))
    typing_checks(ck, prefix + "mlunit.typing", [(a,) for a in objs], G, lambda a: R.mlunit[a],
                  lambda a: (mul(R.one, a), a))
    typing_checks(ck, prefix + "mrunit.typing", [(a,) for a in objs], G, lambda a: R.mrunit[a],
                  lambda a: (mul(a, R.one), a))
    typing_checks(ck, prefix + "ldist.typing", trip, G, lambda r, s, t: L[(r, s, t)],
                  lambda r, s, t: (mul(r, add(s, t)), add(mul(r, s), mul(r, t))))
    typing_checks(ck, prefix + "rdist.typing", trip, G, lambda r, s, t: Rd[(r, s, t)],
                  lambda r, s, t: (mul(add(r, s), t), add(mul(r, t), mul(s, t))))

    natural_checks(ck, prefix + "massoc.natural", [G, G, G], G, lambda a, b, c: MA[(a, b, c)],
                   lambda f, g, h: mulm(mulm(f, g), h), lambda f, g, h: mulm(f, mulm(g, h)))
    natural_checks(ck, prefix + "mlunit.natural", [G], G, lambda a: R.mlunit[a],
                   lambda f: mulm(ident(R.one), f), lambda f: f)
    natural_checks(ck, prefix + "mrunit.natural", [G], G, lambda a: R.mrunit[a],
                   lambda f: mulm(f, ident(R.one)), lambda f: f)
    natural_checks(ck, prefix + "ldist.natural", [G, G, G], G, lambda r, s, t: L[(r, s, t)],
                   lambda f, g, h: mulm(f, addm(g, h)), lambda f, g, h: addm(mulm(f, g), mulm(f, h)))
    natural_checks(ck, prefix + "rdist.natural", [G, G, G], G, lambda r, s, t: Rd[(r, s, t)],
                   lambda f, g, h: mulm(addm(f, g), h), lambda f, g, h: addm(mulm(f, h), mulm(g, h)))

    ck.run(prefix + "mult.pentagon", quad(),
           lambda a, b, c, d: then(MA[(mul(a, b), c, d)], MA[(a, b, mul(c, d))])
           == then(mulm(MA[(a, b, c)], ident(d)), MA[(a, mul(b, c), d)], mulm(ident(a), MA[(b, c, d)])))
    ck.run(prefix + "mult.triangle", _cartesian(objs, objs),
           lambda a, b: then(MA[(a, R.one, b)], mulm(ident(a), R.mlunit[b]))
           == mulm(R.mrunit[a], ident(b)))

    # r(a+b+c) and (a+b+c)s against the additive associator
    ck.run(prefix + "dist.add_assoc.left", quad(),
           lambda r, a, b, c: then(mulm(ident(r), R.assoc[(a, b, c)]), L[(r, a, add(b, c))],
                                   addm(ident(mul(r, a)), L[(r, b, c)]))
           == then(L[(r, add(a, b), c)], addm(L[(r, a, b)], ident(mul(r, c))),
                   R.assoc[(mul(r, a), mul(r, b), mul(r, c))]))
    ck.run(prefix + "dist.add_assoc.right", quad(),
           lambda a, b, c, s: then(mulm(R.assoc[(a, b, c)], ident(s)), Rd[(a, add(b, c), s)],
                                   addm(ident(mul(a, s)), Rd[(b, c, s)]))
           == then(Rd[(add(a, b), c, s)], addm(Rd[(a, b, s)], ident(mul(c, s))),
                   R.assoc[(mul(a, s), mul(b, s), mul(c, s))]))
    ck.run(prefix + "dist.sym.left", trip,
           lambda r, a, b: then(mulm(ident(r), R.sym[(a, b)]), L[(r, b, a)])
           == then(L[(r, a, b)], R.sym[(mul(r, a), mul(r, b))]))
    ck.run(prefix + "dist.sym.right", trip,
           lambda a, b, s: then(mulm(R.sym[(a, b)], ident(s)), Rd[(b, a, s)])
           == then(Rd[(a, b, s)], R.sym[(mul(a, s), mul(b, s))]))
    # (rs)(a+b) and (a+b)(st) against the multiplicative associator
    ck.run(prefix + "dist.mult_assoc.left", quad(),
           lambda r, s, a, b: then(MA[(r, s, add(a, b))], mulm(ident(r), L[(s, a, b)]),
                                   L[(r, mul(s, a), mul(s, b))])
           == then(L[(mul(r, s), a, b)], addm(MA[(r, s, a)], MA[(r, s, b)])))
    ck.run(prefix + "dist.mult_assoc.right", quad(),
           lambda a, b, s, t: then(mulm(Rd[(a, b, s)], ident(t)), Rd[(mul(a, s), mul(b, s), t)],
                                   addm(MA[(a, s, t)], MA[(b, s, t)]))
           == then(MA[(add(a, b), s, t)], Rd[(a, b, mul(s, t))]))
    ck.run(prefix + "dist.mult_assoc.middle", quad(),
           lambda r, a, b, t: then(mulm(L[(r, a, b)], ident(t)), Rd[(mul(r, a), mul(r, b), t)],
                                   addm(MA[(r, a, t)], MA[(r, b, t)]))
           == then(MA[(r, add(a, b), t)], mulm(ident(r), Rd[(a, b, t)]), L[(r, mul(a, t), mul(b, t))]))
    ck.run(prefix + "dist.unit.left", _cartesian(objs, objs),
           lambda a, b: then(L[(R.one, a, b)], addm(R.mlunit[a], R.mlunit[b])) == R.mlunit[add(a, b)])
    ck.run(prefix + "dist.unit.right", _cartesian(objs, objs),
           lambda a, b: then(Rd[(a, b, R.one)], addm(R.mrunit[a], R.mrunit[b])) == R.mrunit[add(a, b)])
    ck.run(prefix + "dist.interchange", quad(),
           lambda a, b, c, d: then(L[(add(a, b), c, d)], addm(Rd[(a, b, c)], Rd[(a, b, d)]))
           == then(Rd[(a, b, add(c, d))], addm(L[(a, c, d)], L[(b, c, d)]),
                   interchange(R, mul(a, c), mul(a, d), mul(b, c), mul(b, d))))


def validate_two_ring(R: TwoRing) -> CheckReport:
    ck = Checker()
    ck.extend(validate_groupoid(R.base))
    _ring_shape(R)
    two_group_checks(ck, R)
    ring_checks(ck, R)
    return ck.report()


# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class TwoRingHom(TwoGroupHom):
    fdot: Mapping
    fone: Hashable

    def _composite_extra(self, G: "TwoRingHom") -> dict:
        C = G.cod
        F = self
        fdot = {(r, s): C.comp(G.fdot[(F.omap[r], F.omap[s])], G.mmap[F.fdot[(r, s)]])
                for r in F.dom.objects for s in F.dom.objects}
        return {"fdot": fdot, "fone": C.comp(G.fone, G.mmap[F.fone])}


@dataclass(frozen=True, eq=False)
class TwoRingMor(TwoGroupMor):
    pass


def ring_hom_checks(ck: Checker, F: TwoRingHom, prefix: str = "ringhom.") -> None:
    A, B = F.dom, F.cod
    om, mm, fd = F.omap, F.mmap, F.fdot
    objs = A.objects
    H = B.base
    then, mulm, addm, ident = B.then, B.mulm, B.addm, B.ident
    trip = list(_cartesian(objs, objs, objs))

    typing_checks(ck, prefix + "fdot.typing", _cartesian(objs, objs), H, lambda r, s: fd[(r, s)],
                  lambda r, s: (om[A.mul(r, s)], B.mul(om[r], om[s])))
    ck.run(prefix + "fone.typing", [(A.one,)], lambda o: H.boundary(F.fone) == (om[o], B.one))
    natural_checks(ck, prefix + "fdot.natural", [A.base, A.base], H, lambda r, s: fd[(r, s)],
                   lambda f, g: mm[A.mulm(f, g)], lambda f, g: mulm(mm[f], mm[g]))
    ck.run(prefix + "mult.assoc", trip,
           lambda r, s, t: then(mm[A.massoc[(r, s, t)]], fd[(r, A.mul(s, t))], mulm(ident(om[r]), fd[(s, t)]))
           == then(fd[(A.mul(r, s), t)], mulm(fd[(r, s)], ident(om[t])), B.massoc[(om[r], om[s], om[t])]))
    ck.run(prefix + "mult.lunit", [(r,) for r in objs],
           lambda r: then(fd[(A.one, r)], mulm(F.fone, ident(om[r])), B.mlunit[om[r]]) == mm[A.mlunit[r]])
    ck.run(prefix + "mult.runit", [(r,) for r in objs],
           lambda r: then(fd[(r, A.one)], mulm(ident(om[r]), F.fone), B.mrunit[om[r]]) == mm[A.mrunit[r]])
    ck.run(prefix + "ldist", trip,
           lambda r, s, t: then(fd[(r, A.add(s, t))], mulm(ident(om[r]), F.fplus[(s, t)]),
                                B.ldist[(om[r], om[s], om[t])])
           == then(mm[A.ldist[(r, s, t)]], F.fplus[(A.mul(r, s), A.mul(r, t))],
                   addm(fd[(r, s)], fd[(r, t)])))
    ck.run(prefix + "rdist", trip,
           lambda r, s, t: then(fd[(A.add(r, s), t)], mulm(F.fplus[(r, s)], ident(om[t])),
                                B.rdist[(om[r], om[s], om[t])])
           == then(mm[A.rdist[(r, s, t)]], F.fplus[(A.mul(r, t), A.mul(s, t))],
                   addm(fd[(r, t)], fd[(s, t)])))


def validate_ring_hom(F: TwoRingHom) -> CheckReport:
    _hom_shape(F)
    A, B = F.dom, F.cod
    _require_keys(F.fdot, _cartesian(A.objects, A.objects), "fdot", set(B.morphisms))
    if F.fone not in B.base.src:
        raise MalformedTable(f"fone {F.fone!r} is not a morphism")
    ck = Checker()
    hom_checks(ck, F)
    ring_hom_checks(ck, F)
    return ck.report()


def validate_ring_two_morphism(e: TwoGroupMor) -> CheckReport:
    if not _parallel(e.source, e.target):
        raise Parallelism("source and target homs do not share domain and codomain")
    F, G = e.source, e.target
    A, B = F.dom, F.cod
    ck = Checker()
    ck.extend(validate_two_morphism(e))
    c = e.component
    ck.run("ringmor.mult", _cartesian(A.objects, A.objects),
           lambda r, s: B.comp(G.fdot[(r, s)], c[A.mul(r, s)]) == B.comp(B.mulm(c[r], c[s]), F.fdot[(r, s)]))
    ck.run("ringmor.one", [(A.one,)], lambda o: B.comp(G.fone, c[o]) == F.fone)
    return ck.report()
