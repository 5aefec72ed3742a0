"""Symmetric 2-groups, their homomorphisms and 2-morphisms.

All structure is stored as explicit tables over object and morphism
identifiers.  Validators evaluate every coherence face on every tuple and
report the first counterexample per family.

>>> Z4 = cyclic(4)
>>> B = build_deloop(Z4)
>>> len(B.objects), len(B.morphisms)
(1, 4)
>>> validate_two_group(B).ok
True
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from functools import cached_property
from itertools import product as _cartesian
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .errors import DomainMismatch, MalformedTable, NotAGroup, Parallelism
from .groupoid import FinGroupoid, FunctorData, NatTransData, functor_checks, product, validate_groupoid
from .ids import ordered
from .report import Checker, CheckReport


def same(x, y) -> bool:
    return x is y or x == y


def _fields_equal(x, y) -> bool:
    if x is y:
        return True
    if type(x) is not type(y):
        return False
    return all(same(getattr(x, f.name), getattr(y, f.name)) for f in fields(x))


# ---------------------------------------------------------------------------
# group tables


@dataclass(frozen=True)
class GroupTable:
    """A finite abelian group as an addition table over string elements."""

    elements: tuple
    add: Mapping

    @cached_property
    def zero(self):
        return check_abelian_group(self)[0]

    @cached_property
    def neg(self) -> dict:
        return check_abelian_group(self)[1]


def cyclic(n: int) -> GroupTable:
    els = tuple(str(i) for i in range(n))
    return GroupTable(els, {(str(i), str(j)): str((i + j) % n) for i in range(n) for j in range(n)})


def direct_sum(G: GroupTable, H: GroupTable) -> GroupTable:
    els = tuple(f"{g}.{h}" for g in G.elements for h in H.elements)
    split = {f"{g}.{h}": (g, h) for g in G.elements for h in H.elements}
    add = {}
    for x in els:
        for y in els:
            (g1, h1), (g2, h2) = split[x], split[y]
            add[(x, y)] = f"{G.add[(g1, g2)]}.{H.add[(h1, h2)]}"
    return GroupTable(els, add)


def check_abelian_group(T: GroupTable) -> tuple:
    """Return (zero, negation) or raise NOT_GROUP / NOT_ABELIAN."""
    els = list(T.elements)
    es = set(els)
    for x in els:
        for y in els:
            if T.add.get((x, y)) not in es:
                raise NotAGroup(f"{x}+{y} is missing or outside the group")
    for x in els:
        for y in els:
            for z in els:
                if T.add[(T.add[(x, y)], z)] != T.add[(x, T.add[(y, z)])]:
                    raise NotAGroup(f"addition not associative at {(x, y, z)}")
    zeros = [e for e in els if all(T.add[(e, x)] == x == T.add[(x, e)] for x in els)]
    if not zeros:
        raise NotAGroup("no neutral element")
    zero = zeros[0]
    neg = {}
    for x in els:
        cand = [y for y in els if T.add[(x, y)] == zero == T.add[(y, x)]]
        if not cand:
            raise NotAGroup(f"{x} has no inverse")
        neg[x] = cand[0]
    for x in els:
        for y in els:
            if T.add[(x, y)] != T.add[(y, x)]:
                raise NotAGroup(f"{x}+{y} != {y}+{x}", code="NOT_ABELIAN")
    return zero, neg


# ---------------------------------------------------------------------------
# symmetric 2-groups


@dataclass(frozen=True, eq=False)
class SymTwoGroup:
    base: FinGroupoid
    tensor_obj: Mapping
    tensor_mor: Mapping
    unit: Hashable
    assoc: Mapping
    lunit: Mapping
    runit: Mapping
    sym: Mapping
    dual: Mapping
    eta: Mapping

    __eq__ = _fields_equal
    __hash__ = None  # type: ignore[assignment]

    @property
    def objects(self) -> tuple:
        return self.base.objects

    @property
    def morphisms(self) -> tuple:
        return self.base.morphisms

    @cached_property
    def tensor(self) -> FunctorData:
        return FunctorData(product(self.base, self.base), self.base, self.tensor_obj, self.tensor_mor)

    @cached_property
    def carrier(self) -> "SymTwoGroup":
        """The bare symmetric 2-group (drops extra structure of subclasses)."""
        if type(self) is SymTwoGroup:
            return self
        return SymTwoGroup(*(getattr(self, f.name) for f in fields(SymTwoGroup)))

    def add(self, a, b):
        return self.tensor_obj[(a, b)]

    def addm(self, f, g):
        return self.tensor_mor[(f, g)]

    def ident(self, a):
        return self.base.id_of[a]

    def inv(self, f):
        return self.base.inv[f]

    def comp(self, g, f):
        return self.base.compose(g, f)

    def then(self, *fs):
        return self.base.then(*fs)

    def hom(self, a, b) -> tuple:
        return self.base.hom(a, b)

    def src(self, f):
        return self.base.src[f]

    def tgt(self, f):
        return self.base.tgt[f]

    def boundary(self, f) -> tuple:
        return self.base.boundary(f)

    def addm_id(self, f, b):
        """f + 1_b"""
        return self.tensor_mor[(f, self.base.id_of[b])]

    def id_addm(self, a, g):
        """1_a + g"""
        return self.tensor_mor[(self.base.id_of[a], g)]


def assemble_two_group(base: FinGroupoid, *, add: Callable, addm: Callable, unit,
                       assoc: Callable, lunit: Callable, runit: Callable, sym: Callable,
                       dual: Callable, eta: Callable) -> SymTwoGroup:
    """Tabulate a symmetric 2-group from callables on objects/morphisms."""
    objs, mors = base.objects, base.morphisms
    return SymTwoGroup(
        base,
        {(a, b): add(a, b) for a in objs for b in objs},
        {(f, g): addm(f, g) for f in mors for g in mors},
        unit,
        {(a, b, c): assoc(a, b, c) for a in objs for b in objs for c in objs},
        {a: lunit(a) for a in objs},
        {a: runit(a) for a in objs},
        {(a, b): sym(a, b) for a in objs for b in objs},
        {a: dual(a) for a in objs},
        {a: eta(a) for a in objs},
    )


def _strict(base: FinGroupoid, add: Callable, addm: Callable, unit, neg: Callable) -> SymTwoGroup:
    ident = base.id_of
    return assemble_two_group(
        base, add=add, addm=addm, unit=unit,
        assoc=lambda a, b, c: ident[add(add(a, b), c)],
        lunit=lambda a: ident[a], runit=lambda a: ident[a],
        sym=lambda a, b: ident[add(a, b)],
        dual=neg, eta=lambda a: ident[unit])


def discrete_morphism(x):
    """Name of the identity morphism of object ``x`` in a discrete groupoid."""
    return f"i{x}" if isinstance(x, str) else ("i", x)


def build_discrete(T: GroupTable) -> SymTwoGroup:
    """D(G): objects are group elements, only identity morphisms."""
    zero, neg = check_abelian_group(T)
    base = FinGroupoid.discrete(T.elements, discrete_morphism)
    to_obj = {discrete_morphism(x): x for x in T.elements}
    return _strict(base, lambda a, b: T.add[(a, b)],
                   lambda f, g: discrete_morphism(T.add[(to_obj[f], to_obj[g])]),
                   zero, lambda a: neg[a])


def build_deloop(T: GroupTable, obj: str = "0") -> SymTwoGroup:
    """B(H): one object, morphisms the elements of H, everything strict."""
    check_abelian_group(T)
    base = FinGroupoid.from_group(obj, T.elements, lambda g, f: T.add[(g, f)])
    return _strict(base, lambda a, b: obj, lambda f, g: T.add[(f, g)], obj, lambda a: obj)


# ---------------------------------------------------------------------------
# reusable families of checks


def bifunctor_checks(ck: Checker, axiom: str, G: FinGroupoid, H: FinGroupoid, K: FinGroupoid,
                     omap: Mapping, mmap: Mapping) -> None:
    """Check that (omap, mmap) is a bifunctor G x H -> K.

    Functoriality in each variable separately plus the two interchange
    decompositions of ``mmap[(f, g)]``; together these are equivalent to
    full bifunctoriality and cost far fewer evaluations.
    """
    gid, hid = G.id_of, H.id_of

    def cases():
        for a in G.objects:
            for b in H.objects:
                yield ("identity", a, b)
        for f in G.morphisms:
            for g in H.morphisms:
                yield ("interchange", f, g)
        for (f2, f1) in G.comp:
            for b in H.objects:
                yield ("left", f2, f1, b)
        for (g2, g1) in H.comp:
            for a in G.objects:
                yield ("right", a, g2, g1)

    def holds(kind, *xs):
        if kind == "identity":
            a, b = xs
            return mmap[(gid[a], hid[b])] == K.id_of[omap[(a, b)]]
        if kind == "interchange":
            f, g = xs
            fg = mmap[(f, g)]
            if K.boundary(fg) != (omap[(G.src[f], H.src[g])], omap[(G.tgt[f], H.tgt[g])]):
                return False
            a, a2, b, b2 = G.src[f], G.tgt[f], H.src[g], H.tgt[g]
            return (fg == K.compose(mmap[(f, hid[b2])], mmap[(gid[a], g)])
                    == K.compose(mmap[(gid[a2], g)], mmap[(f, hid[b])]))
        if kind == "left":
            f2, f1, b = xs
            return mmap[(G.comp[(f2, f1)], hid[b])] == K.compose(mmap[(f2, hid[b])], mmap[(f1, hid[b])])
        a, g2, g1 = xs
        return mmap[(gid[a], H.comp[(g2, g1)])] == K.compose(mmap[(gid[a], g2)], mmap[(gid[a], g1)])

    ck.run(axiom, cases(), holds)


def natural_checks(ck: Checker, axiom: str, groupoids: Sequence[FinGroupoid], C: FinGroupoid,
                   component: Callable, source: Callable, target: Callable) -> None:
    """Naturality of ``component`` from functor ``source`` to ``target``.

    Checked one argument at a time (other arguments identities), which is
    equivalent to joint naturality when source and target are functorial.
    """

    n = len(groupoids)

    def cases():
        for pos, G in enumerate(groupoids):
            others = [i for i in range(n) if i != pos]
            for f in G.morphisms:
                if G.is_identity(f):
                    continue
                for objs in _cartesian(*(groupoids[i].objects for i in others)):
                    ms = [f] * n
                    for i, o in zip(others, objs):
                        ms[i] = groupoids[i].id_of[o]
                    yield tuple(ms)

    def holds(*ms):
        srcs = tuple(g.src[m] for g, m in zip(groupoids, ms))
        tgts = tuple(g.tgt[m] for g, m in zip(groupoids, ms))
        return (C.compose(component(*tgts), source(*ms))
                == C.compose(target(*ms), component(*srcs)))

    ck.run(axiom, cases(), holds)


def typing_checks(ck: Checker, axiom: str, cases: Iterable[tuple], C: FinGroupoid,
                  component: Callable, boundary: Callable) -> None:
    ck.run(axiom, cases, lambda *xs: C.boundary(component(*xs)) == boundary(*xs))


def _require_keys(table: Mapping, keys: Iterable, what: str, values: set | None = None) -> None:
    keys = list(keys)
    if len(table) != len(keys) or any(k not in table for k in keys):
        raise MalformedTable(f"{what} table does not cover its domain")
    if values is not None:
        for k in keys:
            if table[k] not in values:
                raise MalformedTable(f"{what}[{k!r}] = {table[k]!r} is not a known identifier")


def _two_group_shape(A: SymTwoGroup) -> None:
    objs, mors = A.objects, A.morphisms
    O, M = set(objs), set(mors)
    if A.unit not in O:
        raise MalformedTable(f"unit {A.unit!r} is not an object")
    _require_keys(A.tensor_obj, _cartesian(objs, objs), "tensor object", O)
    _require_keys(A.tensor_mor, _cartesian(mors, mors), "tensor morphism", M)
    _require_keys(A.assoc, _cartesian(objs, objs, objs), "assoc", M)
    _require_keys(A.lunit, objs, "lunit", M)
    _require_keys(A.runit, objs, "runit", M)
    _require_keys(A.sym, _cartesian(objs, objs), "sym", M)
    _require_keys(A.dual, objs, "dual", O)
    _require_keys(A.eta, objs, "eta", M)


def two_group_checks(ck: Checker, A: SymTwoGroup, prefix: str = "twogroup.") -> None:
    G = A.base
    objs = A.objects
    add, addm, ident, then = A.add, A.addm, A.ident, A.then
    pairs = list(_cartesian(objs, objs))
    triples = list(_cartesian(objs, objs, objs))

    bifunctor_checks(ck, prefix + "tensor.bifunctor", G, G, G, A.tensor_obj, A.tensor_mor)

    typing_checks(ck, prefix + "assoc.typing", triples, G, lambda a, b, c: A.assoc[(a, b, c)],
                  lambda a, b, c: (add(add(a, b), c), add(a, add(b, c))))
    typing_checks(ck, prefix + "lunit.typing", [(a,) for a in objs], G, lambda a: A.lunit[a],
                  lambda a: (add(A.unit, a), a))
    typing_checks(ck, prefix + "runit.typing", [(a,) for a in objs], G, lambda a: A.runit[a],
                  lambda a: (add(a, A.unit), a))
    typing_checks(ck, prefix + "sym.typing", pairs, G, lambda a, b: A.sym[(a, b)],
                  lambda a, b: (add(a, b), add(b, a)))
    typing_checks(ck, prefix + "eta.typing", [(a,) for a in objs], G, lambda a: A.eta[a],
                  lambda a: (add(A.dual[a], a), A.unit))

    natural_checks(ck, prefix + "assoc.natural", [G, G, G], G, lambda a, b, c: A.assoc[(a, b, c)],
                   lambda f, g, h: addm(addm(f, g), h), lambda f, g, h: addm(f, addm(g, h)))
    natural_checks(ck, prefix + "lunit.natural", [G], G, lambda a: A.lunit[a],
                   lambda f: addm(ident(A.unit), f), lambda f: f)
    natural_checks(ck, prefix + "runit.natural", [G], G, lambda a: A.runit[a],
                   lambda f: addm(f, ident(A.unit)), lambda f: f)
    natural_checks(ck, prefix + "sym.natural", [G, G], G, lambda a, b: A.sym[(a, b)],
                   lambda f, g: addm(f, g), lambda f, g: addm(g, f))

    ck.run(prefix + "pentagon", _cartesian(objs, objs, objs, objs),
           lambda a, b, c, d: then(A.assoc[(add(a, b), c, d)], A.assoc[(a, b, add(c, d))])
           == then(addm(A.assoc[(a, b, c)], ident(d)), A.assoc[(a, add(b, c), d)],
                   addm(ident(a), A.assoc[(b, c, d)])))
    ck.run(prefix + "triangle", pairs,
           lambda a, b: then(A.assoc[(a, A.unit, b)], addm(ident(a), A.lunit[b]))
           == addm(A.runit[a], ident(b)))
    ck.run(prefix + "sym.involution", pairs,
           lambda a, b: then(A.sym[(a, b)], A.sym[(b, a)]) == ident(add(a, b)))
    ck.run(prefix + "hexagon", triples,
           lambda a, b, c: then(A.assoc[(a, b, c)], A.sym[(a, add(b, c))], A.assoc[(b, c, a)])
           == then(addm(A.sym[(a, b)], ident(c)), A.assoc[(b, a, c)], addm(ident(b), A.sym[(a, c)])))


def validate_two_group(A: SymTwoGroup) -> CheckReport:
    ck = Checker()
    ck.extend(validate_groupoid(A.base))
    _two_group_shape(A)
    two_group_checks(ck, A)
    return ck.report()


def interchange(A: SymTwoGroup, a, b, c, d):
    """(a+b)+(c+d) -> (a+c)+(b+d), via re-bracketing to the right."""
    i = A.ident
    return A.then(A.assoc[(a, b, A.add(c, d))],
                  A.addm(i(a), A.inv(A.assoc[(b, c, d)])),
                  A.addm(i(a), A.addm(A.sym[(b, c)], i(d))),
                  A.addm(i(a), A.assoc[(c, b, d)]),
                  A.inv(A.assoc[(a, c, A.add(b, d))]))


def interchange_alt(A: SymTwoGroup, a, b, c, d):
    """Same boundary as :func:`interchange`, re-bracketing to the left instead."""
    i = A.ident
    return A.then(A.inv(A.assoc[(A.add(a, b), c, d)]),
                  A.addm(A.assoc[(a, b, c)], i(d)),
                  A.addm(A.addm(i(a), A.sym[(b, c)]), i(d)),
                  A.addm(A.inv(A.assoc[(a, c, b)]), i(d)),
                  A.assoc[(A.add(a, c), b, d)])


# ---------------------------------------------------------------------------
# homomorphisms and 2-morphisms


@dataclass(frozen=True, eq=False)
class TwoGroupHom:
    dom: SymTwoGroup
    cod: SymTwoGroup
    omap: Mapping
    mmap: Mapping
    fplus: Mapping
    fzero: Hashable

    __eq__ = _fields_equal
    __hash__ = None  # type: ignore[assignment]

    @property
    def fun(self) -> FunctorData:
        return FunctorData(self.dom.base, self.cod.base, self.omap, self.mmap)

    def _composite_extra(self, G: "TwoGroupHom") -> dict:
        return {}

    def table_key(self) -> tuple:
        """Hashable key; two homs with the same dom/cod are equal iff keys are."""
        return tuple(frozenset(getattr(self, f.name).items()) if isinstance(getattr(self, f.name), Mapping)
                     else getattr(self, f.name)
                     for f in fields(self) if f.name not in ("dom", "cod"))

    def signature(self) -> tuple:
        """Sortable form of :meth:`table_key` used for canonical ordering."""
        out = []
        for f in fields(self):
            if f.name in ("dom", "cod"):
                continue
            v = getattr(self, f.name)
            out.append(tuple((k, v[k]) for k in ordered(v)) if isinstance(v, Mapping) else v)
        return tuple(out)


@dataclass(frozen=True, eq=False)
class TwoGroupMor:
    source: TwoGroupHom
    target: TwoGroupHom
    component: Mapping

    __eq__ = _fields_equal
    __hash__ = None  # type: ignore[assignment]

    @property
    def nat(self) -> NatTransData:
        return NatTransData(self.source.fun, self.target.fun, self.component)


def _hom_shape(F: TwoGroupHom) -> None:
    A, B = F.dom, F.cod
    _require_keys(F.omap, A.objects, "omap", set(B.objects))
    _require_keys(F.mmap, A.morphisms, "mmap", set(B.morphisms))
    _require_keys(F.fplus, _cartesian(A.objects, A.objects), "fplus", set(B.morphisms))
    if F.fzero not in B.base.src:
        raise MalformedTable(f"fzero {F.fzero!r} is not a morphism")


def hom_checks(ck: Checker, F: TwoGroupHom, prefix: str = "hom.") -> None:
    A, B = F.dom, F.cod
    G, H = A.base, B.base
    om, mm, fp = F.omap, F.mmap, F.fplus
    objs = A.objects
    pairs = list(_cartesian(objs, objs))
    then, addm, ident = B.then, B.addm, B.ident

    functor_checks(ck, prefix + "functor", G, H, om, mm)
    typing_checks(ck, prefix + "fplus.typing", pairs, H, lambda a, b: fp[(a, b)],
                  lambda a, b: (om[A.add(a, b)], B.add(om[a], om[b])))
    ck.run(prefix + "fzero.typing", [(A.unit,)], lambda u: H.boundary(F.fzero) == (om[u], B.unit))
    natural_checks(ck, prefix + "fplus.natural", [G, G], H, lambda a, b: fp[(a, b)],
                   lambda f, g: mm[A.addm(f, g)], lambda f, g: addm(mm[f], mm[g]))
    ck.run(prefix + "assoc", _cartesian(objs, objs, objs),
           lambda a, b, c: then(mm[A.assoc[(a, b, c)]], fp[(a, A.add(b, c))], addm(ident(om[a]), fp[(b, c)]))
           == then(fp[(A.add(a, b), c)], addm(fp[(a, b)], ident(om[c])), B.assoc[(om[a], om[b], om[c])]))
    ck.run(prefix + "lunit", [(a,) for a in objs],
           lambda a: then(fp[(A.unit, a)], addm(F.fzero, ident(om[a])), B.lunit[om[a]]) == mm[A.lunit[a]])
    ck.run(prefix + "runit", [(a,) for a in objs],
           lambda a: then(fp[(a, A.unit)], addm(ident(om[a]), F.fzero), B.runit[om[a]]) == mm[A.runit[a]])
    ck.run(prefix + "sym", pairs,
           lambda a, b: then(fp[(a, b)], B.sym[(om[a], om[b])]) == then(mm[A.sym[(a, b)]], fp[(b, a)]))


def validate_hom(F: TwoGroupHom) -> CheckReport:
    _hom_shape(F)
    ck = Checker()
    hom_checks(ck, F)
    return ck.report()


def identity_hom(A: SymTwoGroup, cls=TwoGroupHom, **extra) -> TwoGroupHom:
    return cls(A, A, {a: a for a in A.objects}, {f: f for f in A.morphisms},
               {(a, b): A.ident(A.add(a, b)) for a in A.objects for b in A.objects},
               A.ident(A.unit), **extra)


def compose_hom(F: TwoGroupHom, G: TwoGroupHom) -> TwoGroupHom:
    """G∘F."""
    if not same(F.cod, G.dom):
        raise DomainMismatch("codomain of the first hom is not the domain of the second")
    B = G.cod
    om = {a: G.omap[F.omap[a]] for a in F.dom.objects}
    mm = {f: G.mmap[F.mmap[f]] for f in F.dom.morphisms}
    fp = {(a, b): B.comp(G.fplus[(F.omap[a], F.omap[b])], G.mmap[F.fplus[(a, b)]])
          for a in F.dom.objects for b in F.dom.objects}
    fz = B.comp(G.fzero, G.mmap[F.fzero])
    cls = type(F) if type(F) is type(G) else TwoGroupHom
    extra = F._composite_extra(G) if cls is type(F) else {}
    return cls(F.dom, G.cod, om, mm, fp, fz, **extra)


def _parallel(F: TwoGroupHom, G: TwoGroupHom) -> bool:
    return same(F.dom, G.dom) and same(F.cod, G.cod)


def mor_checks(ck: Checker, e: TwoGroupMor, prefix: str = "mor.") -> None:
    F, G = e.source, e.target
    A, B = F.dom, F.cod
    H = B.base
    c = e.component
    objs = A.objects
    ck.run(prefix + "typing", [(a,) for a in objs],
           lambda a: H.boundary(c[a]) == (F.omap[a], G.omap[a]))
    ck.run(prefix + "natural", [(f,) for f in A.morphisms],
           lambda f: H.compose(c[A.tgt(f)], F.mmap[f]) == H.compose(G.mmap[f], c[A.src(f)]))
    ck.run(prefix + "additive", _cartesian(objs, objs),
           lambda a, b: H.compose(G.fplus[(a, b)], c[A.add(a, b)])
           == H.compose(B.addm(c[a], c[b]), F.fplus[(a, b)]))
    ck.run(prefix + "unit", [(A.unit,)], lambda u: H.compose(G.fzero, c[u]) == F.fzero)


def validate_two_morphism(e: TwoGroupMor) -> CheckReport:
    if not _parallel(e.source, e.target):
        raise Parallelism("source and target homs do not share domain and codomain")
    _require_keys(e.component, e.source.dom.objects, "component", set(e.source.cod.morphisms))
    ck = Checker()
    mor_checks(ck, e)
    return ck.report()


def identity_mor(F: TwoGroupHom, cls=TwoGroupMor) -> TwoGroupMor:
    return cls(F, F, {a: F.cod.ident(F.omap[a]) for a in F.dom.objects})


def inverse_mor(e: TwoGroupMor) -> TwoGroupMor:
    B = e.source.cod
    return type(e)(e.target, e.source, {a: B.inv(m) for a, m in e.component.items()})


def vcomp(tau: TwoGroupMor, sigma: TwoGroupMor) -> TwoGroupMor:
    """sigma∘tau, for tau: F => G and sigma: G => H."""
    if not same(tau.target, sigma.source):
        raise DomainMismatch("vertical composition needs target(tau) == source(sigma)")
    B = tau.source.cod
    return type(tau)(tau.source, sigma.target,
                     {a: B.comp(sigma.component[a], tau.component[a]) for a in tau.source.dom.objects})


def hcomp(alpha: TwoGroupMor, beta: TwoGroupMor) -> TwoGroupMor:
    """beta*alpha : G∘F => G'∘F' for alpha: F => F' and beta: G => G'."""
    F, F2 = alpha.source, alpha.target
    G, G2 = beta.source, beta.target
    if not same(F.cod, G.dom):
        raise DomainMismatch("horizontal composition needs cod(alpha) == dom(beta)")
    C = G.cod
    comp = {m: C.comp(beta.component[F2.omap[m]], G.mmap[alpha.component[m]]) for m in F.dom.objects}
    return type(alpha)(compose_hom(F, G), compose_hom(F2, G2), comp)
