"""Finite groupoids as explicit tables, plus functors, transformations and quotients.

A groupoid stores its composition as a dict keyed by ``(g, f)`` meaning
``g∘f``; the key is present exactly when ``tgt(f) == src(g)``.

>>> G = FinGroupoid.from_group("*", ["0", "1"], lambda x, y: str((int(x) + int(y)) % 2))
>>> G.compose("1", "1")
'0'
>>> validate_groupoid(G).ok
True
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as _cartesian
from typing import Callable, Generic, Hashable, Iterable, Mapping, TypeVar

from .errors import CompositionError, MalformedTable, NotParallel
from .ids import order_key, ordered
from .report import Checker, CheckReport

T = TypeVar("T", bound=Hashable)


class DisjointSet(Generic[T]):
    """Union-find whose class representative is always the order-least member."""

    def __init__(self, items: Iterable[T] = ()):
        self._parent: dict[T, T] = {}
        for x in items:
            self._parent[x] = x

    def add(self, x: T) -> None:
        self._parent.setdefault(x, x)

    def find(self, x: T) -> T:
        parent = self._parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:  # path compression
            parent[x], x = root, parent[x]
        return root

    def union(self, x: T, y: T) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if order_key(ry) < order_key(rx):
            rx, ry = ry, rx
        self._parent[ry] = rx
        return True

    def classes(self) -> dict[T, list[T]]:
        out: dict[T, list[T]] = defaultdict(list)
        for x in self._parent:
            out[self.find(x)].append(x)
        return dict(out)

    def __contains__(self, x: object) -> bool:
        return x in self._parent


@dataclass(frozen=True, eq=False)
class FinGroupoid:
    objects: tuple
    src: Mapping
    tgt: Mapping
    id_of: Mapping
    comp: Mapping
    inv: Mapping

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, FinGroupoid):
            return NotImplemented
        return (set(self.objects) == set(other.objects) and self.src == other.src
                and self.tgt == other.tgt and self.id_of == other.id_of
                and self.comp == other.comp and self.inv == other.inv)

    __hash__ = None  # type: ignore[assignment]

    # construction -------------------------------------------------------

    @classmethod
    def tabulate(cls, objects: Iterable, arrows: Mapping, compose: Callable) -> "FinGroupoid":
        """Build from ``arrows: id -> (src, tgt)`` and a composition callable.

        Identities and inverses are found by search, so ``compose`` is the
        only structure that has to be supplied.
        """
        objs = tuple(ordered(set(objects)))
        src = {f: s for f, (s, _) in arrows.items()}
        tgt = {f: t for f, (_, t) in arrows.items()}
        out_of: dict = defaultdict(list)
        into: dict = defaultdict(list)
        for f in ordered(arrows):
            out_of[src[f]].append(f)
            into[tgt[f]].append(f)
        comp = {}
        for b in objs:
            for f in into[b]:
                for g in out_of[b]:
                    h = compose(g, f)
                    if h not in src:
                        raise MalformedTable(f"composite of {g!r} after {f!r} is unknown morphism {h!r}")
                    comp[(g, f)] = h
        id_of = {}
        for a in objs:
            loops = [f for f in out_of[a] if tgt[f] == a and comp[(f, f)] == f]
            if len(loops) != 1:
                raise MalformedTable(f"object {a!r} has {len(loops)} idempotent endomorphisms")
            id_of[a] = loops[0]
        inv = {}
        for f in src:
            cands = [g for g in out_of[tgt[f]] if tgt[g] == src[f] and comp[(g, f)] == id_of[src[f]]]
            if not cands:
                raise MalformedTable(f"morphism {f!r} has no inverse")
            inv[f] = cands[0]
        return cls(objs, src, tgt, id_of, comp, inv)

    @classmethod
    def discrete(cls, objects: Iterable, name: Callable = lambda a: a) -> "FinGroupoid":
        objs = tuple(ordered(set(objects)))
        ids = {a: name(a) for a in objs}
        src = {m: a for a, m in ids.items()}
        return cls(objs, src, dict(src), ids, {(m, m): m for m in src}, {m: m for m in src})

    @classmethod
    def from_group(cls, obj, elements: Iterable, op: Callable) -> "FinGroupoid":
        """One-object groupoid; ``op(g, f)`` is the composite ``g∘f``."""
        elems = list(elements)
        return cls.tabulate([obj], {e: (obj, obj) for e in elems}, op)

    # queries -------------------------------------------------------------

    @cached_property
    def morphisms(self) -> tuple:
        return tuple(ordered(self.src))

    @cached_property
    def _homs(self) -> dict:
        homs: dict = defaultdict(list)
        for f in self.morphisms:
            homs[(self.src[f], self.tgt[f])].append(f)
        return {k: tuple(v) for k, v in homs.items()}

    @cached_property
    def _out(self) -> dict:
        out: dict = defaultdict(list)
        for f in self.morphisms:
            out[self.src[f]].append(f)
        return {k: tuple(v) for k, v in out.items()}

    def out_of(self, a) -> tuple:
        return self._out.get(a, ())

    def hom(self, a, b) -> tuple:
        return self._homs.get((a, b), ())

    def compose(self, g, f):
        try:
            return self.comp[(g, f)]
        except KeyError:
            raise CompositionError((g, f)) from None

    def then(self, *fs):
        """Diagrammatic composite: ``then(f, g, h) == h∘g∘f``."""
        acc = fs[0]
        for g in fs[1:]:
            acc = self.compose(g, acc)
        return acc

    def is_identity(self, f) -> bool:
        return self.id_of.get(self.src.get(f)) == f

    @cached_property
    def component_of(self) -> dict:
        ds = DisjointSet(self.objects)
        for f in self.morphisms:
            ds.union(self.src[f], self.tgt[f])
        return {a: ds.find(a) for a in self.objects}

    @cached_property
    def components(self) -> tuple:
        """Isomorphism classes, each an ordered tuple, listed by least member."""
        groups: dict = defaultdict(list)
        for a in self.objects:
            groups[self.component_of[a]].append(a)
        return tuple(tuple(ordered(groups[r])) for r in ordered(groups))

    def isomorphic(self, a, b) -> bool:
        return self.component_of[a] == self.component_of[b]

    def boundary(self, f) -> tuple:
        return (self.src[f], self.tgt[f])


@dataclass(frozen=True, eq=False)
class FunctorData:
    dom: FinGroupoid
    cod: FinGroupoid
    omap: Mapping
    mmap: Mapping


@dataclass(frozen=True, eq=False)
class NatTransData:
    source: FunctorData
    target: FunctorData
    component: Mapping


@dataclass(frozen=True)
class MorRelation:
    pairs: frozenset = field(default_factory=frozenset)

    @classmethod
    def of(cls, pairs: Iterable[tuple]) -> "MorRelation":
        return cls(frozenset(tuple(p) for p in pairs))


def _shape_errors(G: FinGroupoid) -> str | None:
    objs = set(G.objects)
    mors = set(G.src)
    if set(G.tgt) != mors:
        return "src and tgt cover different morphisms"
    if set(G.inv) != mors:
        return "inv does not cover every morphism"
    if set(G.id_of) != objs:
        return "id_of does not cover every object"
    for f in mors:
        if G.src[f] not in objs or G.tgt[f] not in objs:
            return f"morphism {f!r} has an unknown endpoint"
        if G.inv[f] not in mors:
            return f"inverse of {f!r} is unknown"
    for a, m in G.id_of.items():
        if m not in mors:
            return f"identity of {a!r} is unknown"
    for (g, f), h in G.comp.items():
        if g not in mors or f not in mors or h not in mors:
            return f"composition entry {(g, f)!r} references an unknown morphism"
    return None


def validate_groupoid(G: FinGroupoid) -> CheckReport:
    problem = _shape_errors(G)
    if problem:
        raise MalformedTable(problem)
    ck = Checker()
    mors = G.morphisms
    src, tgt = G.src, G.tgt

    def composable_pairs():
        for f in mors:
            for g in mors:
                if tgt[f] == src[g]:
                    yield (g, f)

    def comp_typed(g, f):
        h = G.comp[(g, f)]
        return src[h] == src[f] and tgt[h] == tgt[g]

    ck.run("groupoid.composition.defined", composable_pairs(), comp_typed)
    ck.run("groupoid.composition.partial", list(G.comp),
           lambda g, f: tgt[f] == src[g])

    def triples():
        for f in mors:
            for g in G.out_of(tgt[f]):
                for h in G.out_of(tgt[g]):
                    yield (h, g, f)

    ck.run("groupoid.associativity", triples(),
           lambda h, g, f: G.compose(G.compose(h, g), f) == G.compose(h, G.compose(g, f)))
    ck.run("groupoid.identity", [(f,) for f in mors],
           lambda f: (src[G.id_of[src[f]]] == src[f] and tgt[G.id_of[src[f]]] == src[f]
                      and G.compose(G.id_of[tgt[f]], f) == f
                      and G.compose(f, G.id_of[src[f]]) == f))
    ck.run("groupoid.inverse", [(f,) for f in mors],
           lambda f: (G.compose(G.inv[f], f) == G.id_of[src[f]]
                      and G.compose(f, G.inv[f]) == G.id_of[tgt[f]]))
    return ck.report()


def functor_checks(ck: Checker, axiom: str, dom: FinGroupoid, cod: FinGroupoid,
                   omap: Mapping, mmap: Mapping) -> None:
    """Append one entry checking that (omap, mmap) is a functor dom -> cod."""

    def typed(f):
        g = mmap[f]
        return cod.src[g] == omap[dom.src[f]] and cod.tgt[g] == omap[dom.tgt[f]]

    def cases():
        for a in dom.objects:
            yield ("object", a)
        for f in dom.morphisms:
            yield ("morphism", f)
        for (g, f) in dom.comp:
            yield ("composite", g, f)

    def holds(kind, *xs):
        if kind == "object":
            a = xs[0]
            return omap[a] in cod.id_of and mmap[dom.id_of[a]] == cod.id_of[omap[a]]
        if kind == "morphism":
            return typed(xs[0])
        g, f = xs
        return mmap[dom.comp[(g, f)]] == cod.compose(mmap[g], mmap[f])

    ck.run(axiom, cases(), holds)


def validate_functor(F: FunctorData) -> CheckReport:
    ck = Checker()
    functor_checks(ck, "functor", F.dom, F.cod, F.omap, F.mmap)
    return ck.report()


def validate_nat_trans(t: NatTransData) -> CheckReport:
    F, G = t.source, t.target
    ck = Checker()
    C = F.cod
    ck.run("nat.typing", [(a,) for a in F.dom.objects],
           lambda a: C.boundary(t.component[a]) == (F.omap[a], G.omap[a]))
    ck.run("nat.natural", [(f,) for f in F.dom.morphisms],
           lambda f: C.compose(t.component[F.dom.tgt[f]], F.mmap[f])
           == C.compose(G.mmap[f], t.component[F.dom.src[f]]))
    return ck.report()


def product(G: FinGroupoid, H: FinGroupoid) -> FinGroupoid:
    objects = tuple(_cartesian(G.objects, H.objects))
    src = {}
    tgt = {}
    for f, g in _cartesian(G.morphisms, H.morphisms):
        src[(f, g)] = (G.src[f], H.src[g])
        tgt[(f, g)] = (G.tgt[f], H.tgt[g])
    comp = {((g1, g2), (f1, f2)): (G.comp[(g1, f1)], H.comp[(g2, f2)])
            for (g1, f1) in G.comp for (g2, f2) in H.comp}
    id_of = {(a, b): (G.id_of[a], H.id_of[b]) for a, b in objects}
    inv = {(f, g): (G.inv[f], H.inv[g]) for f, g in src}
    return FinGroupoid(tuple(ordered(objects)), src, tgt, id_of, comp, inv)


def congruence_closure(G: FinGroupoid, pairs: Iterable[tuple],
                       extra: Callable[[DisjointSet], bool] | None = None) -> DisjointSet:
    """Smallest composition-congruence containing ``pairs``.

    ``extra`` may perform further unions (returning True if it changed
    anything); it is re-run with the composition pass until fixpoint.
    """
    ds = DisjointSet(G.morphisms)
    for f, g in pairs:
        if G.boundary(f) != G.boundary(g):
            raise NotParallel(f"{f!r} and {g!r} are not parallel")
        ds.union(f, g)
    changed = True
    while changed:
        changed = False
        for (g, f), h in G.comp.items():
            rg, rf = ds.find(g), ds.find(f)
            if (rg, rf) != (g, f) and ds.union(h, G.comp[(rg, rf)]):
                changed = True
        if extra is not None and extra(ds):
            changed = True
    return ds


def quotient_morphisms(G: FinGroupoid, R: MorRelation) -> tuple[FinGroupoid, FunctorData]:
    for f, g in R.pairs:
        if f not in G.src or g not in G.src:
            raise MalformedTable(f"relation mentions unknown morphism in {(f, g)!r}")
        if G.boundary(f) != G.boundary(g):
            raise NotParallel(f"{f!r} and {g!r} are not parallel")
    ds = congruence_closure(G, R.pairs)
    return quotient_by(G, ds)


def quotient_by(G: FinGroupoid, ds: DisjointSet) -> tuple[FinGroupoid, FunctorData]:
    """Quotient groupoid of ``G`` by a congruence given as a union-find."""
    rep = {f: ds.find(f) for f in G.morphisms}
    reps = sorted(set(rep.values()), key=order_key)
    src = {f: G.src[f] for f in reps}
    tgt = {f: G.tgt[f] for f in reps}
    comp = {}
    for (g, f), h in G.comp.items():
        if rep[g] == g and rep[f] == f:
            comp[(g, f)] = rep[h]
    Q = FinGroupoid(G.objects, src, tgt,
                    {a: rep[m] for a, m in G.id_of.items()}, comp,
                    {f: rep[G.inv[f]] for f in reps})
    proj = FunctorData(G, Q, {a: a for a in G.objects}, rep)
    return Q, proj


def is_groupoid_isomorphism(F: FunctorData) -> bool:
    return (len(set(F.omap.values())) == len(F.dom.objects) == len(F.cod.objects)
            and len(set(F.mmap.values())) == len(F.dom.morphisms) == len(F.cod.morphisms))


__all__ = [
    "DisjointSet", "FinGroupoid", "FunctorData", "NatTransData", "MorRelation",
    "validate_groupoid", "validate_functor", "validate_nat_trans", "functor_checks",
    "product", "quotient_morphisms", "quotient_by", "congruence_closure",
    "is_groupoid_isomorphism",
]
