"""Budgeted backtracking search for homomorphisms and 2-morphisms.

A search problem is an ordered list of variables, each with a domain that may
depend on earlier choices, and a list of constraints.  Each constraint names
the variables it reads and is evaluated as soon as the last of them is bound.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, replace
from itertools import product as _cartesian
from typing import Callable, Iterable, Iterator, Sequence

from .errors import BudgetExceeded, CompositionError, MalformedTable
from .ids import least
from .twogroup import SymTwoGroup, TwoGroupHom, TwoGroupMor, validate_hom, validate_two_morphism

BUDGET_ENV = "PICARD_BUDGET"


@dataclass(frozen=True)
class SearchBudget:
    """Limits for exhaustive searches.

    ``max_objects``/``max_morphisms`` cap the size of each input to a full
    hom enumeration; ``max_candidates`` caps search nodes and ``time_limit``
    wall-clock seconds per search.
    """

    max_objects: int = 8
    max_morphisms: int = 64
    max_candidates: int = 500_000
    time_limit: float = 60.0

    def __post_init__(self):
        if min(self.max_objects, self.max_morphisms, self.max_candidates) <= 0 or self.time_limit <= 0:
            raise ValueError("search budget limits must be positive")

    @classmethod
    def from_env(cls, override: int | None = None) -> "SearchBudget":
        """Default budget, with ``max_candidates`` taken from ``override`` or $PICARD_BUDGET."""
        if override is None:
            raw = os.environ.get(BUDGET_ENV)
            if raw:
                try:
                    override = int(raw)
                except ValueError:
                    raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
        if override is None:
            return cls()
        return replace(cls(), max_candidates=override)


class Tracker:
    """Counts search nodes and raises BudgetExceeded past the limits."""

    def __init__(self, budget: SearchBudget | None = None):
        self.budget = budget or SearchBudget()
        self.nodes = 0
        self.started = time.monotonic()

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.max_candidates:
            raise BudgetExceeded(f"search exceeded {self.budget.max_candidates} candidates")
        if self.nodes % 512 == 0 and time.monotonic() - self.started > self.budget.time_limit:
            raise BudgetExceeded(f"search exceeded {self.budget.time_limit} s")


def check_size(A: SymTwoGroup, budget: SearchBudget, what: str = "input") -> None:
    if len(A.objects) > budget.max_objects or len(A.morphisms) > budget.max_morphisms:
        raise BudgetExceeded(f"{what} has {len(A.objects)} objects and {len(A.morphisms)} morphisms; "
                             f"enumeration cap is {budget.max_objects}/{budget.max_morphisms}")


Variable = tuple  # (name, domain: Callable[[dict], Iterable])
Constraint = tuple  # (names, predicate: Callable[[dict], bool])


def solve(variables: Sequence[Variable], constraints: Iterable[Constraint],
          tracker: Tracker) -> Iterator[dict]:
    """Yield every full assignment satisfying all constraints, in domain order."""
    order = {name: i for i, (name, _) in enumerate(variables)}
    attached: list[list[Callable]] = [[] for _ in variables]
    for names, pred in constraints:
        attached[max(order[n] for n in names)].append(pred)
    asg: dict = {}

    def ok(pred) -> bool:
        try:
            return bool(pred(asg))
        except (CompositionError, KeyError):
            return False

    def rec(i: int) -> Iterator[dict]:
        if i == len(variables):
            yield dict(asg)
            return
        name, domain = variables[i]
        for v in domain(asg):
            tracker.tick()
            asg[name] = v
            if all(ok(p) for p in attached[i]):
                yield from rec(i + 1)
        asg.pop(name, None)

    yield from rec(0)


# ---------------------------------------------------------------------------
# group homomorphisms between automorphism groups


def _generators(elements: Sequence, op: Callable, unit) -> list:
    gens, reached = [], {unit}
    for g in elements:
        if g in reached:
            continue
        gens.append(g)
        frontier = list(reached)
        while frontier:
            x = frontier.pop()
            for h in gens:
                y = op(h, x)
                if y not in reached:
                    reached.add(y)
                    frontier.append(y)
    return gens


def group_homs(src: Sequence, sop: Callable, sunit, tgt: Sequence, top: Callable, tunit,
               injective: bool = False) -> Iterator[dict]:
    """All homomorphisms between two finite groups given by elements and products."""
    gens = _generators(src, sop, sunit)
    for images in _cartesian(tgt, repeat=len(gens)):
        phi = {sunit: tunit}
        frontier = [sunit]
        bad = False
        while frontier and not bad:
            x = frontier.pop()
            for g, h in zip(gens, images):
                y, v = sop(g, x), top(h, phi[x])
                if y in phi:
                    if phi[y] != v:
                        bad = True
                        break
                else:
                    phi[y] = v
                    frontier.append(y)
        if bad or len(phi) != len(src):
            continue
        if any(phi[sop(x, y)] != top(phi[x], phi[y]) for x in src for y in src):
            continue
        if injective and len(set(phi.values())) != len(phi):
            continue
        yield phi


# ---------------------------------------------------------------------------
# homomorphism problems


def _component_index(A: SymTwoGroup) -> dict:
    return A.base.component_of


def hom_problem(A: SymTwoGroup, B: SymTwoGroup, *, module: bool = False, skeletal: bool = False,
                injective: bool = False) -> tuple[list, list]:
    """Variables and constraints whose solutions are the homs A -> B.

    With ``module`` the R-2-module structure (F₂ and equivariance) is included.
    ``skeletal`` sends every object of a component to the least object of some
    component of B, with identity path images; ``injective`` keeps only
    functors that are injective on components and on automorphism groups.
    """
    G, H = A.base, B.base
    bcomp = H.component_of
    variables: list = []
    cons: list = []
    roots, path = {}, {}
    for comp in G.components:
        root = comp[0]
        for x in comp:
            roots[x] = root
            path[x] = least(G.hom(root, x)) if x != root else G.id_of[root]

    def objvar(x):
        return ("obj", x) if roots[x] == x else ("path", x)

    def img(asg, x):
        if roots[x] == x:
            return asg[("obj", x)]
        return H.tgt[asg[("path", x)]]

    reps = [c[0] for c in H.components]

    def aut(Gr, x):
        return Gr.hom(x, x)

    for comp in G.components:
        root = comp[0]
        size = len(aut(G, root))
        if skeletal:
            cands = [y for y in reps if len(aut(H, y)) == size] if injective else list(reps)
            variables.append((("obj", root), lambda asg, c=tuple(cands): c))
        else:
            variables.append((("obj", root), lambda asg: H.objects))

        def aut_dom(asg, root=root):
            y = asg[("obj", root)]
            return list(group_homs(aut(G, root), G.compose, G.id_of[root], aut(H, y), H.compose, H.id_of[y],
                                   injective=injective))

        variables.append((("aut", root), aut_dom))
        for x in comp[1:]:
            if skeletal:
                variables.append((("path", x), lambda asg, root=root: (H.id_of[asg[("obj", root)]],)))
            else:
                variables.append((("path", x), lambda asg, root=root: H.out_of(asg[("obj", root)])))

    def same_comp(names, lhs, rhs):
        cons.append((names, lambda asg: bcomp[lhs(asg)] == bcomp[rhs(asg)]))

    objs = A.objects
    u = A.unit
    same_comp({objvar(u)}, lambda asg: img(asg, u), lambda asg: B.unit)
    for a, b in _cartesian(objs, objs):
        s = A.add(a, b)
        same_comp({objvar(a), objvar(b), objvar(s)},
                  lambda asg, s=s: img(asg, s), lambda asg, a=a, b=b: B.add(img(asg, a), img(asg, b)))
    if module:
        R = A.ring
        for r, m in _cartesian(R.objects, objs):
            rm = A.act(r, m)
            same_comp({objvar(m), objvar(rm)},
                      lambda asg, rm=rm: img(asg, rm), lambda asg, r=r, m=m: B.act(r, img(asg, m)))
    if injective:
        rootlist = [c[0] for c in G.components]
        for i, p in enumerate(rootlist):
            for q in rootlist[i + 1:]:
                cons.append(({("obj", p), ("obj", q)},
                             lambda asg, p=p, q=q: bcomp[asg[("obj", p)]] != bcomp[asg[("obj", q)]]))

    def mmap_dom(asg):
        omap = {x: img(asg, x) for x in objs}
        qimg = {x: (asg[("path", x)] if roots[x] != x else H.id_of[omap[x]]) for x in objs}
        mm = {}
        for f in G.morphisms:
            x, x2 = G.src[f], G.tgt[f]
            root = roots[x]
            loop = G.then(path[x], f, G.inv[path[x2]])
            mm[f] = H.then(H.inv[qimg[x]], asg[("aut", root)][loop], qimg[x2])
        return ((omap, mm),)

    variables.append(("fun", mmap_dom))
    om = lambda asg: asg["fun"][0]
    mm = lambda asg: asg["fun"][1]
    variables.append(("fzero", lambda asg: H.hom(om(asg)[u], B.unit)))
    for a, b in _cartesian(objs, objs):
        variables.append((("fplus", a, b),
                          lambda asg, a=a, b=b: H.hom(om(asg)[A.add(a, b)], B.add(om(asg)[a], om(asg)[b]))))
    if module:
        for r, m in _cartesian(A.ring.objects, objs):
            variables.append((("ftwo", r, m),
                              lambda asg, r=r, m=m: H.hom(om(asg)[A.act(r, m)], B.act(r, om(asg)[m]))))

    _hom_constraints(A, B, cons, om, mm)
    if module:
        _module_constraints(A, B, cons, om, mm)
    return variables, cons


def _hom_constraints(A, B, cons, om, mm) -> None:
    G = A.base
    objs = A.objects
    fp = lambda asg, a, b: asg[("fplus", a, b)]
    then, addm, ident = B.then, B.addm, B.ident
    u = A.unit
    for f in G.morphisms:
        if G.is_identity(f):
            continue
        a, a2 = G.src[f], G.tgt[f]
        for b in objs:
            ib = G.id_of[b]
            cons.append(({("fplus", a, b), ("fplus", a2, b), "fun"},
                         lambda asg, f=f, a=a, a2=a2, b=b, ib=ib:
                         then(mm(asg)[A.addm(f, ib)], fp(asg, a2, b))
                         == then(fp(asg, a, b), addm(mm(asg)[f], ident(om(asg)[b])))))
            cons.append(({("fplus", b, a), ("fplus", b, a2), "fun"},
                         lambda asg, f=f, a=a, a2=a2, b=b, ib=ib:
                         then(mm(asg)[A.addm(ib, f)], fp(asg, b, a2))
                         == then(fp(asg, b, a), addm(ident(om(asg)[b]), mm(asg)[f]))))
    for a, b, c in _cartesian(objs, objs, objs):
        bc, ab = A.add(b, c), A.add(a, b)
        cons.append(({("fplus", a, bc), ("fplus", b, c), ("fplus", ab, c), ("fplus", a, b), "fun"},
                     lambda asg, a=a, b=b, c=c, ab=ab, bc=bc:
                     then(mm(asg)[A.assoc[(a, b, c)]], fp(asg, a, bc), addm(ident(om(asg)[a]), fp(asg, b, c)))
                     == then(fp(asg, ab, c), addm(fp(asg, a, b), ident(om(asg)[c])),
                             B.assoc[(om(asg)[a], om(asg)[b], om(asg)[c])])))
    for a in objs:
        cons.append(({("fplus", u, a), "fzero", "fun"},
                     lambda asg, a=a: then(fp(asg, u, a), addm(asg["fzero"], ident(om(asg)[a])),
                                           B.lunit[om(asg)[a]]) == mm(asg)[A.lunit[a]]))
        cons.append(({("fplus", a, u), "fzero", "fun"},
                     lambda asg, a=a: then(fp(asg, a, u), addm(ident(om(asg)[a]), asg["fzero"]),
                                           B.runit[om(asg)[a]]) == mm(asg)[A.runit[a]]))
    for a, b in _cartesian(objs, objs):
        cons.append(({("fplus", a, b), ("fplus", b, a), "fun"},
                     lambda asg, a=a, b=b: then(fp(asg, a, b), B.sym[(om(asg)[a], om(asg)[b])])
                     == then(mm(asg)[A.sym[(a, b)]], fp(asg, b, a))))


def _module_constraints(M, N, cons, om, mm) -> None:
    R = M.ring
    G, RG = M.base, R.base
    objs, ro = M.objects, R.objects
    then, addm, ract = N.then, N.addm, N.ract
    t = lambda asg, r, m: asg[("ftwo", r, m)]
    fp = lambda asg, a, b: asg[("fplus", a, b)]
    u = M.unit
    for p in RG.morphisms:
        if RG.is_identity(p):
            continue
        r, r2 = RG.src[p], RG.tgt[p]
        for m in objs:
            im = G.id_of[m]
            cons.append(({("ftwo", r, m), ("ftwo", r2, m), "fun"},
                         lambda asg, p=p, r=r, r2=r2, m=m, im=im:
                         then(t(asg, r, m), N.actm(p, N.ident(om(asg)[m])))
                         == then(mm(asg)[M.actm(p, im)], t(asg, r2, m))))
    for f in G.morphisms:
        if G.is_identity(f):
            continue
        m, m2 = G.src[f], G.tgt[f]
        for r in ro:
            cons.append(({("ftwo", r, m), ("ftwo", r, m2), "fun"},
                         lambda asg, f=f, r=r, m=m, m2=m2:
                         then(t(asg, r, m), ract(r, mm(asg)[f]))
                         == then(mm(asg)[M.ract(r, f)], t(asg, r, m2))))
    for r, m, n in _cartesian(ro, objs, objs):
        rm, rn = M.act(r, m), M.act(r, n)
        cons.append(({("ftwo", r, m), ("ftwo", r, n), ("ftwo", r, M.add(m, n)), ("fplus", rm, rn),
                      ("fplus", m, n), "fun"},
                     lambda asg, r=r, m=m, n=n, rm=rm, rn=rn:
                     then(mm(asg)[M.adist[(r, m, n)]], fp(asg, rm, rn), addm(t(asg, r, m), t(asg, r, n)))
                     == then(t(asg, r, M.add(m, n)), ract(r, fp(asg, m, n)),
                             N.adist[(r, om(asg)[m], om(asg)[n])])))
    for r, s, m in _cartesian(ro, ro, objs):
        rm, sm = M.act(r, m), M.act(s, m)
        cons.append(({("ftwo", r, m), ("ftwo", s, m), ("ftwo", R.add(r, s), m), ("fplus", rm, sm), "fun"},
                     lambda asg, r=r, s=s, m=m, rm=rm, sm=sm:
                     then(mm(asg)[M.bdist[(r, s, m)]], fp(asg, rm, sm), addm(t(asg, r, m), t(asg, s, m)))
                     == then(t(asg, R.add(r, s), m), N.bdist[(r, s, om(asg)[m])])))
        cons.append(({("ftwo", r, sm), ("ftwo", s, m), ("ftwo", R.mul(r, s), m), "fun"},
                     lambda asg, r=r, s=s, m=m, sm=sm:
                     then(mm(asg)[M.bassoc[(r, s, m)]], t(asg, r, sm), ract(r, t(asg, s, m)))
                     == then(t(asg, R.mul(r, s), m), N.bassoc[(r, s, om(asg)[m])])))
    for m in objs:
        cons.append(({("ftwo", R.one, m), "fun"},
                     lambda asg, m=m: then(t(asg, R.one, m), N.iunit[om(asg)[m]]) == mm(asg)[M.iunit[m]]))
    for r in ro:
        cons.append(({("ftwo", r, u), "fzero", "fun"},
                     lambda asg, r=r: then(t(asg, r, u), ract(r, asg["fzero"]), N.zzero[r])
                     == then(mm(asg)[M.zzero[r]], asg["fzero"])))


def _hom_from(A, B, asg: dict, module: bool) -> TwoGroupHom:
    omap, mmap = asg["fun"]
    fplus = {(a, b): asg[("fplus", a, b)] for a in A.objects for b in A.objects}
    if module:
        from .rmodule import RModHom
        ftwo = {(r, m): asg[("ftwo", r, m)] for r in A.ring.objects for m in A.objects}
        return RModHom(A, B, omap, mmap, fplus, asg["fzero"], ftwo)
    return TwoGroupHom(A, B, omap, mmap, fplus, asg["fzero"])


def _is_module(A) -> bool:
    from .rmodule import RModule
    return isinstance(A, RModule)


def iter_homs(A: SymTwoGroup, B: SymTwoGroup, tracker: Tracker, *, module: bool | None = None,
              skeletal: bool = False, injective: bool = False) -> Iterator[TwoGroupHom]:
    if module is None:
        module = _is_module(A) and _is_module(B)
    variables, cons = hom_problem(A, B, module=module, skeletal=skeletal, injective=injective)
    for asg in solve(variables, cons, tracker):
        yield _hom_from(A, B, asg, module)


def enumerate_homs(A: SymTwoGroup, B: SymTwoGroup, budget: SearchBudget | None = None, *,
                   module: bool | None = None) -> list[TwoGroupHom]:
    """Every hom A -> B, sorted canonically; each is re-validated."""
    budget = budget or SearchBudget()
    check_size(A, budget, "domain")
    check_size(B, budget, "codomain")
    tracker = Tracker(budget)
    found = {}
    for F in iter_homs(A, B, tracker, module=module):
        found.setdefault(F.table_key(), F)
    homs = sorted(found.values(), key=lambda F: F.signature())
    for F in homs:
        _assert_valid(F)
    return homs


def _assert_valid(F) -> None:
    from .rmodule import RModHom, validate_mod_hom
    rep = validate_mod_hom(F) if isinstance(F, RModHom) else validate_hom(F)
    if not rep.ok:
        raise MalformedTable(f"search produced an invalid hom: {rep.failures[0].axiom}")


def enumerate_two_morphisms(F: TwoGroupHom, G: TwoGroupHom, tracker: Tracker | None = None,
                            cls=None) -> list[TwoGroupMor]:
    """Every 2-morphism F => G, sorted by component tables."""
    from .rmodule import RModHom, RModMor, validate_mod_two_morphism
    tracker = tracker or Tracker()
    A, B = F.dom, F.cod
    H = B.base
    module = isinstance(F, RModHom) and isinstance(G, RModHom)
    if cls is None:
        cls = RModMor if module else TwoGroupMor
    objs = A.objects
    variables = [(a, lambda asg, a=a: H.hom(F.omap[a], G.omap[a])) for a in objs]
    cons = []
    for f in A.morphisms:
        if A.base.is_identity(f):
            continue
        x, y = A.src(f), A.tgt(f)
        cons.append(({x, y}, lambda asg, f=f, x=x, y=y:
                     H.compose(asg[y], F.mmap[f]) == H.compose(G.mmap[f], asg[x])))
    for a, b in _cartesian(objs, objs):
        s = A.add(a, b)
        cons.append(({a, b, s}, lambda asg, a=a, b=b, s=s:
                     H.compose(G.fplus[(a, b)], asg[s]) == H.compose(B.addm(asg[a], asg[b]), F.fplus[(a, b)])))
    cons.append(({A.unit}, lambda asg: H.compose(G.fzero, asg[A.unit]) == F.fzero))
    if module:
        for r, m in _cartesian(A.ring.objects, objs):
            rm = A.act(r, m)
            cons.append(({m, rm}, lambda asg, r=r, m=m, rm=rm:
                         H.compose(G.ftwo[(r, m)], asg[rm]) == H.compose(B.ract(r, asg[m]), F.ftwo[(r, m)])))
    out = [cls(F, G, dict(asg)) for asg in solve(variables, cons, tracker)]
    check = validate_mod_two_morphism if module else validate_two_morphism
    for e in out:
        if not check(e).ok:
            raise MalformedTable("search produced an invalid 2-morphism")
    return out
