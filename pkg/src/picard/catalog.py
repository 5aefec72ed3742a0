"""Named standard instances: D(Z/n), B(Z/m), the rings Z/k, modules and homs.

Names:
    twogroups  D1 D2 D3 D4 D6 B1 B2 B4
    rings      Z2 Z4 Z6
    modules    D<n>@Z<k> and B<m>@Z<k> whenever n (or m) divides k
    homs       id-D2@Z2, zero-D2-D3@Z6, times2-D2-D4@Z4, mod2-D4-D2@Z4,
               mod2-B4-B2@Z4, id-B2@Z2, times2-D3-D6@Z6
    2-morphisms  pip-B4-B2@Z4, copip-D2-D4@Z4 (the universal σ of each)
"""

from __future__ import annotations

from functools import lru_cache

from .rmodule import RModHom, RModule, build_deloop_module, build_discrete_module, identity_mod_hom, zero_hom
from .tworing import TwoRing, build_discrete_ring, cyclic_ring
from .twogroup import SymTwoGroup, build_deloop, build_discrete, cyclic, discrete_morphism

TWOGROUP_ORDERS = {"D": (1, 2, 3, 4, 6), "B": (1, 2, 4)}
RING_ORDERS = (2, 4, 6)


@lru_cache(maxsize=None)
def twogroup(name: str) -> SymTwoGroup:
    shape, n = name[0], int(name[1:])
    if shape not in TWOGROUP_ORDERS or n not in TWOGROUP_ORDERS[shape]:
        raise KeyError(name)
    return build_discrete(cyclic(n)) if shape == "D" else build_deloop(cyclic(n))


@lru_cache(maxsize=None)
def ring(name: str) -> TwoRing:
    k = int(name[1:])
    if name[0] != "Z" or k not in RING_ORDERS:
        raise KeyError(name)
    return build_discrete_ring(cyclic_ring(k))


@lru_cache(maxsize=None)
def module(name: str) -> RModule:
    """``D4@Z4`` is Z/4 over Z/4, discrete; ``B2@Z4`` its one-object form."""
    body, rname = name.split("@")
    shape, n = body[0], int(body[1:])
    R = ring(rname)
    k = int(rname[1:])
    if shape not in TWOGROUP_ORDERS or n not in TWOGROUP_ORDERS[shape] or k % n:
        raise KeyError(name)
    act = {(r, m): str(int(r) * int(m) % n) for r in R.objects for m in map(str, range(n))}
    build = build_discrete_module if shape == "D" else build_deloop_module
    return build(R, cyclic(n), act)


def _strict(M: RModule, N: RModule, fo, fm) -> RModHom:
    objs, ro = M.objects, M.ring.objects
    omap = {a: fo(a) for a in objs}
    return RModHom(M, N, omap, {f: fm(f) for f in M.morphisms},
                   {(a, b): N.ident(omap[M.add(a, b)]) for a in objs for b in objs},
                   N.ident(omap[M.unit]),
                   {(r, a): N.ident(omap[M.act(r, a)]) for r in ro for a in objs})


def _scale(M: RModule, N: RModule, c: int, mod: int) -> RModHom:
    """Discrete modules: a ↦ c·a mod ``mod``."""
    def f(a):
        return str(c * int(a) % mod)
    return _strict(M, N, f, lambda m: discrete_morphism(f(M.src(m))))


def _hom_mod2_b() -> RModHom:
    M, N = module("B4@Z4"), module("B2@Z4")
    return _strict(M, N, lambda a: a, lambda f: str(int(f) % 2))


_HOMS = {
    "id-D2@Z2": lambda: identity_mod_hom(module("D2@Z2")),
    "zero-D2-D3@Z6": lambda: zero_hom(module("D2@Z6"), module("D3@Z6")),
    "times2-D2-D4@Z4": lambda: _scale(module("D2@Z4"), module("D4@Z4"), 2, 4),
    "mod2-D4-D2@Z4": lambda: _scale(module("D4@Z4"), module("D2@Z4"), 1, 2),
    "mod2-B4-B2@Z4": _hom_mod2_b,
    "id-B2@Z2": lambda: identity_mod_hom(module("B2@Z2")),
    "times2-D3-D6@Z6": lambda: _scale(module("D3@Z6"), module("D6@Z6"), 2, 6),
}


@lru_cache(maxsize=None)
def hom(name: str) -> RModHom:
    return _HOMS[name]()


@lru_cache(maxsize=None)
def two_morphism(name: str):
    from .constructions.pips import copip, pip
    if name == "pip-B4-B2@Z4":
        return pip(hom("mod2-B4-B2@Z4")).sigma
    if name == "copip-D2-D4@Z4":
        return copip(hom("times2-D2-D4@Z4")).sigma
    raise KeyError(name)


def twogroup_names() -> list[str]:
    return [f"{s}{n}" for s, ns in TWOGROUP_ORDERS.items() for n in ns]


def ring_names() -> list[str]:
    return [f"Z{k}" for k in RING_ORDERS]


def module_names() -> list[str]:
    return [f"{s}{n}@Z{k}" for k in RING_ORDERS for s, ns in TWOGROUP_ORDERS.items() for n in ns if k % n == 0]


def hom_names() -> list[str]:
    return list(_HOMS)


def two_morphism_names() -> list[str]:
    return ["pip-B4-B2@Z4", "copip-D2-D4@Z4"]


def names() -> list[str]:
    return twogroup_names() + ring_names() + module_names() + hom_names() + two_morphism_names()


def get(name: str):
    """Look up any catalog instance by name; KeyError if unknown."""
    for names_of, build in ((twogroup_names, twogroup), (ring_names, ring), (module_names, module),
                            (hom_names, hom), (two_morphism_names, two_morphism)):
        if name in names_of():
            return build(name)
    raise KeyError(name)
