"""Brute-force oracles written against raw tables only.

Nothing here calls the constructions or the search; each function counts or
builds its answer directly from the dictionaries a structure stores.
"""

from itertools import product


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        self.parent[self.find(x)] = self.find(y)

    def classes(self):
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return list(out.values())


def hom_set(A, a, b):
    """Morphisms a -> b, read off the src/tgt dictionaries."""
    G = A.base
    return [f for f in G.src if G.src[f] == a and G.tgt[f] == b]


def kernel_pairs(F):
    """All pairs (A, a) with a: FA -> 0 in the codomain."""
    N = F.cod
    return [(A, a) for A in F.dom.objects for a in hom_set(N, F.omap[A], N.unit)]


def cokernel_class_counts(F):
    """(B1, B2) -> number of classes of pairs (f: B1 -> B2 + FA, A)."""
    M, N = F.dom, F.cod
    G = N.base
    out = {}
    for B1 in N.objects:
        for B2 in N.objects:
            raws = [(f, A) for A in M.objects for f in hom_set(N, B1, N.tensor_obj[(B2, F.omap[A])])]
            uf = UnionFind(raws)
            for f, A in raws:
                for alpha in M.base.src:
                    if M.base.src[alpha] != A:
                        continue
                    shifted = G.comp[(N.tensor_mor[(G.id_of[B2], F.mmap[alpha])], f)]
                    uf.union((f, A), (shifted, M.base.tgt[alpha]))
            out[(B1, B2)] = len(uf.classes())
    return out


def pip_elements(F):
    M, N = F.dom, F.cod
    one = N.base.id_of[F.omap[M.unit]]
    return [a for a in hom_set(M, M.unit, M.unit) if F.mmap[a] == one]


def copip_class_count(F):
    """Codomain objects up to B1 ~ B2 whenever some B1 -> FA + B2 exists."""
    M, N = F.dom, F.cod
    uf = UnionFind(N.objects)
    for B1, B2 in product(N.objects, N.objects):
        if any(hom_set(N, B1, N.tensor_obj[(F.omap[A], B2)]) for A in M.objects):
            uf.union(B1, B2)
    return len(uf.classes())


def group_kernel_size(table, n_target, f):
    """|{g : f(g) = 0}| for a map of cyclic groups given as a Python function."""
    return sum(1 for g in range(table) if f(g) % n_target == 0)


def additive_endomaps(n):
    """All additive maps Z/n -> Z/n, as tuples of images of 0..n-1."""
    maps = []
    for images in product(range(n), repeat=n):
        if all(images[(a + b) % n] == (images[a] + images[b]) % n for a in range(n) for b in range(n)):
            maps.append(images)
    return maps


def components(A):
    """Connected components of the underlying groupoid, by union-find."""
    uf = UnionFind(A.objects)
    for f in A.base.src:
        uf.union(A.base.src[f], A.base.tgt[f])
    return uf.classes()


def fingerprint(A):
    """(π₀, |Aut(0)|, sorted automorphism group sizes), recomputed from scratch."""
    comps = components(A)
    sizes = sorted(len(hom_set(A, c[0], c[0])) for c in comps)
    return (len(comps), len(hom_set(A, A.unit, A.unit)), tuple(sizes))


def is_two_morphism(e, module=False):
    """Typing, naturality, additivity and unit of e: F => G, straight from the tables."""
    F, G = e.source, e.target
    A, B = F.dom, F.cod
    src, tgt, comp = B.base.src, B.base.tgt, B.base.comp
    c = e.component

    def after(g, f):
        return comp.get((g, f))

    for a in A.objects:
        if (src.get(c[a]), tgt.get(c[a])) != (F.omap[a], G.omap[a]):
            return False
    for f in A.base.src:
        a, b = A.base.src[f], A.base.tgt[f]
        if after(c[b], F.mmap[f]) != after(G.mmap[f], c[a]):
            return False
    for a, b in product(A.objects, A.objects):
        ab = A.tensor_obj[(a, b)]
        if after(G.fplus[(a, b)], c[ab]) != after(B.tensor_mor[(c[a], c[b])], F.fplus[(a, b)]):
            return False
    if after(G.fzero, c[A.unit]) != F.fzero:
        return False
    if module:
        R = A.ring
        for r, m in product(R.objects, A.objects):
            rid = R.base.id_of[r]
            if after(G.ftwo[(r, m)], c[A.act_obj[(r, m)]]) != after(B.act_mor[(rid, c[m])], F.ftwo[(r, m)]):
                return False
    return True
