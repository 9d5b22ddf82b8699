"""
Compiled snapshot of a free map.

``build_index`` walks the term once and tabulates every observer of
:mod:`hmap.core.fmap` over the existing darts, so queries become dict lookups.
The snapshot is immutable; a new term needs a new index (``index_of`` caches
them per term).
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Tuple

from .fmap import DIMS, NIL, ONE, ZERO, darts, links, require_inv_hmap
from .stats import MapStats


class UnionFind:
    """Disjoint sets over the elements 0 .. n-1, with union by rank."""

    def __init__(self, n):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, element: int) -> int:
        root = element
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[element] != root:
            self.parent[element], element = root, self.parent[element]
        return root

    def unite(self, first: int, second: int) -> bool:
        """Merge the sets of both elements; False if they were already one set."""
        rep_first = self.find(first)
        rep_second = self.find(second)

        if rep_first == rep_second:
            return False

        if self.rank[rep_first] == self.rank[rep_second]:
            self.rank[rep_first] += 1
            self.parent[rep_second] = rep_first
        elif self.rank[rep_first] > self.rank[rep_second]:
            self.parent[rep_second] = rep_first
        else:
            self.parent[rep_first] = rep_second

        return True


def cycle_labels(perm, ds):
    """Label every dart with the minimum dart of its cycle under ``perm``."""
    labels = {}
    for z in ds:
        if z in labels:
            continue
        members = [z]
        t = perm[z]
        while t != z:
            members.append(t)
            t = perm[t]
        label = min(members)
        for d in members:
            labels[d] = label
    return labels


@dataclass(frozen=True, eq=False)
class HypermapIndex:
    darts: Tuple[int, ...]
    succ: Dict[int, Dict[int, int]]
    pred: Dict[int, Dict[int, int]]
    tops: Dict[int, Dict[int, int]]
    bottoms: Dict[int, Dict[int, int]]
    ca: Dict[int, Dict[int, int]]
    ca_1: Dict[int, Dict[int, int]]
    cf: Dict[int, int]
    cf_1: Dict[int, int]
    edge_id: Dict[int, int]
    vertex_id: Dict[int, int]
    face_id: Dict[int, int]
    comp_id: Dict[int, int]
    counts: MapStats

    def exd(self, z):
        return z in self.edge_id

    def A(self, k, z):
        return self.succ[k].get(z, NIL)

    def A_1(self, k, z):
        return self.pred[k].get(z, NIL)

    def has_succ(self, k, z):
        return z in self.succ[k]

    def has_pred(self, k, z):
        return z in self.pred[k]

    def top(self, k, z):
        return self.tops[k].get(z, NIL)

    def bottom(self, k, z):
        return self.bottoms[k].get(z, NIL)

    def cA(self, k, z):
        return self.ca[k].get(z, NIL)

    def cA_1(self, k, z):
        return self.ca_1[k].get(z, NIL)

    def F(self, z):
        return self.A_1(ONE, self.A_1(ZERO, z))

    def F_1(self, z):
        return self.A(ZERO, self.A(ONE, z))

    def cF(self, z):
        return self.cf.get(z, NIL)

    def cF_1(self, z):
        return self.cf_1.get(z, NIL)

    def expe(self, z, t):
        return z in self.edge_id and self.edge_id.get(t) == self.edge_id[z]

    def expv(self, z, t):
        return z in self.vertex_id and self.vertex_id.get(t) == self.vertex_id[z]

    def expf(self, z, t):
        return z in self.face_id and self.face_id.get(t) == self.face_id[z]

    def eqc(self, z, t):
        return z in self.comp_id and self.comp_id.get(t) == self.comp_id[z]


def build_index(m) -> HypermapIndex:
    require_inv_hmap(m)
    ds = tuple(sorted(darts(m)))

    succ = {k: {} for k in DIMS}
    pred = {k: {} for k in DIMS}
    for c in links(m):
        succ[c.k][c.x] = c.y
        pred[c.k][c.y] = c.x

    tops = {k: {} for k in DIMS}
    bottoms = {k: {} for k in DIMS}
    ca = {k: {} for k in DIMS}
    ca_1 = {k: {} for k in DIMS}
    for k in DIMS:
        for z in ds:
            if z in pred[k]:
                continue
            # z is a bottom: its open orbit is the path z -> ... -> top
            path = [z]
            while path[-1] in succ[k]:
                path.append(succ[k][path[-1]])
            for d in path:
                bottoms[k][d] = z
                tops[k][d] = path[-1]
            for a, b in zip(path, path[1:] + [z]):
                ca[k][a] = b
                ca_1[k][b] = a

    cf = {z: ca_1[ONE][ca_1[ZERO][z]] for z in ds}
    cf_1 = {z: ca[ZERO][ca[ONE][z]] for z in ds}

    position = {z: i for i, z in enumerate(ds)}
    uf = UnionFind(len(ds))
    for c in links(m):
        uf.unite(position[c.x], position[c.y])
    root_label = {}
    for z in ds:
        root = uf.find(position[z])
        root_label.setdefault(root, z)  # ds is sorted: first seen is the minimum
    comp_id = {z: root_label[uf.find(position[z])] for z in ds}

    edge_id = cycle_labels(ca[ZERO], ds)
    vertex_id = cycle_labels(ca[ONE], ds)
    face_id = cycle_labels(cf, ds)

    counts = MapStats.from_counts(
        nd=len(ds),
        ne=len(set(edge_id.values())),
        nv=len(set(vertex_id.values())),
        nf=len(set(face_id.values())),
        nc=len(set(comp_id.values())),
    )
    return HypermapIndex(ds, succ, pred, tops, bottoms, ca, ca_1, cf, cf_1,
                         edge_id, vertex_id, face_id, comp_id, counts)


@lru_cache(maxsize=512)
def index_of(m) -> HypermapIndex:
    return build_index(m)
