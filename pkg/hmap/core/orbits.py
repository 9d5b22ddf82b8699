"""
Orbits of the three hypermap permutations: edges (closure at dimension zero),
vertices (closure at dimension one) and faces (cF).
"""
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from .errors import UnknownDart
from .fmap import ONE, ZERO
from .index import index_of


class OrbitKind(Enum):
    EDGE = "edge"
    VERTEX = "vertex"
    FACE = "face"


def permutation(idx, kind):
    """The closure table selected by ``kind``."""
    if kind is OrbitKind.EDGE:
        return idx.ca[ZERO]
    if kind is OrbitKind.VERTEX:
        return idx.ca[ONE]
    return idx.cf


def _labels(idx, kind):
    if kind is OrbitKind.EDGE:
        return idx.edge_id
    if kind is OrbitKind.VERTEX:
        return idx.vertex_id
    return idx.face_id


@dataclass(frozen=True)
class Orbit:
    representative: int
    members: Tuple[int, ...]

    @property
    def period(self):
        return len(self.members)

    @property
    def label(self):
        return min(self.members)


def _cycle(perm, z):
    members = [z]
    t = perm[z]
    while t != z:
        members.append(t)
        t = perm[t]
    return tuple(members)


def orbit(m, kind, z) -> Orbit:
    """Cycle of z under the selected permutation, in successor order from z."""
    idx = index_of(m)
    if not idx.exd(z):
        raise UnknownDart(z)
    return Orbit(z, _cycle(permutation(idx, OrbitKind(kind)), z))


def orbits(m, kind):
    """Every orbit of ``kind``, each started at its minimum dart, sorted by label."""
    idx = index_of(m)
    kind = OrbitKind(kind)
    perm = permutation(idx, kind)
    labels = _labels(idx, kind)
    return [Orbit(z, _cycle(perm, z)) for z in idx.darts if labels[z] == z]


def period(m, kind, z):
    return orbit(m, kind, z).period


def expo(m, kind, z, t):
    """True iff t is reachable from z by iterating the selected permutation."""
    labels = _labels(index_of(m), OrbitKind(kind))
    return z in labels and labels.get(t) == labels[z]


def expe(m, z, t):
    return expo(m, OrbitKind.EDGE, z, t)


def expv(m, z, t):
    return expo(m, OrbitKind.VERTEX, z, t)


def expf(m, z, t):
    return expo(m, OrbitKind.FACE, z, t)


def eqc(m, z, t):
    """Same component, through the union-find table of the index."""
    return index_of(m).eqc(z, t)
