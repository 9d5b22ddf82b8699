"""
Rings of faces.

A double-link is coded by the dart ``x`` where its 0-link starts and a flag
``b``. The item identifies the face of ``y = A m zero x`` when ``b`` is true,
the face of ``x0 = bottom m zero x`` otherwise; the dart on the opposite side
of the link (``x0`` resp. ``y``) lies in the next face of the ring.
"""
from dataclasses import dataclass, field
from typing import Dict, NamedTuple, Optional, Tuple

from .errors import PreconditionError
from .fmap import NIL, ZERO, B, require_inv_hmap, succ
from .index import index_of


class RingItem(NamedTuple):
    x: int
    b: bool


EMPTY = ()


def cons(item, l):
    return (RingItem(*item),) + tuple(l)


def ring_list(pairs):
    return tuple(RingItem(x, bool(b)) for x, b in pairs)


def _rep(idx, item):
    return idx.A(ZERO, item.x) if item.b else idx.bottom(ZERO, item.x)


def _other(idx, item):
    return idx.bottom(ZERO, item.x) if item.b else idx.A(ZERO, item.x)


def _adjacent(idx, xb, xb2):
    return idx.expf(_other(idx, xb), _rep(idx, xb2))


def _require_links(idx, *items):
    for item in items:
        if not idx.has_succ(ZERO, item.x):
            raise PreconditionError("succ", f"dart {item.x} has no 0-successor")


def face_rep(m, item):
    """Representative dart of the face identified by ``item``."""
    item = RingItem(*item)
    idx = index_of(m)
    _require_links(idx, item)
    return _rep(idx, item)


def adjacent_faces(m, xb, xb2):
    """Is the face of ``xb2`` adjacent to the one of ``xb`` along the link of ``xb``?"""
    xb, xb2 = RingItem(*xb), RingItem(*xb2)
    idx = index_of(m)
    _require_links(idx, xb, xb2)
    return _adjacent(idx, xb, xb2)


# Each helper returns the indices of the first offending item(s), None if the
# condition holds.

def _unicity_failure(idx, l):
    for i, item in enumerate(l):
        if not idx.has_succ(ZERO, item.x):
            return (i,)
    for i in range(len(l)):
        for j in range(i + 1, len(l)):
            if idx.expe(l[i].x, l[j].x):
                return (i, j)
    return None


def _continuity_failure(idx, l):
    for i in range(len(l) - 1):
        if not _adjacent(idx, l[i], l[i + 1]):
            return (i, i + 1)
    return None


def _circularity_failure(idx, l):
    if not l:
        return None
    if len(l) == 1:
        x = l[0].x
        y = idx.A(ZERO, x)
        return None if y != NIL and idx.expf(y, idx.bottom(ZERO, x)) else (0,)
    return None if _adjacent(idx, l[-1], l[0]) else (len(l) - 1, 0)


def _simplicity_failure(idx, l):
    reps = [_rep(idx, item) for item in l]
    for i in range(len(l)):
        for j in range(i + 1, len(l)):
            if idx.expf(reps[i], reps[j]):
                return (i, j)
    return None


def pre_ring0(m, l):
    """Unicity: pairwise distinct edges, each item with a 0-successor."""
    return _unicity_failure(index_of(m), ring_list(l)) is None


def pre_ring1(m, l):
    """Continuity: consecutive faces adjacent."""
    return _continuity_failure(index_of(m), ring_list(l)) is None


def pre_ring2(m, l):
    """Circularity: last face adjacent to the first one."""
    return _circularity_failure(index_of(m), ring_list(l)) is None


def pre_ring3(m, l):
    """Simplicity: pairwise distinct faces."""
    return _simplicity_failure(index_of(m), ring_list(l)) is None


CONDITIONS = (
    ("unicity", _unicity_failure),
    ("continuity", _continuity_failure),
    ("circularity", _circularity_failure),
    ("simplicity", _simplicity_failure),
)


@dataclass
class RingDiagnostics:
    conditions: Dict[str, bool] = field(default_factory=dict)
    failed: Optional[str] = None
    offending: Optional[Tuple[int, ...]] = None

    @property
    def valid(self):
        return self.failed is None

    def describe(self):
        if self.valid:
            return "valid"
        if self.offending is None:
            return f"invalid({self.failed})"
        items = ",".join(str(i) for i in self.offending)
        return f"invalid({self.failed} at item {items})"


def ring_check(m, l) -> RingDiagnostics:
    require_inv_hmap(m)
    l = ring_list(l)
    idx = index_of(m)
    diag = RingDiagnostics()
    diag.conditions["nonempty"] = bool(l)
    if not l:
        diag.failed = "empty"
    for name, failure_of in CONDITIONS:
        failure = failure_of(idx, l)
        diag.conditions[name] = failure is None
        if failure is not None and diag.failed is None:
            diag.failed = name
            diag.offending = failure
    return diag


def is_ring(m, l):
    return ring_check(m, l).valid


def Bl(m, l):
    """Break the 0-link out of every item's dart, first item first."""
    require_inv_hmap(m)
    for i, item in enumerate(ring_list(l)):
        if not succ(m, ZERO, item.x):
            raise PreconditionError("Bl", f"item {i} has no 0-link", f"x={item.x}")
        m = B(m, ZERO, item.x)
    return m


def swap_break_oracle(m, l):
    """alpha_0 after the breaks, by swapping the images y_i and x0_i step by step.

    Only closure tables are rewritten here; the open terms are consulted for the
    darts of each double-link. The result must equal ``index_of(Bl(m, l)).ca[ZERO]``.
    """
    table = dict(index_of(m).ca[ZERO])
    cur = m
    for item in ring_list(l):
        idx = index_of(cur)
        y, x0 = idx.A(ZERO, item.x), idx.bottom(ZERO, item.x)
        table = {z: (x0 if w == y else y if w == x0 else w) for z, w in table.items()}
        cur = B(cur, ZERO, item.x)
    return table


class FaceLink(NamedTuple):
    x: int
    edge: int
    y_face: int
    x0_face: int


def face_adjacency(m):
    """Every 0-link as an edge of the face-adjacency multigraph."""
    idx = index_of(m)
    result = []
    for x in idx.darts:
        if idx.has_succ(ZERO, x):
            result.append(FaceLink(
                x,
                idx.edge_id[x],
                idx.face_id[idx.A(ZERO, x)],
                idx.face_id[idx.bottom(ZERO, x)],
            ))
    return result
