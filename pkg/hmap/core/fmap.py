"""
Free maps: the term algebra V / I / L and its observers.

A free map is stored as its constructor trace, innermost constructor first, so
``L(I(I(V, 1), 2), ZERO, 1, 2)`` is ``(Insert(1), Insert(2), Link(ZERO, 1, 2))``.
Term equality is trace equality. The observers below are the reference
semantics: each one reads the term from the outermost constructor inwards,
exactly as the structural recursion on ``m`` does. The fast path lives in
:mod:`hmap.core.index` and is checked against these functions.

Every observer is total. Applied to ``NIL`` or to a dart that does not exist
it returns ``NIL`` (or ``False``).
"""
import logging
from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache
from typing import NamedTuple, Optional, Tuple

from .errors import PreconditionError

log = logging.getLogger(__name__)

NIL = 0


class Dim(IntEnum):
    ZERO = 0
    ONE = 1


ZERO = Dim.ZERO
ONE = Dim.ONE
DIMS = (ZERO, ONE)


class Insert(NamedTuple):
    x: int


class Link(NamedTuple):
    k: Dim
    x: int
    y: int


@dataclass(frozen=True)
class FreeMap:
    trace: Tuple = ()

    @property
    def is_void(self):
        return not self.trace

    @property
    def head(self):
        """Outermost constructor, ``None`` for V."""
        return self.trace[-1] if self.trace else None

    @property
    def base(self):
        """The sub-term under the outermost constructor."""
        if not self.trace:
            raise ValueError("V has no base")
        return FreeMap(self.trace[:-1])

    def __len__(self):
        return len(self.trace)

    def __repr__(self):
        term = "V"
        for c in self.trace:
            if isinstance(c, Insert):
                term = f"I({term},{c.x})"
            else:
                term = f"L({term},{int(c.k)},{c.x},{c.y})"
        return term


V = FreeMap()


# --- raw constructors (no checks, used for adversarial terms) ---

def I(m, x):  # noqa: E743
    return FreeMap(m.trace + (Insert(x),))


def L(m, k, x, y):
    return FreeMap(m.trace + (Link(Dim(k), x, y),))


def darts(m):
    """Inserted darts in insertion order."""
    return [c.x for c in m.trace if isinstance(c, Insert)]


def links(m, k=None):
    return [c for c in m.trace if isinstance(c, Link) and (k is None or c.k == k)]


# --- observers ---

def exd(m, z):
    if z == NIL:
        return False
    return any(isinstance(c, Insert) and c.x == z for c in m.trace)


def A(m, k, z):
    """Most recently linked k-successor of z, NIL if none."""
    if z == NIL:
        return NIL
    for c in reversed(m.trace):
        if isinstance(c, Link) and c.k == k and c.x == z:
            return c.y
    return NIL


def A_1(m, k, z):
    if z == NIL:
        return NIL
    for c in reversed(m.trace):
        if isinstance(c, Link) and c.k == k and c.y == z:
            return c.x
    return NIL


def succ(m, k, z):
    return A(m, k, z) != NIL


def pred(m, k, z):
    return A_1(m, k, z) != NIL


def _walk(m, k, z, step):
    # Bounded so that cyclic (non inv_hmap) terms still terminate.
    if not exd(m, z):
        return NIL
    t = z
    for _ in range(len(m.trace) + 1):
        n = step(m, k, t)
        if n == NIL:
            return t
        t = n
    return NIL


def top(m, k, z):
    """Dart of z's open k-orbit without k-successor."""
    return _walk(m, k, z, A)


def bottom(m, k, z):
    """Dart of z's open k-orbit without k-predecessor."""
    return _walk(m, k, z, A_1)


def cA(m, k, z):
    y = A(m, k, z)
    if y != NIL:
        return y
    return bottom(m, k, z)


def cA_1(m, k, z):
    x = A_1(m, k, z)
    if x != NIL:
        return x
    return top(m, k, z)


def F(m, z):
    return A_1(m, ONE, A_1(m, ZERO, z))


def F_1(m, z):
    return A(m, ZERO, A(m, ONE, z))


def cF(m, z):
    """The face permutation phi = alpha_1^-1 o alpha_0^-1."""
    return cA_1(m, ONE, cA_1(m, ZERO, z))


def cF_1(m, z):
    return cA(m, ZERO, cA(m, ONE, z))


def eqc(m, z, t):
    """Component relation, evaluated prefix by prefix over the term.

    The relation of ``I(m0, x)`` is the one of ``m0`` plus ``x ~ x``; the one
    of ``L(m0, k, x, y)`` adds every pair joining the class of x to the class
    of y. Each prefix therefore stays a partition of the inserted darts, kept
    here as shared member sets. This is the slow oracle;
    :meth:`HypermapIndex.eqc` answers the same question through union-find.
    """
    classes = {}
    for c in m.trace:
        if isinstance(c, Insert):
            classes.setdefault(c.x, {c.x})
        elif c.x in classes and c.y in classes and classes[c.x] is not classes[c.y]:
            merged = classes[c.x] | classes[c.y]
            for d in merged:
                classes[d] = merged
    return z in classes and t in classes[z]


# --- preconditions and the hypermap invariant ---

def check_prec_I(m, x):
    """Return the failed conjunct of prec_I, or None."""
    if x == NIL:
        return "x = nil"
    if exd(m, x):
        return "x already exists"
    return None


def check_prec_L(m, k, x, y):
    """Return the failed conjunct of prec_L, or None."""
    if not exd(m, x):
        return "x does not exist"
    if not exd(m, y):
        return "y does not exist"
    if succ(m, k, x):
        return "x has a successor"
    if pred(m, k, y):
        return "y has a predecessor"
    if cA(m, k, x) == y:
        return "closure equality"
    return None


def prec_I_check(m, x):
    return check_prec_I(m, x) is None


def prec_L_check(m, k, x, y):
    return check_prec_L(m, Dim(k), x, y) is None


def check_inv_hmap(m) -> Optional[Tuple[int, str, str]]:
    """First constructor violating its precondition.

    Returns ``(position, predicate, conjunct)`` or None when the term satisfies
    inv_hmap. One pass over the trace with the open links kept in dicts; the
    answer is the one of the recursive definition, which checks every prefix.
    """
    seen = set()
    nxt = {ZERO: {}, ONE: {}}
    prv = {ZERO: {}, ONE: {}}
    for pos, c in enumerate(m.trace):
        if isinstance(c, Insert):
            if c.x == NIL:
                return pos, "prec_I", "x = nil"
            if c.x in seen:
                return pos, "prec_I", "x already exists"
            seen.add(c.x)
            continue
        k, x, y = c
        if x not in seen:
            return pos, "prec_L", "x does not exist"
        if y not in seen:
            return pos, "prec_L", "y does not exist"
        if x in nxt[k]:
            return pos, "prec_L", "x has a successor"
        if y in prv[k]:
            return pos, "prec_L", "y has a predecessor"
        b = x
        while b in prv[k]:
            b = prv[k][b]
        if b == y:
            return pos, "prec_L", "closure equality"
        nxt[k][x] = y
        prv[k][y] = x
    return None


@lru_cache(maxsize=1024)
def inv_hmap_check(m):
    return check_inv_hmap(m) is None


def require_inv_hmap(m):
    failure = check_inv_hmap(m)
    if failure is not None:
        pos, predicate, conjunct = failure
        raise PreconditionError("inv_hmap", f"{predicate}: {conjunct}",
                                f"constructor #{pos + 1}")


# --- checked builders ---

def insert_dart(m, x):
    require_inv_hmap(m)
    failed = check_prec_I(m, x)
    if failed:
        raise PreconditionError("prec_I", failed, f"x={x}")
    return I(m, x)


def link(m, k, x, y):
    k = Dim(k)
    require_inv_hmap(m)
    failed = check_prec_L(m, k, x, y)
    if failed:
        raise PreconditionError("prec_L", failed, f"k={int(k)} x={x} y={y}")
    return L(m, k, x, y)


# --- destructors ---

def _drop_last(m, match):
    for i in range(len(m.trace) - 1, -1, -1):
        if match(m.trace[i]):
            return FreeMap(m.trace[:i] + m.trace[i + 1:])
    return m


def B(m, k, x):
    """Remove the latest L(_, k, x, _); the map is unchanged if there is none."""
    return _drop_last(m, lambda c: isinstance(c, Link) and c.k == k and c.x == x)


def B_1(m, k, x):
    """Remove the latest L(_, k, _, x)."""
    return _drop_last(m, lambda c: isinstance(c, Link) and c.k == k and c.y == x)


def D(m, x):
    """Remove the latest I(_, x)."""
    return _drop_last(m, lambda c: isinstance(c, Insert) and c.x == x)


def break_link(m, k, x):
    if not succ(m, k, x):
        log.warning("B: dart %s has no %d-successor, map unchanged", x, int(k))
        return m
    return B(m, k, x)


def unlink_back(m, k, x):
    if not pred(m, k, x):
        log.warning("B_1: dart %s has no %d-predecessor, map unchanged", x, int(k))
        return m
    return B_1(m, k, x)


def delete_dart(m, x):
    if not exd(m, x):
        log.warning("D: dart %s does not exist, map unchanged", x)
        return m
    for k in DIMS:
        if succ(m, k, x) or pred(m, k, x):
            raise PreconditionError("D", "dart still linked", f"x={x} k={int(k)}")
    return D(m, x)
