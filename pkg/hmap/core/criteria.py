"""
Constructive planarity and connectivity criteria.

Linking x to y at dimension zero keeps a planar map planar iff x and y lie in
different components or y lies in the face of ``cA_1 m one x``. Breaking a
0-link is the mirror statement on ``B m zero x``. The dimension-one forms are
obtained by exchanging the roles of the two dimensions; their side condition
is ``expf m x (cA m zero y)``. They are checked against a direct genus
computation in the test-suite, as are the dimension-zero ones.
"""
from .characteristics import face_split
from .errors import PreconditionError
from .fmap import ONE, ZERO, Dim, B, check_prec_L, require_inv_hmap
from .index import index_of


def link_keeps_planarity(idx, k, x, y):
    """Side condition of the link criterion, read on the index of the base map."""
    return not idx.eqc(x, y) or face_split(idx, k, x, y)


def _require_prec_L(m, k, x, y):
    require_inv_hmap(m)
    failed = check_prec_L(m, k, x, y)
    if failed:
        raise PreconditionError("prec_L", failed, f"k={int(k)} x={x} y={y}")


def _require_succ(idx, k, x):
    if not idx.has_succ(k, x):
        raise PreconditionError("succ", f"dart {x} has no {int(k)}-successor")


def _planarity_crit_link(m, k, x, y):
    _require_prec_L(m, k, x, y)
    idx = index_of(m)
    return idx.counts.planar and link_keeps_planarity(idx, k, x, y)


def planarity_crit_link0(m, x, y):
    """planar(L m zero x y), decided on m."""
    return _planarity_crit_link(m, ZERO, x, y)


def planarity_crit_link1(m, x, y):
    return _planarity_crit_link(m, ONE, x, y)


def _planarity_crit_B(m, k, x):
    require_inv_hmap(m)
    idx = index_of(m)
    _require_succ(idx, k, x)
    y = idx.A(k, x)
    m0 = B(m, k, x)
    return _planarity_crit_link(m0, k, x, y)


def planarity_crit_B0(m, x):
    """planar(m), decided on B m zero x."""
    return _planarity_crit_B(m, ZERO, x)


def planarity_crit_B1(m, x):
    return _planarity_crit_B(m, ONE, x)


def _require_planar_succ(m, k, x):
    require_inv_hmap(m)
    idx = index_of(m)
    if not idx.counts.planar:
        raise PreconditionError("planar", "genus != 0", f"genus={idx.counts.genus}")
    _require_succ(idx, k, x)
    return idx


def disconnect_criterion_B0(m, x):
    """Does breaking the 0-link out of x disconnect the planar map m?"""
    idx = _require_planar_succ(m, ZERO, x)
    return idx.expf(idx.A(ZERO, x), idx.bottom(ZERO, x))


def disconnect_criterion_B1(m, x):
    idx = _require_planar_succ(m, ONE, x)
    return idx.expf(x, idx.top(ONE, x))


def disconnect_criterion(m, k, x):
    if Dim(k) == ZERO:
        return disconnect_criterion_B0(m, x)
    return disconnect_criterion_B1(m, x)
