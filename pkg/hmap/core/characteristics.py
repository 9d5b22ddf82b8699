"""
Cell counts, Euler characteristic, genus and planarity.

``counts`` enumerates orbits on the index. ``incremental_counts`` rebuilds the
same numbers from the construction history: I adds one of everything, L merges
two k-orbits, may merge two components, and either splits or merges a face.
The two must agree on every inv_hmap term.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Optional

from .errors import InvariantViolation, PreconditionError
from .fmap import V, ZERO, ONE, FreeMap, Insert
from .index import build_index, index_of
from .serialize import serialize_map
from .stats import MapStats

log = logging.getLogger(__name__)


def counts(m) -> MapStats:
    return index_of(m).counts


def ec(m):
    return counts(m).ec


def genus(m):
    return counts(m).genus


def planar(m):
    return counts(m).planar


def face_split(idx, k, x, y):
    """Does linking x to y at dimension k cut a face in two (else it joins two)?"""
    if k == ZERO:
        return idx.expf(idx.cA_1(ONE, x), y)
    return idx.expf(x, idx.cA(ZERO, y))


def incremental_counts(m) -> MapStats:
    nd = ne = nv = nf = nc = 0
    prefix = V
    for c in m.trace:
        if isinstance(c, Insert):
            nd += 1
            ne += 1
            nv += 1
            nf += 1
            nc += 1
        else:
            idx = build_index(prefix)
            if c.k == ZERO:
                ne -= 1
            else:
                nv -= 1
            if not idx.eqc(c.x, c.y):
                nc -= 1
            nf += 1 if face_split(idx, c.k, c.x, c.y) else -1
        prefix = FreeMap(prefix.trace + (c,))
    return MapStats.from_counts(nd, ne, nv, nf, nc)


def check_counts_agree(m):
    return counts(m) == incremental_counts(m)


@dataclass
class TheoremReport:
    theorem: str
    stats: Optional[MapStats]
    checks: Dict[str, bool] = field(default_factory=dict)
    witness: Optional[str] = None

    @property
    def passed(self):
        return all(self.checks.values())

    def finish(self, m):
        if not self.passed:
            self.witness = serialize_map(m)
        return self


def check_genus_theorem(m) -> TheoremReport:
    try:
        s = counts(m)
    except InvariantViolation as e:
        log.warning("genus theorem: counts rejected: %s", e)
        return TheoremReport("genus", None, {"ec even": False}).finish(m)
    report = TheoremReport("genus", s)
    report.checks["ec even"] = s.ec % 2 == 0
    report.checks["genus >= 0"] = s.genus >= 0
    report.checks["2*nc >= ec"] = 2 * s.nc >= s.ec
    return report.finish(m)


def check_euler_formula(m) -> TheoremReport:
    s = counts(m)
    if not s.planar:
        raise PreconditionError("planar", "genus != 0", f"genus={s.genus}")
    report = TheoremReport("euler", s)
    report.checks["ec/2 = nc"] = s.ec // 2 == s.nc
    if s.nc == 1 and s.nd > 0:
        report.checks["v+e+f-d = 2"] = s.nv + s.ne + s.nf - s.nd == 2
    return report.finish(m)
