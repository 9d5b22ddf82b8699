"""
Discrete Jordan curve check and the machinery to exercise it at scale:
random map generators, exhaustive enumeration, ring discovery and the fuzz
driver.
"""
import itertools
import logging
import random
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .characteristics import counts
from .criteria import disconnect_criterion_B0, link_keeps_planarity
from .errors import InvariantViolation, PreconditionError
from .fmap import DIMS, ONE, ZERO, B, I, L, V, require_inv_hmap
from .index import build_index, index_of
from .rings import (CONDITIONS, Bl, RingItem, face_adjacency, ring_check,
                    ring_list, swap_break_oracle)
from .serialize import parse_map, parse_ring, serialize_map, serialize_ring

log = logging.getLogger(__name__)

MOVES = ("cross", "face", "mirror")
DEFAULT_WEIGHTS = {"cross": 1, "face": 2, "mirror": 1}
SEARCH_BUDGET = 20000


@dataclass
class JordanOutcome:
    nc_before: int
    nc_after: int
    witness: Optional[str] = None

    @property
    def delta(self):
        return self.nc_after - self.nc_before

    @property
    def verdict(self):
        return "pass" if self.delta == 1 else "fail"

    @property
    def passed(self):
        return self.delta == 1


def jordan_check(m, l) -> JordanOutcome:
    """nc(Bl m l) = nc m + 1 for a planar map and one of its rings."""
    require_inv_hmap(m)
    l = ring_list(l)
    before = counts(m)
    if not before.planar:
        raise PreconditionError("planar", "genus != 0", f"genus={before.genus}")
    diag = ring_check(m, l)
    if not diag.valid:
        raise PreconditionError("ring", diag.failed, diag.describe())
    outcome = JordanOutcome(before.nc, counts(Bl(m, l)).nc)
    if not outcome.passed:
        outcome.witness = serialize_map(m) + serialize_ring(l)
    return outcome


def replay_witness(map_text, ring_text) -> JordanOutcome:
    return jordan_check(parse_map(map_text), parse_ring(ring_text))


def check_ring_lemmas(m, l):
    """Properties the induction on the ring relies on, for a valid ring of a planar m.

    Returns ``{check: passed}``. For rings of two items or more the first
    double-link must not have both sides in one face, breaking it must not
    disconnect, and the tail must still satisfy the four ring conditions.
    """
    l = ring_list(l)
    checks = {}
    checks["swap oracle"] = swap_break_oracle(m, l) == index_of(Bl(m, l)).ca[ZERO]
    if len(l) < 2:
        return checks
    idx = index_of(m)
    x = l[0].x
    checks["ring1_ring3_connect"] = not idx.expf(idx.A(ZERO, x), idx.bottom(ZERO, x))
    checks["no disconnect"] = not disconnect_criterion_B0(m, x)
    idx1 = index_of(B(m, ZERO, x))
    tail = l[1:]
    checks["pre_ring_B"] = all(failure_of(idx1, tail) is None for _, failure_of in CONDITIONS)
    return checks


# --- generators ---

def _insert_darts(rng, n_darts):
    ids = list(range(1, n_darts + 1))
    rng.shuffle(ids)
    m = V
    for x in ids:
        m = I(m, x)
    return m


def _check_sizes(n_darts, n_links):
    if n_darts < 0 or n_links < 0:
        raise PreconditionError("gen", "negative size", f"darts={n_darts} links={n_links}")
    if n_links > 2 * n_darts:
        raise PreconditionError("gen", "n_links > 2 * n_darts", f"darts={n_darts} links={n_links}")


class _OpenPaths:
    """Open k-links of a map under construction."""

    def __init__(self):
        self.nxt = {k: {} for k in DIMS}
        self.prv = {k: {} for k in DIMS}

    def bottom(self, k, z):
        while z in self.prv[k]:
            z = self.prv[k][z]
        return z

    def add(self, k, x, y):
        self.nxt[k][x] = y
        self.prv[k][y] = x


def gen_map(seed, n_darts, n_links):
    """Random inv_hmap map, planar or not; may hold fewer links than asked."""
    _check_sizes(n_darts, n_links)
    rng = random.Random(seed)
    m = _insert_darts(rng, n_darts)
    ds = sorted(range(1, n_darts + 1))
    paths = _OpenPaths()
    for _ in range(n_links):
        k = rng.choice(DIMS)
        tops = [z for z in ds if z not in paths.nxt[k]]
        bottoms = [z for z in ds if z not in paths.prv[k]]
        x = rng.choice(tops) if tops else None
        if x is None:
            continue
        bx = paths.bottom(k, x)
        ys = [y for y in bottoms if y != bx]
        if not ys:
            continue
        y = rng.choice(ys)
        paths.add(k, x, y)
        m = L(m, k, x, y)
    return m


def _face(idx, z):
    members = [z]
    t = idx.cf[z]
    while t != z:
        members.append(t)
        t = idx.cf[t]
    return members


def _draw_link(rng, idx, move):
    ds = idx.darts
    if move == "cross":
        k = rng.choice(DIMS)
        x = rng.choice(ds)
        y = rng.choice(ds)
        if idx.has_succ(k, x) or idx.has_pred(k, y) or idx.eqc(x, y):
            return None
        return k, x, y
    if move == "face":
        tops = [z for z in ds if not idx.has_succ(ZERO, z)]
        if not tops:
            return None
        x = rng.choice(tops)
        bx = idx.bottom(ZERO, x)
        ys = [y for y in _face(idx, idx.cA_1(ONE, x))
              if not idx.has_pred(ZERO, y) and y != bx]
        return (ZERO, x, rng.choice(ys)) if ys else None
    # mirror: link at dimension one inside a face
    bottoms = [z for z in ds if not idx.has_pred(ONE, z)]
    if not bottoms:
        return None
    y = rng.choice(bottoms)
    xs = [x for x in _face(idx, idx.cA(ZERO, y))
          if not idx.has_succ(ONE, x) and idx.bottom(ONE, x) != y]
    return (ONE, rng.choice(xs), y) if xs else None


def gen_planar(seed, n_darts, n_links, weights=None, max_tries=None):
    """Deterministic random planar map.

    Candidate links come from three moves (link across components, link inside
    a face at dimension zero, the same at dimension one); a candidate is kept
    only when the link criterion certifies that planarity survives.
    """
    _check_sizes(n_darts, n_links)
    weights = weights or DEFAULT_WEIGHTS
    rng = random.Random(seed)
    m = _insert_darts(rng, n_darts)
    if n_darts == 0 or n_links == 0:
        return m
    idx = build_index(m)
    added = tries = 0
    budget = max_tries if max_tries is not None else 20 * n_links + 20
    while added < n_links and tries < budget:
        tries += 1
        move = rng.choices(MOVES, weights=[weights.get(mv, 0) for mv in MOVES])[0]
        candidate = _draw_link(rng, idx, move)
        if candidate is None:
            continue
        k, x, y = candidate
        if not (idx.counts.planar and link_keeps_planarity(idx, k, x, y)):
            continue
        m = L(m, k, x, y)
        idx = build_index(m)
        added += 1
    if added < n_links:
        log.debug("gen_planar(seed=%s): %d of %d links after %d tries", seed, added, n_links, tries)
    return m


# --- exhaustive enumeration ---

def _path_families(ds):
    """Every way to arrange the darts ``ds`` into disjoint open paths."""
    if not ds:
        yield []
        return
    first, rest = ds[0], ds[1:]
    for r in range(len(rest) + 1):
        for companions in itertools.combinations(rest, r):
            remaining = [d for d in rest if d not in companions]
            for order in itertools.permutations((first,) + companions):
                for family in _path_families(remaining):
                    yield [list(order)] + family


def enumerate_maps(n_darts):
    """All inv_hmap maps on darts 1..n with canonical construction order.

    Darts are inserted in increasing order, then 0-links path by path, then
    1-links. Every pair of closures (alpha_0, alpha_1) with open orbits shows
    up once per choice of the darts where the orbits are opened.
    """
    base = V
    for x in range(1, n_darts + 1):
        base = I(base, x)
    ds = list(range(1, n_darts + 1))
    families = list(_path_families(ds))
    for zero_paths in families:
        m0 = base
        for path in zero_paths:
            for x, y in zip(path, path[1:]):
                m0 = L(m0, ZERO, x, y)
        for one_paths in families:
            m = m0
            for path in one_paths:
                for x, y in zip(path, path[1:]):
                    m = L(m, ONE, x, y)
            yield m


def enumerate_rings(m, max_len):
    """Every list of at most ``max_len`` items passing ring_check."""
    idx = index_of(m)
    starts = [x for x in idx.darts if idx.has_succ(ZERO, x)]
    for n in range(1, max_len + 1):
        for xs in itertools.permutations(starts, n):
            for flags in itertools.product((True, False), repeat=n):
                l = tuple(RingItem(x, b) for x, b in zip(xs, flags))
                if ring_check(m, l).valid:
                    yield l


# --- ring discovery ---

def find_ring(m, max_len, seed=0):
    """Search the face-adjacency multigraph for a ring of at most ``max_len`` items.

    Returns a tuple of RingItem passing ring_check, or None.
    """
    require_inv_hmap(m)
    if max_len < 1:
        return None
    rng = random.Random(seed)
    out = defaultdict(list)
    for fl in face_adjacency(m):
        # (x, True) sits in the face of y and crosses to the face of x0
        out[fl.y_face].append((RingItem(fl.x, True), fl.x0_face, fl.edge))
        out[fl.x0_face].append((RingItem(fl.x, False), fl.y_face, fl.edge))
    if not out:
        return None

    budget = [SEARCH_BUDGET]

    def extend(start, face, items, faces_seen, edges_used):
        choices = list(out[face])
        rng.shuffle(choices)
        for item, nxt, edge in choices:
            budget[0] -= 1
            if budget[0] < 0:
                return None
            if edge in edges_used:
                continue
            if nxt == start:
                return items + [item]
            if nxt not in faces_seen and len(items) + 1 < max_len:
                found = extend(start, nxt, items + [item], faces_seen | {nxt}, edges_used | {edge})
                if found:
                    return found
        return None

    faces = sorted(out)
    rng.shuffle(faces)
    for start in faces:
        found = extend(start, start, [], {start}, frozenset())
        if found:
            ring = tuple(found)
            diag = ring_check(m, ring)
            if not diag.valid:
                raise InvariantViolation(f"find_ring produced {ring}: {diag.describe()}")
            return ring
        if budget[0] < 0:
            log.debug("find_ring: search budget exhausted")
            break
    return None


# --- fuzzing ---

@dataclass
class FuzzWitness:
    trial: int
    check: str
    map_text: str
    ring_text: str
    detail: str = ""


@dataclass
class TrialResult:
    trial: int
    ring_len: int = 0
    witnesses: List[FuzzWitness] = field(default_factory=list)


@dataclass
class FuzzReport:
    trials: int
    seed: int
    size_bound: int
    found: int = 0
    failures: dict = field(default_factory=dict)
    witnesses: List[FuzzWitness] = field(default_factory=list)

    @property
    def total_failures(self):
        return sum(self.failures.values())

    def add(self, result: TrialResult):
        if result.ring_len:
            self.found += 1
        for w in result.witnesses:
            self.failures[w.check] = self.failures.get(w.check, 0) + 1
            self.witnesses.append(w)

    def summary(self):
        keys = ("jordan", "ring1_ring3_connect", "no disconnect", "pre_ring_B", "swap oracle")
        parts = [f"trials={self.trials}", f"found={self.found}"]
        parts += [f"{k.replace(' ', '_')}_failures={self.failures.get(k, 0)}" for k in keys]
        return " ".join(parts)


def trial_seed(seed, trial):
    return seed * 1_000_003 + trial


def run_trial(args: Tuple[int, int, int, int, Optional[dict]]) -> TrialResult:
    trial, seed, size_bound, max_ring, weights = args
    rng = random.Random(trial_seed(seed, trial))
    n_darts = rng.randint(0, size_bound)
    n_links = rng.randint(0, max(0, 2 * n_darts - 2))
    m = gen_planar(rng.randrange(2 ** 32), n_darts, n_links, weights)
    ring = find_ring(m, max_ring, rng.randrange(2 ** 32))
    result = TrialResult(trial)
    if ring is None:
        return result
    result.ring_len = len(ring)
    map_text, ring_text = serialize_map(m), serialize_ring(ring)
    outcome = jordan_check(m, ring)
    if not outcome.passed:
        result.witnesses.append(FuzzWitness(
            trial, "jordan", map_text, ring_text,
            f"nc_before={outcome.nc_before} nc_after={outcome.nc_after}"))
    for check, passed in check_ring_lemmas(m, ring).items():
        if not passed:
            result.witnesses.append(FuzzWitness(trial, check, map_text, ring_text))
    return result


def fuzz_jordan(trials, seed, size_bound, max_ring=6, workers=1, weights=None) -> FuzzReport:
    """Generate planar maps, look for rings, check the theorem and its lemmas.

    Trial ``i`` depends only on ``(seed, i, size_bound)``, so the outcome does
    not depend on ``workers``.
    """
    report = FuzzReport(trials, seed, size_bound)
    args = [(t, seed, size_bound, max_ring, weights) for t in range(trials)]
    if workers > 1 and trials > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_trial, args, chunksize=max(1, trials // (4 * workers))))
    else:
        results = [run_trial(a) for a in args]
    for result in sorted(results, key=lambda r: r.trial):
        for w in result.witnesses:
            log.warning("fuzz trial %d: %s failed", w.trial, w.check)
        report.add(result)
    log.info("fuzz seed=%s: %s", seed, report.summary())
    return report
