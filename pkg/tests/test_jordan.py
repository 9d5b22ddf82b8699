from hypothesis import given, settings, strategies as st
import pytest

from hmap.core.characteristics import counts, genus
from hmap.core.errors import PreconditionError
from hmap.core.fmap import I, V, inv_hmap_check
from hmap.core.jordan import (check_ring_lemmas, enumerate_maps, enumerate_rings, find_ring,
                              fuzz_jordan, gen_map, gen_planar, jordan_check, replay_witness,
                              run_trial, trial_seed)
from hmap.core.rings import RingItem, ring_check
from hmap.core.serialize import serialize_map

from .maps import DIGON, DIGON_RING, FIX1, M2


def test_jordan_examples():
    outcome = jordan_check(M2, [(1, True)])
    assert (outcome.nc_before, outcome.nc_after, outcome.delta) == (1, 2, 1)
    assert outcome.verdict == "pass"
    assert outcome.witness is None
    outcome = jordan_check(DIGON, DIGON_RING)
    assert (outcome.nc_before, outcome.nc_after) == (1, 2)
    assert outcome.passed


def test_jordan_needs_planar_map():
    with pytest.raises(PreconditionError) as e:
        jordan_check(FIX1, [(4, True)])
    assert e.value.predicate == "planar"


def test_jordan_needs_a_ring():
    with pytest.raises(PreconditionError) as e:
        jordan_check(DIGON, [(1, True), (3, True)])
    assert e.value.predicate == "ring"
    assert e.value.conjunct == "continuity"


def test_replay_witness():
    assert replay_witness(serialize_map(M2), "1 t\n").passed


def test_ring_lemmas_on_digon():
    assert check_ring_lemmas(DIGON, DIGON_RING) == {
        "swap oracle": True,
        "ring1_ring3_connect": True,
        "no disconnect": True,
        "pre_ring_B": True,
    }
    assert check_ring_lemmas(M2, [(1, True)]) == {"swap oracle": True}


def test_gen_planar_basics():
    assert gen_planar(5, 0, 0) == V
    a = gen_planar(42, 20, 25)
    assert a == gen_planar(42, 20, 25)
    assert inv_hmap_check(a)
    assert genus(a) == 0
    assert counts(a).nd == 20


def test_gen_rejects_impossible_sizes():
    with pytest.raises(PreconditionError):
        gen_planar(0, 2, 5)
    with pytest.raises(PreconditionError):
        gen_map(0, -1, 0)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2 ** 32), n_darts=st.integers(0, 24), data=st.data())
def test_gen_planar_is_planar(seed, n_darts, data):
    m = gen_planar(seed, n_darts, data.draw(st.integers(0, 2 * n_darts)))
    assert inv_hmap_check(m)
    assert genus(m) == 0


def test_gen_planar_weights_select_moves():
    # cross-component links only: the result is a forest of trees, one face per component
    m = gen_planar(3, 12, 11, weights={"cross": 1})
    s = counts(m)
    assert s.planar
    assert s.nf == s.nc


def test_find_ring_examples():
    ring = find_ring(M2, 1, seed=0)
    assert len(ring) == 1 and ring[0].x == 1
    assert ring_check(M2, ring).valid
    assert find_ring(I(V, 1), 5) is None
    ring = find_ring(DIGON, 2, seed=1)
    assert len(ring) == 2
    assert ring_check(DIGON, ring).valid


def test_find_ring_respects_max_len():
    assert find_ring(DIGON, 1) is None
    assert find_ring(DIGON, 0) is None


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2 ** 32), n_darts=st.integers(1, 20))
def test_found_rings_are_rings(seed, n_darts):
    m = gen_planar(seed, n_darts, 2 * n_darts - 2)
    ring = find_ring(m, 6, seed)
    if ring is not None:
        assert ring_check(m, ring).valid
        assert jordan_check(m, ring).passed


def test_enumerate_maps_counts():
    assert [sum(1 for _ in enumerate_maps(n)) for n in range(4)] == [1, 1, 9, 169]
    maps = list(enumerate_maps(3))
    assert len(set(maps)) == len(maps)
    assert all(inv_hmap_check(m) for m in maps)


def test_enumerate_rings_on_digon():
    rings = set(enumerate_rings(DIGON, 2))
    expected = {
        ((1, True), (3, False)),
        ((1, False), (3, True)),
        ((3, True), (1, False)),
        ((3, False), (1, True)),
    }
    assert rings == {tuple(RingItem(*i) for i in r) for r in expected}


def sweep_jordan(n_darts, max_len=3):
    rings = 0
    for m in enumerate_maps(n_darts):
        if not counts(m).planar:
            continue
        for l in enumerate_rings(m, max_len):
            rings += 1
            assert jordan_check(m, l).passed, (m, l)
            assert all(check_ring_lemmas(m, l).values()), (m, l)
    return rings


@pytest.mark.parametrize("n_darts", [2, 3])
def test_jordan_exhaustive(n_darts):
    assert sweep_jordan(n_darts) > 0


@pytest.mark.slow
@pytest.mark.parametrize("n_darts", [4, 5])
def test_jordan_exhaustive_large(n_darts):
    assert sweep_jordan(n_darts) > 0


def test_trial_is_deterministic():
    assert trial_seed(7, 3) == 7 * 1_000_003 + 3
    assert run_trial((5, 7, 16, 6, None)) == run_trial((5, 7, 16, 6, None))


def test_fuzz_empty():
    report = fuzz_jordan(0, 1, 8)
    assert report.found == 0
    assert report.total_failures == 0
    assert report.witnesses == []


def test_fuzz_small():
    report = fuzz_jordan(40, 7, 16)
    assert report.found > 0
    assert report.total_failures == 0, report.witnesses
    assert report.summary().startswith("trials=40 found=")


def test_fuzz_does_not_depend_on_workers():
    a = fuzz_jordan(12, 3, 12, workers=1)
    b = fuzz_jordan(12, 3, 12, workers=2)
    assert (a.found, a.failures) == (b.found, b.failures)


@pytest.mark.slow
def test_fuzz_acceptance():
    report = fuzz_jordan(1000, 7, 32)
    assert report.found >= 200
    assert report.total_failures == 0
