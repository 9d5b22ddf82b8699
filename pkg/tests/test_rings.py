from hypothesis import given, settings, strategies as st
import pytest

from hmap.core.characteristics import counts
from hmap.core.errors import PreconditionError
from hmap.core.fmap import ZERO, B, I, L, V, darts, pred, succ
from hmap.core.index import index_of
from hmap.core.jordan import gen_map, gen_planar
from hmap.core.orbits import OrbitKind, orbit, orbits
from hmap.core.rings import (EMPTY, Bl, RingItem, adjacent_faces, cons, face_adjacency,
                             face_rep, is_ring, pre_ring0, pre_ring1, pre_ring2, pre_ring3,
                             ring_check, ring_list, swap_break_oracle)

from .maps import DIGON, DIGON_RING, FIX1, M2, build


def test_face_rep():
    assert face_rep(DIGON, (1, True)) == 2
    assert face_rep(DIGON, (3, False)) == 3
    assert face_rep(M2, (1, False)) == 1


def test_face_rep_needs_a_0_link():
    with pytest.raises(PreconditionError):
        face_rep(M2, (2, True))


def test_adjacent_faces():
    assert adjacent_faces(DIGON, (1, True), (3, False))
    assert adjacent_faces(DIGON, (3, False), (1, True))
    assert not adjacent_faces(DIGON, (1, True), (3, True))


def test_pre_ring_conditions():
    assert pre_ring0(DIGON, DIGON_RING)
    assert not pre_ring0(M2, [(1, True), (2, True)])
    assert pre_ring0(DIGON, EMPTY)
    assert pre_ring1(DIGON, DIGON_RING)
    assert pre_ring2(DIGON, DIGON_RING)
    assert pre_ring3(DIGON, DIGON_RING)
    assert pre_ring2(M2, [(1, True)])
    assert not pre_ring3(DIGON, [(1, True), (3, True)])


def test_unicity_rejects_repeated_edge():
    assert not pre_ring0(DIGON, [(1, True), (1, False)])


def test_ring_check():
    assert ring_check(DIGON, DIGON_RING).describe() == "valid"
    assert is_ring(M2, [(1, True)])
    assert ring_check(DIGON, EMPTY).describe() == "invalid(empty)"


def test_ring_check_names_first_failure():
    diag = ring_check(DIGON, [(1, True), (3, True)])
    assert not diag.valid
    assert diag.failed == "continuity"
    assert diag.offending == (0, 1)
    assert diag.describe() == "invalid(continuity at item 0,1)"
    assert diag.conditions["unicity"]
    assert not diag.conditions["simplicity"]


def test_ring_check_needs_inv_hmap():
    with pytest.raises(PreconditionError):
        ring_check(L(I(V, 1), ZERO, 1, 1), [(1, True)])


def test_list_helpers():
    l = cons((1, True), cons((3, False), EMPTY))
    assert l == ring_list(DIGON_RING)
    assert l[0] == RingItem(1, True)


def test_break_along_ring():
    assert Bl(M2, [(1, True)]) == I(I(V, 1), 2)
    broken = Bl(DIGON, DIGON_RING)
    assert broken == build(4, one_links=[(2, 3), (4, 1)])
    assert Bl(DIGON, EMPTY) == DIGON
    assert sorted(darts(broken)) == sorted(darts(DIGON))
    assert counts(broken).nc == 2


def test_break_names_the_item_without_link():
    with pytest.raises(PreconditionError) as e:
        Bl(DIGON, [(1, True), (1, False)])
    assert "item 1" in str(e.value)


def test_swap_oracle_matches_break():
    for m, l in ((M2, [(1, True)]), (DIGON, DIGON_RING)):
        assert swap_break_oracle(m, l) == index_of(Bl(m, l)).ca[ZERO]


def test_swap_oracle_on_a_longer_path():
    m = FIX1
    l = [(4, True), (13, False)]
    assert swap_break_oracle(m, l) == index_of(Bl(m, l)).ca[ZERO]


def test_face_adjacency():
    links = face_adjacency(DIGON)
    assert [(fl.x, fl.y_face, fl.x0_face) for fl in links] == [(1, 2, 1), (3, 2, 1)]
    assert links[0].edge != links[1].edge


def test_breaking_first_item_keeps_tail_a_ring():
    m1 = B(DIGON, ZERO, 1)
    assert ring_check(m1, DIGON_RING[1:]).valid


def edge_sides(m):
    """Faces on either side of every 0-link, read off the edge and face orbits.

    For the link leaving x, ``side[x][True]`` is the face entered through the
    0-successor of x and ``side[x][False]`` the one through the first dart of
    the open edge.
    """
    face = {z: o.label for o in orbits(m, OrbitKind.FACE) for z in o.members}
    sides = {}
    for x in darts(m):
        if not succ(m, ZERO, x):
            continue
        members = orbit(m, OrbitKind.EDGE, x).members
        first = next(z for z in members if not pred(m, ZERO, z))
        sides[x] = {True: face[members[1]], False: face[first]}
    return sides


@settings(max_examples=200, deadline=None)
@given(seed=st.integers(0, 2 ** 32), n_darts=st.integers(2, 12), planar=st.booleans(), data=st.data())
def test_adjacent_faces_matches_face_labels(seed, n_darts, planar, data):
    generate = gen_planar if planar else gen_map
    m = generate(seed, n_darts, data.draw(st.integers(1, 2 * n_darts)))
    sides = edge_sides(m)
    if not sides:
        return
    items = st.tuples(st.sampled_from(sorted(sides)), st.booleans())
    (x, b), (x2, b2) = data.draw(items), data.draw(items)
    assert orbit(m, OrbitKind.FACE, face_rep(m, (x2, b2))).label == sides[x2][b2]
    # the face of xb is left through the other side of its link
    assert adjacent_faces(m, (x, b), (x2, b2)) == (sides[x][not b] == sides[x2][b2])
