import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from surgerykit.diagram import canonical_key, writhe
from surgerykit.fpgroup import abelianization
from surgerykit.knots import builtin, unknot_with_kinks
from surgerykit.moves import (
    InapplicableMove,
    Move,
    R1RemoveSite,
    R1Site,
    R3Site,
    apply_reidemeister,
    sites,
)
from surgerykit.wirtinger import wirtinger_presentation

from corpus import bases, random_walk


def test_r1_changes_writhe_by_sign():
    d = builtin("trefoil")
    for move, delta in ((Move.R1_POS, 1), (Move.R1_NEG, -1)):
        for site in sites(d, move):
            e = apply_reidemeister(d, move, site)
            assert writhe(e) == writhe(d) + delta
            assert e.n_crossings == 4


def test_r1_then_remove_is_identity():
    d = builtin("figure-eight")
    e = apply_reidemeister(d, Move.R1_POS, R1Site(3, over_first=False))
    back = [apply_reidemeister(e, Move.R1_REMOVE, s) for s in sites(e, Move.R1_REMOVE)]
    assert canonical_key(d) in {canonical_key(b) for b in back}


def test_r1_remove_on_trefoil_is_inapplicable():
    with pytest.raises(InapplicableMove):
        apply_reidemeister(builtin("trefoil"), Move.R1_REMOVE, R1RemoveSite(0))


def test_r2_adds_opposite_pair_and_undoes():
    d = builtin("trefoil")
    for site in sites(d, Move.R2)[:12]:
        e = apply_reidemeister(d, Move.R2, site)
        assert e.n_crossings == 5
        assert writhe(e) == 3
        undo = {canonical_key(apply_reidemeister(e, Move.R2_REMOVE, s)) for s in sites(e, Move.R2_REMOVE)}
        assert canonical_key(d) in undo


def test_r3_needs_a_non_alternating_triangle():
    d = builtin("trefoil")
    assert sites(d, Move.R3) == []
    with pytest.raises(InapplicableMove):
        apply_reidemeister(d, Move.R3, R3Site(0))


def test_r3_is_an_involution_on_its_triangle():
    rng = random.Random(3)
    found = 0
    for _ in range(200):
        d = random_walk(rng, rng.choice(bases()), 6)
        for site in sites(d, Move.R3):
            e = apply_reidemeister(d, Move.R3, site)
            assert writhe(e) == writhe(d)
            back = {canonical_key(apply_reidemeister(e, Move.R3, s)) for s in sites(e, Move.R3)}
            assert canonical_key(d) in back
            found += 1
    assert found > 10


def test_unknot_curls():
    d = unknot_with_kinks(0)
    e = apply_reidemeister(d, Move.R1_NEG, R1Site(0, True))
    assert e == unknot_with_kinks(-1) or writhe(e) == -1


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 10))
def test_random_moves_preserve_knot_invariants(seed, steps):
    rng = random.Random(seed)
    d0 = rng.choice(bases())
    d = random_walk(rng, d0, steps)
    ab = abelianization(wirtinger_presentation(d))
    assert (ab.free_rank, ab.torsion) == (1, ())
    assert len(d.faces()) == d.n_crossings + 2 or d.n_crossings == 0
