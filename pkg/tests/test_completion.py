import pytest
from hypothesis import given

from cfpo.completion import complete
from cfpo.enumeration import posets, rooted_trees
from cfpo.fixtures import NAMED, alt, chain

import oracles
from conftest import small_posets


def test_chain_needs_nothing():
    assert complete(NAMED["CHAIN_3"]()).virtual == frozenset()


def test_antichain_cuts_are_unbounded():
    assert complete(NAMED["ANTI_2"]()).virtual == frozenset()


def test_bip22_gains_one_midpoint():
    comp = complete(NAMED["BIP22"]())
    assert len(comp.virtual) == 1
    (m,) = comp.virtual
    Q = comp.completed
    assert all(Q.lt(x, m) for x in "ab") and all(Q.lt(m, y) for y in "cd")
    assert comp.cuts[m] == (frozenset("ab"), frozenset("cd"))


def test_embedding_is_identity_on_names():
    comp = complete(NAMED["HBAR"]())
    assert all(comp.embedding[x] == x for x in NAMED["HBAR"]())
    assert comp.original == NAMED["HBAR"]().elements


@pytest.mark.parametrize("n", range(1, 7))
def test_virtual_points_match_brute_force_cuts(n):
    for P in posets(n):
        got = {(A, B) for A, B in complete(P).cuts.values()}
        assert got == oracles.nonprincipal_cuts(P), P


@pytest.mark.parametrize("n", range(1, 8))
def test_trees_and_fences_are_complete(n):
    for T in rooted_trees(n):
        assert not complete(T).virtual
    assert not complete(chain(n)).virtual


def test_fences_gain_no_points():
    # every pair of neighbouring corners in a fence already has a meet or join
    for k in range(1, 8):
        assert not complete(alt(k)).virtual


@given(small_posets())
def test_idempotent(P):
    Q = complete(P).completed
    assert not complete(Q).virtual


@given(small_posets())
def test_restriction_to_originals(P):
    Q = complete(P).completed
    assert Q.induced(P.elements) == P
