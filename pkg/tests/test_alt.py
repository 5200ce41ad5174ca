import pytest
from hypothesis import assume, given, strategies as st

from cfpo.alt import alt_embeddings, alt_poset, center_midpoints, classify
from cfpo.aut import automorphisms
from cfpo.enumeration import connected_cfpos
from cfpo.errors import EmptyPoset, InvalidSize, NotACFPO, NotOddClass
from cfpo.fixtures import NAMED
from cfpo.paths import is_cfpo
from cfpo.poset import build

import oracles
from conftest import sparse_posets


def test_fence_shapes():
    assert alt_poset(2).relation_pairs() == [("a1", "a0")]
    V = alt_poset(3)
    assert V.lt("a1", "a0") and V.lt("a1", "a2") and not V.comparable("a0", "a2")
    L = alt_poset(3, True)
    assert L.lt("a0", "a1") and L.lt("a2", "a1")


def test_fence_size_must_be_positive():
    with pytest.raises(InvalidSize):
        alt_poset(0)
    with pytest.raises(InvalidSize):
        alt_embeddings(NAMED["V"](), 0)


def test_embeddings_of_alt5_into_itself():
    embs = alt_embeddings(NAMED["ALT_5"](), 5)
    assert len(embs) == 2
    assert {e.image for e in embs} == {tuple(f"a{i}" for i in range(5)),
                                       tuple(f"a{4 - i}" for i in range(5))}
    assert not any(e.reversed for e in embs)


def test_no_embeddings():
    assert alt_embeddings(NAMED["CHAIN_3"](), 3) == []
    assert alt_embeddings(NAMED["ANTI_2"](), 2) == []


@pytest.mark.parametrize("name,n", [("ALT_5", 5), ("BOWTIE", 3), ("ANTI_2", 1),
                                    ("CHAIN_3", 2), ("N", 4), ("HBAR", 3)])
def test_classify_examples(name, n):
    assert classify(NAMED[name]()).n == n


@pytest.mark.parametrize("k", range(1, 8))
def test_classify_fences(k):
    assert classify(alt_poset(k)).n == k
    assert classify(alt_poset(k, True)).n == k


def test_classify_empty():
    with pytest.raises(EmptyPoset):
        classify(build([]))


def test_witness_is_an_embedding():
    c = classify(NAMED["HBAR"]())
    P = NAMED["HBAR"]()
    src = c.witness.source
    for x in src:
        for y in src:
            assert src.leq(x, y) == P.leq(c.witness(x), c.witness(y))


def test_center_midpoints_examples():
    assert center_midpoints(NAMED["ALT_5"]()) == {"a2"}
    assert center_midpoints(NAMED["BOWTIE"]()) == {"x", "b1", "b2", "c1", "c2"}
    assert center_midpoints(NAMED["HBAR"]()) == {"b1", "b2", "x", "y", "c1", "c2"}


def test_center_midpoints_errors():
    with pytest.raises(NotOddClass):
        center_midpoints(NAMED["N"]())
    with pytest.raises(NotACFPO):
        center_midpoints(NAMED["DIAMOND"]())


@pytest.mark.parametrize("n", range(1, 7))
def test_embeddings_match_brute_force(n):
    for M in connected_cfpos(n):
        k = classify(M).n
        assert k == oracles.fence_class(M)
        got = {e.image for e in alt_embeddings(M, k)}
        assert got == {s for s, _ in oracles.fence_embeddings(M, k)}


@given(sparse_posets(), st.data())
def test_classify_monotone(P, data):
    keep = data.draw(st.sets(st.sampled_from(P.elements), min_size=1))
    assert classify(P.induced(P.sorted(keep))).n <= classify(P).n


@given(sparse_posets())
def test_centre_is_invariant(P):
    assume(is_cfpo(P) and classify(P).n % 2 == 1 and len(P) > 0)
    from cfpo.paths import is_connected
    assume(is_connected(P))
    C = center_midpoints(P)
    for g in automorphisms(P).generators:
        assert {g(x) for x in C} == C
