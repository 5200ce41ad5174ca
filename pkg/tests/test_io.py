import json

import pytest

from cfpo import io as pio
from cfpo.aut import automorphisms
from cfpo.dot import emit_dot
from cfpo.errors import CycleInOrder, ReservedColor
from cfpo.fixtures import NAMED
from cfpo.treeify import treeify


def test_round_trip_document():
    P = NAMED["HBAR"]().with_colors({"red": ["x"]})
    doc = pio.poset_to_doc(P)
    assert pio.poset_from_doc(json.loads(pio.dumps(doc))) == P


def test_leq_lists_covers_only():
    doc = pio.poset_to_doc(NAMED["CHAIN_3"]())
    assert doc["leq"] == [["a", "b"], ["b", "c"]]


@pytest.mark.parametrize("text", ['[]', '{"elements": "ab"}', '{"elements": ["a"], "leq": [["a"]]}',
                                  '{"elements": ["a"], "extra": 1}', '{"elements": [1.5]}',
                                  '{"elements": ["a"], "colors": {"red": "a"}}', 'not json'])
def test_malformed_documents(text):
    with pytest.raises(pio.MalformedInput):
        pio.loads(text)


def test_domain_errors_pass_through():
    with pytest.raises(CycleInOrder):
        pio.loads('{"elements": ["a", "b"], "leq": [["a", "b"], ["b", "a"]]}')
    with pytest.raises(ReservedColor):
        pio.loads('{"elements": ["a"], "colors": {"U": ["a"]}}')


def test_group_document():
    doc = pio.group_to_doc(automorphisms(NAMED["BOWTIE"]()))
    assert doc["order"] == 4
    assert sorted(map(sorted, doc["orbits"])) == [["b1", "b2"], ["c1", "c2"], ["x"]]


def test_dot_chain():
    text = emit_dot(NAMED["CHAIN_2"]())
    assert text.count("->") == 1
    assert '"a";' in text and '"b";' in text


def test_dot_styles_u_points():
    res = treeify(NAMED["BOWTIE"]())
    text = emit_dot(res.tree)
    filled = [l for l in text.splitlines() if "filled" in l]
    assert len(filled) == 3
    assert all(any(f'"{x}"' in l for l in filled) for x in ("x", "c1", "c2"))
    assert text.count("->") == 4


def test_dot_is_deterministic():
    P = NAMED["HBAR"]()
    assert emit_dot(P) == emit_dot(P.relabel({x: x for x in P}))
