import json
from pathlib import Path

import pytest

from stratakit.algebra import quadratic_dual
from stratakit.errors import NonComposableRelation, PresentationError
from stratakit.formats import (
    dumps_presentation,
    flatten,
    loads_presentation,
    presentation_from_dict,
    presentation_to_dict,
    profile_pairs,
)
from stratakit.homology import HHProfile

FIXTURES = sorted((Path(__file__).parent / "fixtures").glob("*.json"))
HAND_WRITTEN = {"three_vertex_chain.json", "loop_square_zero.json"}


def test_corpus_is_present():
    assert len(FIXTURES) >= 10


@pytest.mark.parametrize("path", FIXTURES, ids=lambda p: p.stem)
def test_round_trip(path):
    text = path.read_text()
    pres = loads_presentation(text)
    again = dumps_presentation(pres)
    assert loads_presentation(again) == pres
    assert dumps_presentation(loads_presentation(again)) == again
    if path.name not in HAND_WRITTEN:
        assert again == text


@pytest.mark.parametrize("path", FIXTURES, ids=lambda p: p.stem)
def test_dual_involution(path):
    pres = loads_presentation(path.read_text())
    twice = quadratic_dual(quadratic_dual(pres))
    assert twice.vertices == pres.vertices
    assert twice.arrows == pres.arrows
    assert twice.relation_set == pres.relation_set


def test_degree_defaults_to_zero():
    pres = loads_presentation((Path(__file__).parent / "fixtures" / "three_vertex_chain.json").read_text())
    assert all(a.degree == 0 for a in pres.arrows)
    assert presentation_to_dict(pres)["arrows"][0]["degree"] == 0


def test_key_order_is_fixed():
    doc = json.loads(dumps_presentation(presentation_from_dict({"relations": [], "arrows": [], "vertices": ["1"]})))
    assert list(doc) == ["vertices", "arrows", "relations"]


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[]",
        '{"vertices": ["1"], "extra": 1}',
        '{"vertices": "1"}',
        '{"vertices": ["1"], "arrows": [{"label": "a", "source": "1"}]}',
        '{"vertices": ["1"], "arrows": [{"label": "a", "source": "1", "target": "1", "colour": 3}]}',
        '{"vertices": ["1"], "arrows": [{"label": "a", "source": "1", "target": "1", "degree": 1.5}]}',
        '{"vertices": ["1"], "arrows": [{"label": "a", "source": "1", "target": "1", "degree": true}]}',
        '{"vertices": ["1"], "arrows": [], "relations": [["a"]]}',
        '{"vertices": ["1"], "arrows": [{"label": "a", "source": "1", "target": "2"}]}',
    ],
)
def test_bad_documents(text):
    with pytest.raises(PresentationError):
        loads_presentation(text)


def test_non_composable_relation():
    doc = {
        "vertices": ["1", "2"],
        "arrows": [{"label": "a", "source": "1", "target": "2"}, {"label": "b", "source": "1", "target": "2"}],
        "relations": [["b", "a"]],
    }
    with pytest.raises(NonComposableRelation):
        presentation_from_dict(doc)


def test_profile_pairs_sorted_without_zeros():
    assert profile_pairs(HHProfile({2: 1, -1: 0, 0: 3})) == [[0, 3], [2, 1]]


def test_flatten():
    flat = flatten({"a": {"b": 1, "c": [[0, 3], [2, 1]]}, "d": [1, 2], "e": None, "f": True})
    assert flat == {"a.b": "1", "a.c": "0:3;2:1", "d": "1;2", "e": "", "f": "true"}
    assert flatten(5) == {"value": "5"}
