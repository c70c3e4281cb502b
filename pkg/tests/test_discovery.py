from decimal import Decimal

import pytest
from hypothesis import given, settings

from strategies import relations
from tagunion import fixtures
from tagunion.discovery import (
    brute_force_candidates,
    build_pli,
    deepest_valid_depth,
    discover_candidates,
    resolve_depths,
)
from tagunion.encoding import (
    OBJECT_ID,
    Basic,
    ObjectRelation,
    Subschema,
    encode_relation,
    to_schema,
    truncate,
    type_attr,
    value_attr,
)
from tagunion.jsoncore import WILDCARD, PathKey, parse_documents

GEOMETRIES = PathKey(("geometries", WILDCARD))
T1 = {"type": "array", "items": {"type": "number"}}
T2 = {"type": "array", "items": {"type": "array", "items": {"type": "number"}}}


@pytest.fixture
def geom_rel():
    return encode_relation(fixtures.load("geometries"), GEOMETRIES, 6)


def _as_set(cands):
    return {(c.tag, c.constant, c.consequent, c.depth, c.schema, c.support, c.witnesses) for c in cands}


def test_pli_of_tag_column(geom_rel):
    pli = build_pli(geom_rel, value_attr("type"))
    assert [(v.value, rows) for v, rows in pli.clusters] == [
        ("Point", (0, 1)),
        ("LineString", (2, 3)),
    ]


def test_pli_of_object_id_is_all_singletons(geom_rel):
    assert build_pli(geom_rel, OBJECT_ID).all_singletons


def test_pli_skips_missing_cells():
    rel = ObjectRelation(PathKey(), [OBJECT_ID, value_attr("a")],
                         {OBJECT_ID: [0, 1, 2], value_attr("a"): [None, Basic("string", "x"), None]})
    pli = build_pli(rel, value_attr("a"))
    assert pli.partition() == {frozenset({1})}


def test_cluster_inclusion_example():
    # A.value clusters {1,2,3},{4,5,6}; B.type clusters {1,2,3,4},{5},{6} (1-based rows)
    a = [Basic("string", "u")] * 3 + [Basic("string", "v")] * 3
    num, s, o = Subschema("number"), Subschema("string"), Subschema("object")
    b = [num, num, num, num, s, o]
    rel = ObjectRelation(PathKey(), [OBJECT_ID, value_attr("A"), type_attr("B", 1)],
                         {OBJECT_ID: list(range(6)), value_attr("A"): a, type_attr("B", 1): b})
    [cand] = discover_candidates(rel)
    assert cand.constant == Basic("string", "u")
    assert set(cand.witnesses) <= set(build_pli(rel, type_attr("B", 1)).clusters[0][1])
    assert cand.witnesses == (0, 1, 2)


def test_geom_candidates_after_depth_resolution(geom_rel):
    cands = resolve_depths(discover_candidates(geom_rel, [value_attr("type")],
                                               [type_attr("coordinates", d) for d in range(1, 7)]))
    got = [(c.constant.value, c.consequent, c.depth, to_schema(c.schema), c.support) for c in cands]
    assert got == [
        ("LineString", "coordinates", 6, T2, 2),
        ("Point", "coordinates", 6, T1, 2),
    ]


def test_brute_force_agrees_on_geometries(geom_rel):
    assert _as_set(brute_force_candidates(geom_rel)) == _as_set(discover_candidates(geom_rel))


def test_single_row_relation_yields_support_one_candidates():
    rel = encode_relation(parse_documents('{"k": "v", "x": [1], "y": 2}'), PathKey(), 1)
    cands = discover_candidates(rel)
    assert cands and all(c.support == 1 for c in cands)
    pairs = {(c.tag, c.consequent) for c in cands}
    assert pairs == {("k", "x"), ("k", "y"), ("y", "k"), ("y", "x")}


def test_empty_relation():
    rel = ObjectRelation(PathKey(), [OBJECT_ID, value_attr("a"), type_attr("b", 1)],
                         {OBJECT_ID: [], value_attr("a"): [], type_attr("b", 1): []})
    assert brute_force_candidates(rel) == [] == discover_candidates(rel)


def test_conflicting_subschemas_give_no_candidate():
    coll = parse_documents('[{"t": "c", "b": 1}, {"t": "c", "b": "s"}]')
    rel = encode_relation(coll, PathKey((WILDCARD,)), 2)
    assert [c for c in brute_force_candidates(rel) if c.consequent == "b"] == []
    assert [c for c in discover_candidates(rel) if c.consequent == "b"] == []


def test_missing_consequent_among_witnesses_invalidates():
    coll = parse_documents('[{"t": "c", "b": 1}, {"t": "c"}]')
    rel = encode_relation(coll, PathKey((WILDCARD,)), 1)
    assert [c for c in discover_candidates(rel) if c.consequent == "b"] == []


def test_tag_and_consequent_must_differ():
    coll = parse_documents('[{"t": "c"}, {"t": "c"}]')
    rel = encode_relation(coll, PathKey((WILDCARD,)), 2)
    assert discover_candidates(rel) == []


def test_roles_are_enforced(geom_rel):
    with pytest.raises(ValueError):
        discover_candidates(geom_rel, [type_attr("type", 1)], [])
    with pytest.raises(ValueError):
        discover_candidates(geom_rel, [], [value_attr("type")])


def test_deepest_depth_for_points(geom_rel):
    cands = [c for c in discover_candidates(geom_rel) if c.constant.value == "Point"]
    assert sorted(c.depth for c in cands) == [1, 2, 3, 4, 5, 6]
    assert deepest_valid_depth(cands).depth == 6


def test_deepest_depth_single_level():
    rel = encode_relation(fixtures.load("geometries"), GEOMETRIES, 1)
    cands = [c for c in discover_candidates(rel) if c.constant.value == "Point"]
    assert len(cands) == 1 and deepest_valid_depth(cands) is cands[0]
    assert deepest_valid_depth([]) is None


def test_deepest_depth_rejects_mixed_triples(geom_rel):
    with pytest.raises(ValueError):
        deepest_valid_depth(discover_candidates(geom_rel))


def test_minecraft_min_relaxes_to_depth_one():
    coll = fixtures.load("minecraft")
    rel = encode_relation(coll, PathKey((WILDCARD,)), 6)
    resolved = resolve_depths(discover_candidates(rel))
    by_consequent = {(c.constant.value, c.consequent): c for c in resolved if c.tag == "condition"}
    assert by_consequent[("minecraft:time_check", "value")].depth == 1
    assert by_consequent[("minecraft:time_check", "period")].depth == 6
    assert not any(c.consequent == "min" for c in resolved)


@given(relations())
@settings(max_examples=300, deadline=None)
def test_oracle_equivalence(rel):
    assert _as_set(discover_candidates(rel)) == _as_set(brute_force_candidates(rel))


@given(relations())
@settings(max_examples=200, deadline=None)
def test_support_counts_matching_rows(rel):
    for c in discover_candidates(rel):
        col = rel.columns[value_attr(c.tag)]
        assert c.support == sum(1 for x in col if x == c.constant)
        assert all(rel.columns[type_attr(c.consequent, c.depth)][r] == c.schema for r in c.witnesses)


@given(relations())
@settings(max_examples=100, deadline=None)
def test_output_order_is_a_function_of_the_relation(rel):
    assert discover_candidates(rel) == discover_candidates(rel)
    keys = [c.sort_key() for c in discover_candidates(rel)]
    assert keys == sorted(keys)


def test_monotone_depth_on_real_data():
    coll = fixtures.load("topo_regions")
    for path in coll.object_index():
        rel = encode_relation(coll, path, 6)
        cands = discover_candidates(rel)
        present = {(c.tag, c.constant, c.consequent, c.depth): c for c in cands}
        for c in cands:
            if c.depth > 1:
                shallower = present[(c.tag, c.constant, c.consequent, c.depth - 1)]
                assert shallower.support == c.support
                assert shallower.schema == truncate(c.schema, c.depth - 1)


def test_numbers_cluster_by_value():
    coll = parse_documents('[{"n": 1, "b": [1]}, {"n": 1.0, "b": [2]}, {"n": true, "b": "x"}]')
    rel = encode_relation(coll, PathKey((WILDCARD,)), 2)
    pli = build_pli(rel, value_attr("n"))
    assert [rows for _, rows in pli.clusters] == [(0, 1), (2,)]
    assert pli.clusters[0][0] == Basic("number", Decimal(1))
