from __future__ import annotations

import pytest

from mforge.search import (SearchConfig, SearchGuardError, dedup_ramification, is_excluded_type,
                           triangle_types, quotient_obstruction, screen_group, search_group, search_systems,
                           select_groups, sweep_types, type_obstructed)
from mforge.socle import catalog_type_b

from oracle import brute_force

ORACLE_CASES = [("a5", (3, 4, 6), range(10)), ("a5", (3, 5, 5), range(32)), ("a5", (5, 5, 5), range(32)),
                ("psl2_7", (2, 3, 8), range(2)), ("psl2_7", (3, 3, 4), range(60))]


@pytest.mark.parametrize("label, ty, genus", ORACLE_CASES)
def test_search_agrees_with_brute_force(label, ty, genus):
    for G in catalog_type_b(label):
        expected = brute_force(G, ty, genus)
        got = {(r.genus, r.ramification.key) for r in search_group(G, ty, genus)}
        assert got == expected


def test_psl27_two_ramification_types():
    cfg = SearchConfig("psl2_7", ((2, 3, 8),), (0, 1))
    recs = search_systems(cfg)
    assert len(recs) == 2
    assert {r.group_order for r in recs} == {56448}
    assert len(dedup_ramification(recs)) == 2
    names = sorted(tuple(c.name for c in r.ramification.classes) for r in recs)
    assert names == [("(2A'1,2A'1)", "(3A,3A)", "(8A'1,8B'1)"), ("(2A'1,2A'1)", "(3A,3A)", "(8B'1,8A'1)")]
    for r in recs:
        assert all(r.flags.values())


def test_thread_count_does_not_change_results():
    G = catalog_type_b("a5")[0]
    one = [r.as_dict() for r in search_group(G, (3, 5, 5), range(32), threads=1)]
    many = [r.as_dict() for r in search_group(G, (3, 5, 5), range(32), threads=4)]
    assert one == many and one


def test_excluded_types():
    assert is_excluded_type((2, 3, 5)) and is_excluded_type((2, 2, 7))
    assert not is_excluded_type((2, 3, 7))
    with pytest.raises(ValueError):
        SearchConfig("a5", ((2, 3, 5),))
    SearchConfig("a5", ((2, 3, 5),), allow_excluded=True)


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig("a5", ((2, 3, 7),), threads=0)
    with pytest.raises(ValueError):
        SearchConfig("a5", ((2, 3, 7),), strategy="magic")
    with pytest.raises(ValueError):
        SearchConfig("a5", ((1, 3, 7),))


def test_prop32_types():
    assert len(triangle_types(False)) == 23 + 33 + 9 + 4 + 6 + 2
    a5 = triangle_types(True, [1, 2, 3, 4, 5, 6, 10])
    assert (2, 3, 10) in a5 and (2, 3, 7) not in a5
    assert (2, 2, 2, 3) in sweep_types("a5")
    assert sweep_types("psl2_9") == [(2, 3, 8)]


def test_group_selection():
    assert [G.label for G in select_groups("psl2_9", "0,1")] == ["psl2_9^2.C2<0,1>"]
    with pytest.raises(ValueError):
        select_groups("psl2_7", "0,5")


def test_quotient_obstruction_parity():
    # Q = C2: three slots of orders 2, 3, 7 can only use the outer coset in slot 1, product is nontrivial
    q_mul = [[0, 1], [1, 0]]
    q_order = [1, 2]
    assert quotient_obstruction((2, 3, 7), [{0, 1}] * 3, frozenset({0, 1}), q_mul, q_order)
    assert not quotient_obstruction((2, 3, 8), [{0, 1}] * 3, frozenset({0, 1}), q_mul, q_order)


def test_a8_screen_hit_is_obstructed():
    hits = []
    for G in catalog_type_b("a8"):
        hits += [(G, s) for s in screen_group(G, (2, 3, 7), range(6))]
    assert hits
    assert {G.label for G, _ in hits} == {"a8^2.C2"}
    assert all(s.obstructed and s.genera == (1,) for _, s in hits)
    assert type_obstructed(hits[0][0], (2, 3, 7))


def test_enumeration_guard():
    G = catalog_type_b("a8")[0]
    with pytest.raises(SearchGuardError):
        search_group(G, (2, 3, 7), (0, 1), max_enumeration=10)
