from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mforge.perm import PermGroup, order as perm_order
from mforge.socle import (CosetMismatch, SocleSizeError, catalog_type_b, class_reps, enumerate_socle,
                          get_model, swap_extension, verify_type_b)

GROUP_COUNTS = {"a5": 2, "a6": 5, "psl2_7": 2, "psl2_8": 2, "psl2_9": 5, "psl2_16": 3, "psl2_25": 5}


def test_enumeration_matches_bsgs(psl27):
    assert psl27.n == 168
    assert len(psl27.E) == 336
    assert len({tuple(r) for r in psl27.E.tolist()}) == 336
    assert psl27.E[0].tolist() == list(range(psl27.d))


def test_size_guard():
    with pytest.raises(SocleSizeError):
        enumerate_socle("a8", max_socle=1000)


@pytest.mark.parametrize("label, count", sorted(GROUP_COUNTS.items()))
def test_catalog_group_counts(label, count):
    assert len(catalog_type_b(label)) == count


def test_class_equation(psl27, a5):
    for m in (psl27, a5):
        inner = [c for c in range(m.num_classes) if m.class_coset[c] == 0]
        assert sum(int(m.class_size[c]) for c in inner) == m.n
        assert all(int(m.class_size[c]) * int(m.class_cent[c]) == m.n for c in range(m.num_classes))


def test_class_names(psl27):
    assert psl27.class_name == ["1A", "3A", "7A", "7B", "4A", "2A", "6A'1", "2A'1", "8A'1", "8B'1"]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 335), st.integers(0, 335))
def test_multiplication_matches_permutations(i, j):
    m = get_model("psl2_7")
    assert m.perm(int(m.mul(i, j))) == m.perm(i) * m.perm(j)
    assert int(m.mul(i, int(m.inv[i]))) == 0
    assert int(m.order[i]) == perm_order(m.perm(i))


def test_fixed_point_closed_form_inner_pairs(psl27):
    inner = [c for c in range(psl27.num_classes) if psl27.class_coset[c] == 0]
    for c1 in inner:
        for c2 in inner:
            u, v = int(psl27.class_rep[c1]), int(psl27.class_rep[c2])
            assert psl27.fixed_points(u, v) == psl27.fixed_points_direct(u, v)


def test_conjugate_order7_pair_fixes_seven(psl27):
    c7 = psl27.class_name.index("7A")
    u = int(psl27.class_rep[c7])
    v = int(np.flatnonzero(psl27.cls[: psl27.n] == c7)[-1])
    assert psl27.fixed_points(u, v) == 7 == psl27.fixed_points_direct(u, v)


def test_coset_mismatch(psl27):
    with pytest.raises(CosetMismatch):
        psl27.act(0, psl27.n)


def test_act_many_matches_act(psl27):
    G = catalog_type_b("psl2_7")[1]
    rng = np.random.default_rng(3)
    us, vs = G.random_elements(rng, 40)
    batch = psl27.act_many(us, vs)
    for k in range(40):
        assert np.array_equal(batch[k], psl27.act(int(us[k]), int(vs[k])))


def test_action_is_a_homomorphism(psl27):
    rng = np.random.default_rng(5)
    for _ in range(20):
        u1, v1, u2, v2 = (int(x) for x in rng.integers(psl27.n, size=4))
        p1, p2 = psl27.act(u1, v1), psl27.act(u2, v2)
        prod_ = psl27.act(int(psl27.mul(u1, u2)), int(psl27.mul(v1, v2)))
        assert np.array_equal(prod_, p1[p2])


def test_group_orders_and_generation(g168):
    assert g168.order == 56448 and g168.n == 168
    H = PermGroup([g168.pair_perm(p) for p in g168.generators], 2 * g168.model.d)
    assert H.order == g168.order


def test_class_reps_cover_group(g168):
    reps = class_reps(g168)
    assert sum(r.size for r in reps) == g168.order
    assert all(r.granularity == "coordinatewise-L-class" for r in reps)


def test_a8_order7_reps():
    G = catalog_type_b("a8")[0]
    assert len(class_reps(G, 7)) == 8


def test_verify_type_b_and_swap_rejection(g168):
    res = verify_type_b(g168)
    assert res["ok"], res["checks"]
    bad = verify_type_b(g168, extra_omega_gens=[swap_extension(g168.model)])
    failed = {name for name, ok, _ in bad["checks"] if not ok}
    assert {"normal-Lx1", "normal-1xL"} <= failed


def test_orbit_closed_form_matches_cycles(psl27):
    from mforge.rh import count_cycles
    for c1 in range(psl27.num_classes):
        for c2 in range(psl27.num_classes):
            if psl27.class_coset[c1] != psl27.class_coset[c2]:
                continue
            u, v = int(psl27.class_rep[c1]), int(psl27.class_rep[c2])
            assert psl27.class_orb(c1, c2) == count_cycles(psl27.act(u, v))
