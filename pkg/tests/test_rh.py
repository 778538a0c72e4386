from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mforge.perm import Permutation
from mforge.rh import (NonIntegralOrbitCount, count_cycles, count_cycles_batch, genus_from_orbits,
                       genus_of_tuple, orb_via_totient, orbit_profile, pair_mfpr, premise_audit, rh_screen,
                       twice_genus_minus_2)
from mforge.search import search_group
from mforge.socle import catalog_type_b


@settings(max_examples=50, deadline=None)
@given(st.permutations(list(range(12))))
def test_totient_identity_on_symmetric_group(images):
    p = Permutation(images)
    from mforge.algebra import divisors
    from mforge.perm import order
    m = order(p)
    fixed = {d: sum(1 for i in range(12) if (p ** d)(i) == i) for d in divisors(m)}
    assert orb_via_totient(m, fixed) == len(p.cycles())


def test_non_integral_orbit_count():
    with pytest.raises(NonIntegralOrbitCount):
        orb_via_totient(2, {1: 1, 2: 4})


@settings(max_examples=30, deadline=None)
@given(st.lists(st.permutations(list(range(15))), min_size=1, max_size=6))
def test_batch_cycles_match_serial(rows):
    arr = np.array(rows)
    assert count_cycles_batch(arr).tolist() == [count_cycles(np.array(r)) for r in rows]


def test_profile_routes_agree(g168):
    m = g168.model
    for c1, c2 in g168.class_pairs():
        pair = (int(m.class_rep[c1]), int(m.class_rep[c2]))
        a = orbit_profile(m, pair)
        b = orbit_profile(m, pair, direct=True)
        assert a == b


def test_genus_of_witness(g168):
    recs = search_group(g168, (2, 3, 8), (0, 1))
    rep = genus_of_tuple(recs[0].witness, g168)
    assert rep.product_one and rep.transitive and rep.generates
    assert rep.genus == 1 and rep.orders == (2, 3, 8)
    assert rep.index_sum == 2 * 168


def test_genus_of_raw_permutations():
    # three 3-cycles generating A3 acting on 3 points: a degree-3 cover of genus 0 needs index sum 4
    t = Permutation.from_cycles(3, (0, 1))
    s = Permutation.from_cycles(3, (1, 2))
    rep = genus_of_tuple([t, s, (t * s).inverse()])
    assert rep.product_one and rep.transitive
    assert rep.genus == 0


def test_riemann_hurwitz_helpers():
    assert twice_genus_minus_2(168, (84, 56, 28)) == 0
    assert genus_from_orbits((84, 56, 28), 168) == 1
    assert genus_from_orbits((84, 56, 29), 168) is None
    assert rh_screen((84, 56, 28), 168, range(3)) == {0: False, 1: True, 2: False}


def test_pair_mfpr_detects_cube(a5):
    G = [H for H in catalog_type_b("a5") if H.order == 7200][0]
    m = G.model
    c6 = m.class_name.index("6A'1")
    val, power = pair_mfpr(m, c6, c6)
    assert (val, power) == (Fraction(1, 10), 3)
    # direct count of fixed points of the cube
    u = int(m.class_rep[c6])
    cube = m.power(u, 3)
    assert m.fixed_points_direct(cube, cube) == 6


def test_premise_audit_clean_for_psl27(g168):
    assert premise_audit(g168) == []
