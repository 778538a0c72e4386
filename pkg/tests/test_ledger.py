from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from mforge import ledger
from mforge.ledger import (BoundParams, BoundPreconditionError, bound_value, eval_bound_family,
                           eval_fixed_chain, open_endpoint_bound, or_upper, phi_window_survivors)


@pytest.mark.parametrize("case_id", ledger.chain_ids())
def test_fixed_chains_match(case_id):
    e = eval_fixed_chain(case_id)
    assert e.verdict == ledger.MATCH, e.as_dict()


def test_unknown_case():
    with pytest.raises(KeyError):
        eval_fixed_chain("nosuch")


def test_fraction_serialization():
    d = eval_fixed_chain("prop35-237-generic").as_dict()
    assert d["value"] == "52931/52955"
    assert d["extra"]["c_threshold"] == "12/52955"


def test_open_endpoint_rule():
    assert open_endpoint_bound(F(4)) == 3
    assert open_endpoint_bound(F(252, 41)) == 6
    assert eval_bound_family(BoundParams(F(1, 10), F(1, 80)), "k-bound")[0] == 3


def test_m_bound_example():
    p = BoundParams(F(1, 10), F(1, 80), a=F(1, 10), b=F(1, 24), k=2, l=7)
    assert bound_value(p, "m-bound") == F(252, 41)


def test_precondition_error():
    with pytest.raises(BoundPreconditionError):
        bound_value(BoundParams(F(1, 10), F(1, 2)), "k-bound")


def test_floats_rejected():
    with pytest.raises(TypeError):
        BoundParams(0.1, F(1, 80))


@given(st.fractions(min_value=0, max_value=F(1, 100)), st.fractions(min_value=0, max_value=F(1, 100)))
def test_k_bound_monotone_in_c(c1, c2):
    lo, hi = sorted((c1, c2))
    p = lambda c: BoundParams(F(1, 10), c)
    assert bound_value(p(lo), "k-bound") <= bound_value(p(hi), "k-bound")


def test_or_table_values():
    assert or_upper(2, F(1, 10), F(1, 60)) == F(1, 2) + F(1, 120)
    for (k, l), val in ledger.OR_TABLE.items():
        assert ledger.or_pair_bound(k, l) == val


def test_bound_family_verdicts():
    verdicts = {cid: ledger.eval_bound_case(cid).verdict for cid in ledger.bound_cases()}
    assert verdicts["prop32-k"] == verdicts["prop32-m-33"] == ledger.MATCH
    assert verdicts["prop32-m-24"] == ledger.DISCREPANCY
    assert ledger.eval_bound_case("prop32-m-24").value == 49


def test_phi_window():
    surv, entries = phi_window_survivors()
    assert surv == [7, 8, 9, 10, 12]
    assert len(entries) == 24
    tail = ledger.phi_tail_exact()
    assert tail.value == 0 and tail.extra["elementary_cutoff"] == 21


def test_phi_tail_constant_interval():
    e = ledger.phi_tail_constant()
    assert e.verdict == ledger.HOLDS and not e.exact
    assert e.extra["enclosure_bits"] >= 50


def test_u42_claim_recorded_as_discrepancy():
    e = ledger.claim_u42()
    assert e.verdict == ledger.DISCREPANCY
    assert e.value == F(-1, 240)


def test_class7_census_small_groups():
    entries = {e.id: e for e in ledger.census("class-size-7", ["psl2_7", "psl2_8", "psl2_13", "a7"])}
    assert entries["class7-psl2_7"].value == 24
    assert entries["class7-psl2_8"].value == 72
    assert entries["class7-psl2_13"].value >= 89
    assert "class7-a5" not in entries


def test_hard_failures_ignore_recorded_gaps():
    entries = [ledger.eval_bound_case("prop32-m-24"), ledger.claim_u42(), eval_fixed_chain("prop33-237")]
    assert ledger.hard_failures(entries) == []
