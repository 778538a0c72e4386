from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mforge.algebra import (CATALOG_Q, check_field_axioms, divisors, euler_phi, factorize, fmt,
                            make_field, rational)


@pytest.mark.parametrize("q", CATALOG_Q)
def test_catalog_fields_satisfy_axioms(q):
    F = make_field(q)
    assert check_field_axioms(F) == []
    assert sorted(F.exp[: q - 1]) == list(range(1, q))


@given(st.integers(1, 5000))
def test_phi_sums_over_divisors(m):
    assert sum(euler_phi(d) for d in divisors(m)) == m


@given(st.integers(2, 10**6))
def test_factorize_roundtrip(m):
    prod_ = 1
    for p, e in factorize(m).items():
        prod_ *= p**e
    assert prod_ == m


def test_frobenius_fixes_prime_field():
    F = make_field(25)
    fixed = [a for a in F.elements if F.frobenius(a) == a]
    assert len(fixed) == 5


def test_rational_rejects_float():
    with pytest.raises(TypeError):
        rational(0.1)
    assert rational("52931/52955") == Fraction(52931, 52955)
    assert fmt(Fraction(4, 2)) == "2"
    with pytest.raises(ZeroDivisionError):
        rational(1, 0)
