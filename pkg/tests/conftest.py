from __future__ import annotations

import pytest

from mforge.socle import catalog_type_b, get_model


@pytest.fixture(scope="session")
def psl27():
    return get_model("psl2_7")


@pytest.fixture(scope="session")
def a5():
    return get_model("a5")


@pytest.fixture(scope="session")
def g168():
    """The degree-168 group PSL(2,7)^2 extended by the outer C2."""
    return [G for G in catalog_type_b("psl2_7") if G.order == 56448][0]
