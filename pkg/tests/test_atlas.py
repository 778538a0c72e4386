from __future__ import annotations

import pytest

from mforge.atlas import (CATALOG, AtlasInvariantError, GroupFileError, build_alternating, dumps_group,
                          formula_order, get_entry, loads_group, save_group_file, verify_atlas)
from mforge.perm import Permutation

INDEX = {"a5": 2, "a6": 4, "a7": 2, "a8": 2, "psl2_7": 2, "psl2_8": 3, "psl2_9": 4, "psl2_13": 2,
         "psl2_16": 4, "psl2_25": 4, "u3_3": 2, "u4_2": 2, "sp6_2": 1}


@pytest.mark.parametrize("label", CATALOG)
def test_catalog_entry_verifies(label):
    entry = get_entry(label)
    res = verify_atlas(entry)
    assert res["ok"], res["checks"]
    assert res["order_L"] == formula_order(label)
    assert entry.index == INDEX[label]


def test_known_orders():
    assert formula_order("sp6_2") == 1451520
    assert formula_order("u4_2") == 25920
    assert formula_order("psl2_25") == 7800


def test_unknown_label():
    with pytest.raises(KeyError):
        get_entry("nosuch")


def test_group_file_roundtrip(tmp_path):
    entry = get_entry("psl2_8")
    path = tmp_path / "psl2_8.grp"
    save_group_file(entry, path)
    text = path.read_text()
    assert text.endswith("\n") and "\r" not in text
    again = loads_group(text)
    assert again == entry


def test_data_dir_override(tmp_path, monkeypatch):
    entry = build_alternating(5)
    entry.label = "custom_a5"
    save_group_file(entry, tmp_path / "custom_a5.grp")
    monkeypatch.setenv("MFORGE_DATA_DIR", str(tmp_path))
    get_entry.cache_clear()
    try:
        assert get_entry("custom_a5").order_L == 60
    finally:
        get_entry.cache_clear()


@pytest.mark.parametrize("text, fragment", [
    ("[L]\ng: 0 1\n", "before"),
    ("degree 3\n[L]\ng: 0 1\n", "expected 3"),
    ("degree 3\n[L]\ng: 0 0 1\n", "not a permutation"),
    ("degree 3\n[L]\ng: 0 x 1\n", "non-integer"),
    ("degree 3\n", "empty"),
    ("degree 3\nwhatever\n", "unrecognized"),
])
def test_malformed_files(text, fragment):
    with pytest.raises(GroupFileError, match=fragment):
        loads_group(text, verify=False)


def test_invariant_failure_reported():
    # an intransitive "socle" fails verification on load
    text = "degree 4\n[L]\ng: 1 0 2 3\n"
    with pytest.raises(AtlasInvariantError):
        loads_group(text)


def test_dumps_lists_generators():
    entry = get_entry("a5")
    text = dumps_group(entry)
    assert text.count("g:") == len(entry.L_gens) + len(entry.H0_gens)
    assert all(isinstance(g, Permutation) for g in entry.L_gens)
