from __future__ import annotations

import json

import pytest

from f4rcodes.artifact import dumps
from f4rcodes.tables import TABLE1, TABLE2, TABLE3
from f4rcodes.verify import QUICK_CAP, verify_tables


@pytest.fixture(scope="module")
def quick():
    return verify_tables("quick", seed=0)


def test_table_sizes_and_transcription_quirks():
    assert (len(TABLE1), len(TABLE2), len(TABLE3)) == (6, 24, 29)
    assert "x^3" in TABLE2[6].generator
    assert len(TABLE1[1].generators) == 2 and len(TABLE1[4].generators) == 2


def test_quick_summary(quick):
    s = quick["summary"]
    assert s["passed"] and s["rows"] == 59 and s["failed"] == 0
    assert quick["cap"] == QUICK_CAP


def test_small_table2_rows_exact(quick):
    rows = {r["row"]: r for r in quick["table2"]}
    for i in (1, 2, 3):
        assert rows[i]["status"] == "exact" and rows[i]["distance"] == rows[i]["claimed"][2]
    assert rows[7]["notes"] == ["lowercase x normalized to X"]


def test_table2_structure(quick):
    for r in quick["table2"]:
        assert r["divides"] and r["degree_matches"] and r["structural"]
        assert r["distance"] <= r["claimed"][2] or r["status"] == "exact"


def test_table1_row2_shared_interpretation(quick):
    row = quick["table1"][1]
    assert row["interpretation"] == "shared"
    assert row["interpretations"] == {"componentwise": False, "shared": True}
    assert not row["generators"][0]["right_divides"] and row["generators"][1]["right_divides"]
    assert row["structural"] and row["distance"] <= 7 and not row["exact"]


def test_table3_identities(quick):
    for r in quick["table3"]:
        assert len(r["matches"]) == 1
        assert r["length_identity"] and r["dimension_identity"] and r["product_size_identity"]
        assert r["distance"] == r["claimed"][2]


def test_table3_realization_finding(quick):
    bad = [r["row"] for r in quick["table3"] if not r["f4r_realization"]["gray_equals_product"]]
    assert bad == [23, 24, 25, 26, 27, 28]
    assert all(
        r["f4r_realization"]["gray_equals_product"] for r in quick["table3"] if r["row"] not in bad
    )


def test_json_round_trip_and_determinism(quick):
    text = dumps(quick)
    assert json.loads(text) == quick
    assert dumps(verify_tables("quick", seed=0)) == text


def test_unknown_effort():
    with pytest.raises(ValueError):
        verify_tables("medium")
