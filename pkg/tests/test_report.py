import json

import pytest

from loopforge import datasets
from loopforge.report import AnalysisOptions, analyze, emit, isotopy_summary, to_json

TOP_KEYS = ["order", "identity", "properties", "groups", "group_relations", "substructures",
            "normal_subloops", "series", "errors", "timings_ms"]


@pytest.fixture(scope="module")
def rep1():
    return analyze(datasets.table1(), AnalysisOptions(timings=False, isotopes=True))


def test_table1_report(rep1):
    g = rep1.groups
    assert g["mlt"]["order"] == 139968
    assert g["inn"]["order"] == 5184
    assert g["rmlt"]["order"] == 243
    assert g["rmlt"]["nilpotency_class"] == 2
    assert g["rinn"]["elementary_abelian_p"] == 3
    assert rep1.substructures["center"] == [1]
    assert rep1.substructures["nucleus_left"] == list(range(1, 10))
    assert rep1.series["solvable"] and not rep1.series["centrally_nilpotent"]
    assert rep1.isotopy["class_count"] == 2
    assert rep1.isotopy["mlt_orders"] == [139968]
    assert rep1.errors == [] and rep1.exit_code == 0


def test_table2_normal_lattice():
    rep = analyze(datasets.table2(), AnalysisOptions(timings=False))
    assert rep.normal_subloops == [[1], list(range(1, 10)), list(range(1, 28))]


def test_c3_report():
    rep = analyze(datasets.cyclic(3))
    assert rep.properties["associative"] is True
    assert rep.groups["mlt"]["order"] == 3
    assert set(rep.timings_ms) >= {"properties", "groups", "substructures", "normal_subloops", "series"}


def test_key_order(rep1):
    d = json.loads(emit(rep1, "json"))
    assert list(d) == TOP_KEYS[:8] + ["isotopy"] + TOP_KEYS[8:]
    d2 = json.loads(emit(analyze(datasets.cyclic(3)), "json"))
    assert list(d2) == TOP_KEYS


def test_json_round_trip(rep1):
    out = emit(rep1, "json")
    assert to_json(json.loads(out)).encode() == out


def test_byte_deterministic():
    opts = AnalysisOptions(timings=False)
    a = emit(analyze(datasets.table2(), opts), "json")
    b = emit(analyze(datasets.table2(), opts), "json")
    assert a == b


def test_arrays_sorted(rep1):
    for v in rep1.substructures.values():
        if isinstance(v, list):
            assert v == sorted(v)
    for N in rep1.normal_subloops:
        assert N == sorted(N)


def test_report_internal_consistency(rep1):
    s = rep1.substructures
    assert set(s["center"]) <= set(s["nucleus"]) & set(s["commutant"])


def test_partial_report_on_cap():
    rep = analyze(datasets.table1(), AnalysisOptions(timings=False, normal_cap=10, isotopes=True, isotopy_cap=10))
    phases = [e["phase"] for e in rep.errors]
    assert phases == ["normal_subloops", "isotopy"]
    assert rep.exit_code == 2
    assert rep.groups["mlt"]["order"] == 139968  # cheaper phases still reported
    assert rep.normal_subloops is None


def test_text_output(rep1):
    text = emit(rep1, "text").decode()
    assert "mlt: order 139968" in text
    assert "normal subloops: {1} < {1,2,3,4,5,6,7,8,9} < {1..27}" in text
    assert "isotopy classes: 2" in text


def test_unknown_format(rep1):
    with pytest.raises(ValueError):
        emit(rep1, "xml")


def test_isotopy_summary_compare():
    s = isotopy_summary(datasets.table1(), compare=datasets.table2())
    assert s["class_count"] == 2
    own = next(i for i, c in enumerate(s["classes"]) if 1 in c["members"])
    assert s["match"] == 1 - own
