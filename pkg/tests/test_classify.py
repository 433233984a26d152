import json

import pytest

from flat4spec.classify import (MODES, classify_all, id_sort_key,
                                p_isospectral, sunada_isospectral,
                                L_isospectral, bracketL_isospectral)

from golden_classes import (BRACKETL_EXCLUDED, BRACKETL_PAIRS, L_SETS, P0_SETS,
                            P1_SETS, P2_SETS, as_sorted_lists)


def test_id_sort_key():
    names = ["10", "2''", "9'", "2", "3", "2'", "10'"]
    assert sorted(names, key=id_sort_key) == \
        ["2", "2'", "2''", "3", "9'", "10", "10'"]


def test_unknown_mode(catalog):
    with pytest.raises(ValueError):
        classify_all(catalog.groups(), "p5")


def _nontrivial(report):
    return [set(cls) for cls in report.nontrivial_classes()]


def test_p0_classes(catalog):
    report = classify_all(catalog.groups(), "p0")
    assert _nontrivial(report) == [set(c) for c in as_sorted_lists(P0_SETS)]
    assert report.errors == {}


def test_p1_classes(catalog):
    report = classify_all(catalog.groups(), "p1")
    assert _nontrivial(report) == [set(c) for c in as_sorted_lists(P1_SETS)]


def test_p2_classes(catalog):
    report = classify_all(catalog.groups(), "p2")
    assert _nontrivial(report) == [set(c) for c in as_sorted_lists(P2_SETS)]


def test_p3_matches_p1_and_p4_matches_p0(catalog):
    groups = catalog.groups()
    assert classify_all(groups, "p3").classes == classify_all(groups, "p1").classes
    assert classify_all(groups, "p4").classes == classify_all(groups, "p0").classes


def test_all_p_equals_p0(catalog):
    # coincidence of all five traces happens exactly when Z_0 agrees
    groups = catalog.groups()
    assert classify_all(groups, "all-p").classes == \
        classify_all(groups, "p0").classes


def test_L_classes(catalog):
    report = classify_all(catalog.groups(), "L")
    assert _nontrivial(report) == [set(c) for c in as_sorted_lists(L_SETS)]
    assert report.errors == {}


def test_bracketL_classes(catalog):
    report = classify_all(catalog.groups(), "bracketL", max2=3)
    assert _nontrivial(report) == \
        [set(c) for c in as_sorted_lists(BRACKETL_PAIRS)]
    # nonabelian holonomy and the non-closing entry cannot be compared
    assert set(report.errors) == {"29'", "54", "56", "60", "61", "62", "67"}
    assert report.params == {"max_squared_length": "3"}


def test_bracketL_refines_L(catalog):
    for pair in BRACKETL_PAIRS:
        a, b = sorted(pair, key=id_sort_key)
        assert L_isospectral(catalog.group(a), catalog.group(b))
        assert bracketL_isospectral(catalog.group(a), catalog.group(b))
    for pair in BRACKETL_EXCLUDED:
        a, b = sorted(pair, key=id_sort_key)
        assert not bracketL_isospectral(catalog.group(a), catalog.group(b))


def test_pairwise_comparators(catalog):
    g57, g58, g24 = (catalog.group(i) for i in ("57", "58", "24"))
    for p in range(5):
        assert p_isospectral(g57, g58, p)
        assert not p_isospectral(g57, g24, p)
    assert sunada_isospectral(catalog.group("35"), catalog.group("40"))
    assert not sunada_isospectral(catalog.group("35"), catalog.group("42"))


def test_sunada_mode_reports_nondiagonal_errors(catalog):
    report = classify_all(catalog.groups(), "sunada")
    diagonal_ids = {e.id for e in catalog if e.diagonal}
    classified = {gid for cls in report.classes for gid in cls}
    assert classified == diagonal_ids
    assert set(report.errors) == {e.id for e in catalog if not e.diagonal}


def test_report_json_schema(catalog):
    report = classify_all(catalog.groups(), "p1")
    data = json.loads(report.to_json())
    assert set(data) == {"mode", "params", "classes", "errors"}
    assert data["mode"] == "p1"
    assert data["params"] == {"p": 1}
    assert all(isinstance(cls, list) for cls in data["classes"])
    assert sum(len(cls) for cls in data["classes"]) == len(catalog)


def test_classes_partition_catalog(catalog):
    for mode in MODES:
        report = classify_all(catalog.groups(), mode)
        names = [gid for cls in report.classes for gid in cls]
        assert len(names) == len(set(names))
        assert set(names) | set(report.errors) == set(catalog.ids())
