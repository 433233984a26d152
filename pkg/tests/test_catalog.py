import json
from pathlib import Path

import pytest

from flat4spec.catalog import (ENV_VAR, EXPECTED_COUNT, CatalogError,
                               catalog_path, load_catalog)


def test_catalog_size_and_ids(catalog):
    assert len(catalog) == EXPECTED_COUNT == 77
    ids = catalog.ids()
    assert len(set(ids)) == 77
    assert "1" in ids and "29'" in ids and "10''" in ids and "3'''" in ids


def test_get_and_group(catalog):
    entry = catalog.get("24")
    assert entry.id == "24"
    assert catalog.group("24") is entry.group
    with pytest.raises(KeyError):
        catalog.get("999")


def test_env_var_override(tmp_path, monkeypatch):
    target = tmp_path / "alt.json"
    data = json.loads(Path(catalog_path()).read_text())
    data["entries"] = [e for e in data["entries"] if e["id"] in ("1", "2")]
    data["count"] = 2
    target.write_text(json.dumps(data))
    monkeypatch.setenv(ENV_VAR, str(target))
    cat = load_catalog()
    assert cat.source == str(target)
    assert cat.ids() == ["1", "2"]


def test_missing_file(monkeypatch, tmp_path):
    monkeypatch.setenv(ENV_VAR, str(tmp_path / "nope.json"))
    with pytest.raises(CatalogError, match="cannot read"):
        load_catalog()


def test_invalid_json(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(CatalogError, match="not valid JSON"):
        load_catalog(str(bad))


def _base_data():
    return json.loads(Path(catalog_path()).read_text())


def _write(tmp_path, data):
    f = tmp_path / "cat.json"
    f.write_text(json.dumps(data))
    return str(f)


def test_corrupted_betti_is_reported(tmp_path):
    data = _base_data()
    entry = next(e for e in data["entries"] if e["id"] == "24")
    entry["betti"] = [3, 3]
    data.pop("count", None)
    with pytest.raises(CatalogError, match=r"24.*betti mismatch"):
        load_catalog(_write(tmp_path, data))


def test_corrupted_translation_is_reported(tmp_path):
    data = _base_data()
    entry = next(e for e in data["entries"] if e["id"] == "2")
    entry["generators"][0]["translation"] = ["0", "0", "0", "0"]
    data.pop("count", None)
    with pytest.raises(CatalogError, match="2.*torsion"):
        load_catalog(_write(tmp_path, data))


def test_duplicate_ids_are_reported(tmp_path):
    data = _base_data()
    data["entries"].append(dict(data["entries"][1]))
    data.pop("count", None)
    with pytest.raises(CatalogError, match="duplicate id"):
        load_catalog(_write(tmp_path, data))


def test_declared_count_mismatch(tmp_path):
    data = _base_data()
    data["count"] = 78
    with pytest.raises(CatalogError, match="declares 78"):
        load_catalog(_write(tmp_path, data))


def test_printed_errata_fields(catalog):
    # recomputed invariants win; the printed values are kept alongside
    e67 = catalog.get("67")
    assert e67.betti == (1, 0)
    assert e67.betti_printed == (0, 0)
    e40 = catalog.get("40")
    assert e40.sunada == (1, 3, 0, 1, 1, 1)
    assert e40.sunada_printed is not None
    assert e40.sunada != e40.sunada_printed
    assert sum(e40.sunada) == 7


def test_repaired_entry_is_annotated(catalog):
    assert "not isospectral" in catalog.get("58").notes
    assert catalog.get("58").betti == (1, 1)


def test_entry_flags_match_group(catalog):
    from flat4spec.group import is_diagonal_type, is_orientable

    for entry in catalog:
        assert entry.orientable == is_orientable(entry.group)
        assert entry.diagonal == is_diagonal_type(entry.group)
        assert entry.group.name == entry.id
