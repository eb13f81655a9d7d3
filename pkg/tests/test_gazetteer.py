from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import FIXTURES, write_csv
from scnet.errors import ConfigError, GazetteerConflictError, RowError
from scnet.gazetteer import (
    Gazetteer,
    GazetteerEntry,
    add_entry,
    load_gazetteer,
    normalize_surface,
    write_gazetteer,
)


@pytest.mark.parametrize("s", ["FEMA", "Fema", "fema"])
def test_normalize_letter_case_variants(s):
    assert normalize_surface(s) == ("fema",)


def test_normalize_slash_and_periods():
    assert normalize_surface("U.S. Department of Agriculture/Forest Service") == (
        "u", "s", "department", "of", "agriculture", "forest", "service",
    )


@pytest.mark.parametrize("s", ["", "   ", "./-&"])
def test_normalize_empty(s):
    assert normalize_surface(s) == ()


def test_sample_gazetteer():
    g = load_gazetteer(FIXTURES / "sample_gazetteer.csv")
    assert g.surface_count == 10
    assert g.stakeholder_ids == {"FEMA", "ARC", "DOD", "HHS", "FPS"}
    assert g.lookup(["department", "of", "defense"]) == "DOD"
    assert g.lookup(["dod"]) == "DOD"


def test_federal_scale_fixture():
    g = load_gazetteer(FIXTURES / "federal_gazetteer.csv")
    assert (g.surface_count, g.id_count) == (193, 102)


def test_conflicting_surfaces_listed(tmp_path):
    path = write_csv(tmp_path / "g.csv", ("surface", "stakeholder_id"), [("FEMA", "FEMA"), ("fema", "DOE")])
    with pytest.raises(GazetteerConflictError) as err:
        load_gazetteer(path)
    msg = str(err.value)
    assert "'FEMA' -> FEMA" in msg and "'fema' -> DOE" in msg


def test_exact_duplicates_dropped_with_warning(tmp_path, caplog):
    path = write_csv(
        tmp_path / "g.csv", ("surface", "stakeholder_id"), [("FEMA", "FEMA"), ("FEMA", "FEMA"), ("Fema", "fema")]
    )
    g = load_gazetteer(path)
    assert g.surface_count == 1
    assert "duplicate" in caplog.text


def test_bad_rows(tmp_path):
    path = write_csv(tmp_path / "g.csv", ("surface", "stakeholder_id"), [("FEMA", "FEMA"), ("...", "X")])
    with pytest.raises(RowError) as err:
        load_gazetteer(path)
    assert err.value.row == 3
    path = write_csv(tmp_path / "g2.csv", ("surface", "stakeholder_id"), [("Red Cross", "AR C")])
    with pytest.raises(RowError):
        load_gazetteer(path)


def test_header_required(tmp_path):
    path = write_csv(tmp_path / "g.csv", ("name", "id"), [("FEMA", "FEMA")])
    with pytest.raises(ConfigError):
        load_gazetteer(path)


def test_entry_ids_upper_cased():
    assert GazetteerEntry("Department of Defense", " DoD ").stakeholder_id == "DOD"


def test_add_to_empty():
    g = add_entry(Gazetteer.from_entries([]), GazetteerEntry("National Guard", "NG"))
    assert (g.surface_count, g.id_count) == (1, 1)


def test_re_add_same_id_is_noop():
    g = Gazetteer.from_entries([GazetteerEntry("FEMA", "FEMA")])
    assert add_entry(g, GazetteerEntry("fema", "FEMA")) is g


def test_add_abbreviation_and_full_name():
    g = Gazetteer.from_entries([])
    g = add_entry(g, GazetteerEntry("DOI", "DOI"))
    g = add_entry(g, GazetteerEntry("Department of the Interior", "DOI"))
    assert (g.surface_count, g.id_count) == (2, 1)
    assert g.surfaces_for("doi") == ["DOI", "Department of the Interior"]


def test_add_conflict():
    g = Gazetteer.from_entries([GazetteerEntry("FEMA", "FEMA")])
    with pytest.raises(GazetteerConflictError):
        add_entry(g, GazetteerEntry("FEMA", "DHS"))


def test_add_returns_new_value():
    g = Gazetteer.from_entries([GazetteerEntry("FEMA", "FEMA")])
    g2 = add_entry(g, GazetteerEntry("DOE", "DOE"))
    assert g.surface_count == 1 and g2.surface_count == 2


def test_round_trip(tmp_path):
    g = load_gazetteer(FIXTURES / "federal_gazetteer.csv")
    write_gazetteer(g, tmp_path / "copy.csv")
    assert load_gazetteer(tmp_path / "copy.csv") == g


def test_pickles():
    import pickle

    g = load_gazetteer(FIXTURES / "sample_gazetteer.csv")
    assert pickle.loads(pickle.dumps(g)) == g


words = st.sampled_from(["federal", "emergency", "agency", "fema", "doe", "of", "the", "u.s."])
phrases = st.lists(words, min_size=1, max_size=4).map(" ".join)
ids = st.sampled_from(["FEMA", "DOE", "DHS", "X1"])


@given(st.lists(st.tuples(phrases, ids), max_size=12))
def test_valid_gazetteer_properties(rows):
    # keep only the first ID for each normalized surface so the input is valid
    seen = {}
    entries = []
    for surface, sid in rows:
        key = normalize_surface(surface)
        if seen.setdefault(key, sid) == sid:
            entries.append(GazetteerEntry(surface, sid))
    g = Gazetteer.from_entries(entries)
    for e in entries:
        assert g.lookup(normalize_surface(e.surface)) == e.stakeholder_id
    assert g.surface_count >= g.id_count
    for sid in g.stakeholder_ids:
        assert g.surfaces_for(sid)
