import json

import mpmath
import pytest

from quadff.search import (EXCLUDED_BY_BOUND, FEASIBLE, classification_table,
                           expected_cell_target, feasible_cases,
                           full_classification, s_bound, s_bound_sign,
                           search_cell)


def test_s_bound_sign_matches_high_precision_value():
    for h in (2, 4, 8, 16, 32):
        for q in (2, 3, 4, 5, 7, 8, 9, 16, 25):
            for g in range(1, 12):
                val = s_bound(q, g, h, dps=60)
                sign = s_bound_sign(q, g, h)
                if sign == 0:
                    assert abs(val) < mpmath.mpf("1e-30")
                else:
                    assert (val > 0) == (sign > 0)


def test_s_bound_known_values():
    assert s_bound_sign(2, 7, 4) > 0 and s_bound_sign(2, 6, 4) < 0
    assert s_bound_sign(3, 5, 8) > 0
    assert s_bound_sign(2, 10, 16) > 0
    assert s_bound_sign(2, 11, 32) > 0
    # an exact zero: (q-1)(q+1-2 sqrt q) = h(q-1) at q=9, g=1, h=4
    assert s_bound_sign(9, 1, 4) == 0


def test_exclusion_lists_are_bound_certified():
    for h, clauses in EXCLUDED_BY_BOUND.items():
        for q, gmin in clauses:
            for g in range(gmin, gmin + 4):
                assert s_bound_sign(q, g, h) > 0, (q, g, h)
            if gmin > 1:
                assert s_bound_sign(q, gmin - 1, h) <= 0, (q, gmin, h)


def test_feasible_cases_table():
    assert set(feasible_cases(2)) == {(4, 1), (5, 1), (3, 1), (3, 2),
                                      (2, 1), (2, 2), (2, 3), (2, 4), (2, 5)}
    assert set(feasible_cases(32)) == {(3, 1), (3, 2), (3, 3), (3, 4)}
    sixteen = feasible_cases(16)
    assert (2, 7) in sixteen and (2, 8) in sixteen
    assert all(q != 2 or g in (7, 8) for q, g in sixteen)
    with pytest.raises(ValueError):
        feasible_cases(6)
    # no feasible cell is bound-excluded
    for h, cells in FEASIBLE.items():
        for q, g in cells:
            assert all(not (q == qe and g >= ge)
                       for qe, ge in EXCLUDED_BY_BOUND[h])


def test_expected_cell_target():
    assert expected_cell_target(2, 1, 2) == 2
    assert expected_cell_target(3, 1, 2) == 3
    assert expected_cell_target(2, 3, 4) == 3
    assert expected_cell_target(3, 2, 8) == 5
    assert expected_cell_target(5, 2, 16) == 6
    assert expected_cell_target(3, 4, 32) == 7


# candidate totals and class counts for a spread of cells, pinned after
# cross-checking the class lists against a naive reference implementation
PINNED_CELLS = {
    # (q, g, h): (n_candidates, n_classes)
    (2, 1, 2): (4, 1),
    (2, 2, 2): (14, 2),
    (2, 3, 2): (56, 2),
    (3, 1, 2): (18, 1),
    (4, 1, 2): (72, 1),
    (5, 1, 2): (100, 1),
    (2, 2, 4): (2, 1),
    (2, 3, 4): (16, 2),
    (3, 2, 4): (66, 2),
    (3, 2, 8): (6, 1),
    (5, 2, 16): (2, 1),
    # six distinct primes over F_3 must have degrees 1+1+1+2+2+2 = deg f
    (3, 4, 32): (2, 0),
}


@pytest.mark.parametrize("cell", sorted(PINNED_CELLS))
def test_cell_counts(cell, all_cells):
    by_key = {(c.q, c.g, c.h): c for c in all_cells}
    res = by_key[cell]
    want_cand, want_classes = PINNED_CELLS[cell]
    assert res.n_candidates == want_cand
    assert len(res.classes) == want_classes
    assert res.property_failures == ()
    assert sum(r.n_models for r in res.classes) == res.n_accepted


def test_class_records_are_consistent(all_cells):
    for cell in all_cells:
        for rec in cell.classes:
            assert rec.h == sum(rec.l_coeffs) == cell.h
            assert rec.t == expected_cell_target(rec.q, rec.g, rec.h)
            assert rec.place_counts[0] <= rec.h
            assert rec.model.genus == rec.g


def test_cache_roundtrip(tmp_path, monkeypatch):
    monkeypatch.setenv("QUADFF_CACHE_DIR", str(tmp_path))
    first = search_cell(3, 2, 8)
    files = list(tmp_path.glob("*.json"))
    assert len(files) == 1
    second = search_cell(3, 2, 8)           # served from the cache file
    assert second.as_dict() == first.as_dict()
    # corrupt cache entries are discarded, not trusted
    files[0].write_text("{ not json")
    third = search_cell(3, 2, 8)
    assert [c.key for c in third.classes] == [c.key for c in first.classes]


def test_cache_ignored_when_disabled(tmp_path, monkeypatch):
    monkeypatch.setenv("QUADFF_CACHE_DIR", str(tmp_path))
    search_cell(2, 2, 4, use_cache=False)
    assert list(tmp_path.glob("*.json")) == []


@pytest.mark.parametrize("q,g,h,extra_shapes", [
    (2, 2, 2, True),    # e.g. a pole of order 3: (3+1)*1 <= 2g
    (2, 3, 4, True),
    (2, 4, 8, False),   # any gamma=3 pole overshoots the degree budget
])
def test_strict_gamma_finds_no_new_classes(q, g, h, extra_shapes):
    plain = search_cell(q, g, h, use_cache=False)
    strict = search_cell(q, g, h, strict_gamma=True, use_cache=False)
    if extra_shapes:
        assert strict.n_candidates > plain.n_candidates
    else:
        assert strict.n_candidates == plain.n_candidates
    assert {r.key for r in strict.classes} == {r.key for r in plain.classes}


def test_classification_table_text(all_cells):
    text = classification_table(all_cells, fmt="text")
    assert "== h = 2:" in text and "== h = 32: 0 classes ==" in text
    assert "no such example" in text
    assert "elapsed" not in text            # byte-stable across runs


def test_classification_table_jsonl(all_cells):
    lines = classification_table(all_cells, fmt="jsonl").splitlines()
    recs = [json.loads(ln) for ln in lines]
    kinds = {r["type"] for r in recs}
    assert kinds == {"cell", "class"}
    cells = [r for r in recs if r["type"] == "cell"]
    assert len(cells) == sum(len(FEASIBLE[h]) for h in (2, 4, 8, 16, 32))
    classes = [r for r in recs if r["type"] == "class"]
    assert sum(1 for r in classes if r["h"] == 2) == 8
    with pytest.raises(ValueError):
        classification_table(all_cells, fmt="yaml")


def test_full_classification_rejects_bad_h():
    with pytest.raises(ValueError):
        full_classification(hs=(6,))
