import pytest

from whiteman6.reference import REPORTED, beta_shifts, exit_status, run_examples


def test_beta_shifts_cycle():
    stm = ("zero", "neither", "minus-one")
    shifts = beta_shifts(stm)
    assert shifts[0] == stm
    assert shifts[3] == ("minus-one", "neither", "zero")
    assert shifts[1] == ("neither", "minus-one", "minus-one")


def test_catalog_covers_eleven_examples():
    assert [r.id for r in REPORTED] == list(range(1, 12))


@pytest.fixture(scope="module")
def rows():
    return {r.id: r for r in run_examples([2, 3, 7, 11])}


def test_agreeing_rows(rows):
    assert rows[2].status == "match" and rows[7].status == "match"
    assert exit_status([rows[2], rows[7]]) == 0


def test_beta_dependent_rows_are_not_discrepancies(rows):
    r = rows[3]
    statuses = {c["field"]: c["status"] for c in r.checks}
    assert statuses["k"] == "match"
    assert statuses["stm_membership"] == "beta-dependent"
    assert r.status == "match"


def test_theorem7_dimension_flagged(rows):
    r = rows[11]
    k = next(c for c in r.checks if c["field"] == "k")
    assert (k["reported"], k["computed"], k["status"]) == (49, 121, "discrepancy")
    d = next(c for c in r.checks if c["field"] == "d")
    assert d["status"] == "consistent"
    assert d["computed"]["certified_min"] <= 19 <= d["computed"]["witness_max"]
    assert exit_status(list(rows.values())) == 2
