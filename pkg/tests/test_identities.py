import pytest

from jordandouble.identities import DIAGNOSTICS, all_identity_groups, check_identities
from jordandouble.rewrite import get_system

# Rows that do not hold as printed.  Each has an alternative reading in
# DIAGNOSTICS that does hold; the analysis is kept in the decisions ledger.
PRINTED_FAILURES = {
    "htilde.x2^odd-x1",
    "dtilde.zeta^n-x1",
    "dtilde.zeta^m-x2^n",
    "dtilde.w2^2n+1-x21",
    "dtilde.w2-x2^2n",
    "dtilde.w2-x2^2n+1",
    "dtilde.w2^2n+1-x2",
}


@pytest.fixture(scope="module")
def results():
    return check_identities(6)


@pytest.mark.xfail(strict=True, reason="seven printed rows fail; see PRINTED_FAILURES")
def test_every_printed_row_holds(results):
    assert all(r["holds"] for r in results)


def test_failing_rows_are_exactly_the_pinned_set(results):
    failing = {r["id"] for r in results if not r["holds"]}
    assert failing == PRINTED_FAILURES


def test_every_failing_row_has_an_alternative_that_holds(results):
    for r in results:
        if not r["holds"]:
            assert r["alternative"]["holds"], r["id"]


def test_rows_are_checked_in_every_system_that_contains_them(results):
    systems = {(r["system"], r["id"]) for r in results}
    assert ("Htilde", "htilde.x2^odd-x1") in systems
    assert ("Dtilde", "htilde.x2^odd-x1") in systems


def test_u_m_products_all_hold(results):
    um = [r for r in results if r["system"] == "um"]
    assert um and all(r["holds"] for r in um)


def test_diagnostics_cover_exactly_the_failing_rows():
    # diagnostics are only attached to rows that fail
    assert set(DIAGNOSTICS) == PRINTED_FAILURES


def test_small_bound_gives_the_same_verdicts():
    S = get_system("Htilde", 3)
    for rec in all_identity_groups()["Htilde"]:
        res = rec.verify(S, 3)
        assert res["holds"] == (rec.ident not in PRINTED_FAILURES)
