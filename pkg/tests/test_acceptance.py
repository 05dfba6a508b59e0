"""One test per acceptance criterion; each prints a PASS/FAIL line.

The lines are collected and shown in the terminal summary, so a plain
``pytest -v`` run ends with the full table.
"""

import time

import pytest

from conftest import ACCEPTANCE_LINES
from jordandouble import algebras, cli
from jordandouble import hopf as hp
from jordandouble.identities import check_identities
from jordandouble.rewrite import complete


def _record(n, ok, started, budget=None, note=""):
    took = time.perf_counter() - started
    in_budget = budget is None or took < budget
    verdict = "PASS" if ok and in_budget else "FAIL"
    limit = f" (limit {budget:.0f} s)" if budget else ""
    line = f"criterion {n}: {verdict}  {took:.1f} s{limit}"
    if note:
        line += f"  {note}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok and in_budget


def _suite(name, **cfg):
    rep = cli.run_suite(name, cli.SuiteConfig(**cfg))
    failing = [c.check_id for c in rep.checks if c.status == hp.FAIL]
    return rep, failing


def test_criterion_01_dimensions_and_confluence():
    t = time.perf_counter()
    dims = {name: algebras.build(name).dim for name in ("um", "H", "Hstar", "DH", "basic", "quiverQI")}
    D = algebras.build("DH")
    dims["K"] = len(algebras.subalgebra_basis(D, [D.elem(s) for s in ("x1", "x21", "g", "w1", "w21")]))
    confluent = {name: complete(name)[1].confluent for name in ("um", "H", "Hstar", "DH", "basic", "quiverQI")}
    want = {"um": 32, "H": 32, "Hstar": 32, "DH": 1024, "basic": 8, "quiverQI": 8, "K": 32}
    ok = dims == want and all(confluent.values())
    assert _record(1, ok, t, 30), (dims, confluent)


def test_criterion_02_consequence_identities():
    t = time.perf_counter()
    results = check_identities(6)
    failing = sorted({r["id"] for r in results if not r["holds"]})
    alternatives_hold = all(r["alternative"]["holds"] for r in results if not r["holds"])
    note = f"{len(results)} rows; printed rows failing: {', '.join(failing)}; every alternative reading holds: {alternatives_hold}"
    _record(2, not failing, t, 60, note)
    # The printed rows listed above are misprints; the test pins that analysis.
    assert failing == sorted(
        [
            "htilde.x2^odd-x1",
            "dtilde.zeta^n-x1",
            "dtilde.zeta^m-x2^n",
            "dtilde.w2^2n+1-x21",
            "dtilde.w2-x2^2n",
            "dtilde.w2-x2^2n+1",
            "dtilde.w2^2n+1-x2",
        ]
    )
    assert alternatives_hold


@pytest.mark.slow
def test_criterion_03_hopf_axioms_and_antipode():
    t = time.perf_counter()
    bad = []
    for name in ("um", "H", "Hstar", "DH"):
        bad += [c.check_id for c in hp.check_hopf_axioms(hp.hopf(name)) if c.status == hp.FAIL]
    if hp.antipode_power_check(hp.hopf("um"), 2) != (True, None):
        bad.append("um.S^2")
    if hp.antipode_power_check(hp.hopf("DH"), 2, conj_by="g") != (True, None):
        bad.append("DH.S^2")
    s4 = [c for c in hp.dtilde_checks(samples=50) if c.check_id == "Dtilde.S^4-generators"]
    if not (s4 and s4[0].status == hp.PASS):
        bad.append("Dtilde.S^4")
    assert _record(3, not bad, t, 120), bad


def test_criterion_04_exact_sequence_and_unimodularity():
    t = time.perf_counter()
    rep, failing = _suite("sequence-2-7")
    ids = {c.check_id for c in rep.checks}
    ok = not failing and {"sequence.dim-ker-pi=992", "sequence.K-local", "DH.unimodular"} <= ids
    assert _record(4, ok, t), failing


def test_criterion_05_simples():
    t = time.perf_counter()
    rep, failing = _suite("simples")
    assert _record(5, not failing, t), failing


def test_criterion_06_ext_table():
    t = time.perf_counter()
    rep, failing = _suite("ext-table")
    got = [c.actual for c in sorted(rep.checks, key=lambda c: c.check_id) if c.check_id.count("-") == 1 and c.check_id.startswith("ext.V")]
    assert _record(6, not failing and got == [0, 2, 2, 0], t, note=f"table {got}"), failing


def test_criterion_07_projectives():
    t = time.perf_counter()
    rep, failing = _suite("projectives")
    biserial = [c for c in rep.checks if ".biserial." in c.check_id]
    assert _record(7, not failing and len(biserial) == 12, t), failing


def test_criterion_08_basic_algebra_and_quiver():
    t = time.perf_counter()
    rep, failing = _suite("basic-quiver")
    relations = [c for c in rep.checks if c.check_id.startswith("quiver.relation[")]
    assert _record(8, not failing and len(relations) == 6, t), failing


def test_criterion_09_strings_and_bands():
    t = time.perf_counter()
    rep, failing = _suite("strings-bands")
    assert _record(9, not failing, t), failing


@pytest.mark.slow
def test_criterion_10_zoo():
    t = time.perf_counter()
    rep, failing = _suite("zoo", field_ext=4, range=3, nmax=3)
    assert _record(10, not failing, t, 300, "over GF(2^4), r,t,n <= 3"), failing


@pytest.mark.slow
def test_criterion_11_infinite_layer():
    t = time.perf_counter()
    rep1, f1 = _suite("dtilde", exp_bound=6)
    rep2, f2 = _suite("diagram-5-10")
    ids = {c.check_id for c in rep1.checks + rep2.checks}
    need = {
        "Dtilde.local-confluence",
        "Dtilde.w-reading",
        "middle-column.i.pr-hopf-map",
        "middle-row.i.pi-hopf-map",
        "middle-column.N-commutative",
        "middle-column.N-normal",
        "middle-column.N-hopf-subalgebra",
        "pairing.product-left",
        "pairing.product-right",
        "pairing.unit-left",
        "pairing.unit-right",
    }
    ok = not (f1 or f2) and need <= ids
    assert _record(11, ok, t), (f1, f2, need - ids)
