import json

import pytest

from jordandouble import cli


def test_fast_suite_passes_and_json_is_reproducible(tmp_path, capsys):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        assert cli.main(["run", "ext-table", "--json", str(p)]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    data = json.loads(paths[0].read_text())
    assert data["ok"] and data["suite"] == "ext-table"
    assert "duration" not in paths[0].read_text()
    ids = [c["check_id"] for c in data["checks"]]
    assert ids == sorted(ids)
    assert "[pass] ext.V0-V1" in capsys.readouterr().out


@pytest.mark.parametrize("suite", ["strings-bands", "basic-quiver", "projectives"])
def test_structural_suites_pass(suite):
    assert cli.main(["run", suite]) == 0


def test_presentations_suite_reports_the_misprinted_rows(capsys):
    assert cli.main(["run", "presentations"]) == 1
    out = capsys.readouterr().out
    failing = sorted(line.split()[1] for line in out.splitlines() if line.startswith("  [fail]"))
    assert failing == [
        "identities.Dtilde.dtilde.w2-x2^2n",
        "identities.Dtilde.dtilde.w2-x2^2n+1",
        "identities.Dtilde.dtilde.w2^2n+1-x2",
        "identities.Dtilde.dtilde.w2^2n+1-x21",
        "identities.Dtilde.dtilde.zeta^m-x2^n",
        "identities.Dtilde.dtilde.zeta^n-x1",
        "identities.Dtilde.htilde.x2^odd-x1",
        "identities.Htilde.htilde.x2^odd-x1",
    ]


@pytest.mark.parametrize(
    "argv",
    [
        ["run", "nope"],
        ["run", "zoo", "--field-ext", "17"],
        ["run", "dtilde", "--exp-bound", "0"],
        ["run", "zoo", "--range", "9"],
        ["zoo", "--family", "Aband", "--lambda", "0"],
        ["zoo", "--family", "Q7"],
        ["dump-basis", "nope"],
    ],
)
def test_usage_errors_exit_two(argv):
    assert cli.main(argv) == 2


def test_band_field_is_escalated_with_a_notice():
    rep = cli.Report("zoo", cli.SuiteConfig(field_ext=1))
    F = cli._band_field(rep.config, rep)
    assert F.k == cli.BAND_FIELD_EXT
    assert rep.notices == ["band checks run over GF(2^4) instead of GF(2^1)"]
    rep = cli.Report("zoo", cli.SuiteConfig(field_ext=8))
    cli._band_field(rep.config, rep)
    assert rep.notices == []


def test_zoo_member(capsys):
    assert cli.main(["zoo", "--family", "U1", "--r", "2"]) == 0
    out = capsys.readouterr().out
    assert "zoo:U1,2" in out and "[pass] member.dual" in out


def test_dump_basis_golden(capsys):
    assert cli.main(["dump-basis", "basic"]) == 0
    assert capsys.readouterr().out.split() == ["e0", "e1", "ae0", "a3e1", "b3e0", "be1", "a3b3e0", "abe1"]


def test_dump_basis_of_an_infinite_preset_respects_the_bound(capsys):
    assert cli.main(["dump-basis", "Dtilde", "--exp-bound", "1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "1" and len(lines) == len(set(lines)) > 1


def test_dump_module_of_a_band(capsys):
    assert cli.main(["dump-module", "--family", "Aband", "--n", "2", "--lambda", "3", "--field-ext", "4"]) == 0
    out = capsys.readouterr().out
    assert 'digraph "A[3],2"' in out and "z1 -> z4 [b 3];" in out
