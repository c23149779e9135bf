"""Command-line interface: commands, formats, exit codes."""

import json

import pytest
from click.testing import CliRunner

from coxint.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def test_coarse_g2(runner):
    res = runner.invoke(main, ["coarse", "--type", "G~2", "--group", "W"])
    assert res.exit_code == 0
    assert "bottom: [1, 2]" in res.output
    assert "middle: [6, 6]" in res.output
    assert "top   : [2, 1]" in res.output


def test_coarse_invalid_type(runner):
    res = runner.invoke(main, ["coarse", "--type", "Z~9", "--group", "W"])
    assert res.exit_code == 2


def test_coarse_h_group_unreachable(runner):
    res = runner.invoke(main, ["coarse", "--type", "G~2", "--group", "H"])
    assert res.exit_code == 2
    assert "not reachable" in res.output


def test_coarse_json_roundtrip(runner):
    res = runner.invoke(main, ["coarse", "--type", "G~2", "--group", "W",
                               "--format", "json-lines"])
    assert res.exit_code == 0
    rows = {"bottom": 0, "middle": 0, "top": 0}
    for line in res.output.splitlines():
        rows[json.loads(line)["row"]] += 1
    assert rows == {"bottom": 3, "middle": 12, "top": 3}


def test_coarse_dot(runner):
    res = runner.invoke(main, ["coarse", "--type", "G~2", "--group", "W",
                               "--format", "dot"])
    assert res.exit_code == 0
    assert res.output.startswith("digraph")


def test_coarse_d_group(runner):
    res = runner.invoke(main, ["coarse", "--type", "B~3", "--group", "D"])
    assert res.exit_code == 0
    assert "total: 18" in res.output


def test_lattice_exit_codes(runner):
    res = runner.invoke(main, ["lattice", "--type", "C~2", "--group", "W"])
    assert res.exit_code == 0
    assert "lattice" in res.output
    res = runner.invoke(main, ["lattice", "--type", "B~3", "--group", "W"])
    assert res.exit_code == 3
    assert "bowtie" in res.output
    assert "m2:" in res.output


def test_lattice_f_group(runner):
    res = runner.invoke(main, ["lattice", "--type", "B~3", "--group", "F"])
    assert res.exit_code == 0


def test_horizontal(runner):
    res = runner.invoke(main, ["horizontal", "--type", "F~4"])
    assert res.exit_code == 0
    assert "A1 + A2" in res.output
    res = runner.invoke(main, ["horizontal", "--type", "A~3",
                               "--choice", "2,2"])
    assert "A1 + A1" in res.output
    res = runner.invoke(main, ["horizontal", "--type", "C~4"])
    assert "A3" in res.output
    assert "lattice predicted: True" in res.output


def test_horizontal_bad_choice(runner):
    res = runner.invoke(main, ["horizontal", "--type", "A~3",
                               "--choice", "nope"])
    assert res.exit_code == 2


def test_presentation_spherical(runner):
    res = runner.invoke(main, ["presentation", "--type", "A", "--n", "3",
                               "--spherical"])
    assert res.exit_code == 0
    assert res.output.strip() == "< a, b, c | ab = bc = ca >"


def test_ncp_count(runner):
    res = runner.invoke(main, ["ncp", "--type", "A", "--n", "4", "--count"])
    assert res.exit_code == 0
    assert res.output.strip() == "14"


def test_ncp_b_table(runner):
    res = runner.invoke(main, ["ncp", "--type", "B", "--n", "3"])
    assert res.exit_code == 0
    assert "elements: 20" in res.output
    assert "[1, 9, 9, 1]" in res.output


def test_report(runner):
    res = runner.invoke(main, ["report", "--type", "E~8"])
    assert res.exit_code == 0
    assert "NC_B2 x NC_B3 x NC_B5" in res.output
    assert "A1, A2, A4" in res.output.replace("components: ", "components: ")


def test_report_json(runner):
    res = runner.invoke(main, ["report", "--type", "C~3",
                               "--format", "json-lines"])
    assert res.exit_code == 0
    rep = json.loads(res.output)
    assert rep["component_count"] == 1
