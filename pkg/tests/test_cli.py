import json

import click
import pytest
from click.testing import CliRunner

from rovib.cli import cli, parse_index_list
from rovib.spectrum import level
from rovib.units import wavenumber_to_roy_ev

HEADER = "name eta mu_1e-23_g alpha_inv_A re_A beta_inv_A De_cm1 we_cm1"
ZZ_ROW = "ZZ 0.013727 1.249 1.357795 1.151 2.7534 53341.0 1904.2"


@pytest.fixture
def runner():
    return CliRunner()


def test_parse_index_list():
    assert parse_index_list("0,3,5", "--nu") == (0, 3, 5)
    assert parse_index_list("0..4", "--nu") == (0, 1, 2, 3, 4)
    assert parse_index_list("0,2..4,9", "--J") == (0, 2, 3, 4, 9)
    for bad in ("x", "5..1", "-3", "", "1..x"):
        with pytest.raises(click.BadParameter):
            parse_index_list(bad, "--nu")


def test_levels_csv_exact(runner):
    result = runner.invoke(
        cli, ["levels", "NO", "--nu", "0", "--J", "0", "--format", "csv"]
    )
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "molecule,nu,J,E_cm1"
    assert lines[1] == "NO,0,0,947.756848"


def test_levels_text_defaults(runner):
    result = runner.invoke(cli, ["levels", "NO"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert len(lines) == 7  # header plus nu = 0..5 at J = 0
    assert "E_cm1" in lines[0]
    assert "947.7568" in lines[1]


def test_levels_row_major_grid(runner):
    result = runner.invoke(
        cli,
        ["levels", "NO", "--nu", "0,3", "--J", "0,1,2,3,4,5,10,15,20",
         "--format", "csv"],
    )
    assert result.exit_code == 0
    rows = result.stdout.splitlines()[1:]
    assert len(rows) == 18
    assert rows[0].startswith("NO,0,0,") and rows[9].startswith("NO,3,0,")


def test_levels_roy_unit(runner, db):
    result = runner.invoke(
        cli,
        ["levels", "NO", "--nu", "0", "--J", "0", "--unit", "roy_eV",
         "--format", "csv"],
    )
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "molecule,nu,J,E_roy_eV"
    value = float(lines[1].split(",")[-1])
    expected = wavenumber_to_roy_ev(level(db.get("NO"), 0, 0).E, 53341.0)
    assert value == pytest.approx(expected, abs=1.0e-7)
    assert value < 0.0


def test_levels_json(runner):
    result = runner.invoke(
        cli, ["levels", "O2", "--nu", "0", "--J", "0,1", "--format", "json"]
    )
    assert result.exit_code == 0
    rows = json.loads(result.stdout)
    assert [(r["nu"], r["J"]) for r in rows] == [(0, 0), (0, 1)]
    assert all(r["bound"] for r in rows)
    assert rows[0]["E_cm1"] == pytest.approx(775.089, abs=5.0e-3)


def test_output_is_deterministic(runner):
    args = ["levels", "N2", "--nu", "0..9", "--J", "0,5", "--format", "csv"]
    first = runner.invoke(cli, args)
    second = runner.invoke(cli, args)
    assert first.exit_code == second.exit_code == 0
    assert first.stdout == second.stdout

    args = ["compare", "NO", "--nu", "0", "--J", "0", "--grid-points", "2000",
            "--format", "csv"]
    first = runner.invoke(cli, args)
    second = runner.invoke(cli, args)
    assert first.stdout == second.stdout


def test_unknown_molecule_is_usage_error(runner):
    result = runner.invoke(cli, ["levels", "CO"])
    assert result.exit_code == 2
    assert "unknown molecule" in result.stderr


def test_bad_index_syntax_is_usage_error(runner):
    result = runner.invoke(cli, ["levels", "NO", "--nu", "0..x"])
    assert result.exit_code == 2
    assert "--nu" in result.stderr


def test_unreadable_database_is_usage_error(runner):
    result = runner.invoke(cli, ["levels", "NO", "--db", "/nonexistent/db.txt"])
    assert result.exit_code == 2
    assert "cannot read" in result.stderr


def test_partial_failure_keeps_output_and_exits_3(runner):
    result = runner.invoke(
        cli, ["levels", "NO", "--nu", "0", "--J", "0,1300", "--format", "csv"]
    )
    assert result.exit_code == 3
    assert "NO,0,0,947.756848" in result.stdout
    assert "no real solution" in result.stderr
    assert "J=1300" in result.stderr


def test_compare_ground_state(runner):
    result = runner.invoke(
        cli,
        ["compare", "NO", "--nu", "0", "--J", "0", "--grid-points", "16384",
         "--format", "csv"],
    )
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "molecule,nu,J,E_cm1,E_oracle_cm1,delta_cm1"
    delta = float(lines[1].split(",")[-1])
    assert abs(delta) <= 0.1


def test_compare_text_summary(runner):
    result = runner.invoke(
        cli, ["compare", "O2", "--nu", "0", "--J", "0,5", "--grid-points", "2000"]
    )
    assert result.exit_code == 0
    assert "max|delta|" in result.stdout


def test_morse_column(runner):
    result = runner.invoke(cli, ["morse", "N2", "--format", "csv"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "molecule,nu,E_cm1"
    assert len(lines) == 11
    assert float(lines[1].split(",")[-1]) == pytest.approx(1174.9477, abs=0.01)


def test_varshni_text_report(runner):
    result = runner.invoke(cli, ["varshni", "NO"])
    assert result.exit_code == 0
    assert "-0.31262637" in result.stdout
    assert "none for r > 0" in result.stdout
    assert "DIFFERS" in result.stdout  # NO beta columns disagree at 9e-5

    result = runner.invoke(cli, ["varshni", "N2"])
    assert result.exit_code == 0
    assert "agrees with" in result.stdout


def test_varshni_reports_domain_failure_for_o2(runner):
    result = runner.invoke(cli, ["varshni", "O2"])
    assert result.exit_code == 0
    assert "no real value" in result.stdout
    assert "-0.397" in result.stdout


def test_varshni_json(runner):
    result = runner.invoke(cli, ["varshni", "O2", "--format", "json"])
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["alpha_w_as_published_inv_A"] is None
    assert data["alpha_w_difference_inv_A"] is None
    assert data["alpha_w_corrected_inv_A"] > 0.0

    data = json.loads(runner.invoke(cli, ["varshni", "NO", "--format", "json"]).stdout)
    assert abs(data["alpha_w_difference_inv_A"]) > 1.0e-6
    assert data["q"] == pytest.approx(-0.31262637, abs=1.0e-8)


def test_approx_error_csv(runner):
    result = runner.invoke(
        cli, ["approx-error", "NO", "--points", "10", "--format", "csv"]
    )
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "r_A,rational_rel_err,exponential_rel_err"
    assert len(lines) == 11


def test_db_flag_and_env(runner, tmp_path):
    custom = tmp_path / "custom.txt"
    custom.write_text(f"{HEADER}\n{ZZ_ROW}\n")

    result = runner.invoke(cli, ["levels", "ZZ", "--nu", "0", "--db", str(custom)])
    assert result.exit_code == 0

    result = runner.invoke(
        cli, ["levels", "ZZ", "--nu", "0"], env={"ROVIB_DB": str(custom)}
    )
    assert result.exit_code == 0

    # an explicit flag wins over the environment
    result = runner.invoke(
        cli,
        ["levels", "ZZ", "--nu", "0", "--db", str(custom)],
        env={"ROVIB_DB": "/nonexistent/db.txt"},
    )
    assert result.exit_code == 0


def test_help_and_version(runner):
    result = runner.invoke(cli, ["--help"])
    assert result.exit_code == 0
    for command in ("levels", "compare", "varshni", "morse", "approx-error"):
        assert command in result.stdout
    assert runner.invoke(cli, ["--version"]).exit_code == 0
