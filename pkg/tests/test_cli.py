"""The batch interface: schema, exit codes, determinism."""

import json

import pytest
from click.testing import CliRunner

from celltower.cli import main, parse_partition

ENVELOPE_KEYS = {"tower", "level", "command", "results", "timings", "seed", "version"}


@pytest.fixture()
def runner():
    return CliRunner()


def _invoke(runner, args):
    return runner.invoke(main, args, catch_exceptions=False)


def test_partition_parsing():
    assert parse_partition("3,1,1") == (3, 1, 1)
    assert parse_partition("-") == ()
    assert parse_partition(None) is None
    import click

    with pytest.raises(click.BadParameter):
        parse_partition("1,2")
    with pytest.raises(click.BadParameter):
        parse_partition("a")


def test_oracle_command_envelope(runner):
    result = _invoke(
        runner, ["oracle", "--kind", "stable", "--lam", "1", "--mu", "1", "--nu", "1"]
    )
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert set(doc) == ENVELOPE_KEYS
    assert doc["results"]["value"] == 1
    assert doc["version"]


def test_kronecker_agreement_and_exit_code(runner):
    result = _invoke(
        runner, ["kronecker", "--lam", "1", "--mu", "1", "--nu", "1,1"]
    )
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["results"]["agree"] is True
    assert doc["results"]["route"] == "direct"


def test_axioms_pass_small_level(runner):
    result = _invoke(runner, ["axioms", "--tower", "tl", "--max-level", "2"])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert all(entry["status"] == "pass" for entry in doc["results"])


def test_invalid_input_exits_2(runner):
    result = runner.invoke(main, ["axioms", "--tower", "nosuch"])
    assert result.exit_code == 2
    result = runner.invoke(main, ["skew", "--tower", "symmetric", "--level", "3"])
    assert result.exit_code == 2
    result = runner.invoke(
        main, ["gram", "--tower", "symmetric", "--level", "2", "--cell", "1,3"]
    )
    assert result.exit_code == 2


def test_level_cap_exits_3_without_override(runner):
    result = runner.invoke(main, ["murphy", "--tower", "symmetric", "--level", "7"])
    assert result.exit_code == 3
    result = runner.invoke(
        main,
        ["murphy", "--tower", "tl", "--level", "5", "--allow-high-level"],
    )
    assert result.exit_code == 0


def test_missing_cell_reports_available_cells(runner):
    result = runner.invoke(
        main, ["seminormal", "--tower", "symmetric", "--level", "2", "--cell", "1,1,1"]
    )
    assert result.exit_code == 2
    assert "cells" in result.output


def test_gram_hecke_known_determinant(runner):
    result = _invoke(
        runner, ["gram", "--tower", "hecke", "--level", "2", "--cell", "2"]
    )
    doc = json.loads(result.output)
    assert doc["results"][0]["determinant"] == "q + 1"


def test_csv_format_has_labels(runner):
    result = _invoke(
        runner,
        ["gram", "--tower", "hecke", "--level", "2", "--cell", "2", "--format", "csv"],
    )
    assert result.exit_code == 0
    assert "# tower: hecke" in result.output
    assert "()->(1)->(2)" in result.output


def test_byte_identical_determinism(runner):
    args = [
        "skew",
        "--tower",
        "symmetric",
        "--level",
        "3",
        "--nu",
        "2,1",
        "--lam",
        "1",
        "--no-timings",
        "--seed",
        "5",
    ]
    first = _invoke(runner, args).output
    second = _invoke(runner, args).output
    assert first == second
    doc = json.loads(first)
    assert doc["seed"] == 5
    assert doc["results"]["multiplicities"] == {"1,1": 1, "2": 1}


def test_config_file_mirrors_flags(runner, tmp_path):
    cfg = tmp_path / "job.json"
    cfg.write_text(
        json.dumps({"tower": "symmetric", "level": 3, "nu": "2,1", "lam": "1"})
    )
    by_config = _invoke(runner, ["skew", "--config", str(cfg), "--no-timings"])
    by_flags = _invoke(
        runner,
        ["skew", "--tower", "symmetric", "--level", "3", "--nu", "2,1", "--lam", "1", "--no-timings"],
    )
    assert by_config.output == by_flags.output


def test_config_rejects_unknown_fields(runner, tmp_path):
    cfg = tmp_path / "job.json"
    cfg.write_text(json.dumps({"tower": "symmetric", "bogus": 1}))
    result = runner.invoke(main, ["murphy", "--config", str(cfg)])
    assert result.exit_code == 2
