# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Command line interface tests."""

import csv
import json

import pytest

from gaptooth.cli import apply_overrides, cli
from gaptooth.errors import DivergenceError
from gaptooth.experiments import preset_document
from gaptooth.services import CouplingService, SpectrumService

QUICK = ["--override", "experiment.t_end=0.002", "--override", "experiment.geometry.m=8"]


def read_csv(path):
    with open(path, newline="") as fp:
        return list(csv.reader(fp))


def test_apply_overrides():
    document = {"experiment": {"geometry": {"m": 16}}}
    out = apply_overrides(
        document, ["experiment.geometry.m=8", "experiment.tbc.family=dirichlet"]
    )

    assert out["experiment"]["geometry"]["m"] == 8
    assert out["experiment"]["tbc"] == {"family": "dirichlet"}
    assert document["experiment"]["geometry"]["m"] == 16


def test_simulate(cli_runner, tmp_path, mocker):
    run = mocker.spy(CouplingService, "run")
    result = cli_runner.invoke(
        cli, ["simulate", "--preset", "table1", "--out", str(tmp_path)] + QUICK
    )

    assert result.exit_code == 0, result.output
    assert run.call_count == 1
    rows = read_csv(tmp_path / "table1_trajectory.csv")
    assert rows[0] == ["t", "j", "i", "x", "v"]
    assert len(rows) > 1
    summary = dict(read_csv(tmp_path / "table1_summary.csv")[1:])
    assert float(summary["final_time"]) == pytest.approx(0.002)
    assert summary["fitted_decay"] == "n/a"


def test_simulate_is_deterministic(cli_runner, tmp_path):
    outputs = []
    for name in ("a", "b"):
        out = tmp_path / name
        result = cli_runner.invoke(
            cli, ["simulate", "--preset", "fig2", "--out", str(out), "--with-gaps"]
        )
        assert result.exit_code == 0, result.output
        outputs.append((out / "fig2_trajectory.csv").read_bytes())
    assert outputs[0] == outputs[1]
    assert b",-1," in outputs[0]


def test_spectrum(cli_runner, tmp_path, mocker):
    spectrum = mocker.spy(SpectrumService, "spectrum")
    result = cli_runner.invoke(
        cli,
        [
            "spectrum",
            "--preset",
            "table1",
            "--out",
            str(tmp_path),
            "--override",
            "spectrum.m_list=[4, 8]",
            "--parallel",
            "2",
        ],
    )

    assert result.exit_code == 0, result.output
    assert spectrum.call_count == 2
    table = read_csv(tmp_path / "table1_table.csv")
    assert table[0] == ["m", "mode1", "pair23", "pair45", "pair67", "leading_internal"]
    assert table[1][0] == "4" and table[1][4] == "n/a"
    assert float(table[2][2]) == pytest.approx(-0.996073, abs=1e-3)
    assert len(read_csv(tmp_path / "table1_spectrum_m8.csv")) == 1 + 8 * 11


def test_convergence(cli_runner, tmp_path):
    result = cli_runner.invoke(
        cli,
        [
            "convergence",
            "--preset",
            "table1",
            "--out",
            str(tmp_path),
            "--override",
            "convergence.m_list=[8, 16]",
        ],
    )

    assert result.exit_code == 0, result.output
    assert "k=1: observed orders" in result.output
    rows = read_csv(tmp_path / "table1_convergence.csv")
    assert rows[0] == ["m", "k", "value", "error", "observed_order"]
    assert len(rows) == 1 + 2 * 4


def test_resolution(cli_runner, tmp_path):
    result = cli_runner.invoke(
        cli,
        [
            "resolution",
            "--preset",
            "table6",
            "--out",
            str(tmp_path),
            "--override",
            "experiment.geometry.m=8",
        ],
    )

    assert result.exit_code == 0, result.output
    assert len(read_csv(tmp_path / "table6_resolution.csv")) == 4
    richardson = read_csv(tmp_path / "table6_richardson.csv")
    assert richardson[0] == ["group", "richardson_ratio", "relative_variation"]


def test_config_file(cli_runner, tmp_path):
    document = preset_document("fig2")
    document["name"] = "custom"
    path = tmp_path / "custom.json"
    path.write_text(json.dumps(document))

    result = cli_runner.invoke(
        cli,
        ["simulate", "--config", str(path), "--out", str(tmp_path)]
        + ["--override", "experiment.t_end=0.001"],
    )
    assert result.exit_code == 0, result.output
    assert (tmp_path / "custom_trajectory.csv").exists()


@pytest.mark.parametrize(
    "args",
    [
        ["simulate", "--preset", "table1", "--override", "experiment.geometry.n=10"],
        ["simulate", "--preset", "table1", "--override", "experiment.bogus=1"],
        ["simulate", "--preset", "table1", "--dt", "1.0"],
        ["simulate", "--preset", "nope"],
        ["convergence", "--preset", "table4"],
        ["spectrum", "--preset", "table1", "--override", "spectrum.m_list=[2]"],
    ],
)
def test_invalid_input_exits_with_2(cli_runner, tmp_path, args):
    result = cli_runner.invoke(cli, args + ["--out", str(tmp_path)])
    assert result.exit_code == 2, result.output


def test_exactly_one_source(cli_runner, tmp_path):
    result = cli_runner.invoke(cli, ["simulate", "--out", str(tmp_path)])
    assert result.exit_code == 2
    assert "exactly one" in result.output


def test_divergence_exits_with_3(cli_runner, tmp_path, mocker):
    mocker.patch.object(
        CouplingService, "run", side_effect=DivergenceError(2, 5, 0.125)
    )
    result = cli_runner.invoke(
        cli, ["simulate", "--preset", "fig1", "--out", str(tmp_path)]
    )
    assert result.exit_code == 3
    assert "tooth 2" in result.output


def test_stencil_dump(cli_runner):
    result = cli_runner.invoke(
        cli, ["stencil-dump", "--r", "0", "--order", "4", "--kind", "derivative"]
    )

    assert result.exit_code == 0, result.output
    rows = list(csv.reader(result.output.splitlines()))
    assert rows[0] == ["offset", "weight"]
    assert [row[0] for row in rows[1:]] == ["-2", "-1", "0", "1", "2"]
    weights = [float(row[1]) for row in rows[1:]]
    assert weights == pytest.approx([1 / 12, -2 / 3, 0, 2 / 3, -1 / 12])


@pytest.mark.parametrize(
    "args",
    [
        ["--kind", "value", "--side", "left"],
        ["--kind", "mixed", "--a", "0.95", "--b", "0.05", "--H", "0.4"],
        ["--kind", "two-point", "--beta", "1", "--n", "11"],
    ],
)
def test_stencil_dump_kinds(cli_runner, args):
    result = cli_runner.invoke(cli, ["stencil-dump", "--r", "0.1"] + args)
    assert result.exit_code == 0, result.output
    assert len(result.output.splitlines()) == 6


def test_stencil_dump_to_file(cli_runner, tmp_path):
    result = cli_runner.invoke(
        cli, ["stencil-dump", "--r", "0.1", "--order", "6", "--out", str(tmp_path)]
    )
    assert result.exit_code == 0, result.output
    rows = read_csv(tmp_path / "stencil_value_right_order6.csv")
    assert len(rows) == 8


def test_stencil_dump_invalid(cli_runner):
    result = cli_runner.invoke(cli, ["stencil-dump", "--r", "0.6"])
    assert result.exit_code == 2
    result = cli_runner.invoke(cli, ["stencil-dump", "--r", "0.1", "--order", "5"])
    assert result.exit_code == 2


def test_presets(cli_runner):
    result = cli_runner.invoke(cli, ["presets", "list"])
    assert result.exit_code == 0
    assert result.output.startswith("fig1: ")
    assert len(result.output.splitlines()) == 10

    result = cli_runner.invoke(cli, ["presets", "show", "neumann"])
    assert result.exit_code == 0
    shown = json.loads(result.output)
    assert shown["experiment"]["tbc"] == {"family": "mixed", "order": 4, "a": 0.0, "b": 1.0}

    result = cli_runner.invoke(cli, ["presets", "show", "nope"])
    assert result.exit_code == 2
