# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Bundled experiment presets."""

import pytest

from gaptooth.errors import PresetNotFoundError
from gaptooth.experiments import dump_experiment, load_experiment, load_preset, preset_names
from gaptooth.microsim import Burgers
from gaptooth.stencil import Mixed, TwoPoint

PRESETS = [
    "fig1",
    "fig2",
    "fig6",
    "neumann",
    "table1",
    "table2",
    "table3",
    "table4",
    "table5",
    "table6",
]


def test_preset_names():
    assert preset_names() == PRESETS


@pytest.mark.parametrize("name", PRESETS)
def test_presets_are_valid(name):
    experiment = load_preset(name)

    assert experiment.name == name
    assert experiment.description
    assert load_experiment(dump_experiment(experiment)) == experiment


def test_table_presets():
    table1 = load_preset("table1")
    assert table1.spectrum.m_list == (4, 8, 16, 32)
    assert table1.convergence.m_list == (8, 16, 32)
    assert table1.experiment.tbc.order == 4

    assert load_preset("table2").experiment.tbc.order == 6
    assert load_preset("table3").experiment.tbc.family == Mixed(0.95, 0.05)
    assert load_preset("table4").resolution.n_list == (11, 21, 41)
    assert load_preset("table5").experiment.tbc.family == TwoPoint(1.0)
    assert load_preset("table6").experiment.geom.m == 16


def test_burgers_presets():
    fig1 = load_preset("fig1")
    assert fig1.experiment.pde == Burgers(0.5)
    assert fig1.experiment.tbc.order == 6
    assert fig1.simulate.with_gaps

    fig6 = load_preset("fig6")
    assert fig6.experiment.tbc.family == TwoPoint(1.0)


def test_unknown_preset():
    with pytest.raises(PresetNotFoundError) as e:
        load_preset("table9")
    assert e.value.available == tuple(PRESETS)
    assert "table1" in e.value.description
