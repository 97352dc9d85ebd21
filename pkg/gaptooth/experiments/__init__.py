# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Experiment configuration, schemas and presets."""

from .api import (
    ConvergenceOptions,
    ExperimentFile,
    FourierMode,
    GapToothConfig,
    InitialCondition,
    ResolutionOptions,
    SimulateOptions,
    SpectrumOptions,
)
from .loader import (
    dump_experiment,
    load_experiment,
    load_preset,
    preset_document,
    preset_names,
    read_experiment,
)
from .schema import ExperimentFileSchema, ExperimentSchema

__all__ = (
    "ConvergenceOptions",
    "ExperimentFile",
    "ExperimentFileSchema",
    "ExperimentSchema",
    "FourierMode",
    "GapToothConfig",
    "InitialCondition",
    "ResolutionOptions",
    "SimulateOptions",
    "SpectrumOptions",
    "dump_experiment",
    "load_experiment",
    "load_preset",
    "preset_document",
    "preset_names",
    "read_experiment",
)
