# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Reading experiment files and bundled presets."""

import json
from copy import deepcopy
from importlib import resources

from ..errors import PresetNotFoundError
from .schema import ExperimentFileSchema

PRESETS_PACKAGE = "gaptooth.experiments"
PRESETS_DIR = "presets"


def _presets_root():
    return resources.files(PRESETS_PACKAGE).joinpath(PRESETS_DIR)


def load_experiment(data, default_length=None):
    """Validate a raw experiment document.

    :param data: Parsed JSON document.
    :param default_length: Domain length used when the geometry omits it.
    :raises marshmallow.ValidationError: on any invalid field.
    """
    if default_length is not None:
        data = deepcopy(data)
        geometry = data.get("experiment", {}).get("geometry")
        if isinstance(geometry, dict):
            geometry.setdefault("length", default_length)
    return ExperimentFileSchema().load(data)


def dump_experiment(experiment):
    """Serialize an :class:`ExperimentFile` to a JSON-compatible dict."""
    return ExperimentFileSchema().dump(experiment)


def read_experiment(path, default_length=None):
    """Load an experiment from a JSON file."""
    with open(path, encoding="utf-8") as fp:
        return load_experiment(json.load(fp), default_length=default_length)


def preset_names():
    """Names of the bundled presets, sorted."""
    return sorted(
        entry.name[: -len(".json")]
        for entry in _presets_root().iterdir()
        if entry.name.endswith(".json")
    )


def preset_document(name):
    """Raw JSON document of a bundled preset."""
    names = preset_names()
    if name not in names:
        raise PresetNotFoundError(name, names)
    return json.loads(_presets_root().joinpath(f"{name}.json").read_text("utf-8"))


def load_preset(name, default_length=None):
    """Load a bundled preset by name."""
    return load_experiment(preset_document(name), default_length=default_length)
