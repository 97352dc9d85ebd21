# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Application factory."""

from flask import Flask

from .ext import GapTooth

SETTINGS_ENVVAR = "GAPTOOTH_SETTINGS"


def create_app(config=None):
    """Create a Flask application with the extension installed.

    Settings are read from the Python file named by ``GAPTOOTH_SETTINGS`` (if
    set) and then from ``config``.
    """
    app = Flask("gaptooth")
    app.config.from_envvar(SETTINGS_ENVVAR, silent=True)
    if config:
        app.config.update(config)
    GapTooth(app)
    return app
