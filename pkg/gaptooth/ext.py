# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Gap-tooth Flask extension."""

from . import config
from .registry import ServiceRegistry
from .services import (
    CouplingService,
    CouplingServiceConfig,
    SpectrumService,
    SpectrumServiceConfig,
)


class GapTooth(object):
    """Gap-tooth extension: configuration and services."""

    def __init__(self, app=None):
        """Extension initialization."""
        if app:
            self.init_app(app)

    def init_app(self, app):
        """Flask application initialization."""
        self.init_config(app)
        self.registry = ServiceRegistry()
        self.init_services(app)
        app.extensions["gaptooth"] = self

    def init_config(self, app):
        """Initialize configuration."""
        for k in dir(config):
            if k.startswith("GAPTOOTH_"):
                app.config.setdefault(k, getattr(config, k))

    def init_services(self, app):
        """Initialize and register the services."""
        self.coupling_service = CouplingService(CouplingServiceConfig.build(app))
        self.spectrum_service = SpectrumService(SpectrumServiceConfig.build(app))
        self.registry.register(self.coupling_service)
        self.registry.register(self.spectrum_service)
