# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Extension, registry and service configuration tests."""

import math

import pytest
from flask import Flask

from gaptooth import GapTooth, __version__
from gaptooth.proxies import current_gaptooth, current_service_registry
from gaptooth.registry import ServiceRegistry
from gaptooth.services import CouplingService, SpectrumService
from gaptooth.services.spectra import SpectrumServiceConfig


def test_version():
    assert __version__


def test_init():
    app = Flask("testapp")
    ext = GapTooth(app)
    assert "gaptooth" in app.extensions
    assert app.config["GAPTOOTH_DOMAIN_LENGTH"] == pytest.approx(2 * math.pi)

    app = Flask("testapp")
    ext = GapTooth()
    assert "gaptooth" not in app.extensions
    ext.init_app(app)
    assert "gaptooth" in app.extensions


def test_config_is_not_overwritten():
    app = Flask("testapp")
    app.config["GAPTOOTH_SPECTRA_DT_FACTOR"] = 0.05
    GapTooth(app)
    assert app.config["GAPTOOTH_SPECTRA_DT_FACTOR"] == 0.05
    assert app.extensions["gaptooth"].spectrum_service.config.dt_factor == 0.05


def test_proxies(app):
    assert current_gaptooth.registry is current_service_registry._get_current_object()
    assert isinstance(current_service_registry.get("coupling"), CouplingService)
    assert isinstance(current_service_registry.get("spectra"), SpectrumService)
    assert list(current_service_registry) == ["coupling", "spectra"]


def test_registry():
    registry = ServiceRegistry()
    service = SpectrumService(SpectrumServiceConfig.build(Flask("testapp")))
    registry.register(service)

    assert "spectra" in registry
    with pytest.raises(RuntimeError):
        registry.register(service)
    registry.register(service, service_id="other")
    with pytest.raises(KeyError) as e:
        registry.get("missing")
    assert "other" in str(e.value)


def test_config_is_read_live(app, spectrum_service, monkeypatch):
    assert spectrum_service.config.batch_size == 256
    monkeypatch.setitem(app.config, "GAPTOOTH_SPECTRA_BATCH", "32")
    assert spectrum_service.config.batch_size == 32
    with pytest.raises(AttributeError):
        spectrum_service.config.batch_size = 1


def test_components_hooks(coupling_service):
    calls = []

    class Recorder:
        def __init__(self, service):
            self.service = service

        def start(self, *args):
            calls.append(("start", args))

    coupling_service.run_components("start", 1, 2, components=[Recorder(None)])
    coupling_service.run_components("finish", components=[Recorder(None)])
    assert calls == [("start", (1, 2))]
    assert coupling_service.id == "coupling"
