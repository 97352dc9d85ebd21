# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Pytest configuration."""

import pytest
from click.testing import CliRunner

from gaptooth.app import create_app as _create_app
from gaptooth.experiments import GapToothConfig, InitialCondition
from gaptooth.microsim import Diffusion, ToothGeometry
from gaptooth.proxies import current_coupling_service, current_spectrum_service
from gaptooth.stencil import TbcSpec


@pytest.fixture(scope="module")
def app_config():
    """Application configuration overrides."""
    return {"TESTING": True}


@pytest.fixture(scope="module")
def app(app_config):
    """Application with the extension installed and its context pushed."""
    app = _create_app(app_config)
    with app.app_context():
        yield app


@pytest.fixture(scope="module")
def coupling_service(app):
    """Coupling service of the application."""
    return current_coupling_service._get_current_object()


@pytest.fixture(scope="module")
def spectrum_service(app):
    """Spectra service of the application."""
    return current_spectrum_service._get_current_object()


@pytest.fixture()
def make_config():
    """Factory of gap-tooth configurations with diffusion defaults."""

    def _make(m=16, n=11, r=0.1, tbc=None, pde=None, **kwargs):
        return GapToothConfig(
            geom=ToothGeometry(m, n, r),
            pde=pde or Diffusion(),
            tbc=tbc or TbcSpec.dirichlet(),
            **kwargs,
        )

    return _make


@pytest.fixture()
def tooth_constant():
    """``cos(x)`` sampled at the tooth centres only."""
    return InitialCondition(kind="tooth_constant")


@pytest.fixture()
def cli_runner():
    """Click test runner."""
    return CliRunner()
