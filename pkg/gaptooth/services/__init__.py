# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Gap-tooth services."""

from .base import Service, ServiceConfig
from .coupling import CouplingService, CouplingServiceConfig, Trajectory
from .spectra import (
    ConvergenceTable,
    ResolutionTable,
    SpectrumReport,
    SpectrumService,
    SpectrumServiceConfig,
    SpectrumTable,
)

__all__ = (
    "ConvergenceTable",
    "CouplingService",
    "CouplingServiceConfig",
    "ResolutionTable",
    "Service",
    "ServiceConfig",
    "SpectrumReport",
    "SpectrumService",
    "SpectrumServiceConfig",
    "SpectrumTable",
    "Trajectory",
)
