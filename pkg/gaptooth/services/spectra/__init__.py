# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Spectra service."""

from .config import SpectrumServiceConfig
from .results import (
    GROUPS,
    NOT_AVAILABLE,
    ConvergenceTable,
    GroupValue,
    ResolutionTable,
    SpectrumReport,
    SpectrumTable,
)
from .service import SpectrumService

__all__ = (
    "ConvergenceTable",
    "GROUPS",
    "GroupValue",
    "NOT_AVAILABLE",
    "ResolutionTable",
    "SpectrumReport",
    "SpectrumService",
    "SpectrumServiceConfig",
    "SpectrumTable",
)
