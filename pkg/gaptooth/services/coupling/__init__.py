# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Coupling service."""

from .config import CouplingServiceConfig
from .results import Trajectory
from .service import CouplingService, edge_operator, macro_interpolant

__all__ = (
    "CouplingService",
    "CouplingServiceConfig",
    "Trajectory",
    "edge_operator",
    "macro_interpolant",
)
