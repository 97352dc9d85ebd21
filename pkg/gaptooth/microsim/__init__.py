# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Tooth-local fine-grid simulator."""

from .boundary import apply_tbc, mixed_pivot
from .geometry import ToothGeometry
from .pde import (
    PDES,
    AdvectionDiffusion,
    Burgers,
    Diffusion,
    Pde,
    interior_step,
    stability_bound,
    stable_dt,
)
from .state import MicroState

__all__ = (
    "AdvectionDiffusion",
    "Burgers",
    "Diffusion",
    "MicroState",
    "PDES",
    "Pde",
    "ToothGeometry",
    "apply_tbc",
    "interior_step",
    "mixed_pivot",
    "stability_bound",
    "stable_dt",
)
