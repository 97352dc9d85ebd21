# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Stencil weights for tooth edges."""

from .tbc import (
    Dirichlet,
    EdgeCondition,
    Mixed,
    TbcSpec,
    TwoPoint,
    edge_pair,
    penultimate_ratio,
    tbc_weights,
)
from .weights import (
    MAX_HALF_WIDTH,
    Scale,
    Side,
    StencilWeights,
    deriv_weights,
    interp_weights,
    shift_weights,
)

__all__ = (
    "Dirichlet",
    "EdgeCondition",
    "MAX_HALF_WIDTH",
    "Mixed",
    "Scale",
    "Side",
    "StencilWeights",
    "TbcSpec",
    "TwoPoint",
    "deriv_weights",
    "edge_pair",
    "interp_weights",
    "penultimate_ratio",
    "shift_weights",
    "tbc_weights",
)
