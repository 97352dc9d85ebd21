# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Coupling service configuration."""

from ..base import ConfiguratorMixin, FromConfig, ServiceConfig
from .components import (
    GapInterpolantComponent,
    MacroHistoryComponent,
    SnapshotComponent,
)
from .results import Trajectory


class CouplingServiceConfig(ServiceConfig, ConfiguratorMixin):
    """Coupling service configuration."""

    service_id = "coupling"
    result_item_cls = Trajectory

    components = [SnapshotComponent, MacroHistoryComponent, GapInterpolantComponent]

    dt_max = FromConfig("GAPTOOTH_DT_MAX", default=1e-4, cast=float)
    dt_safety = FromConfig("GAPTOOTH_DT_SAFETY", default=0.25, cast=float)
    snapshot_stride = FromConfig("GAPTOOTH_SNAPSHOT_STRIDE", default=100, cast=int)
    gap_points = FromConfig("GAPTOOTH_GAP_POINTS", default=5, cast=int)
    fit_start = FromConfig("GAPTOOTH_FIT_START", default=0.1, cast=float)
