# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Spectra service configuration."""

from ..base import ConfiguratorMixin, FromConfig, ServiceConfig
from .results import ConvergenceTable, ResolutionTable, SpectrumReport, SpectrumTable


class SpectrumServiceConfig(ServiceConfig, ConfiguratorMixin):
    """Spectra service configuration."""

    service_id = "spectra"
    coupling_service_id = "coupling"

    result_item_cls = SpectrumReport
    result_list_cls = SpectrumTable
    convergence_cls = ConvergenceTable
    resolution_cls = ResolutionTable

    dt_max = FromConfig("GAPTOOTH_SPECTRA_DT_MAX", default=1e-4, cast=float)
    dt_factor = FromConfig("GAPTOOTH_SPECTRA_DT_FACTOR", default=0.125, cast=float)
    batch_size = FromConfig("GAPTOOTH_SPECTRA_BATCH", default=256, cast=int)
    fast_mode_tolerance = FromConfig(
        "GAPTOOTH_FAST_MODE_TOLERANCE", default=1e-10, cast=float
    )
    parallel = FromConfig("GAPTOOTH_PARALLEL", default=1, cast=int)
