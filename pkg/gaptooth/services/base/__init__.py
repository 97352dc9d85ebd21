# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Base Service API."""

from .components import BaseServiceComponent
from .config import ConfiguratorMixin, FromConfig, ServiceConfig
from .results import ServiceItemResult, ServiceListResult, ServiceResult
from .service import Service

__all__ = (
    "BaseServiceComponent",
    "ConfiguratorMixin",
    "FromConfig",
    "Service",
    "ServiceConfig",
    "ServiceItemResult",
    "ServiceListResult",
    "ServiceResult",
)
