# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Helper proxies to the extension state."""

from flask import current_app
from werkzeug.local import LocalProxy

current_gaptooth = LocalProxy(lambda: current_app.extensions["gaptooth"])
"""Helper proxy to get the current extension."""

current_service_registry = LocalProxy(lambda: current_app.extensions["gaptooth"].registry)
"""Helper proxy to get the current service registry."""

current_coupling_service = LocalProxy(
    lambda: current_app.extensions["gaptooth"].coupling_service
)
"""Helper proxy to get the current coupling service."""

current_spectrum_service = LocalProxy(
    lambda: current_app.extensions["gaptooth"].spectrum_service
)
"""Helper proxy to get the current spectra service."""
