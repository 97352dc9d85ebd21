# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Service configuration."""

from .results import ServiceItemResult, ServiceListResult


class ServiceConfig:
    """Service Configuration."""

    service_id = None
    result_item_cls = ServiceItemResult
    result_list_cls = ServiceListResult
    components = []


class ConfiguratorMixin:
    """Bind a service config class to an application."""

    @classmethod
    def build(cls, app):
        """Build the config object."""
        return type(f"Custom{cls.__name__}", (cls,), {"_app": app})()


class FromConfig:
    """Data descriptor reading a value from the application config.

    .. code-block:: python

        class SpectrumServiceConfig(ServiceConfig, ConfiguratorMixin):
            dt_factor = FromConfig("GAPTOOTH_SPECTRA_DT_FACTOR", default=0.125)

        c = SpectrumServiceConfig.build(app)
        c.dt_factor  # app.config["GAPTOOTH_SPECTRA_DT_FACTOR"]

    Values are read on every access, so changes to ``app.config`` after the
    services were built are honoured.
    """

    def __init__(self, config_key, default=None, cast=None):
        """Constructor for data descriptor."""
        self.config_key = config_key
        self.default = default
        self.cast = cast

    def __get__(self, obj, objtype=None):
        """Return the configured value (descriptor protocol)."""
        if obj is None:
            return self
        value = obj._app.config.get(self.config_key, self.default)
        return self.cast(value) if self.cast is not None else value

    def __set_name__(self, owner, name):
        """Store name of grafted field (descriptor protocol)."""
        self.name = name

    def __set__(self, obj, value):
        """Configuration is read-only through the service config."""
        raise AttributeError(f"'{self.name}' is read from {self.config_key}.")
