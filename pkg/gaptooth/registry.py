# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Registry of the coupling and spectra services of an application."""


class ServiceRegistry:
    """Services by id; the spectra service finds its stepper here."""

    def __init__(self):
        """Initialize the registry."""
        self._services = {}

    def register(self, service_instance, service_id=None):
        """Register a service under ``service_id`` (default: its config id)."""
        service_id = service_id or service_instance.id
        if service_id in self._services:
            raise RuntimeError(f"Service '{service_id}' is already registered.")
        self._services[service_id] = service_instance

    def get(self, service_id):
        """Service registered as ``service_id``."""
        try:
            return self._services[service_id]
        except KeyError:
            raise KeyError(
                f"No service '{service_id}'; registered: {sorted(self._services)}."
            ) from None

    def __contains__(self, service_id):
        return service_id in self._services

    def __iter__(self):
        return iter(sorted(self._services))
