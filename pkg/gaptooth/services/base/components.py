# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Base class for all service components."""


class BaseServiceComponent:
    """Base service component.

    Components implement any of the hooks a service runs (for example
    ``start``, ``snapshot`` and ``finish`` during a simulation); hooks that a
    component does not define are skipped.
    """

    def __init__(self, service):
        """Initialize the base service component."""
        self.service = service
