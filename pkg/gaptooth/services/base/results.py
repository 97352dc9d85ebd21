# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Service results."""


class ServiceResult:
    """Base class for a service result."""

    def __init__(self, service, config):
        """Constructor.

        :param service: Service that produced the result.
        :param config: :class:`GapToothConfig` the result belongs to.
        """
        self._service = service
        self.config = config

    @property
    def header(self):
        """CSV column names of :meth:`rows`."""
        raise NotImplementedError()

    def rows(self):
        """Iterate over CSV rows."""
        raise NotImplementedError()


class ServiceItemResult(ServiceResult):
    """Result of a single run (trajectory or spectrum)."""


class ServiceListResult(ServiceResult):
    """Result of a study over several runs."""
