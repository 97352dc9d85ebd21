# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Service API."""


class Service:
    """Service interface.

    A service requires a service configuration built for an application
    (see :meth:`ConfiguratorMixin.build`).
    """

    def __init__(self, config):
        """Constructor.

        :param config: A service configuration
        """
        self.config = config

    #
    # Pluggable components
    #
    @property
    def components(self):
        """Return initialized service components."""
        return [c(self) for c in self.config.components]

    def run_components(self, action, *args, components=None, **kwargs):
        """Run a hook on every component defining it.

        :param components: Already initialized components (default: a fresh
            set from the config).
        """
        for component in components if components is not None else self.components:
            if hasattr(component, action):
                getattr(component, action)(*args, **kwargs)

    @property
    def id(self):
        """Return the id of the service from config."""
        return self.config.service_id

    #
    # Results
    #
    def result_item(self, *args, **kwargs):
        """Create a result of a single run."""
        return self.config.result_item_cls(self, *args, **kwargs)

    def result_list(self, *args, **kwargs):
        """Create a result of a study over several runs."""
        return self.config.result_list_cls(self, *args, **kwargs)
