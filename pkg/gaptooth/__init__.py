# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Gap-tooth multiscale laboratory."""

from .ext import GapTooth

__version__ = "1.0.0"

__all__ = ("__version__", "GapTooth")
