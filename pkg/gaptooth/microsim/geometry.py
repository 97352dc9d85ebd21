# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Tooth layout on the periodic macro grid."""

import math
from dataclasses import dataclass

import numpy as np

from ..errors import ConfigurationError, GeometryError
from ..stencil import penultimate_ratio

MIN_TEETH = 3
MIN_POINTS = 5


@dataclass(frozen=True)
class ToothGeometry:
    """``m`` teeth of ``n`` micro points on a periodic domain of length ``L``.

    Tooth ``j`` is centred on ``X_j = jH`` and spans ``[X_j - rH, X_j + rH]``.
    """

    m: int
    n: int
    r: float
    length: float = 2 * math.pi

    def __post_init__(self):
        """Validate the layout."""
        if isinstance(self.m, bool) or not isinstance(self.m, (int, np.integer)):
            raise ConfigurationError("m", self.m, "number of teeth must be an integer")
        if self.m < MIN_TEETH:
            raise ConfigurationError("m", self.m, f"at least {MIN_TEETH} teeth needed")
        if isinstance(self.n, bool) or not isinstance(self.n, (int, np.integer)):
            raise GeometryError("n", self.n, "number of micro points must be an integer")
        if self.n < MIN_POINTS or self.n % 2 == 0:
            raise GeometryError(
                "n", self.n, f"number of micro points must be odd and >= {MIN_POINTS}"
            )
        if not np.isfinite(self.r) or not 0 < self.r < 0.5:
            raise GeometryError("r", self.r, "gap-to-tooth ratio must lie in (0, 0.5)")
        if not np.isfinite(self.length) or self.length <= 0:
            raise ConfigurationError("length", self.length, "must be positive")

    @property
    def H(self):
        """Macro spacing."""
        return self.length / self.m

    @property
    def h(self):
        """Tooth width."""
        return 2 * self.r * self.H

    @property
    def eta(self):
        """Micro spacing."""
        return self.h / (self.n - 1)

    @property
    def centre_index(self):
        """Micro index of the tooth centre."""
        return (self.n - 1) // 2

    @property
    def r_prime(self):
        """Penultimate-point ratio."""
        return penultimate_ratio(self.r, self.n)

    @property
    def shape(self):
        return (self.m, self.n)

    @property
    def size(self):
        return self.m * self.n

    @property
    def centres(self):
        """Macro grid ``X_j``."""
        return np.arange(self.m) * self.H

    @property
    def offsets(self):
        """Micro coordinates relative to the tooth centre."""
        return np.arange(self.n) * self.eta - self.r * self.H

    @property
    def x(self):
        """Micro coordinates as an ``(m, n)`` array."""
        return self.centres[:, None] + self.offsets[None, :]
