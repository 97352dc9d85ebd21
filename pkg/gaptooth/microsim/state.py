# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Micro field of all teeth."""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class MicroState:
    """Micro values ``v[..., j, i]`` at time ``t``.

    Leading axes, if any, index independent states stepped together.
    """

    v: np.ndarray
    t: float = 0.0

    def __post_init__(self):
        """Store values as a float array."""
        object.__setattr__(self, "v", np.asarray(self.v, dtype=float))

    @classmethod
    def zeros(cls, geom, batch=(), t=0.0):
        """Zero state of ``geom`` with optional batch axes."""
        return cls(np.zeros(tuple(batch) + geom.shape), t)

    @property
    def centre_index(self):
        return (self.v.shape[-1] - 1) // 2

    @property
    def macro_values(self):
        """Tooth centre values ``U_j``."""
        return self.v[..., self.centre_index]

    def replace(self, v=None, t=None):
        """Copy with new values and/or time."""
        return MicroState(
            self.v if v is None else v,
            self.t if t is None else t,
        )
