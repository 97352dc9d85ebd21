# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Simulation components recording a trajectory."""

import numpy as np

from ..base import BaseServiceComponent
from .service import macro_interpolant


class SnapshotComponent(BaseServiceComponent):
    """Store the micro field at every snapshot."""

    def start(self, trajectory, state):
        """Initial snapshot."""
        self.snapshot(trajectory, state)

    def snapshot(self, trajectory, state):
        """Append a copy of the micro field."""
        trajectory.times.append(float(state.t))
        trajectory.snapshots.append(np.array(state.v, copy=True))


class MacroHistoryComponent(BaseServiceComponent):
    """Track the macro values and ``max |v|``."""

    def start(self, trajectory, state):
        self.snapshot(trajectory, state)

    def snapshot(self, trajectory, state):
        trajectory.macro.append(np.array(state.macro_values, copy=True))
        trajectory.max_abs.append(float(np.abs(state.v).max()))


class GapInterpolantComponent(BaseServiceComponent):
    """Sample the macro interpolant inside the gaps when requested.

    Gap ``j`` lies between the right edge of tooth ``j`` and the left edge of
    tooth ``j+1``.
    """

    def start(self, trajectory, state):
        self.snapshot(trajectory, state)

    def snapshot(self, trajectory, state):
        if not trajectory.with_gaps:
            return
        values = macro_interpolant(
            state.macro_values,
            trajectory.config.tbc.half_width,
            trajectory.gap_shifts,
        )
        trajectory.gaps.append(values)

    def finish(self, trajectory, state):
        """Record the gap abscissae once."""
        if trajectory.with_gaps:
            geom = trajectory.config.geom
            trajectory.gap_x = (
                geom.centres[:, None] + np.asarray(trajectory.gap_shifts)[None, :] * geom.H
            )
