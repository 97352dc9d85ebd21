# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Simulation results."""

import numpy as np

from ..base import ServiceItemResult

GAP_INDEX = -1
"""Micro index reported for gap-interpolant rows."""


class Trajectory(ServiceItemResult):
    """Snapshots of a gap-tooth simulation."""

    header = ("t", "j", "i", "x", "v")

    def __init__(self, service, config, dt, with_gaps=False, gap_points=5):
        """Constructor.

        :param dt: Micro time step used.
        :param with_gaps: Gap interpolant rows are recorded.
        :param gap_points: Interpolated points per gap.
        """
        super().__init__(service, config)
        self.dt = dt
        self.with_gaps = with_gaps
        self.gap_points = gap_points
        self.times = []
        self.snapshots = []
        self.macro = []
        self.max_abs = []
        self.gaps = []
        self.gap_x = None

    @property
    def gap_shifts(self):
        """Gap sample positions in units of ``H`` from the left tooth centre."""
        r = self.config.geom.r
        q = np.arange(1, self.gap_points + 1)
        return tuple(r + (1 - 2 * r) * q / (self.gap_points + 1))

    @property
    def final_time(self):
        return self.times[-1]

    @property
    def final_state(self):
        """Micro field at the final time."""
        return self.snapshots[-1]

    @property
    def macro_history(self):
        """``(snapshots, m)`` array of macro values."""
        return np.array(self.macro)

    @property
    def max_abs_history(self):
        return np.array(self.max_abs)

    def fitted_decay(self, k=None, t_min=None):
        """Decay rate of the macro mode ``k`` (see the coupling service)."""
        return self._service.fitted_decay(self, k=k, t_min=t_min)

    def rows(self):
        """Rows ``(t, j, i, x, v)``; gap rows carry ``i = -1``."""
        geom = self.config.geom
        x = geom.x
        for s, (t, v) in enumerate(zip(self.times, self.snapshots)):
            for j in range(geom.m):
                for i in range(geom.n):
                    yield (t, j, i, x[j, i], v[j, i])
                if self.with_gaps and self.gaps:
                    for q in range(self.gap_points):
                        yield (t, j, GAP_INDEX, self.gap_x[j, q], self.gaps[s][j, q])

    def summary(self, t_min=None):
        """Key figures of the run."""
        summary = {
            "final_time": self.final_time,
            "dt": self.dt,
            "snapshots": len(self.times),
            "max_abs_initial": self.max_abs[0],
            "max_abs_final": self.max_abs[-1],
            "wrap_degenerate": self.config.wrap_degenerate,
        }
        try:
            summary["fitted_decay"] = self.fitted_decay(t_min=t_min)
        except ValueError:
            summary["fitted_decay"] = None
        return summary
