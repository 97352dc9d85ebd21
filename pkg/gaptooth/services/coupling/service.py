# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Coupling service: periodic macro grid, edge targets and time advance."""

from functools import lru_cache

import numpy as np
from flask import current_app

from ...errors import ConfigurationError
from ...microsim import MicroState, apply_tbc, interior_step
from ...stencil import edge_pair, shift_weights
from ..base import Service


@lru_cache(maxsize=64)
def edge_operator(tbc, geom):
    """Left/right weights ``(2, 2p+1)`` and gather indices ``(m, 2p+1)``.

    Index ``[j, k]`` is ``(j + k - p) mod m``; for ``2p+1 > m`` the stencil
    wraps onto its own tooth.
    """
    left, right = edge_pair(tbc, geom.r, geom.r_prime, geom.H)
    weights = np.stack([left.weights, right.weights])
    p = tbc.half_width
    index = (np.arange(geom.m)[:, None] + np.arange(-p, p + 1)[None, :]) % geom.m
    weights.setflags(write=False)
    index.setflags(write=False)
    return weights, index


@lru_cache(maxsize=64)
def interpolant_operator(half_width, shifts):
    """Weights ``(len(shifts), 2p+1)`` of the macro interpolant at ``shifts``.

    Shifts are in units of ``H`` relative to the tooth centre.
    """
    out = np.array([shift_weights(s, half_width) for s in shifts])
    out.setflags(write=False)
    return out


def macro_interpolant(macro_values, half_width, shifts):
    """Order-``2p`` interpolant of the macro values around every tooth.

    :returns: ``(..., m, len(shifts))`` array.
    """
    u = np.asarray(macro_values, dtype=float)
    m = u.shape[-1]
    p = half_width
    index = (np.arange(m)[:, None] + np.arange(-p, p + 1)[None, :]) % m
    weights = interpolant_operator(p, tuple(float(s) for s in shifts))
    return u[..., index] @ weights.T


class CouplingService(Service):
    """Gap-tooth orchestrator."""

    def resolve_dt(self, config, dt=None):
        """Explicit ``dt``, else the config's, else the default stable step."""
        if dt is not None:
            return dt
        return config.resolve_dt(self.config.dt_max, self.config.dt_safety)

    def compute_targets(self, macro_values, tbc, geom):
        """Edge targets ``(..., m, 2)`` from the macro values ``(..., m)``.

        ``g[j, side] = sum_k w_k U[(j + k) mod m]``.
        """
        weights, index = edge_operator(tbc, geom)
        u = np.asarray(macro_values, dtype=float)
        return u[..., index] @ weights.T

    def step(self, state, config, dt=None):
        """One micro step of every tooth (and every batch member)."""
        dt = self.resolve_dt(config, dt)
        geom = config.geom
        targets = self.compute_targets(state.macro_values, config.tbc, geom)
        state = apply_tbc(state, geom, config.tbc, targets)
        return interior_step(state, geom, config.pde, dt)

    def initial_state(self, config):
        """Sampled initial condition at ``t = 0``."""
        return MicroState(config.initial_condition.sample(config.geom), 0.0)

    def run(self, config, with_gaps=False, state=None):
        """Integrate to ``config.t_end`` and collect snapshots.

        :param with_gaps: Also record the macro interpolant inside the gaps.
        :param state: Start from this state instead of the initial condition.
        :raises DivergenceError: when the micro field blows up.
        """
        dt = self.resolve_dt(config)
        stride = config.snapshot_stride or self.config.snapshot_stride
        if config.wrap_degenerate:
            current_app.logger.warning(
                "Stencil of order %d wraps onto its own tooth with m=%d teeth.",
                config.tbc.order,
                config.geom.m,
            )
        current_app.logger.info(
            "Simulating %s with %s TBC (order %d), m=%d n=%d r=%g to t=%g, dt=%.6g.",
            config.pde.name,
            config.tbc.family.name,
            config.tbc.order,
            config.geom.m,
            config.geom.n,
            config.geom.r,
            config.t_end,
            dt,
        )

        trajectory = self.result_item(
            config, dt, with_gaps=with_gaps, gap_points=self.config.gap_points
        )
        components = self.components
        state = self.initial_state(config) if state is None else state
        self.run_components("start", trajectory, state, components=components)

        # a final shortened step lands exactly on t_end
        steps = int(np.ceil(config.t_end / dt - 1e-6))
        for count in range(1, steps + 1):
            step_dt = dt if count < steps else max(config.t_end - state.t, 0.0)
            state = self.step(state, config, dt=step_dt)
            if count % stride == 0 or count == steps:
                self.run_components(
                    "snapshot", trajectory, state, components=components
                )
                current_app.logger.debug(
                    "t=%.6g max|v|=%.6g", state.t, np.abs(state.v).max()
                )

        self.run_components("finish", trajectory, state, components=components)
        current_app.logger.info(
            "Finished at t=%g after %d steps (%d snapshots).",
            state.t,
            steps,
            len(trajectory.times),
        )
        return trajectory

    def fitted_decay(self, trajectory, k=None, t_min=None):
        """Least-squares decay rate of the macro Fourier amplitude ``|U_k(t)|``.

        :param k: Wavenumber; defaults to the dominant non-zero wavenumber of
            the first snapshot.
        :param t_min: Fit over snapshots with ``t >= t_min`` (default
            ``GAPTOOTH_FIT_START``).
        """
        t_min = self.config.fit_start if t_min is None else t_min
        times = np.asarray(trajectory.times)
        spectrum = np.abs(np.fft.rfft(trajectory.macro_history, axis=-1))
        if k is None:
            if spectrum.shape[-1] < 2:
                raise ConfigurationError("k", k, "no non-zero wavenumber resolved")
            k = int(np.argmax(spectrum[0, 1:])) + 1
        if not 0 <= k < spectrum.shape[-1]:
            raise ConfigurationError(
                "k", k, f"wavenumber must lie in 0..{spectrum.shape[-1] - 1}"
            )
        mask = (times >= t_min) & (spectrum[:, k] > 0)
        if mask.sum() < 2:
            raise ConfigurationError(
                "t_min", t_min, "fewer than two snapshots available for the fit"
            )
        slope, _ = np.polyfit(times[mask], np.log(spectrum[mask, k]), 1)
        return float(slope)

    def in_tooth_residual(self, state, tbc, geom):
        """Largest deviation of the micro field from the macro interpolant.

        The interpolant of tooth ``j`` is the order-``2p`` polynomial through
        the macro values ``U_{j-p..j+p}``.
        """
        shifts = geom.offsets / geom.H
        smooth = macro_interpolant(state.macro_values, tbc.half_width, shifts)
        return float(np.abs(state.v - smooth).max())
