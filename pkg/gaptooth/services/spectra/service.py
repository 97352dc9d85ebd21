# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Spectra service: linearised one-step map and its growth rates."""

from concurrent.futures import ThreadPoolExecutor

import numpy as np
from flask import current_app
from scipy.linalg import eigvals

from ...errors import ConfigurationError, NonzeroFixedPointError
from ...microsim import MicroState
from ...proxies import current_service_registry
from ..base import Service


class SpectrumService(Service):
    """Eigen-analysis of the gap-tooth map about the zero state."""

    @property
    def coupling(self):
        """Coupling service stepping the micro field."""
        return current_service_registry.get(self.config.coupling_service_id)

    def resolve_dt(self, config, dt=None):
        """Spectra step ``min(dt_max, factor eta^2 / max(1, D))`` unless given."""
        if dt is not None:
            return dt
        pde = config.pde.linearized()
        return min(
            self.config.dt_max,
            self.config.dt_factor
            * config.geom.eta**2
            / max(1.0, pde.effective_diffusivity),
        )

    def linearize_map(self, config, dt=None, parallel=None):
        """Matrix of the one-step map linearised about zero.

        Column ``k`` is ``Phi(e_k) - Phi(0)`` for the unit perturbation of micro
        value ``k`` (row-major over teeth and points). Nonlinear PDEs are
        replaced by their linearisation. Columns are computed in batches,
        optionally on ``parallel`` threads.

        :raises NonzeroFixedPointError: if ``Phi(0) != 0``.
        """
        dt = self.resolve_dt(config, dt)
        parallel = parallel or self.config.parallel
        linear = config.replace(pde=config.pde.linearized(), dt=None)
        geom = linear.geom
        size = geom.size
        coupling = self.coupling

        base = coupling.step(MicroState.zeros(geom), linear, dt=dt).v.reshape(size)
        norm = float(np.abs(base).max())
        if norm != 0:
            raise NonzeroFixedPointError(norm)

        def columns(start):
            stop = min(start + batch, size)
            count = stop - start
            unit = np.zeros((count, size))
            unit[np.arange(count), np.arange(start, stop)] = 1.0
            state = MicroState(unit.reshape((count,) + geom.shape))
            out = coupling.step(state, linear, dt=dt).v.reshape(count, size)
            return start, stop, out - base

        batch = max(1, int(self.config.batch_size))
        starts = range(0, size, batch)
        matrix = np.empty((size, size))
        if parallel > 1:
            with ThreadPoolExecutor(max_workers=parallel) as pool:
                results = list(pool.map(columns, starts))
        else:
            results = [columns(start) for start in starts]
        for start, stop, block in results:
            matrix[:, start:stop] = block.T
        return matrix

    def growth_rates(self, matrix, dt, config=None, m=None):
        """Growth rates ``log(mu)/dt`` of the eigenvalues ``mu`` of ``matrix``.

        A multiplier is a fast mode when it vanishes (``|mu|`` at most the
        fast-mode tolerance times the largest) or when its real part is
        non-positive, whatever its magnitude. Neither has a meaningful real
        logarithm, so they are flagged and placed last as ``-inf``. Fast
        modes above the tolerance are counted in a warning.

        :param config: Configuration the matrix belongs to.
        :param m: Number of macro modes (default ``config.geom.m``, else all).
        """
        matrix = np.asarray(matrix, dtype=float)
        if not np.all(np.isfinite(matrix)):
            raise ConfigurationError("matrix", "non-finite", "must be finite")
        if m is None:
            m = config.geom.m if config is not None else len(matrix)
        mu = eigvals(matrix)
        scale = np.abs(mu).max() if mu.size else 0.0
        fast = (np.abs(mu) <= self.config.fast_mode_tolerance * scale) | (mu.real <= 0)

        rates = np.full(mu.shape, complex(-np.inf, 0.0))
        rates[~fast] = np.log(mu[~fast]) / dt
        # reliable by real part descending, ties by imaginary part; fast last
        order = np.lexsort((-rates.imag, -rates.real, fast))
        rates, fast, mu = rates[order], fast[order], mu[order]

        unreliable = int(np.sum(fast & (np.abs(mu) > self.config.fast_mode_tolerance * scale)))
        if unreliable:
            current_app.logger.warning(
                "%d multipliers with non-positive real part; their logarithm "
                "branch is unreliable and they are reported as fast modes.",
                unreliable,
            )
        current_app.logger.debug(
            "%d of %d modes flagged fast.", int(fast.sum()), len(fast)
        )
        return self.result_item(config, rates, fast, mu, m, dt)

    def spectrum(self, config, dt=None, parallel=None):
        """Linearise the map at the spectra time step and analyse it."""
        dt = self.resolve_dt(config, dt)
        if config.wrap_degenerate:
            current_app.logger.warning(
                "Stencil of order %d wraps onto its own tooth with m=%d teeth.",
                config.tbc.order,
                config.geom.m,
            )
        current_app.logger.info(
            "Spectrum of %s with %s TBC (order %d), m=%d n=%d r=%g, dt=%.6g.",
            config.pde.name,
            config.tbc.family.name,
            config.tbc.order,
            config.geom.m,
            config.geom.n,
            config.geom.r,
            dt,
        )
        matrix = self.linearize_map(config, dt=dt, parallel=parallel)
        return self.growth_rates(matrix, dt, config=config)

    def spectrum_table(self, base_config, m_list, dt=None, parallel=None):
        """Spectra for every ``m`` in ``m_list``."""
        reports = [
            self.spectrum(base_config.with_geometry(m=m), dt=dt, parallel=parallel)
            for m in m_list
        ]
        return self.result_list(base_config, reports)

    def convergence_study(self, base_config, m_list, dt=None, parallel=None):
        """Errors ``|pair_k + k^2|`` and observed orders over doubling ``m``.

        :raises ConfigurationError: unless ``m_list`` doubles and every
            ``m >= 2p``.
        """
        m_list = list(m_list)
        if not m_list:
            raise ConfigurationError("m_list", m_list, "must not be empty")
        if any(b != 2 * a for a, b in zip(m_list, m_list[1:])):
            raise ConfigurationError("m_list", m_list, "must be a doubling sequence")
        two_p = 2 * base_config.tbc.half_width
        if min(m_list) < two_p:
            raise ConfigurationError(
                "m_list", m_list, f"every m must be at least {two_p}"
            )
        reports = [
            self.spectrum(base_config.with_geometry(m=m), dt=dt, parallel=parallel)
            for m in m_list
        ]
        table = self.config.convergence_cls(self, base_config, reports)
        for order in table.observed_orders(1):
            current_app.logger.info("Observed order for k=1: %.3f", order)
        return table

    def micro_resolution_study(self, config, n_list, dt=None, parallel=None):
        """Macro growth rates for each micro resolution in ``n_list``."""
        n_list = list(n_list)
        if not n_list:
            raise ConfigurationError("n_list", n_list, "must not be empty")
        for n in n_list:
            if n % 2 == 0 or n < 5:
                raise ConfigurationError("n_list", n_list, "values must be odd and >= 5")
        reports = [
            self.spectrum(config.with_geometry(n=n), dt=dt, parallel=parallel)
            for n in n_list
        ]
        return self.config.resolution_cls(self, config, reports)
