# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Experiment configuration objects."""

import dataclasses
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from ..errors import ConfigurationError
from ..microsim import Diffusion, Pde, ToothGeometry, stability_bound, stable_dt
from ..stencil import TbcSpec

INITIAL_CONDITION_KINDS = ("fourier", "tooth_constant")


@dataclass(frozen=True)
class FourierMode:
    """One term ``amp cos(k x + phase)``."""

    k: int
    amp: float = 1.0
    phase: float = 0.0

    def __call__(self, x):
        return self.amp * np.cos(self.k * np.asarray(x) + self.phase)


@dataclass(frozen=True)
class InitialCondition:
    """Sum of Fourier modes sampled on the teeth.

    ``fourier`` samples every micro point; ``tooth_constant`` gives every point
    of tooth ``j`` the value at its centre ``X_j``.
    """

    modes: Tuple[FourierMode, ...] = (FourierMode(1),)
    kind: str = "fourier"

    def __post_init__(self):
        """Validate."""
        if self.kind not in INITIAL_CONDITION_KINDS:
            raise ConfigurationError(
                "initial_condition.kind",
                self.kind,
                f"must be one of {list(INITIAL_CONDITION_KINDS)}",
            )
        object.__setattr__(self, "modes", tuple(self.modes))

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        return sum((mode(x) for mode in self.modes), np.zeros_like(x))

    def sample(self, geom):
        """Micro values ``(m, n)`` for ``geom``."""
        if self.kind == "tooth_constant":
            return np.repeat(self(geom.centres)[:, None], geom.n, axis=1)
        return self(geom.x)

    @property
    def dominant_k(self):
        """Wavenumber of the largest non-zero mode, if any."""
        modes = [mode for mode in self.modes if mode.k != 0 and mode.amp != 0]
        if not modes:
            return None
        return abs(max(modes, key=lambda mode: abs(mode.amp)).k)


@dataclass(frozen=True)
class GapToothConfig:
    """A gap-tooth experiment.

    ``dt`` may be left unset; services then resolve it from the application's
    time-step rule.
    """

    geom: ToothGeometry
    pde: Pde = field(default_factory=Diffusion)
    tbc: TbcSpec = field(default_factory=TbcSpec.dirichlet)
    t_end: float = 1.0
    dt: Optional[float] = None
    initial_condition: InitialCondition = field(default_factory=InitialCondition)
    snapshot_stride: Optional[int] = None

    def __post_init__(self):
        """Validate cross-field invariants."""
        if not np.isfinite(self.t_end) or self.t_end <= 0:
            raise ConfigurationError("t_end", self.t_end, "must be positive")
        if self.dt is not None:
            bound = stability_bound(self.geom, self.pde)
            if not np.isfinite(self.dt) or not 0 < self.dt <= bound:
                raise ConfigurationError(
                    "dt", self.dt, f"must lie in (0, {bound:.6g}] for stability"
                )
        if self.snapshot_stride is not None and (
            isinstance(self.snapshot_stride, bool)
            or not isinstance(self.snapshot_stride, (int, np.integer))
            or self.snapshot_stride < 1
        ):
            raise ConfigurationError(
                "snapshot_stride", self.snapshot_stride, "must be a positive integer"
            )
        two_p = 2 * self.tbc.half_width
        if self.geom.m < two_p:
            raise ConfigurationError(
                "geometry.m",
                self.geom.m,
                f"order {self.tbc.order} needs at least {two_p + 1} teeth "
                f"({two_p} with a wrapped stencil)",
            )

    @property
    def wrap_degenerate(self):
        """The stencil wraps onto its own tooth (``2p+1 > m``)."""
        return 2 * self.tbc.half_width + 1 > self.geom.m

    def resolve_dt(self, dt_max, safety):
        """Configured ``dt`` or the default stable step."""
        if self.dt is not None:
            return self.dt
        return stable_dt(self.geom, self.pde, dt_max=dt_max, safety=safety)

    def replace(self, **changes):
        """Copy with some fields changed (re-validated)."""
        return dataclasses.replace(self, **changes)

    def with_geometry(self, **changes):
        """Copy with some geometry fields changed.

        A fixed ``dt`` is dropped when it would break the new stability bound.
        """
        geom = dataclasses.replace(self.geom, **changes)
        dt = self.dt
        if dt is not None and dt > stability_bound(geom, self.pde):
            dt = None
        return dataclasses.replace(self, geom=geom, dt=dt)


@dataclass(frozen=True)
class SimulateOptions:
    with_gaps: bool = False
    fit_start: Optional[float] = None


@dataclass(frozen=True)
class SpectrumOptions:
    m_list: Tuple[int, ...] = ()
    dt: Optional[float] = None


@dataclass(frozen=True)
class ConvergenceOptions:
    m_list: Tuple[int, ...] = ()


@dataclass(frozen=True)
class ResolutionOptions:
    n_list: Tuple[int, ...] = ()


@dataclass(frozen=True)
class ExperimentFile:
    """A named experiment and the options of each study run on it."""

    name: str
    experiment: GapToothConfig
    description: str = ""
    simulate: SimulateOptions = field(default_factory=SimulateOptions)
    spectrum: SpectrumOptions = field(default_factory=SpectrumOptions)
    convergence: ConvergenceOptions = field(default_factory=ConvergenceOptions)
    resolution: ResolutionOptions = field(default_factory=ResolutionOptions)
