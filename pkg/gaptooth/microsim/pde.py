# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Explicit 3-point micro updates.

Each PDE provides the right-hand side on interior points ``1..n-2`` from the
full tooth array; the update is forward Euler.
"""

from dataclasses import dataclass

import numpy as np

from ..errors import ConfigurationError, DivergenceError


def _positive(name, value):
    if isinstance(value, bool) or not np.isfinite(value) or value <= 0:
        raise ConfigurationError(name, value, "must be a positive number")
    return float(value)


def _laplacian(v, eta):
    return (v[..., 2:] - 2 * v[..., 1:-1] + v[..., :-2]) / eta**2


def _gradient(v, eta):
    return (v[..., 2:] - v[..., :-2]) / (2 * eta)


class Pde:
    """Base class of micro PDEs."""

    name = None
    linear = True

    @property
    def effective_diffusivity(self):
        """Diffusivity governing the explicit stability limit."""
        raise NotImplementedError()

    def rhs(self, v, eta):
        """Time derivative on interior points."""
        raise NotImplementedError()

    def linearized(self):
        """PDE linearised about the zero state."""
        return self


@dataclass(frozen=True)
class Diffusion(Pde):
    """``u_t = D u_xx``."""

    diffusivity: float = 1.0

    name = "diffusion"

    def __post_init__(self):
        """Validate."""
        object.__setattr__(
            self, "diffusivity", _positive("diffusivity", self.diffusivity)
        )

    @property
    def effective_diffusivity(self):
        return self.diffusivity

    def rhs(self, v, eta):
        return self.diffusivity * _laplacian(v, eta)


@dataclass(frozen=True)
class Burgers(Pde):
    """``u_t = nu u_xx - u u_x``."""

    nu: float

    name = "burgers"
    linear = False

    def __post_init__(self):
        """Validate."""
        object.__setattr__(self, "nu", _positive("nu", self.nu))

    @property
    def effective_diffusivity(self):
        return self.nu

    def rhs(self, v, eta):
        return self.nu * _laplacian(v, eta) - v[..., 1:-1] * _gradient(v, eta)

    def linearized(self):
        """The advection term vanishes about ``u = 0``."""
        return Diffusion(self.nu)


@dataclass(frozen=True)
class AdvectionDiffusion(Pde):
    """``u_t = D u_xx - c u_x``."""

    c: float
    diffusivity: float = 1.0

    name = "advection-diffusion"

    def __post_init__(self):
        """Validate."""
        if isinstance(self.c, bool) or not np.isfinite(self.c):
            raise ConfigurationError("c", self.c, "must be a finite number")
        object.__setattr__(self, "c", float(self.c))
        object.__setattr__(
            self, "diffusivity", _positive("diffusivity", self.diffusivity)
        )

    @property
    def effective_diffusivity(self):
        return self.diffusivity

    def rhs(self, v, eta):
        return self.diffusivity * _laplacian(v, eta) - self.c * _gradient(v, eta)


PDES = {cls.name: cls for cls in (Diffusion, Burgers, AdvectionDiffusion)}


def stability_bound(geom, pde):
    """Largest stable forward-Euler step ``eta^2 / (2 D)``."""
    return 0.5 * geom.eta**2 / pde.effective_diffusivity


def stable_dt(geom, pde, dt_max=1e-4, safety=0.25):
    """Default micro time step ``min(dt_max, safety eta^2 / max(1, D))``."""
    return min(dt_max, safety * geom.eta**2 / max(1.0, pde.effective_diffusivity))


def interior_step(state, geom, pde, dt):
    """Advance interior points ``1..n-2`` by one explicit step.

    Edge values are copied unchanged.

    :raises DivergenceError: on the first non-finite value.
    """
    v = state.v
    out = v.copy()
    out[..., 1:-1] = v[..., 1:-1] + dt * pde.rhs(v, geom.eta)
    t = state.t + dt
    finite = np.isfinite(out)
    if not finite.all():
        bad = np.argwhere(~finite)[0]
        raise DivergenceError(int(bad[-2]), int(bad[-1]), t)
    return state.replace(v=out, t=t)
