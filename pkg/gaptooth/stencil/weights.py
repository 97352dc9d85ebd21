# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Edge interpolation and edge derivative weights."""

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ..errors import ConfigurationError
from .series import expand

MAX_HALF_WIDTH = 4
"""Largest supported half-width (eighth order)."""


class Side(enum.Enum):
    """Tooth edge: the sign of the fractional shift."""

    LEFT = -1
    RIGHT = 1

    @property
    def sign(self):
        """Sign of the shift ``E^{+-r}``."""
        return self.value


class Scale(enum.Enum):
    """What a weight vector approximates."""

    VALUE = "value"
    DERIVATIVE_OVER_H = "derivative_over_h"


@dataclass(frozen=True)
class StencilWeights:
    """Weights on macro offsets ``-p..p`` around a tooth."""

    side: Side
    half_width: int
    weights: np.ndarray
    scale: Scale

    def __post_init__(self):
        """Freeze the weights and check their length."""
        weights = np.array(self.weights, dtype=float)
        if weights.shape != (2 * self.half_width + 1,):
            raise ConfigurationError(
                "weights", weights.shape, f"expected {2 * self.half_width + 1} weights"
            )
        weights.setflags(write=False)
        object.__setattr__(self, "weights", weights)

    @property
    def offsets(self):
        """Macro offsets the weights apply to."""
        return np.arange(-self.half_width, self.half_width + 1)

    def apply(self, values):
        """Weighted sum over the last axis of ``values`` (length ``2p+1``)."""
        return np.asarray(values, dtype=float) @ self.weights


def validate_half_width(p):
    """Check a stencil half-width."""
    if isinstance(p, bool) or not isinstance(p, (int, np.integer)):
        raise ConfigurationError("p", p, "half-width must be an integer")
    if not 1 <= p <= MAX_HALF_WIDTH:
        raise ConfigurationError("p", p, f"half-width must lie in 1..{MAX_HALF_WIDTH}")


def validate_ratio(r):
    """Check a gap-to-tooth ratio; zero is the identity limit."""
    if not np.isfinite(r) or not 0 <= r < 0.5:
        raise ConfigurationError("r", r, "ratio must lie in [0, 0.5)")


@lru_cache(maxsize=1024)
def _weights(s, p, derivative):
    return tuple(float(w) for w in expand(Fraction(s), p, derivative=derivative))


def shift_weights(s, p, derivative=False):
    """Weights of ``E^s`` (or ``E^s H d/dx``) for any real shift ``s``.

    No range check on ``s``: gap interpolation evaluates shifts up to one
    half macro spacing.
    """
    return np.array(_weights(float(s), int(p), bool(derivative)))


def interp_weights(r, p, side):
    """Interpolate the macro field to the edge ``X_j +- rH``.

    :param r: Gap-to-tooth ratio in ``[0, 0.5)``.
    :param p: Half-width ``1..4``; the interpolation is of order ``2p``.
    :param side: :class:`Side` selecting ``E^{-r}`` or ``E^{+r}``.
    """
    validate_ratio(r)
    validate_half_width(p)
    side = Side(side)
    return StencilWeights(
        side=side,
        half_width=p,
        weights=shift_weights(side.sign * r, p),
        scale=Scale.VALUE,
    )


def deriv_weights(r, p, side):
    """Approximate ``H d/dx`` of the macro field at the edge ``X_j +- rH``.

    The caller divides by ``H``. Exact for polynomials of degree ``<= 2p``.
    """
    validate_ratio(r)
    validate_half_width(p)
    side = Side(side)
    return StencilWeights(
        side=side,
        half_width=p,
        weights=shift_weights(side.sign * r, p, derivative=True),
        scale=Scale.DERIVATIVE_OVER_H,
    )
