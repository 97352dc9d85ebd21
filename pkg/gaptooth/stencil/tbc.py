# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Tooth boundary condition families and their macro weight vectors."""

from dataclasses import dataclass, field

import numpy as np

from ..errors import ConfigurationError, GeometryError
from .weights import Side, deriv_weights, interp_weights

ORDERS = (2, 4, 6, 8)
"""Admissible TBC orders (``2p`` for half-width ``p``)."""


def _finite(name, value):
    if isinstance(value, bool) or not np.isfinite(value):
        raise ConfigurationError(name, value, "must be a finite number")
    return float(value)


@dataclass(frozen=True)
class Dirichlet:
    """Edge value given: ``v = g``."""

    name = "dirichlet"


@dataclass(frozen=True)
class Mixed:
    """Edge combination ``a v -+ b dv/dx = g`` (``-`` on the left edge)."""

    a: float
    b: float

    name = "mixed"

    def __post_init__(self):
        """Validate coefficients."""
        object.__setattr__(self, "a", _finite("a", self.a))
        object.__setattr__(self, "b", _finite("b", self.b))
        if self.a == 0 and self.b == 0:
            raise ConfigurationError("a", (self.a, self.b), "a and b cannot both be 0")

    @classmethod
    def neumann(cls):
        """Pure flux condition."""
        return cls(a=0.0, b=1.0)


@dataclass(frozen=True)
class TwoPoint:
    """Edge and penultimate point combined: ``v_edge + beta v_penultimate = g``."""

    beta: float

    name = "two-point"

    def __post_init__(self):
        """Validate coefficient."""
        object.__setattr__(self, "beta", _finite("beta", self.beta))


FAMILIES = {cls.name: cls for cls in (Dirichlet, Mixed, TwoPoint)}


@dataclass(frozen=True)
class TbcSpec:
    """A TBC family together with its interpolation order."""

    family: object
    order: int = 4

    def __post_init__(self):
        """Validate order and family."""
        if not isinstance(self.family, tuple(FAMILIES.values())):
            raise ConfigurationError("family", self.family, "unknown TBC family")
        if isinstance(self.order, bool) or self.order not in ORDERS:
            raise ConfigurationError(
                "order", self.order, f"order must be one of {list(ORDERS)}"
            )

    @property
    def half_width(self):
        """Stencil half-width ``p = order/2``."""
        return self.order // 2

    @classmethod
    def dirichlet(cls, order=4):
        """Dirichlet TBC of the given order."""
        return cls(Dirichlet(), order)

    @classmethod
    def mixed(cls, a, b, order=4):
        """Mixed TBC of the given order."""
        return cls(Mixed(a, b), order)

    @classmethod
    def neumann(cls, order=4):
        """Neumann TBC of the given order."""
        return cls(Mixed.neumann(), order)

    @classmethod
    def two_point(cls, beta=1.0, order=4):
        """Two-point TBC of the given order."""
        return cls(TwoPoint(beta), order)


@dataclass(frozen=True)
class EdgeCondition:
    """Combined macro weights giving the target of one tooth edge."""

    side: Side
    weights: np.ndarray
    combination: str
    components: tuple = field(default=())

    def __post_init__(self):
        """Freeze weights."""
        weights = np.array(self.weights, dtype=float)
        weights.setflags(write=False)
        object.__setattr__(self, "weights", weights)

    @property
    def half_width(self):
        """Half-width of the combined stencil."""
        return (len(self.weights) - 1) // 2

    @property
    def offsets(self):
        """Macro offsets the weights apply to."""
        return np.arange(-self.half_width, self.half_width + 1)

    def apply(self, values):
        """Weighted sum over the last axis of ``values``."""
        return np.asarray(values, dtype=float) @ self.weights


def penultimate_ratio(r, n):
    """Ratio ``r'`` locating the penultimate micro point of a tooth.

    The penultimate point sits one micro spacing inside the edge, at
    ``X_j +- r'H`` with ``r' = r (n-3)/(n-1)``.
    """
    return r * (n - 3) / (n - 1)


def tbc_weights(spec, r, r_prime, H, side):
    """Macro weight vector for the edge target of ``spec``.

    :param spec: :class:`TbcSpec`.
    :param r: Gap-to-tooth ratio.
    :param r_prime: Penultimate ratio (two-point TBC only, else ignored).
    :param H: Macro spacing; scales the derivative part of mixed TBCs.
    :param side: Tooth edge.
    :returns: :class:`EdgeCondition`.
    """
    side = Side(side)
    p = spec.half_width
    family = spec.family
    value = interp_weights(r, p, side)
    edge = "left" if side is Side.LEFT else "right"

    if isinstance(family, Dirichlet):
        return EdgeCondition(side, value.weights, f"v_{edge}", (value,))

    if isinstance(family, Mixed):
        if not H > 0:
            raise ConfigurationError("H", H, "macro spacing must be positive")
        slope = deriv_weights(r, p, side)
        weights = family.a * value.weights + side.sign * (family.b / H) * slope.weights
        op = "-" if side is Side.LEFT else "+"
        return EdgeCondition(
            side, weights, f"a*v_{edge} {op} b*dv/dx_{edge}", (value, slope)
        )

    # TwoPoint
    if r_prime is None or not 0 < r_prime < r:
        raise GeometryError(
            "r_prime", r_prime, f"penultimate ratio must lie strictly inside (0, {r})"
        )
    inner = interp_weights(r_prime, p, side)
    weights = value.weights + family.beta * inner.weights
    return EdgeCondition(
        side, weights, f"v_{edge} + beta*v_{edge}_penultimate", (value, inner)
    )


def edge_pair(spec, r, r_prime, H):
    """Left and right :class:`EdgeCondition` for ``spec``."""
    return tuple(tbc_weights(spec, r, r_prime, H, side) for side in Side)


__all__ = (
    "Dirichlet",
    "EdgeCondition",
    "FAMILIES",
    "Mixed",
    "ORDERS",
    "TbcSpec",
    "TwoPoint",
    "edge_pair",
    "penultimate_ratio",
    "tbc_weights",
)
