# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Tooth boundary conditions as the micro simulator accepts them."""

import numpy as np

from ..errors import SingularTbcError
from ..stencil import Dirichlet, Mixed, TwoPoint


def mixed_pivot(family, eta):
    """Coefficient of the edge value in the one-sided mixed condition."""
    return family.a + 3 * family.b / (2 * eta)


def apply_tbc(state, geom, spec, targets):
    """Overwrite the edge values of every tooth from the targets.

    :param targets: ``(..., m, 2)`` array of left and right targets.
    :returns: new :class:`MicroState`; the input is not modified.
    """
    family = spec.family
    g = np.asarray(targets, dtype=float)
    gl, gr = g[..., 0], g[..., 1]
    v = state.v.copy()

    if isinstance(family, Dirichlet):
        v[..., 0] = gl
        v[..., -1] = gr
    elif isinstance(family, Mixed):
        eta = geom.eta
        pivot = mixed_pivot(family, eta)
        scale = abs(family.a) + abs(3 * family.b / (2 * eta))
        # left and right conditions share the pivot
        if abs(pivot) <= np.finfo(float).eps * scale:
            raise SingularTbcError(("left", "right"), pivot)
        k = family.b / (2 * eta)
        v[..., 0] = (gl + k * (4 * v[..., 1] - v[..., 2])) / pivot
        v[..., -1] = (gr + k * (4 * v[..., -2] - v[..., -3])) / pivot
    elif isinstance(family, TwoPoint):
        v[..., 0] = gl - family.beta * v[..., 1]
        v[..., -1] = gr - family.beta * v[..., -2]
    else:
        raise TypeError(f"Unsupported TBC family {family!r}.")
    return state.replace(v=v)
