# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Tooth geometry and micro state."""

import math

import numpy as np
import pytest

from gaptooth.errors import ConfigurationError, GeometryError
from gaptooth.microsim import MicroState, ToothGeometry


def test_derived_quantities():
    geom = ToothGeometry(16, 11, 0.1)

    assert geom.length == pytest.approx(2 * math.pi)
    assert geom.H == pytest.approx(2 * math.pi / 16)
    assert geom.h == pytest.approx(0.2 * geom.H)
    assert geom.eta == pytest.approx(geom.h / 10)
    assert geom.r_prime == pytest.approx(0.08)
    assert geom.centre_index == 5
    assert geom.shape == (16, 11)
    assert geom.size == 176


def test_micro_coordinates():
    geom = ToothGeometry(8, 5, 0.2, length=8.0)
    x = geom.x

    assert x.shape == (8, 5)
    np.testing.assert_allclose(geom.offsets, [-0.2, -0.1, 0.0, 0.1, 0.2])
    np.testing.assert_allclose(x[:, 2], np.arange(8.0))
    np.testing.assert_allclose(x[3], 3 + geom.offsets)


@pytest.mark.parametrize(
    "kwargs,field,error",
    [
        ({"m": 2}, "m", ConfigurationError),
        ({"m": 4.0}, "m", ConfigurationError),
        ({"n": 10}, "n", GeometryError),
        ({"n": 3}, "n", GeometryError),
        ({"r": 0.0}, "r", GeometryError),
        ({"r": 0.5}, "r", GeometryError),
        ({"length": -1.0}, "length", ConfigurationError),
    ],
)
def test_invalid_geometry(kwargs, field, error):
    params = {"m": 8, "n": 11, "r": 0.1}
    params.update(kwargs)
    with pytest.raises(error) as e:
        ToothGeometry(**params)
    assert e.value.field == field


def test_geometry_error_is_a_configuration_error():
    with pytest.raises(ConfigurationError):
        ToothGeometry(8, 4, 0.1)


def test_state_macro_values():
    geom = ToothGeometry(4, 5, 0.1)
    v = np.arange(20.0).reshape(geom.shape)
    state = MicroState(v, t=0.5)

    np.testing.assert_array_equal(state.macro_values, [2, 7, 12, 17])
    assert state.replace(t=1.0).t == 1.0
    assert state.replace(t=1.0).v is state.v


def test_batched_zeros():
    geom = ToothGeometry(4, 5, 0.1)
    state = MicroState.zeros(geom, batch=(3,))

    assert state.v.shape == (3, 4, 5)
    assert state.macro_values.shape == (3, 4)
    assert state.t == 0.0
