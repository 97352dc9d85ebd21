# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Edge interpolation and derivative weights."""

from fractions import Fraction

import numpy as np
import pytest

from gaptooth.errors import ConfigurationError
from gaptooth.stencil import (
    Scale,
    Side,
    deriv_weights,
    interp_weights,
    shift_weights,
)
from gaptooth.stencil.series import coefficient_roots, expand, term_operator


def lagrange_weights(s, p):
    """Lagrange basis on the nodes ``-p..p`` evaluated at ``s``."""
    nodes = np.arange(-p, p + 1)
    out = []
    for k in nodes:
        others = nodes[nodes != k]
        out.append(np.prod((s - others) / (k - others)))
    return np.array(out)


#
# Series
#
def test_term_operators():
    assert term_operator(0) == ((0, Fraction(1)),)
    assert term_operator(1) == ((-1, Fraction(-1, 2)), (1, Fraction(1, 2)))
    assert term_operator(2) == ((-1, Fraction(1)), (0, Fraction(-2)), (1, Fraction(1)))


def test_coefficient_roots():
    assert coefficient_roots(0) == ()
    assert coefficient_roots(2) == (0, 0)
    assert sorted(coefficient_roots(3)) == [-1, 0, 1]
    assert sorted(coefficient_roots(4)) == [-1, 0, 0, 1]


def test_expansion_is_exact():
    weights = expand(Fraction(1, 2), 1)

    assert weights == [Fraction(-1, 8), Fraction(3, 4), Fraction(3, 8)]
    assert all(isinstance(w, Fraction) for w in weights)


def test_integer_shift_is_a_unit_vector():
    assert expand(Fraction(1), 2) == [0, 0, 0, 1, 0]
    assert expand(Fraction(-2), 2) == [1, 0, 0, 0, 0]


#
# Interpolation
#
@pytest.mark.parametrize("p", [1, 2, 3, 4])
@pytest.mark.parametrize("r", [0.05, 0.1, 0.25, 0.45])
def test_interp_matches_lagrange(r, p):
    for side in Side:
        stencil = interp_weights(r, p, side)
        expected = lagrange_weights(side.sign * r, p)
        np.testing.assert_allclose(stencil.weights, expected, atol=1e-13)


@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_interp_is_exact_for_polynomials(p):
    r = 0.1
    offsets = np.arange(-p, p + 1)
    for degree in range(2 * p + 1):
        for side in Side:
            stencil = interp_weights(r, p, side)
            assert stencil.apply(offsets**degree) == pytest.approx(
                (side.sign * r) ** degree, abs=1e-13
            )


@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_interp_not_exact_beyond_order(p):
    r = 0.1
    offsets = np.arange(-p, p + 1)
    stencil = interp_weights(r, p, Side.RIGHT)
    degree = 2 * p + 1
    assert abs(stencil.apply(offsets**degree) - r**degree) > 1e-6


def test_interp_weights_sum_to_one():
    for p in range(1, 5):
        for side in Side:
            assert interp_weights(0.2, p, side).weights.sum() == pytest.approx(1.0)


def test_interp_mirror_symmetry():
    right = interp_weights(0.1, 3, Side.RIGHT)
    left = interp_weights(0.1, 3, Side.LEFT)
    np.testing.assert_allclose(left.weights, right.weights[::-1], atol=1e-15)


def test_interp_identity_at_zero_ratio():
    np.testing.assert_array_equal(interp_weights(0, 2, Side.RIGHT).weights, [0, 0, 1, 0, 0])


def test_stencil_metadata():
    stencil = interp_weights(0.1, 2, 1)

    assert stencil.side is Side.RIGHT
    assert stencil.half_width == 2
    assert stencil.scale is Scale.VALUE
    np.testing.assert_array_equal(stencil.offsets, [-2, -1, 0, 1, 2])
    with pytest.raises(ValueError):
        stencil.weights[0] = 1.0


#
# Derivatives
#
def test_central_derivative_at_zero_ratio():
    stencil = deriv_weights(0, 2, Side.RIGHT)

    assert stencil.scale is Scale.DERIVATIVE_OVER_H
    np.testing.assert_allclose(
        stencil.weights, [1 / 12, -2 / 3, 0, 2 / 3, -1 / 12], atol=1e-15
    )


@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_deriv_is_exact_for_polynomials(p):
    r = 0.15
    offsets = np.arange(-p, p + 1)
    for degree in range(1, 2 * p + 1):
        for side in Side:
            s = side.sign * r
            stencil = deriv_weights(r, p, side)
            assert stencil.apply(offsets**degree) == pytest.approx(
                degree * s ** (degree - 1), abs=1e-12
            )


def test_deriv_weights_sum_to_zero():
    for p in range(1, 5):
        assert deriv_weights(0.3, p, Side.LEFT).weights.sum() == pytest.approx(
            0.0, abs=1e-14
        )


def test_deriv_mirror_antisymmetry():
    right = deriv_weights(0.1, 2, Side.RIGHT)
    left = deriv_weights(0.1, 2, Side.LEFT)
    np.testing.assert_allclose(left.weights, -right.weights[::-1], atol=1e-15)


def test_shift_weights_outside_tooth():
    # gap interpolation reaches half a macro spacing
    np.testing.assert_allclose(
        shift_weights(0.5, 2), lagrange_weights(0.5, 2), atol=1e-14
    )


def test_invariants_over_random_ratios():
    rng = np.random.default_rng(20)
    for r in rng.uniform(0.0, 0.5, size=100):
        for p in range(1, 5):
            offsets = np.arange(-p, p + 1)
            for side in Side:
                s = side.sign * r
                values = interp_weights(r, p, side)
                slopes = deriv_weights(r, p, side)

                assert values.weights.sum() == pytest.approx(1.0, abs=1e-13)
                assert slopes.weights.sum() == pytest.approx(0.0, abs=1e-12)
                np.testing.assert_allclose(
                    values.weights, lagrange_weights(s, p), atol=1e-12
                )
                for degree in range(1, 2 * p + 1):
                    assert values.apply(offsets**degree) == pytest.approx(
                        s**degree, abs=1e-9
                    )
                    assert slopes.apply(offsets**degree) == pytest.approx(
                        degree * s ** (degree - 1), abs=1e-9
                    )


#
# Validation
#
@pytest.mark.parametrize("r", [-0.1, 0.5, 0.7, float("nan")])
def test_invalid_ratio(r):
    with pytest.raises(ConfigurationError) as e:
        interp_weights(r, 2, Side.RIGHT)
    assert e.value.field == "r"


@pytest.mark.parametrize("p", [0, 5, True, 2.0])
def test_invalid_half_width(p):
    with pytest.raises(ConfigurationError) as e:
        deriv_weights(0.1, p, Side.LEFT)
    assert e.value.field == "p"


def test_invalid_side():
    with pytest.raises(ValueError):
        interp_weights(0.1, 2, 0)
