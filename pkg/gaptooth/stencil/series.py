# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Exact expansions of the shift operator in central differences.

On the macro grid the shift ``E U_j = U_{j+1}`` is written with the central
difference ``delta = E^{1/2} - E^{-1/2}`` and mean ``mu = (E^{1/2} +
E^{-1/2})/2``. The fractional shift to a tooth edge then expands as

.. code-block:: text

    E^s = 1 + s mu delta + s^2/2 delta^2 + s(s^2-1)/3! mu delta^3
            + s^2(s^2-1)/4! delta^4 + ...

and, because ``E^s = exp(s H d/dx)``, the edge gradient ``E^s H d/dx`` is the
term-by-term derivative of that series in ``s``.

Only even powers ``delta^2 = E - 2 + E^{-1}`` and the products ``mu delta =
(E - E^{-1})/2`` are needed, so every term lives on integer offsets and no
half-grid values appear. All coefficients are kept as exact fractions.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial


def _mul(a, b):
    """Multiply two operators given as ``{offset: coefficient}`` maps."""
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v != 0}


_IDENTITY = {0: Fraction(1)}
_DELTA2 = {-1: Fraction(1), 0: Fraction(-2), 1: Fraction(1)}
_MU_DELTA = {-1: Fraction(-1, 2), 1: Fraction(1, 2)}


@lru_cache(maxsize=None)
def term_operator(power):
    """Offsets of the ``power``-th term: ``delta^power`` or ``mu delta^power``.

    Even powers are pure ``delta^power``; odd powers carry the mean ``mu``.
    Returns a tuple of ``(offset, Fraction)`` pairs.
    """
    op = _IDENTITY
    for _ in range(power // 2):
        op = _mul(op, _DELTA2)
    if power % 2:
        op = _mul(op, _MU_DELTA)
    return tuple(sorted(op.items()))


@lru_cache(maxsize=None)
def coefficient_roots(power):
    """Roots of the Stirling coefficient of the ``power``-th term.

    The coefficient of ``delta^{2q}`` is ``s^2 (s^2-1) ... (s^2-(q-1)^2)/(2q)!``
    and that of ``mu delta^{2q+1}`` is ``s (s^2-1) ... (s^2-q^2)/(2q+1)!``:
    both are a product of ``power`` linear factors ``(s - root)``.
    """
    if power == 0:
        return ()
    q, odd = divmod(power, 2)
    roots = [0] if odd else [0, 0]
    top = q if odd else q - 1
    for i in range(1, top + 1):
        roots.extend((-i, i))
    return tuple(roots)


def coefficient(power, s):
    """Exact value of the ``power``-th series coefficient at ``s``."""
    value = Fraction(1)
    for root in coefficient_roots(power):
        value *= s - root
    return value / factorial(power)


def coefficient_derivative(power, s):
    """Exact ``d/ds`` of the ``power``-th series coefficient at ``s``."""
    roots = coefficient_roots(power)
    total = Fraction(0)
    for skip in range(len(roots)):
        term = Fraction(1)
        for idx, root in enumerate(roots):
            if idx != skip:
                term *= s - root
        total += term
    return total / factorial(power)


def expand(s, half_width, derivative=False):
    """Weights of the series truncated after ``delta^{2 half_width}``.

    :param s: Exact (``Fraction``) fractional shift.
    :param half_width: Stencil half-width ``p``; the weights cover offsets
        ``-p..p``.
    :param derivative: Expand ``E^s H d/dx`` instead of ``E^s``.
    :returns: list of ``2p+1`` exact weights ordered by offset.
    """
    coef = coefficient_derivative if derivative else coefficient
    weights = [Fraction(0)] * (2 * half_width + 1)
    for power in range(2 * half_width + 1):
        c = coef(power, s)
        if c == 0:
            continue
        for offset, value in term_operator(power):
            weights[offset + half_width] += c * value
    return weights
