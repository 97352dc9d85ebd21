# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Gap-tooth laboratory default configuration."""

import math

GAPTOOTH_DOMAIN_LENGTH = 2 * math.pi
"""Length of the periodic domain when an experiment does not give one."""

GAPTOOTH_DT_MAX = 1e-4
"""Ceiling of the simulation time step."""

GAPTOOTH_DT_SAFETY = 0.25
"""Simulation step as a fraction of ``eta^2 / max(1, D)``."""

GAPTOOTH_SPECTRA_DT_MAX = 1e-4
"""Ceiling of the time step used to linearise the one-step map."""

GAPTOOTH_SPECTRA_DT_FACTOR = 0.125
"""Spectra step as a fraction of ``eta^2 / max(1, D)``.

Keeps ``|lambda| dt`` of the fastest internal modes near 0.5 so that the
principal logarithm stays accurate.
"""

GAPTOOTH_SPECTRA_BATCH = 256
"""Number of unit perturbations stepped together when linearising."""

GAPTOOTH_FAST_MODE_TOLERANCE = 1e-10
"""Multipliers below this fraction of the largest one are fast modes."""

GAPTOOTH_SNAPSHOT_STRIDE = 100
"""Micro steps between trajectory snapshots."""

GAPTOOTH_FIT_START = 0.1
"""Earliest time used when fitting macro decay rates."""

GAPTOOTH_PARALLEL = 1
"""Worker threads used to assemble the linearised map."""

GAPTOOTH_CSV_DIGITS = 17
"""Significant digits of floats written to CSV."""

GAPTOOTH_GAP_POINTS = 5
"""Interpolated points per gap when gap output is requested."""
