# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Spectrum and study results."""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..base import ServiceItemResult, ServiceListResult

GROUPS = ("mode1", "pair23", "pair45", "pair67")
"""Macro mode groups; pairs are the sine/cosine modes of wavenumbers 1..3."""

GROUP_INDICES = {
    "mode1": (0,),
    "pair23": (1, 2),
    "pair45": (3, 4),
    "pair67": (5, 6),
}

NOT_AVAILABLE = "n/a"


@dataclass(frozen=True)
class GroupValue:
    """Mean of a group of growth rates and the spread of its members."""

    value: complex
    members: Tuple[complex, ...]

    @property
    def gap(self):
        """Spread of the members (zero for a single mode)."""
        return float(abs(self.members[0] - self.members[-1]))

    @property
    def real(self):
        return float(self.value.real)

    @property
    def single(self):
        return len(self.members) == 1


class SpectrumReport(ServiceItemResult):
    """Growth rates of the one-step map of a configuration."""

    header = ("index", "re_lambda", "im_lambda", "fast")

    def __init__(self, service, config, growth_rates, fast, multipliers, m, dt):
        """Constructor.

        :param growth_rates: All ``mn`` rates; reliable ones sorted by real
            part descending, fast ones last as ``-inf``.
        :param fast: Mask of the fast modes, aligned with ``growth_rates``.
        :param multipliers: Eigenvalues of the map, aligned likewise.
        :param m: Number of macro modes.
        :param dt: Time step of the map.
        """
        super().__init__(service, config)
        self.growth_rates = growth_rates
        self.fast = fast
        self.multipliers = multipliers
        self.m = m
        self.dt = dt

    @property
    def dt_used(self):
        return self.dt

    @property
    def wrap_degenerate(self):
        return bool(self.config is not None and self.config.wrap_degenerate)

    @property
    def reliable(self):
        """Growth rates of the non-fast modes, sorted."""
        return self.growth_rates[~self.fast]

    @property
    def macro_modes(self):
        """The ``m`` slowest growth rates."""
        return self.reliable[: self.m]

    def group(self, name):
        """Group value, a single mode when the pair is cut off, else ``None``.

        Only the leading ``m`` modes are macroscopic; a pair whose second
        member is beyond ``m`` is reported by its first member alone.
        """
        members = [i for i in GROUP_INDICES[name] if i < self.m]
        rates = self.reliable
        members = [i for i in members if i < len(rates)]
        if not members:
            return None
        values = tuple(complex(rates[i]) for i in members)
        return GroupValue(sum(values) / len(values), values)

    @property
    def leading_internal(self):
        """Slowest internal mode (first rate after the macro modes)."""
        rates = self.reliable
        return complex(rates[self.m]) if len(rates) > self.m else None

    @property
    def groups(self):
        """Group values keyed by group name plus ``leading_internal``."""
        groups = {name: self.group(name) for name in GROUPS}
        groups["leading_internal"] = self.leading_internal
        return groups

    def rows(self):
        """Rows ``(index, re_lambda, im_lambda, fast)``."""
        for i, (rate, fast) in enumerate(zip(self.growth_rates, self.fast)):
            yield (i + 1, rate.real, 0.0 if fast else rate.imag, int(fast))

    def table_row(self):
        """Row of the growth rate table (real parts; ``None`` when absent)."""
        row = {"m": self.m}
        for name in GROUPS:
            value = self.group(name)
            row[name] = None if value is None else value.real
        internal = self.leading_internal
        row["leading_internal"] = None if internal is None else internal.real
        return row


TABLE_HEADER = ("m",) + GROUPS + ("leading_internal",)


class SpectrumTable(ServiceListResult):
    """Growth rate table over several macro grids."""

    header = TABLE_HEADER

    def __init__(self, service, config, reports):
        """Constructor."""
        super().__init__(service, config)
        self.reports = list(reports)

    def __iter__(self):
        return iter(self.reports)

    def rows(self):
        for report in self.reports:
            row = report.table_row()
            yield tuple(row[name] for name in self.header)


@dataclass(frozen=True)
class ConvergenceRow:
    m: int
    k: int
    value: Optional[float]
    error: Optional[float]
    order: Optional[float]


class ConvergenceTable(ServiceListResult):
    """Errors of the macro growth rates against ``-k^2`` as ``m`` doubles."""

    header = ("m", "k", "value", "error", "observed_order")

    def __init__(self, service, config, reports):
        """Constructor."""
        super().__init__(service, config)
        self.reports = list(reports)
        self.table = self._build()

    def _build(self):
        table = []
        previous = {}
        for report in self.reports:
            for k, name in enumerate(GROUPS):
                group = report.group(name)
                value = error = order = None
                if group is not None:
                    value = group.real
                    error = abs(value + k * k)
                    prev = previous.get(k)
                    if k > 0 and prev and error > 0:
                        order = math.log2(prev / error)
                previous[k] = error
                table.append(ConvergenceRow(report.m, k, value, error, order))
        return table

    def error(self, m, k):
        """Error of wavenumber ``k`` at ``m`` teeth."""
        for row in self.table:
            if row.m == m and row.k == k:
                return row.error
        raise KeyError((m, k))

    def observed_orders(self, k):
        """Observed orders of wavenumber ``k`` between successive ``m``."""
        return [row.order for row in self.table if row.k == k and row.order is not None]

    def rows(self):
        for row in self.table:
            yield (row.m, row.k, row.value, row.error, row.order)


class ResolutionTable(ServiceListResult):
    """Macro growth rates as the micro grid is refined."""

    header = ("n",) + GROUPS

    def __init__(self, service, config, reports):
        """Constructor."""
        super().__init__(service, config)
        self.reports = list(reports)

    @property
    def n_list(self):
        return [report.config.geom.n for report in self.reports]

    def values(self, name):
        """Real part of group ``name`` for every ``n`` (``None`` if absent)."""
        out = []
        for report in self.reports:
            group = report.group(name)
            out.append(None if group is None else group.real)
        return out

    def richardson_ratios(self, name):
        """Ratios of successive differences ``(v1 - v0)/(v2 - v1)``.

        About ``4`` for an ``O(eta^2)`` error when ``n - 1`` doubles.
        """
        values = self.values(name)
        ratios = []
        for v0, v1, v2 in zip(values, values[1:], values[2:]):
            if None in (v0, v1, v2) or v2 == v1:
                ratios.append(None)
            else:
                ratios.append((v1 - v0) / (v2 - v1))
        return ratios

    def relative_variation(self, name):
        """``(max - min)/|mean|`` of group ``name`` over the resolutions."""
        values = [v for v in self.values(name) if v is not None]
        if not values:
            return None
        mean = float(np.mean(values))
        if mean == 0:
            return None
        return (max(values) - min(values)) / abs(mean)

    def rows(self):
        for n, report in zip(self.n_list, self.reports):
            row = report.table_row()
            yield (n,) + tuple(row[name] for name in GROUPS)

    def diagnostics(self):
        """Rows ``(group, richardson ratios, relative variation)``."""
        for name in GROUPS[1:]:
            yield name, self.richardson_ratios(name), self.relative_variation(name)
