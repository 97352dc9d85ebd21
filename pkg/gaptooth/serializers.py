# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""CSV and plain-text table output."""

import csv
import io
import math
import numbers

from .services.spectra import NOT_AVAILABLE


class CSVSerializer:
    """Serialize result rows with a one-line header.

    Floats use a fixed number of significant digits so that identical runs
    give byte-identical files.
    """

    def __init__(self, digits=17):
        """Constructor."""
        self.digits = digits

    def format_value(self, value):
        """Text of one cell."""
        if value is None:
            return NOT_AVAILABLE
        if isinstance(value, (bool, numbers.Integral)):
            return str(int(value))
        if isinstance(value, numbers.Real):
            value = float(value)
            if math.isinf(value):
                return "inf" if value > 0 else "-inf"
            if math.isnan(value):
                return "nan"
            return format(value, f".{self.digits}g")
        return str(value)

    def serialize_rows(self, header, rows):
        """CSV text of ``rows`` under ``header``."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([self.format_value(v) for v in row])
        return buf.getvalue()

    def serialize_object(self, result):
        """CSV text of a service result."""
        return self.serialize_rows(result.header, result.rows())

    def write(self, path, header, rows):
        """Write rows to ``path``."""
        with open(path, "w", encoding="utf-8", newline="") as fp:
            fp.write(self.serialize_rows(header, rows))

    def write_object(self, path, result):
        """Write a service result to ``path``."""
        self.write(path, result.header, result.rows())


def format_table(header, rows, digits=6):
    """Aligned plain-text table."""
    serializer = CSVSerializer(digits=digits)
    cells = [[str(h) for h in header]]
    cells += [[serializer.format_value(v) for v in row] for row in rows]
    widths = [max(len(row[c]) for row in cells) for c in range(len(header))]
    lines = [
        " | ".join(cell.rjust(width) for cell, width in zip(row, widths))
        for row in cells
    ]
    lines.insert(1, "-+-".join("-" * width for width in widths))
    return "\n".join(lines)
