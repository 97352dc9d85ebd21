# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""CSV output."""

import numpy as np
import pytest

from gaptooth.serializers import CSVSerializer, format_table


@pytest.mark.parametrize(
    "value,expected",
    [
        (None, "n/a"),
        (True, "1"),
        (np.int64(3), "3"),
        (0.1, "0.10000000000000001"),
        (np.float64(-2.5), "-2.5"),
        (-np.inf, "-inf"),
        (float("nan"), "nan"),
        ("mode1", "mode1"),
    ],
)
def test_format_value(value, expected):
    assert CSVSerializer().format_value(value) == expected


def test_serialize_rows():
    text = CSVSerializer(digits=6).serialize_rows(("m", "value"), [(8, 1 / 3), (16, None)])
    assert text == "m,value\n8,0.333333\n16,n/a\n"


def test_write(tmp_path):
    path = tmp_path / "out.csv"
    serializer = CSVSerializer()
    serializer.write(str(path), ("a",), [(1.0,)])
    assert path.read_text() == "a\n1\n"


def test_format_table():
    text = format_table(("m", "pair23"), [(8, -0.9960731), (16, None)])
    lines = text.splitlines()

    assert len(lines) == 4
    assert lines[0].split("|")[1].strip() == "pair23"
    assert "-0.996073" in lines[2]
    assert "n/a" in lines[3]
    assert len({len(line) for line in lines}) == 1
