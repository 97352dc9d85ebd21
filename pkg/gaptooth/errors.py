# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Common errors utilities."""


class GapToothError(Exception):
    """Base class for gap-tooth errors."""

    @property
    def description(self):
        """Exception's description."""
        return str(self)


class ConfigurationError(GapToothError, ValueError):
    """A parameter is outside its admissible range."""

    def __init__(self, field, value, reason):
        """Constructor."""
        self.field = field
        self.value = value
        self.reason = reason
        super().__init__(self.description)

    @property
    def description(self):
        """Exception's description."""
        return f"Invalid value {self.value!r} for '{self.field}': {self.reason}."


class GeometryError(ConfigurationError):
    """Teeth are too narrow or resolved by too few micro points."""


class SingularTbcError(GapToothError):
    """Mixed tooth boundary condition cannot be solved for the edge value."""

    def __init__(self, sides, pivot):
        """Constructor."""
        self.sides = tuple(sides)
        self.pivot = pivot
        super().__init__(self.description)

    @property
    def description(self):
        """Exception's description."""
        edges = " and ".join(self.sides)
        plural = "s" if len(self.sides) > 1 else ""
        return (
            f"Mixed tooth boundary condition is singular on the {edges} edge{plural} "
            f"(pivot a + 3b/(2*eta) = {self.pivot!r})."
        )


class DivergenceError(GapToothError):
    """Micro field became non-finite."""

    def __init__(self, tooth, point, time):
        """Constructor."""
        self.tooth = tooth
        self.point = point
        self.time = time
        super().__init__(self.description)

    @property
    def description(self):
        """Exception's description."""
        return (
            f"Micro field diverged at tooth {self.tooth}, point {self.point}, "
            f"time {self.time!r}."
        )


class NonzeroFixedPointError(GapToothError):
    """The one-step map does not fix the zero state."""

    def __init__(self, norm):
        """Constructor."""
        self.norm = norm
        super().__init__(self.description)

    @property
    def description(self):
        """Exception's description."""
        return f"One-step map moved the zero state (max norm {self.norm!r})."


class PresetNotFoundError(GapToothError):
    """No preset experiment with the given name."""

    def __init__(self, name, available=()):
        """Constructor."""
        self.name = name
        self.available = tuple(available)
        super().__init__(self.description)

    @property
    def description(self):
        """Exception's description."""
        return (
            f"Preset '{self.name}' not found; available presets: "
            f"{', '.join(self.available) or 'none'}."
        )


def _flatten_messages(node, path=()):
    """Yield ``(dotted path, messages)`` for every leaf of a message tree.

    Nested schemas give dicts, list items give integer keys and leaves are
    lists of messages (or a bare message).
    """
    if isinstance(node, dict):
        for key, child in node.items():
            yield from _flatten_messages(child, path + (str(key),))
    else:
        messages = node if isinstance(node, list) else [node]
        yield ".".join(path), list(messages)


def validation_error_to_list_errors(exception):
    """Field errors of a marshmallow ``ValidationError``.

    ``{"experiment": {"geometry": {"n": ["Must be odd."]}}}`` becomes
    ``[{"field": "experiment.geometry.n", "messages": ["Must be odd."]}]``.
    """
    return [
        {"field": field, "messages": messages}
        for field, messages in _flatten_messages(exception.normalized_messages())
    ]
