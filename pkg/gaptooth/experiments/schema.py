# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Experiment file schemas."""

from contextlib import contextmanager

from marshmallow import (
    RAISE,
    Schema,
    ValidationError,
    fields,
    post_load,
    pre_dump,
    validate,
    validates_schema,
)

from ..errors import ConfigurationError
from ..microsim import PDES, AdvectionDiffusion, Burgers, Diffusion, ToothGeometry
from ..microsim.geometry import MIN_POINTS, MIN_TEETH
from ..stencil import Dirichlet, Mixed, TbcSpec, TwoPoint
from ..stencil.tbc import ORDERS
from .api import (
    INITIAL_CONDITION_KINDS,
    ConvergenceOptions,
    ExperimentFile,
    FourierMode,
    GapToothConfig,
    InitialCondition,
    ResolutionOptions,
    SimulateOptions,
    SpectrumOptions,
)

TBC_FAMILIES = ("dirichlet", "mixed", "neumann", "two-point")


@contextmanager
def _as_validation_error():
    """Report domain validation failures as field errors."""
    try:
        yield
    except ConfigurationError as e:
        raise ValidationError({e.field: [e.reason]})


def _odd(value):
    if value % 2 == 0:
        raise ValidationError("Must be odd.")


class StrictSchema(Schema):
    """Base schema rejecting unknown keys."""

    class Meta:
        """Meta attributes for the schema."""

        unknown = RAISE


#
# Experiment
#
class GeometrySchema(StrictSchema):
    """Tooth layout."""

    m = fields.Integer(required=True, strict=True, validate=validate.Range(min=MIN_TEETH))
    n = fields.Integer(
        required=True,
        strict=True,
        validate=[validate.Range(min=MIN_POINTS), _odd],
    )
    r = fields.Float(
        required=True,
        validate=validate.Range(min=0, max=0.5, min_inclusive=False, max_inclusive=False),
    )
    length = fields.Float(validate=validate.Range(min=0, min_inclusive=False))

    @post_load
    def make_geometry(self, data, **kwargs):
        """Build the geometry."""
        with _as_validation_error():
            return ToothGeometry(**data)


class PdeSchema(StrictSchema):
    """Micro PDE; the fields required depend on ``kind``."""

    kind = fields.String(required=True, validate=validate.OneOf(list(PDES)))
    diffusivity = fields.Float(validate=validate.Range(min=0, min_inclusive=False))
    nu = fields.Float(validate=validate.Range(min=0, min_inclusive=False))
    c = fields.Float()

    _allowed = {
        Diffusion.name: {"diffusivity"},
        Burgers.name: {"nu"},
        AdvectionDiffusion.name: {"c", "diffusivity"},
    }
    _required = {Burgers.name: {"nu"}, AdvectionDiffusion.name: {"c"}}

    @validates_schema
    def validate_kind_fields(self, data, **kwargs):
        """Check the parameters belong to the chosen PDE."""
        kind = data.get("kind")
        if kind not in self._allowed:
            return
        given = set(data) - {"kind"}
        errors = {
            name: ["Not a parameter of this PDE."]
            for name in sorted(given - self._allowed[kind])
        }
        for name in sorted(self._required.get(kind, set()) - given):
            errors[name] = ["Missing data for required field."]
        if errors:
            raise ValidationError(errors)

    @pre_dump
    def from_pde(self, pde, **kwargs):
        """Flatten a PDE object."""
        if isinstance(pde, dict):
            return pde
        data = {"kind": pde.name}
        if isinstance(pde, Burgers):
            data["nu"] = pde.nu
        elif isinstance(pde, AdvectionDiffusion):
            data.update(c=pde.c, diffusivity=pde.diffusivity)
        else:
            data["diffusivity"] = pde.diffusivity
        return data

    @post_load
    def make_pde(self, data, **kwargs):
        """Build the PDE."""
        data = dict(data)
        cls = PDES[data.pop("kind")]
        with _as_validation_error():
            return cls(**data)


class TbcSchema(StrictSchema):
    """Tooth boundary condition."""

    family = fields.String(required=True, validate=validate.OneOf(TBC_FAMILIES))
    order = fields.Integer(load_default=4, strict=True, validate=validate.OneOf(ORDERS))
    a = fields.Float()
    b = fields.Float()
    beta = fields.Float()

    @validates_schema
    def validate_family_fields(self, data, **kwargs):
        """Check coefficients against the family."""
        family = data.get("family")
        allowed = {
            "dirichlet": set(),
            "neumann": set(),
            "mixed": {"a", "b"},
            "two-point": {"beta"},
        }.get(family)
        if allowed is None:
            return
        given = set(data) - {"family", "order"}
        errors = {
            name: ["Not a parameter of this boundary condition."]
            for name in sorted(given - allowed)
        }
        for name in sorted(allowed - given):
            errors[name] = ["Missing data for required field."]
        if family == "mixed" and data.get("a") == 0 and data.get("b") == 0:
            errors["b"] = ["a and b cannot both be 0."]
        if errors:
            raise ValidationError(errors)

    @pre_dump
    def from_spec(self, spec, **kwargs):
        """Flatten a TBC spec."""
        if isinstance(spec, dict):
            return spec
        family = spec.family
        data = {"family": family.name, "order": spec.order}
        if isinstance(family, Mixed):
            data.update(a=family.a, b=family.b)
        elif isinstance(family, TwoPoint):
            data["beta"] = family.beta
        return data

    @post_load
    def make_spec(self, data, **kwargs):
        """Build the TBC spec."""
        family = data["family"]
        with _as_validation_error():
            if family == "dirichlet":
                kind = Dirichlet()
            elif family == "neumann":
                kind = Mixed.neumann()
            elif family == "mixed":
                kind = Mixed(data["a"], data["b"])
            else:
                kind = TwoPoint(data["beta"])
            return TbcSpec(kind, data["order"])


class FourierModeSchema(StrictSchema):
    """Fourier term of an initial condition."""

    k = fields.Integer(required=True, strict=True)
    amp = fields.Float(load_default=1.0)
    phase = fields.Float(load_default=0.0)

    @post_load
    def make_mode(self, data, **kwargs):
        """Build the mode."""
        return FourierMode(**data)


class InitialConditionSchema(StrictSchema):
    """Initial condition."""

    kind = fields.String(
        load_default="fourier", validate=validate.OneOf(INITIAL_CONDITION_KINDS)
    )
    modes = fields.List(
        fields.Nested(FourierModeSchema), required=True, validate=validate.Length(min=1)
    )

    @post_load
    def make_initial_condition(self, data, **kwargs):
        """Build the initial condition."""
        return InitialCondition(modes=tuple(data["modes"]), kind=data["kind"])


class ExperimentSchema(StrictSchema):
    """A gap-tooth configuration."""

    geometry = fields.Nested(GeometrySchema, attribute="geom", required=True)
    pde = fields.Nested(PdeSchema, load_default=None)
    tbc = fields.Nested(TbcSchema, load_default=None)
    dt = fields.Float(
        allow_none=True, validate=validate.Range(min=0, min_inclusive=False)
    )
    t_end = fields.Float(validate=validate.Range(min=0, min_inclusive=False))
    initial_condition = fields.Nested(InitialConditionSchema, load_default=None)
    snapshot_stride = fields.Integer(
        allow_none=True, strict=True, validate=validate.Range(min=1)
    )

    @post_load
    def make_config(self, data, **kwargs):
        """Build the configuration; omitted parts take their defaults."""
        data = {k: v for k, v in data.items() if v is not None}
        with _as_validation_error():
            return GapToothConfig(**data)


#
# Studies
#
class SimulateSchema(StrictSchema):
    """Simulation options."""

    with_gaps = fields.Boolean(load_default=False)
    fit_start = fields.Float(allow_none=True, validate=validate.Range(min=0))

    @post_load
    def make_options(self, data, **kwargs):
        """Build options."""
        return SimulateOptions(**data)


class SpectrumSchema(StrictSchema):
    """Spectrum options."""

    m_list = fields.List(
        fields.Integer(strict=True, validate=validate.Range(min=MIN_TEETH)),
        load_default=list,
    )
    dt = fields.Float(allow_none=True, validate=validate.Range(min=0, min_inclusive=False))

    @post_load
    def make_options(self, data, **kwargs):
        """Build options."""
        return SpectrumOptions(m_list=tuple(data["m_list"]), dt=data.get("dt"))


class ConvergenceSchema(StrictSchema):
    """Convergence study options."""

    m_list = fields.List(
        fields.Integer(strict=True, validate=validate.Range(min=MIN_TEETH)),
        load_default=list,
    )

    @validates_schema
    def validate_doubling(self, data, **kwargs):
        """Each resolution doubles the previous one."""
        m_list = data.get("m_list") or []
        if any(b != 2 * a for a, b in zip(m_list, m_list[1:])):
            raise ValidationError({"m_list": ["Must be a doubling sequence."]})

    @post_load
    def make_options(self, data, **kwargs):
        """Build options."""
        return ConvergenceOptions(m_list=tuple(data["m_list"]))


class ResolutionSchema(StrictSchema):
    """Micro resolution study options."""

    n_list = fields.List(
        fields.Integer(strict=True, validate=[validate.Range(min=MIN_POINTS), _odd]),
        load_default=list,
    )

    @post_load
    def make_options(self, data, **kwargs):
        """Build options."""
        return ResolutionOptions(n_list=tuple(data["n_list"]))


class ExperimentFileSchema(StrictSchema):
    """Experiment file."""

    name = fields.String(required=True, validate=validate.Length(min=1))
    description = fields.String(load_default="")
    experiment = fields.Nested(ExperimentSchema, required=True)
    simulate = fields.Nested(SimulateSchema, load_default=None)
    spectrum = fields.Nested(SpectrumSchema, load_default=None)
    convergence = fields.Nested(ConvergenceSchema, load_default=None)
    resolution = fields.Nested(ResolutionSchema, load_default=None)

    @post_load
    def make_file(self, data, **kwargs):
        """Build the experiment file."""
        data = {k: v for k, v in data.items() if v is not None}
        return ExperimentFile(**data)
