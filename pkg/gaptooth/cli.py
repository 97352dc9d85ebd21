# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Gaptooth contributors.
#
# Gaptooth is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Command line interface."""

import json
import os
from copy import deepcopy
from functools import wraps

import click
from flask import current_app
from marshmallow import ValidationError

from .app import create_app
from .errors import (
    ConfigurationError,
    DivergenceError,
    PresetNotFoundError,
    SingularTbcError,
    validation_error_to_list_errors,
)
from .experiments import dump_experiment, load_experiment, preset_document, preset_names
from .proxies import current_coupling_service, current_spectrum_service
from .serializers import CSVSerializer, format_table
from .services.spectra import GROUPS
from .stencil import (
    Dirichlet,
    Mixed,
    Side,
    TbcSpec,
    TwoPoint,
    deriv_weights,
    interp_weights,
    penultimate_ratio,
    tbc_weights,
)

STENCIL_KINDS = ("value", "derivative", "dirichlet", "mixed", "two-point")


class ConfigError(click.ClickException):
    """Invalid experiment or parameters."""

    exit_code = 2


class DivergenceAbort(click.ClickException):
    """Numerical divergence."""

    exit_code = 3


def handle_errors(f):
    """Map domain errors onto exit codes."""

    @wraps(f)
    def inner(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except ValidationError as e:
            lines = [
                f"{err['field']}: {' '.join(str(m) for m in err['messages'])}"
                for err in validation_error_to_list_errors(e)
            ]
            current_app.logger.error("Invalid experiment: %s", "; ".join(lines))
            raise ConfigError("Invalid experiment:\n  " + "\n  ".join(lines))
        except (ConfigurationError, PresetNotFoundError, SingularTbcError) as e:
            current_app.logger.error(e.description)
            raise ConfigError(e.description)
        except DivergenceError as e:
            current_app.logger.error(e.description)
            raise DivergenceAbort(e.description)

    return inner


def _set_path(document, path, value):
    keys = path.split(".")
    node = document
    for key in keys[:-1]:
        child = node.get(key)
        if not isinstance(child, dict):
            child = node[key] = {}
        node = child
    node[keys[-1]] = value


def apply_overrides(document, overrides):
    """Set ``key=value`` pairs (dotted keys, JSON values) on a raw document."""
    document = deepcopy(document)
    for item in overrides:
        if "=" not in item:
            raise click.BadParameter(
                f"'{item}' is not of the form key=value.", param_hint="--override"
            )
        key, raw = item.split("=", 1)
        try:
            value = json.loads(raw)
        except json.JSONDecodeError:
            value = raw
        _set_path(document, key.strip(), value)
    return document


def load_document(config_path, preset, overrides=()):
    """Raw experiment document from a file or a preset, with overrides."""
    if bool(config_path) == bool(preset):
        raise click.UsageError("Give exactly one of --config or --preset.")
    if config_path:
        with open(config_path, encoding="utf-8") as fp:
            try:
                document = json.load(fp)
            except json.JSONDecodeError as e:
                raise ConfigError(f"{config_path} is not valid JSON: {e}")
    else:
        document = preset_document(preset)
    return apply_overrides(document, overrides)


def load(config_path, preset, overrides=()):
    """Validated :class:`ExperimentFile`."""
    document = load_document(config_path, preset, overrides)
    return load_experiment(
        document, default_length=current_app.config["GAPTOOTH_DOMAIN_LENGTH"]
    )


def experiment_options(f):
    """Options shared by the experiment commands."""
    options = [
        click.option(
            "--config",
            "config_path",
            type=click.Path(exists=True, dir_okay=False),
            help="Experiment file (JSON).",
        ),
        click.option("--preset", help="Bundled preset name."),
        click.option(
            "--out",
            "out_dir",
            type=click.Path(file_okay=False),
            default=".",
            show_default=True,
            help="Output directory.",
        ),
        click.option(
            "--override",
            "overrides",
            multiple=True,
            help="Dotted key=JSON value applied to the experiment file.",
        ),
        click.option("--dt", type=float, default=None, help="Time step."),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def parallel_option(f):
    return click.option(
        "--parallel",
        type=click.IntRange(min=1),
        default=None,
        help="Threads used to assemble the linearised map.",
    )(f)


def _serializer():
    return CSVSerializer(digits=current_app.config["GAPTOOTH_CSV_DIGITS"])


def _output(out_dir, filename):
    os.makedirs(out_dir, exist_ok=True)
    return os.path.join(out_dir, filename)


@click.group()
@click.pass_context
def cli(ctx):
    """Gap-tooth multiscale laboratory."""
    app = create_app()
    ctx.with_resource(app.app_context())
    ctx.obj = app


@cli.command()
@experiment_options
@click.option("--with-gaps", is_flag=True, help="Add gap-interpolant rows.")
@handle_errors
def simulate(config_path, preset, out_dir, overrides, dt, with_gaps):
    """Run a simulation and write its trajectory."""
    experiment = load(config_path, preset, overrides)
    config = experiment.experiment
    if dt is not None:
        config = config.replace(dt=dt)
    with_gaps = with_gaps or experiment.simulate.with_gaps

    trajectory = current_coupling_service.run(config, with_gaps=with_gaps)
    serializer = _serializer()
    path = _output(out_dir, f"{experiment.name}_trajectory.csv")
    serializer.write_object(path, trajectory)

    summary = trajectory.summary(t_min=experiment.simulate.fit_start)
    serializer.write(
        _output(out_dir, f"{experiment.name}_summary.csv"),
        ("key", "value"),
        summary.items(),
    )
    click.echo(format_table(("key", "value"), summary.items()))
    click.echo(f"Trajectory written to {path}")


@cli.command()
@experiment_options
@parallel_option
@handle_errors
def spectrum(config_path, preset, out_dir, overrides, dt, parallel):
    """Compute growth rates for every m of the experiment."""
    experiment = load(config_path, preset, overrides)
    config = experiment.experiment
    m_list = experiment.spectrum.m_list or (config.geom.m,)
    dt = dt if dt is not None else experiment.spectrum.dt

    table = current_spectrum_service.spectrum_table(
        config, m_list, dt=dt, parallel=parallel
    )
    serializer = _serializer()
    for report in table:
        serializer.write_object(
            _output(out_dir, f"{experiment.name}_spectrum_m{report.m}.csv"), report
        )
    path = _output(out_dir, f"{experiment.name}_table.csv")
    serializer.write_object(path, table)
    click.echo(format_table(table.header, table.rows()))
    click.echo(f"Table written to {path}")


@cli.command()
@experiment_options
@parallel_option
@handle_errors
def convergence(config_path, preset, out_dir, overrides, dt, parallel):
    """Observed orders of the macro growth rates as m doubles."""
    experiment = load(config_path, preset, overrides)
    m_list = experiment.convergence.m_list
    if not m_list:
        raise ConfigError("The experiment has no convergence.m_list.")

    table = current_spectrum_service.convergence_study(
        experiment.experiment, m_list, dt=dt, parallel=parallel
    )
    path = _output(out_dir, f"{experiment.name}_convergence.csv")
    _serializer().write_object(path, table)
    click.echo(format_table(table.header, table.rows()))
    for k in range(1, len(GROUPS)):
        orders = ", ".join(f"{o:.3f}" for o in table.observed_orders(k))
        click.echo(f"k={k}: observed orders {orders or 'n/a'}")
    click.echo(f"Convergence table written to {path}")


@cli.command()
@experiment_options
@parallel_option
@handle_errors
def resolution(config_path, preset, out_dir, overrides, dt, parallel):
    """Macro growth rates as the micro grid is refined."""
    experiment = load(config_path, preset, overrides)
    n_list = experiment.resolution.n_list
    if not n_list:
        raise ConfigError("The experiment has no resolution.n_list.")

    table = current_spectrum_service.micro_resolution_study(
        experiment.experiment, n_list, dt=dt, parallel=parallel
    )
    serializer = _serializer()
    path = _output(out_dir, f"{experiment.name}_resolution.csv")
    serializer.write_object(path, table)

    header = ("group", "richardson_ratio", "relative_variation")
    rows = []
    for name, ratios, variation in table.diagnostics():
        for ratio in ratios or [None]:
            rows.append((name, ratio, variation))
    serializer.write(_output(out_dir, f"{experiment.name}_richardson.csv"), header, rows)
    click.echo(format_table(table.header, table.rows()))
    click.echo(format_table(header, rows))
    click.echo(f"Resolution table written to {path}")


@cli.command("stencil-dump")
@click.option("--r", "r", type=float, required=True, help="Gap-to-tooth ratio.")
@click.option(
    "--order", type=click.Choice(["2", "4", "6", "8"]), default="4", show_default=True
)
@click.option(
    "--kind", type=click.Choice(STENCIL_KINDS), default="value", show_default=True
)
@click.option(
    "--side", type=click.Choice(["left", "right"]), default="right", show_default=True
)
@click.option("--a", type=float, default=1.0, show_default=True, help="Mixed a.")
@click.option("--b", type=float, default=0.0, show_default=True, help="Mixed b.")
@click.option("--beta", type=float, default=1.0, show_default=True, help="Two-point beta.")
@click.option(
    "--n", type=int, default=11, show_default=True, help="Micro points (two-point r')."
)
@click.option("--H", "H", type=float, default=1.0, show_default=True, help="Macro spacing.")
@click.option("--out", "out_dir", type=click.Path(file_okay=False), default=None)
@handle_errors
def stencil_dump(r, order, kind, side, a, b, beta, n, H, out_dir):
    """Print the macro weights of a tooth edge as CSV (offset, weight)."""
    p = int(order) // 2
    side = Side.LEFT if side == "left" else Side.RIGHT
    if kind == "value":
        stencil = interp_weights(r, p, side)
        offsets, weights = stencil.offsets, stencil.weights
    elif kind == "derivative":
        if not H > 0:
            raise ConfigurationError("H", H, "macro spacing must be positive")
        stencil = deriv_weights(r, p, side)
        offsets, weights = stencil.offsets, stencil.weights / H
    else:
        family = {
            "dirichlet": lambda: Dirichlet(),
            "mixed": lambda: Mixed(a, b),
            "two-point": lambda: TwoPoint(beta),
        }[kind]()
        edge = tbc_weights(
            TbcSpec(family, int(order)), r, penultimate_ratio(r, n), H, side
        )
        offsets, weights = edge.offsets, edge.weights

    serializer = _serializer()
    text = serializer.serialize_rows(("offset", "weight"), zip(offsets, weights))
    if out_dir is None:
        click.echo(text, nl=False)
    else:
        path = _output(out_dir, f"stencil_{kind}_{side.name.lower()}_order{order}.csv")
        with open(path, "w", encoding="utf-8", newline="") as fp:
            fp.write(text)
        click.echo(f"Stencil written to {path}")


@cli.group()
def presets():
    """Bundled experiment presets."""


@presets.command("list")
def presets_list():
    """List preset names and descriptions."""
    for name in preset_names():
        click.echo(f"{name}: {preset_document(name).get('description', '')}")


@presets.command("show")
@click.argument("name")
@handle_errors
def presets_show(name):
    """Validate a preset and print it re-serialised."""
    experiment = load_experiment(
        preset_document(name),
        default_length=current_app.config["GAPTOOTH_DOMAIN_LENGTH"],
    )
    click.echo(json.dumps(dump_experiment(experiment), indent=2, sort_keys=True))
