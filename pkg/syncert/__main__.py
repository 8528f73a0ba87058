"""Main entrypoint to the syncert CLI.

Makes the syncert CLI executable via `python -m syncert`.

Exit codes: 0 synchronizes, 3 does not synchronize, 4 inconclusive, 1 unreadable or
malformed input, 2 semantically invalid input.
"""

import contextlib
import sys
from pathlib import Path
from typing import TypeVar

import click
import numpy as np
from loguru import logger
from pydantic import ValidationError
from ruamel.yaml.error import YAMLError

from syncert import entrypoint
from syncert.analysis.admittance import random_general_network, random_lc_network
from syncert.analysis.errors import NonFiniteStateError, SyncertError
from syncert.analysis.network import random_array
from syncert.configs.jobs import CertifyJobConfig, CertifyMethod, SimulateJobConfig, SweepJobConfig
from syncert.configs.jobs.common import JobConfig
from syncert.configs.jobs.simulate import load_initial_state
from syncert.configs.networks import (
    GeneralNetworkFile,
    LcNetworkFile,
    MechanicalNetworkFile,
    load_network_file,
)
from syncert.constants import SYNCERT_LOG_LEVEL
from syncert.jobs.common import ExitCode
from syncert.paths import network_path_from_argument, resolve_network_path, strip_path_prefix
from syncert.schemas.reports import Report

ConfigType = TypeVar("ConfigType", bound=JobConfig)


def parse_config_option(config_cls: type[ConfigType], config: str) -> ConfigType:
    """Parse the config option string from the CLI.

    If it corresponds to a path that exists, attempt to load the config from YAML file.
    If not, attempt to parse it as a JSON string.
    """
    if Path(config).exists():
        return config_cls.from_yaml_file(config)
    else:
        return config_cls.model_validate_json(config)


@contextlib.contextmanager
def exit_on_error():
    """Translate input failures into the documented exit codes."""
    try:
        yield
    except ValidationError as e:
        click.echo(f"error: malformed input\n{e}", err=True)
        sys.exit(int(ExitCode.PARSE_ERROR))
    except NonFiniteStateError as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(int(ExitCode.PARSE_ERROR))
    except SyncertError as e:
        click.echo(f"error: invalid input: {e}", err=True)
        sys.exit(int(ExitCode.VALIDATION_ERROR))
    except (YAMLError, OSError) as e:
        click.echo(f"error: cannot read input: {e}", err=True)
        sys.exit(int(ExitCode.PARSE_ERROR))


def job_config(
    config_cls: type[ConfigType],
    ctx: click.Context,
    network: str | None,
    config: str | None,
    **fields,
) -> ConfigType:
    """Build a job config from `--config`, or from the network argument and flags."""
    if (network is None) == (config is None):
        raise click.UsageError("Pass exactly one of a network file or --config.")
    if config is not None:
        job = parse_config_option(config_cls, config)
    else:
        path = network_path_from_argument(network)
        name = Path(strip_path_prefix(path)).stem
        given = {k: v for k, v in fields.items() if v is not None}
        job = config_cls(name=name, network=path, **given)
    if ctx.obj["tol"] is not None:
        job.tolerances = job.tolerances.with_rank_floor(ctx.obj["tol"])
    return job


def emit(ctx: click.Context, report: Report) -> None:
    click.echo(report.to_machine() if ctx.obj["format"] == "machine" else report.to_text())


@click.group(name="syncert", help="Certify and simulate synchronization of coupled oscillators.")
@click.option(
    "--tol",
    type=click.FloatRange(min=0, min_open=True),
    default=None,
    help="Relative floor of the singular value cut used for null spaces.",
)
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["human", "machine"]),
    default="human",
    help="Report format on stdout.",
)
@click.pass_context
def cli(ctx: click.Context, tol: float | None, output_format: str) -> None:
    logger.remove()
    logger.add(sys.stderr, level=SYNCERT_LOG_LEVEL)
    ctx.ensure_object(dict)
    ctx.obj["tol"] = tol
    ctx.obj["format"] = output_format


@cli.command("certify", help="Decide whether a network synchronizes.")
@click.argument("network", required=False)
@click.option("--config", type=str, help="Certify job config as a YAML file or JSON string.")
@click.option(
    "--method",
    type=click.Choice([m.value for m in CertifyMethod]),
    default=None,
    help="Decision procedure; defaults to all of them.",
)
@click.option("--output", type=click.Path(dir_okay=False), help="Write the machine report here.")
@click.pass_context
def certify_command(
    ctx: click.Context,
    network: str | None,
    config: str | None,
    method: str | None,
    output: str | None,
) -> None:
    with exit_on_error():
        job = job_config(CertifyJobConfig, ctx, network, config, method=method, output_path=output)
        result = entrypoint.Certifier().certify(job)
    emit(ctx, result.report)
    sys.exit(int(result.exit_code))


@cli.command("simulate", help="Integrate the free response and write a trajectory CSV.")
@click.argument("network", required=False)
@click.option("--config", type=str, help="Simulate job config as a YAML file or JSON string.")
@click.option("--x0", "x0_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--seed-certificate", is_flag=True, default=False)
@click.option("--seed", type=int, default=None, help="Seed of the random initial state.")
@click.option("--dt", type=click.FloatRange(min=0, min_open=True), default=None)
@click.option("--horizon", type=click.FloatRange(min=0, min_open=True), default=None)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def simulate_command(
    ctx: click.Context,
    network: str | None,
    config: str | None,
    x0_path: str | None,
    seed_certificate: bool,
    seed: int | None,
    dt: float | None,
    horizon: float | None,
    out: str | None,
) -> None:
    with exit_on_error():
        x0 = load_initial_state(x0_path) if x0_path is not None else None
        job = job_config(
            SimulateJobConfig,
            ctx,
            network,
            config,
            x0=x0,
            seed_certificate=seed_certificate or None,
            seed=seed,
            dt=dt,
            horizon=horizon,
            output_path=out,
        )
        result = entrypoint.Certifier().simulate(job)
    last = result.table.iloc[-1]
    click.echo(f"trajectory: {result.output_path} ({len(result.table)} rows)")
    click.echo(f"final sync_error: {last['sync_error']:.17g}")
    click.echo(f"final energy: {last['energy']:.17g}")


@cli.command("sweep", help="Tabulate lambda_2(Y(jw)) over frequency and write a CSV.")
@click.argument("network", required=False)
@click.option("--config", type=str, help="Sweep job config as a YAML file or JSON string.")
@click.option("--wmin", type=click.FloatRange(min=0, min_open=True), default=None)
@click.option("--wmax", type=click.FloatRange(min=0, min_open=True), default=None)
@click.option("--points", type=click.IntRange(min=2), default=None)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def sweep_command(
    ctx: click.Context,
    network: str | None,
    config: str | None,
    wmin: float | None,
    wmax: float | None,
    points: int | None,
    out: str | None,
) -> None:
    with exit_on_error():
        job = job_config(
            SweepJobConfig,
            ctx,
            network,
            config,
            wmin=wmin,
            wmax=wmax,
            points=points,
            output_path=out,
        )
        result = entrypoint.Certifier().sweep(job)
    click.echo(f"sweep: {result.output_path} ({len(result.table)} rows)")
    emit(ctx, result.report)
    sys.exit(int(result.exit_code))


@cli.command("validate", help="Check a network file without analysing it.")
@click.argument("network")
def validate_command(network: str) -> None:
    with exit_on_error():
        path = resolve_network_path(network_path_from_argument(network))
        network_file = load_network_file(path)
        network_file.to_domain()
    edges = len(network_file.edges)
    click.echo(f"{network}: valid {network_file.kind} network, q={network_file.q}, {edges} edge(s)")


@cli.command("generate", help="Write a random network file.")
@click.option(
    "--kind", type=click.Choice(["mechanical", "lc", "general"]), default="mechanical"
)
@click.option("--q", "q", type=click.IntRange(min=1), required=True)
@click.option("--density", type=click.FloatRange(min=0, max=1), default=0.5)
@click.option("--seed", type=int, default=0)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def generate_command(kind: str, q: int, density: float, seed: int, out: str | None) -> None:
    rng = np.random.default_rng(seed)
    match kind:
        case "mechanical":
            network_file = MechanicalNetworkFile.from_array(
                random_array(rng, q, density, integer_weights=True)
            )
        case "lc":
            network_file = LcNetworkFile.from_network(random_lc_network(rng, q, density))
        case "general":
            network_file = GeneralNetworkFile.from_network(random_general_network(rng, q, density))
    text = network_file.model_dump_json(indent=2)
    if out is None:
        click.echo(text)
    else:
        Path(out).write_text(text + "\n")
        logger.info(f"Stored {kind} network with q={q} into {out}")


if __name__ == "__main__":
    cli()
