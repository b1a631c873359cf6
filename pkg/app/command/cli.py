"""Command-line front end: generate, run, eval and demo.

Exit codes: 0 success, 1 usage error, 2 data error, 3 internal invariant violation.
"""

import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, List, Optional

import click
import pandas as pd
import typer
from dependency_injector.wiring import Provide, inject
from pydantic import ValidationError

from app.benchmark.generator import DEFAULT_EDGE_PROB, InstanceSpec
from app.config.experiment_config import ExperimentConfig
from app.container import Container
from app.interactor.baselines import greedy_min_etc
from app.interactor.fitness import evaluate
from app.model.errors import (
    ConfigError,
    DataFormatError,
    InvariantViolationError,
    SchedulingError,
)
from app.model.schedule import FitnessReport, GaResult
from app.model.workload import WorkloadInstance, task_label
from app.schema.report import FitnessReportResponse, GaResultResponse
from app.usecase.experiment import ExperimentUsecase

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_INVARIANT = 3

cli = typer.Typer(
    help="GA scheduling of dependent tasks on heterogeneous clouds.",
    no_args_is_help=True,
    add_completion=False,
)


@inject
def _experiment_usecase(
    usecase: ExperimentUsecase = Provide[Container.experiment_usecase],
) -> ExperimentUsecase:
    return usecase


@contextmanager
def _exit_codes() -> Iterator[None]:
    try:
        yield
    except ConfigError as e:
        typer.echo(f"usage error: {e}", err=True)
        raise typer.Exit(EXIT_USAGE) from e
    except InvariantViolationError as e:
        typer.echo(f"invariant violation: {e}", err=True)
        raise typer.Exit(EXIT_INVARIANT) from e
    except (DataFormatError, SchedulingError, ValidationError, OSError) as e:
        typer.echo(f"data error: {e}", err=True)
        raise typer.Exit(EXIT_DATA) from e


def _format_report(instance: WorkloadInstance, report: FitnessReport) -> str:
    frame = pd.DataFrame(
        {
            "task": [task_label(t) for t in range(instance.n)],
            "cloud": report.genes,
            "waiting": report.waiting,
            "completion": report.completion,
        }
    )
    loads = " ".join(f"{load:g}" for load in report.cloud_load)
    return "\n".join(
        [
            frame.to_string(index=False),
            f"makespan_sum: {report.makespan_sum:g}",
            f"makespan_max: {report.makespan_max:g}",
            f"cloud_load: {loads}",
        ]
    )


def _format_result(result: GaResult) -> str:
    genes = " ".join(str(int(g)) for g in result.best_genes)
    return "\n".join(
        [
            f"best genes: {genes}",
            f"best makespan_sum: {result.best_fitness:g}",
            f"best makespan_max: {result.best_makespan_max:g}",
            f"generations: {result.generations}",
            f"evaluations: {result.evaluations}",
        ]
    )


def _optional_list(values: Optional[List]) -> Optional[List]:
    return list(values) if values else None


def _load_config(path: Optional[Path]) -> ExperimentConfig:
    return ExperimentConfig.from_file(path) if path is not None else ExperimentConfig()


@cli.command()
def generate(
    class_code: str = typer.Option(..., "--class", help="Instance class, e.g. u_c_hihi"),
    size: str = typer.Option(ExperimentConfig.DEFAULT_SIZE, help="<tasks>x<clouds>"),
    apps: int = typer.Option(ExperimentConfig.DEFAULT_APPS, help="Number of applications"),
    seed: int = typer.Option(ExperimentConfig.DEFAULT_SEED),
    edge_prob: float = typer.Option(DEFAULT_EDGE_PROB, help="Edge probability inside an application"),
    out_dir: Path = typer.Option(Path("instances"), help="Directory for the generated files"),
):
    """Generate ETC, dependency and manifest files for one benchmark instance."""
    with _exit_codes():
        try:
            spec = InstanceSpec.from_code(class_code, size, apps, seed=seed, edge_prob=edge_prob)
        except ValidationError as e:
            raise ConfigError(str(e)) from e
        for path in _experiment_usecase().generate(spec, out_dir):
            typer.echo(str(path))


@cli.command("run")
def run_experiments(
    config: Optional[Path] = typer.Option(None, "--config", help="key=value settings file"),
    classes: Optional[List[str]] = typer.Option(None, "--class", help="Instance class (repeatable)"),
    sizes: Optional[List[str]] = typer.Option(None, "--size", help="Dataset size (repeatable)"),
    apps: Optional[List[int]] = typer.Option(None, "--apps", help="Application count (repeatable)"),
    seeds: Optional[List[int]] = typer.Option(None, "--seed", help="Run seed (repeatable)"),
    algos: Optional[List[str]] = typer.Option(
        None, "--algo", help="ga, random, greedy or fixed (repeatable)"
    ),
    baselines: bool = typer.Option(False, "--baselines", help="Also run random search and greedy"),
    population_size: Optional[int] = typer.Option(None),
    generations: Optional[int] = typer.Option(None),
    crossover_prob: Optional[float] = typer.Option(None),
    mutation_prob: Optional[float] = typer.Option(None),
    elite_count: Optional[int] = typer.Option(None),
    budget: Optional[int] = typer.Option(None, help="Random-search evaluations"),
    edge_prob: Optional[float] = typer.Option(None),
    instance_seed: Optional[int] = typer.Option(None),
    instances: Optional[List[str]] = typer.Option(
        None, "--instance", help="Instance file prefix (repeatable)"
    ),
    schedule: Optional[str] = typer.Option(None, help="Schedule file for the fixed algorithm"),
    demo: bool = typer.Option(False, "--demo", help="Use the built-in demo instance"),
    full: bool = typer.Option(False, "--full", help="Use the 14-task demo variant"),
    output: Optional[str] = typer.Option(None, help="CSV output path"),
    jobs: Optional[int] = typer.Option(None, help="Parallel (instance, seed) runs"),
    workers: Optional[int] = typer.Option(None, help="Threads for fitness evaluation"),
):
    """Run the GA and baselines over benchmark instances and write a CSV."""
    with _exit_codes():
        settings = _load_config(config).with_overrides(
            classes=_optional_list(classes),
            sizes=_optional_list(sizes),
            apps=_optional_list(apps),
            seeds=_optional_list(seeds),
            algos=_optional_list(algos),
            population_size=population_size,
            generations=generations,
            crossover_prob=crossover_prob,
            mutation_prob=mutation_prob,
            elite_count=elite_count,
            budget=budget,
            edge_prob=edge_prob,
            instance_seed=instance_seed,
            instances=_optional_list(instances),
            schedule=schedule,
            demo=True if demo else None,
            full=True if full else None,
            output=output,
            jobs=jobs,
            workers=workers,
        )
        if baselines:
            extra = [ExperimentConfig.RANDOM, ExperimentConfig.GREEDY]
            settings = settings.with_overrides(
                algos=list(dict.fromkeys([*settings.algos, *extra]))
            )

        usecase = _experiment_usecase()
        rows = usecase.run(settings)
        typer.echo(usecase.summarize(rows))
        typer.echo(f"wrote {len(rows)} rows to {settings.output}")


@cli.command("eval")
def eval_schedule(
    instance: Optional[str] = typer.Option(None, "--instance", help="Instance file prefix"),
    schedule: Optional[Path] = typer.Option(None, help="Schedule file (default: all cloud 0)"),
    demo: bool = typer.Option(False, "--demo", help="Use the built-in demo instance"),
    full: bool = typer.Option(False, "--full", help="Use the 14-task demo variant"),
    as_json: bool = typer.Option(False, "--json", help="Print camelCase JSON"),
):
    """Evaluate one schedule: waiting and completion per task, makespans, cloud loads."""
    with _exit_codes():
        if (instance is None) == (not demo):
            raise ConfigError("Pass exactly one of --instance or --demo")
        usecase = _experiment_usecase()
        workload = usecase.load(Path(instance) if instance else None, full)
        report = usecase.evaluate(workload, schedule)
        if as_json:
            typer.echo(FitnessReportResponse.from_report(report).model_dump_json(by_alias=True, indent=2))
        else:
            typer.echo(_format_report(workload, report))


@cli.command()
def demo(
    config: Optional[Path] = typer.Option(None, "--config", help="key=value settings file"),
    full: bool = typer.Option(False, "--full", help="Use the 14-task variant"),
    seed: Optional[int] = typer.Option(None),
    population_size: Optional[int] = typer.Option(None),
    generations: Optional[int] = typer.Option(None),
    save_schedule: Optional[Path] = typer.Option(
        None, "--save-schedule", help="Write the GA's best schedule for later eval --schedule"
    ),
    as_json: bool = typer.Option(False, "--json", help="Print camelCase JSON"),
):
    """Run the worked example: fixed schedule, greedy baseline and the GA."""
    with _exit_codes():
        settings = _load_config(config).with_overrides(
            seeds=[seed] if seed is not None else None,
            population_size=population_size,
            generations=generations,
        )
        usecase = _experiment_usecase()
        workload = usecase.load(None, full)
        result = usecase.demo(settings, full)
        if save_schedule is not None:
            usecase.save_schedule(save_schedule, result.best_genes)
        if as_json:
            typer.echo(GaResultResponse.from_result(result).model_dump_json(by_alias=True, indent=2))
            return

        typer.echo("All tasks on cloud 0:")
        typer.echo(_format_report(workload, usecase.evaluate(workload)))
        typer.echo("\nGreedy (fastest cloud per task):")
        typer.echo(_format_report(workload, evaluate(workload, greedy_min_etc(workload))))
        typer.echo("\nGenetic algorithm:")
        typer.echo(_format_result(result))


def main() -> None:
    """Configure logging, wire the container and dispatch the command line."""
    container = Container()
    container.app_config().configure_logging()
    container.wire(modules=[__name__])
    try:
        code = cli(standalone_mode=False)
    except click.UsageError as e:
        e.show()
        sys.exit(EXIT_USAGE)
    sys.exit(code or EXIT_OK)
