import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, List, Optional

import numpy as np
import pandas as pd

from app.benchmark.demo import demo_instance
from app.benchmark.generator import TABLE_CLASSES, InstanceSpec, generate_instance
from app.config.benchmark_config import HeterogeneityConfig
from app.config.experiment_config import ExperimentConfig
from app.interactor.baselines import FixedScheduler, GreedyScheduler, RandomSearchScheduler
from app.interactor.fitness import evaluate
from app.interactor.genetic import GeneticScheduler, evolve
from app.model.errors import InvariantViolationError
from app.model.experiment import ExperimentRow
from app.model.schedule import FitnessReport, GaResult
from app.model.workload import Chromosome, WorkloadInstance
from app.repository.instance import InstanceRepository
from app.repository.result import ResultRepository
from app.usecase.experiment import ExperimentUsecase
from app.usecase.scheduler import SchedulerUsecase

logger = logging.getLogger(__name__)

DEMO_CLASS = "demo"


@dataclass(frozen=True)
class InstanceSource:
    class_code: str
    instance: WorkloadInstance
    schedule: Optional[Chromosome] = None

    @property
    def dataset(self) -> str:
        return f"{self.instance.n}x{self.instance.q}"


@dataclass(frozen=True)
class RunTask:
    """One (instance, algorithm, seed) run; picklable for process pools."""

    source: InstanceSource
    algo: str
    seed: int
    config: ExperimentConfig


def build_scheduler(
    algo: str, config: ExperimentConfig, schedule: Optional[Chromosome] = None
) -> SchedulerUsecase:
    if algo == ExperimentConfig.GA:
        return GeneticScheduler(config.ga_config(config.seeds[0]))
    elif algo == ExperimentConfig.RANDOM:
        return RandomSearchScheduler(config.random_budget, config.workers)
    elif algo == ExperimentConfig.GREEDY:
        return GreedyScheduler()
    elif algo == ExperimentConfig.FIXED:
        return FixedScheduler(schedule)
    else:
        raise ValueError(f"Unsupported algorithm: {algo}")


def execute_run(task: RunTask) -> ExperimentRow:
    scheduler = build_scheduler(task.algo, task.config, task.source.schedule)
    started = time.perf_counter()
    result = scheduler.schedule(task.source.instance, task.seed)
    runtime_ms = (time.perf_counter() - started) * 1000.0

    if task.algo == ExperimentConfig.GA and task.config.elite_count >= 1 and not result.is_monotone():
        raise InvariantViolationError(
            f"best-fitness trace increased with elitism on {task.source.class_code} seed {task.seed}"
        )

    return ExperimentRow(
        class_=task.source.class_code,
        dataset=task.source.dataset,
        apps=task.source.instance.p,
        algo=task.algo,
        seed=task.seed,
        best_fitness_sum=result.best_fitness,
        best_makespan_max=result.best_makespan_max,
        generations=result.generations,
        evaluations=result.evaluations,
        runtime_ms=round(runtime_ms, 3),
    )


class ExperimentInteractor(ExperimentUsecase):
    def __init__(
        self,
        instances: InstanceRepository,
        results: ResultRepository,
        heterogeneity: HeterogeneityConfig,
    ):
        self.instances = instances
        self.results = results
        self.heterogeneity = heterogeneity

    def generate(self, spec: InstanceSpec, directory: Path) -> List[Path]:
        """Generate an instance and write its ETC, dependency and manifest files"""
        instance = generate_instance(spec, self.heterogeneity)
        return self.instances.save(instance, spec, directory)

    def load(self, prefix: Optional[Path] = None, full: bool = False) -> WorkloadInstance:
        """Load an instance from files, or the demo instance"""
        if prefix is None:
            return demo_instance(full)
        return self.instances.load(Path(prefix))

    def run(self, config: ExperimentConfig) -> List[ExperimentRow]:
        """Run all configured combinations, appending one CSV row per finished run"""
        config.validate()
        sources = list(self._sources(config))
        tasks = [
            RunTask(source=source, algo=algo, seed=seed, config=config)
            for source in sources
            for seed in config.seeds
            for algo in config.algos
        ]
        logger.info("running %d tasks over %d instances", len(tasks), len(sources))

        output = Path(config.output)
        self.results.start(output)
        rows: List[ExperimentRow] = []
        for row in self._execute(tasks, config.jobs):
            self.results.append(output, row)
            rows.append(row)
            logger.info(
                "%s %s p=%d %s seed=%d: fitness_sum=%.6g",
                row.class_,
                row.dataset,
                row.apps,
                row.algo,
                row.seed,
                row.best_fitness_sum,
            )
        return rows

    def summarize(self, rows: List[ExperimentRow]) -> str:
        """Mean best makespan_sum per algorithm and class, one column per dataset"""
        if not rows:
            return "(no runs)"
        frame = pd.DataFrame([row.as_record() for row in rows])
        frame["column"] = frame["dataset"] + " (" + frame["apps"].astype(str) + " apps)"
        known = [c for c in TABLE_CLASSES if c in set(frame["class"])]
        others = [c for c in dict.fromkeys(frame["class"]) if c not in known]
        frame["class"] = pd.Categorical(frame["class"], categories=known + others, ordered=True)
        table = frame.pivot_table(
            index=["algo", "class"],
            columns="column",
            values="best_fitness_sum",
            aggfunc="mean",
            observed=True,
            sort=False,
        )
        table = table.sort_index(level=["algo", "class"])
        table = table[list(dict.fromkeys(frame["column"]))]
        return table.to_string(float_format=lambda v: f"{v:.2f}")

    def evaluate(
        self, instance: WorkloadInstance, schedule: Optional[Path] = None
    ) -> FitnessReport:
        """Evaluate a schedule file, or all tasks on cloud 0"""
        genes = (
            self.instances.load_schedule(Path(schedule), instance)
            if schedule is not None
            else np.zeros(instance.n, dtype=np.int64)
        )
        return evaluate(instance, genes)

    def demo(self, config: ExperimentConfig, full: bool = False) -> GaResult:
        """Run the GA on the demo instance with the first configured seed"""
        return evolve(demo_instance(full), config.ga_config(config.seeds[0]))

    def save_schedule(self, path: Path, genes: Chromosome) -> Path:
        return self.instances.save_schedule(Path(path), genes)

    def _sources(self, config: ExperimentConfig) -> Iterator[InstanceSource]:
        if config.demo:
            instance = demo_instance(config.full)
            yield InstanceSource(DEMO_CLASS, instance, self._schedule(config, instance))
        elif config.instances:
            for prefix in config.instances:
                instance = self.instances.load(Path(prefix))
                yield InstanceSource(Path(prefix).name, instance, self._schedule(config, instance))
        else:
            for size in config.sizes:
                for apps in config.apps:
                    for code in config.classes:
                        spec = config.instance_spec(code, size, apps)
                        instance = generate_instance(spec, self.heterogeneity)
                        yield InstanceSource(spec.class_code, instance, self._schedule(config, instance))

    def _schedule(
        self, config: ExperimentConfig, instance: WorkloadInstance
    ) -> Optional[Chromosome]:
        if config.schedule is None:
            return None
        return self.instances.load_schedule(Path(config.schedule), instance)

    @staticmethod
    def _execute(tasks: List[RunTask], jobs: int) -> Iterator[ExperimentRow]:
        if jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as executor:
                yield from executor.map(execute_run, tasks)
        else:
            for task in tasks:
                yield execute_run(task)
