"""Reference schedulers used as controls for the GA."""

import itertools
import logging
from typing import List, Optional, Sequence

import numpy as np

from app.interactor.fitness import evaluate, evaluate_population
from app.model.schedule import GaResult
from app.model.workload import Chromosome, WorkloadInstance, validate_chromosome
from app.usecase.scheduler import SchedulerUsecase

logger = logging.getLogger(__name__)

RANDOM_BATCH = 50
EXHAUSTIVE_LIMIT = 1 << 16


def _result(
    instance: WorkloadInstance,
    genes: Chromosome,
    evaluations: int,
    trace: Optional[Sequence[float]] = None,
) -> GaResult:
    report = evaluate(instance, genes)
    if trace is None:
        trace = [report.makespan_sum]
    return GaResult(
        best_genes=report.genes,
        best_fitness=report.makespan_sum,
        best_makespan_max=report.makespan_max,
        trace=tuple(trace),
        evaluations=evaluations,
        generations=len(trace),
    )


def random_search(
    instance: WorkloadInstance, budget: int, seed: int, workers: int = 1
) -> GaResult:
    """Best of ``budget`` uniformly random chromosomes.

    Chromosomes are drawn one at a time from the seeded stream, so a smaller
    budget always sees a prefix of what a larger one sees. The trace holds the
    best-so-far after each batch of evaluations.
    """
    if budget < 1:
        raise ValueError(f"budget must be at least 1, got {budget}")
    rng = np.random.default_rng(seed)
    best_genes: Optional[Chromosome] = None
    best_fitness = np.inf
    trace: List[float] = []
    remaining = budget
    while remaining:
        size = min(RANDOM_BATCH, remaining)
        batch = np.vstack(
            [rng.integers(0, instance.q, size=instance.n, dtype=np.int64) for _ in range(size)]
        )
        fitness = evaluate_population(instance, batch, workers).makespan_sum
        leader = int(np.argmin(fitness))
        if fitness[leader] < best_fitness:
            best_fitness = float(fitness[leader])
            best_genes = batch[leader]
        trace.append(best_fitness)
        remaining -= size
    logger.info("random search finished: %d evaluations, best %.6g", budget, best_fitness)
    return _result(instance, best_genes, budget, trace)


def greedy_min_etc(instance: WorkloadInstance) -> Chromosome:
    """Each task on its fastest cloud; ties go to the lowest cloud index."""
    return np.argmin(instance.etc.cells, axis=1).astype(np.int64)


def exhaustive_search(instance: WorkloadInstance) -> GaResult:
    """Evaluate all qⁿ chromosomes; only feasible for tiny instances."""
    space = instance.q**instance.n
    if space > EXHAUSTIVE_LIMIT:
        raise ValueError(f"search space of {space} schedules is too large to enumerate")
    population = np.array(
        list(itertools.product(range(instance.q), repeat=instance.n)), dtype=np.int64
    )
    fitness = evaluate_population(instance, population).makespan_sum
    leader = int(np.argmin(fitness))
    return _result(instance, population[leader], space)


class RandomSearchScheduler(SchedulerUsecase):
    name = "random"

    def __init__(self, budget: int, workers: int = 1):
        self.budget = budget
        self.workers = workers

    def schedule(self, instance: WorkloadInstance, seed: int) -> GaResult:
        return random_search(instance, self.budget, seed, self.workers)


class GreedyScheduler(SchedulerUsecase):
    name = "greedy"

    def schedule(self, instance: WorkloadInstance, seed: int) -> GaResult:
        return _result(instance, greedy_min_etc(instance), 1)


class FixedScheduler(SchedulerUsecase):
    """Reports a given schedule, or every task on cloud 0 when none is given."""

    name = "fixed"

    def __init__(self, genes: Optional[Sequence[int]] = None):
        self.genes = genes

    def schedule(self, instance: WorkloadInstance, seed: int) -> GaResult:
        genes = (
            validate_chromosome(instance, self.genes)
            if self.genes is not None
            else np.zeros(instance.n, dtype=np.int64)
        )
        return _result(instance, genes, 1)
