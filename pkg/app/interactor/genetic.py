"""Genetic algorithm for placing dependent tasks on heterogeneous clouds.

All randomness is drawn from one ``numpy.random.Generator`` on the calling
thread, in a fixed order. Fitness evaluation may use worker threads without
changing the outcome.
"""

import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from app.interactor.fitness import (
    busiest_cloud,
    cloud_load,
    evaluate,
    evaluate_population,
    least_utilized_cloud,
)
from app.model.errors import LengthMismatchError, ZeroFitnessError
from app.model.schedule import GaConfig, GaResult
from app.model.workload import Chromosome, WorkloadInstance
from app.usecase.scheduler import SchedulerUsecase

logger = logging.getLogger(__name__)


def init_population(
    instance: WorkloadInstance,
    config: GaConfig,
    rng: Optional[np.random.Generator] = None,
) -> List[Chromosome]:
    """``population_size`` chromosomes with every gene uniform over the clouds."""
    rng = rng if rng is not None else np.random.default_rng(config.seed)
    return [
        rng.integers(0, instance.q, size=instance.n, dtype=np.int64)
        for _ in range(config.population_size)
    ]


def roulette_select(fitnesses: Sequence[float], rng: np.random.Generator) -> int:
    """Pick an index with probability proportional to ``1 / fitness``.

    The objective is minimized, so shorter makespans get wider slices.
    """
    values = np.asarray(fitnesses, dtype=np.float64)
    if values.size == 0:
        raise ValueError("cannot select from an empty population")
    bad = np.flatnonzero(values <= 0)
    if bad.size:
        raise ZeroFitnessError(int(bad[0]))
    weights = 1.0 / values
    return int(rng.choice(values.size, p=weights / weights.sum()))


def one_point_crossover(
    p1: Chromosome,
    p2: Chromosome,
    rng: np.random.Generator,
    probability: float = 1.0,
) -> Tuple[Chromosome, Chromosome]:
    """Swap the tails of two parents after a cut point drawn from ``1..n-1``.

    With probability ``1 - probability`` (or when there is no cut point) the
    children are copies of the parents.
    """
    p1 = np.asarray(p1, dtype=np.int64)
    p2 = np.asarray(p2, dtype=np.int64)
    if p1.size != p2.size:
        raise LengthMismatchError(p1.size, p2.size)
    if probability < 1.0 and rng.random() >= probability:
        return p1.copy(), p2.copy()
    n = p1.size
    if n < 2:
        return p1.copy(), p2.copy()
    x = int(rng.integers(1, n))
    return (
        np.concatenate((p1[:x], p2[x:])),
        np.concatenate((p2[:x], p1[x:])),
    )


def mutate_load_balance(
    instance: WorkloadInstance, genes: Chromosome, rng: np.random.Generator
) -> Chromosome:
    """Move a random task off the busiest cloud, dragging its dependents along.

    The task and every task that depends on it directly or indirectly are
    reassigned to the least utilized cloud. Loads come from ``genes`` itself.
    """
    genes = np.array(genes, dtype=np.int64, copy=True)
    loads = cloud_load(instance, genes)
    busiest = busiest_cloud(loads)
    least = least_utilized_cloud(loads)
    if busiest == least:
        return genes
    candidates = np.flatnonzero(genes == busiest)
    if candidates.size == 0:
        return genes
    task = int(candidates[rng.integers(candidates.size)])
    moved = [task, *instance.descendants_of(task)]
    genes[moved] = least
    return genes


def evolve(instance: WorkloadInstance, config: GaConfig) -> GaResult:
    rng = np.random.default_rng(config.seed)
    population = np.vstack(init_population(instance, config, rng))
    size = config.population_size

    best_genes: Chromosome = population[0].copy()
    best_fitness = np.inf
    trace: List[float] = []
    evaluations = 0

    for generation in range(config.generations):
        fitness = evaluate_population(instance, population, config.workers).makespan_sum
        evaluations += size

        leader = int(np.argmin(fitness))
        trace.append(float(fitness[leader]))
        if fitness[leader] < best_fitness:
            best_fitness = float(fitness[leader])
            best_genes = population[leader].copy()
        logger.debug("generation %d best %.6g", generation, fitness[leader])

        if generation == config.generations - 1:
            break

        elite = np.argsort(fitness, kind="stable")[: config.elite_count]
        offspring: List[Chromosome] = [population[i].copy() for i in elite]
        while len(offspring) < size:
            first = population[roulette_select(fitness, rng)]
            second = population[roulette_select(fitness, rng)]
            children = one_point_crossover(first, second, rng, config.crossover_prob)
            for child in children:
                if rng.random() < config.mutation_prob:
                    child = mutate_load_balance(instance, child, rng)
                offspring.append(child)
        population = np.vstack(offspring[:size])

    report = evaluate(instance, best_genes)
    logger.info(
        "GA finished: %d generations, %d evaluations, best makespan_sum %.6g",
        len(trace),
        evaluations,
        best_fitness,
    )
    return GaResult(
        best_genes=report.genes,
        best_fitness=best_fitness,
        best_makespan_max=report.makespan_max,
        trace=tuple(trace),
        evaluations=evaluations,
        generations=len(trace),
    )


class GeneticScheduler(SchedulerUsecase):
    name = "ga"

    def __init__(self, config: GaConfig):
        self.config = config

    def schedule(self, instance: WorkloadInstance, seed: int) -> GaResult:
        return evolve(instance, self.config.model_copy(update={"seed": seed}))
