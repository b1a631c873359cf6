"""Makespan evaluation of chromosomes.

Completion times follow the task graph: a task waits for the latest of its
parents to complete, then runs for its ETC cell on the assigned cloud. Clouds
do not queue work, so two tasks on one cloud never delay each other.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import NamedTuple, Sequence, Tuple, Union

import numpy as np

from app.model.schedule import FitnessReport
from app.model.workload import Chromosome, WorkloadInstance, validate_chromosome


class PopulationFitness(NamedTuple):
    waiting: np.ndarray
    completion: np.ndarray
    makespan_sum: np.ndarray
    makespan_max: np.ndarray


def execution_times(instance: WorkloadInstance, population: np.ndarray) -> np.ndarray:
    """ETC cell of every gene: ``out[c][i] = etc[i][population[c][i]]``."""
    return instance.etc.cells[np.arange(instance.n), population]


def _evaluate_block(
    instance: WorkloadInstance, block: np.ndarray
) -> Tuple[np.ndarray, np.ndarray]:
    exec_time = execution_times(instance, block)
    waiting = np.zeros_like(exec_time)
    completion = np.empty_like(exec_time)
    parent_index = instance.parent_index
    for t in instance.order:
        ps = parent_index[t]
        if ps.size:
            waiting[:, t] = completion[:, ps].max(axis=1)
        completion[:, t] = waiting[:, t] + exec_time[:, t]
    return waiting, completion


def evaluate_population(
    instance: WorkloadInstance, population: np.ndarray, workers: int = 1
) -> PopulationFitness:
    """Evaluate an l×n population in one topological pass.

    With ``workers > 1`` the rows are split into contiguous chunks evaluated on
    a thread pool. Every row is computed independently, so the result does not
    depend on ``workers``.
    """
    population = np.atleast_2d(np.asarray(population, dtype=np.int64))
    if workers > 1 and population.shape[0] > 1:
        chunks = np.array_split(population, min(workers, population.shape[0]))
        with ThreadPoolExecutor(max_workers=workers) as executor:
            parts = list(executor.map(lambda c: _evaluate_block(instance, c), chunks))
        waiting = np.vstack([w for w, _ in parts])
        completion = np.vstack([c for _, c in parts])
    else:
        waiting, completion = _evaluate_block(instance, population)
    return PopulationFitness(
        waiting=waiting,
        completion=completion,
        makespan_sum=completion.sum(axis=1),
        makespan_max=completion.max(axis=1),
    )


def cloud_load(instance: WorkloadInstance, genes: Chromosome) -> np.ndarray:
    """Total ETC of the tasks assigned to each cloud."""
    genes = np.asarray(genes, dtype=np.int64)
    return np.bincount(
        genes, weights=execution_times(instance, genes), minlength=instance.q
    )


def evaluate(instance: WorkloadInstance, genes: Sequence[int]) -> FitnessReport:
    genes = validate_chromosome(instance, genes)
    result = evaluate_population(instance, genes[np.newaxis, :])
    return FitnessReport(
        genes=genes,
        waiting=result.waiting[0],
        completion=result.completion[0],
        makespan_sum=float(result.makespan_sum[0]),
        makespan_max=float(result.makespan_max[0]),
        cloud_load=cloud_load(instance, genes),
    )


def waiting_time(instance: WorkloadInstance, genes: Sequence[int], t: int) -> float:
    """Latest completion among the parents of ``t``; 0 for an independent task."""
    return float(evaluate(instance, genes).waiting[t])


def completion_time(instance: WorkloadInstance, genes: Sequence[int], t: int) -> float:
    return float(evaluate(instance, genes).completion[t])


def _loads(report: Union[FitnessReport, np.ndarray]) -> np.ndarray:
    return report.cloud_load if isinstance(report, FitnessReport) else np.asarray(report)


def busiest_cloud(report: Union[FitnessReport, np.ndarray]) -> int:
    """Cloud with the highest load, from a report or a bare load vector."""
    # argmax/argmin return the first extremum, i.e. the lowest cloud index on ties
    return int(np.argmax(_loads(report)))


def least_utilized_cloud(report: Union[FitnessReport, np.ndarray]) -> int:
    return int(np.argmin(_loads(report)))
