from typing import ClassVar, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator


class FitnessReport(BaseModel):
    """Evaluation of one chromosome.

    ``makespan_sum`` (sum of completion times) is the fitness the GA minimizes;
    ``makespan_max`` is reported alongside and never drives selection.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    genes: np.ndarray
    waiting: np.ndarray
    completion: np.ndarray
    makespan_sum: float
    makespan_max: float
    cloud_load: np.ndarray


class GaConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    DEFAULT_POPULATION_SIZE: ClassVar[int] = 50
    DEFAULT_GENERATIONS: ClassVar[int] = 200
    DEFAULT_CROSSOVER_PROB: ClassVar[float] = 0.8
    DEFAULT_MUTATION_PROB: ClassVar[float] = 0.2
    DEFAULT_ELITE_COUNT: ClassVar[int] = 2

    population_size: int = Field(default=DEFAULT_POPULATION_SIZE, ge=2)
    generations: int = Field(default=DEFAULT_GENERATIONS, ge=1)
    crossover_prob: float = Field(default=DEFAULT_CROSSOVER_PROB, ge=0.0, le=1.0)
    mutation_prob: float = Field(default=DEFAULT_MUTATION_PROB, ge=0.0, le=1.0)
    elite_count: int = Field(default=DEFAULT_ELITE_COUNT, ge=0)
    seed: int = Field(default=0, ge=0, lt=2**64)
    workers: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def _elite_fits_population(self) -> "GaConfig":
        if self.elite_count >= self.population_size:
            raise ValueError(
                f"elite_count ({self.elite_count}) must be smaller than "
                f"population_size ({self.population_size})"
            )
        return self

    @property
    def budget(self) -> int:
        """Fitness evaluations one full run performs."""
        return self.population_size * self.generations


class GaResult(BaseModel):
    """Best schedule found by a scheduler run, with its per-generation trace."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    best_genes: np.ndarray
    best_fitness: float
    best_makespan_max: float
    trace: Tuple[float, ...]
    evaluations: int
    generations: int

    def is_monotone(self) -> bool:
        return all(b <= a for a, b in zip(self.trace, self.trace[1:]))
