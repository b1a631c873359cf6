import string
from functools import cached_property
from typing import Dict, FrozenSet, Sequence, Tuple

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.model.dag import DependencyDag, descendants, topological_order, validate_dag
from app.model.errors import CrossApplicationEdgeError, GeneRangeError, LengthMismatchError

# genes[i] is the cloud index task i is assigned to
Chromosome = npt.NDArray[np.int64]


class EtcMatrix(BaseModel):
    """Expected time to compute: ``cells[i][j]`` is task i's duration (ms) on cloud j."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    cells: np.ndarray

    @field_validator("cells", mode="before")
    @classmethod
    def _as_duration_matrix(cls, value) -> np.ndarray:
        matrix = np.array(value, dtype=np.float64, copy=True)
        if matrix.ndim != 2 or 0 in matrix.shape:
            raise ValueError(f"ETC matrix must be a non-empty n×q matrix, got shape {matrix.shape}")
        if not (np.isfinite(matrix).all() and (matrix > 0).all()):
            raise ValueError("ETC cells must be positive finite durations")
        matrix.setflags(write=False)
        return matrix

    @property
    def n(self) -> int:
        return int(self.cells.shape[0])

    @property
    def q(self) -> int:
        return int(self.cells.shape[1])


class WorkloadInstance(BaseModel):
    """A scheduling problem: ETC matrix, dependency DAG and application membership.

    Construction validates the DAG, so every instance is acyclic and every edge
    stays inside one application.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    etc: EtcMatrix
    dag: DependencyDag
    app_of: Tuple[int, ...]
    p: int = Field(ge=1)

    @model_validator(mode="after")
    def _check_consistency(self) -> "WorkloadInstance":
        n = self.etc.n
        if self.dag.n != n:
            raise LengthMismatchError(n, self.dag.n)
        if len(self.app_of) != n:
            raise LengthMismatchError(n, len(self.app_of))
        if any(a < 0 or a >= self.p for a in self.app_of):
            raise ValueError(f"application ids must lie in [0, {self.p})")
        validate_dag(self.dag)
        apps = np.asarray(self.app_of)
        child, parent = np.nonzero(self.dag.dep)
        crossing = np.flatnonzero(apps[child] != apps[parent])
        if crossing.size:
            k = crossing[0]
            raise CrossApplicationEdgeError(int(child[k]), int(parent[k]))
        return self

    @classmethod
    def single_application(cls, etc: EtcMatrix, dag: DependencyDag) -> "WorkloadInstance":
        return cls(etc=etc, dag=dag, app_of=(0,) * etc.n, p=1)

    @property
    def n(self) -> int:
        return self.etc.n

    @property
    def q(self) -> int:
        return self.etc.q

    @cached_property
    def order(self) -> Tuple[int, ...]:
        return tuple(topological_order(self.dag))

    @cached_property
    def parent_index(self) -> Tuple[np.ndarray, ...]:
        """Per task, the array of parent indices."""
        return tuple(np.flatnonzero(row) for row in self.dag.dep)

    @cached_property
    def descendant_cache(self) -> Dict[int, FrozenSet[int]]:
        return {}

    def descendants_of(self, t: int) -> FrozenSet[int]:
        cache = self.descendant_cache
        if t not in cache:
            cache[t] = frozenset(descendants(self.dag, t))
        return cache[t]


def validate_chromosome(instance: WorkloadInstance, genes: Sequence[int]) -> Chromosome:
    """Return ``genes`` as a read-only int vector, checking length and cloud range."""
    vector = np.array(genes, dtype=np.int64, copy=True).reshape(-1)
    if vector.size != instance.n:
        raise LengthMismatchError(instance.n, vector.size)
    bad = np.flatnonzero((vector < 0) | (vector >= instance.q))
    if bad.size:
        position = int(bad[0])
        raise GeneRangeError(position, int(vector[position]), instance.q)
    vector.setflags(write=False)
    return vector


def task_label(t: int) -> str:
    if t < len(string.ascii_uppercase):
        return string.ascii_uppercase[t]
    return f"T{t}"
