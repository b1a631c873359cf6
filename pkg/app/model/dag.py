from functools import cached_property
from typing import List, Set

import networkx as nx
import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from app.model.errors import CycleError, SelfLoopError


class DependencyDag(BaseModel):
    """Precedence constraints as an n×n 0/1 matrix.

    ``dep[i][j] == 1`` means task ``i`` waits for task ``j``: rows are children,
    columns are parents.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    dep: np.ndarray

    @field_validator("dep", mode="before")
    @classmethod
    def _as_binary_matrix(cls, value) -> np.ndarray:
        matrix = np.array(value, copy=True)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError(f"dependency matrix must be square, got shape {matrix.shape}")
        if not np.isin(matrix, (0, 1)).all():
            raise ValueError("dependency matrix cells must be 0 or 1")
        matrix = matrix.astype(np.uint8)
        matrix.setflags(write=False)
        return matrix

    @classmethod
    def edgeless(cls, n: int) -> "DependencyDag":
        return cls(dep=np.zeros((n, n), dtype=np.uint8))

    @property
    def n(self) -> int:
        return int(self.dep.shape[0])

    @cached_property
    def graph(self) -> nx.DiGraph:
        """Directed graph with edges parent -> child."""
        return nx.from_numpy_array(self.dep.T, create_using=nx.DiGraph)


def validate_dag(dag: DependencyDag) -> None:
    """Raise SelfLoopError or CycleError unless ``dag`` is acyclic.

    Cycles are found by peeling zero-in-degree tasks layer by layer; whatever
    cannot be peeled is reported.
    """
    loops = np.flatnonzero(np.diagonal(dag.dep))
    if loops.size:
        raise SelfLoopError(int(loops[0]))

    dep = dag.dep.astype(np.int64)
    remaining = dep.sum(axis=1)
    removed = np.zeros(dag.n, dtype=bool)
    frontier = np.flatnonzero(remaining == 0)
    while frontier.size:
        removed[frontier] = True
        remaining -= dep[:, frontier].sum(axis=1)
        frontier = np.flatnonzero((remaining == 0) & ~removed)

    residue = np.flatnonzero(~removed)
    if residue.size:
        raise CycleError(residue.tolist())


def topological_order(dag: DependencyDag) -> List[int]:
    """Parents before children; among ready tasks the lowest index goes first."""
    validate_dag(dag)
    return [int(t) for t in nx.lexicographical_topological_sort(dag.graph)]


def parents(dag: DependencyDag, t: int) -> Set[int]:
    return {int(k) for k in np.flatnonzero(dag.dep[t])}


def children(dag: DependencyDag, t: int) -> Set[int]:
    return {int(i) for i in np.flatnonzero(dag.dep[:, t])}


def descendants(dag: DependencyDag, t: int) -> Set[int]:
    """Every task that depends on ``t`` directly or indirectly, excluding ``t``."""
    return {int(u) for u in nx.descendants(dag.graph, t)}


def ancestors(dag: DependencyDag, t: int) -> Set[int]:
    return {int(u) for u in nx.ancestors(dag.graph, t)}
