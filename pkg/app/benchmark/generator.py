"""Braun-style ETC instances with per-application dependency DAGs.

Class codes follow ``u_x_vvww``: uniform distribution, consistency ``x`` in
{c, i, s}, task heterogeneity ``vv`` and machine heterogeneity ``ww`` in {hi, lo}.
"""

import logging
from typing import Dict, Iterable, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.config.benchmark_config import HeterogeneityConfig
from app.model.dag import DependencyDag
from app.model.errors import ConfigError
from app.model.workload import EtcMatrix, WorkloadInstance

logger = logging.getLogger(__name__)

Consistency = Literal["consistent", "inconsistent", "semiconsistent"]
Heterogeneity = Literal["hi", "lo"]

CONSISTENCY_CODES: Dict[str, str] = {
    "c": "consistent",
    "i": "inconsistent",
    "s": "semiconsistent",
}

# Row order of the summary table
TABLE_CLASSES: Tuple[str, ...] = (
    "u_c_hihi",
    "u_c_hilo",
    "u_c_lolo",
    "u_c_lohi",
    "u_i_hihi",
    "u_i_lohi",
    "u_i_hilo",
    "u_i_lolo",
    "u_s_hihi",
    "u_s_hilo",
    "u_s_lolo",
    "u_s_lohi",
)
DATASETS: Tuple[str, ...] = ("512x16", "1024x32")
APPLICATION_COUNTS: Tuple[int, ...] = (20, 30)
DEFAULT_EDGE_PROB = 0.3


class InstanceSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    q: int = Field(ge=1)
    consistency: Consistency
    task_het: Heterogeneity
    machine_het: Heterogeneity
    p: int = Field(default=1, ge=1)
    edge_prob: float = Field(default=DEFAULT_EDGE_PROB, ge=0.0, le=1.0)
    seed: int = Field(default=0, ge=0, lt=2**64)

    @model_validator(mode="after")
    def _apps_fit_tasks(self) -> "InstanceSpec":
        if self.p > self.n:
            raise ValueError(f"{self.p} applications cannot share {self.n} tasks")
        return self

    @classmethod
    def from_code(
        cls,
        code: str,
        size: str,
        apps: int,
        seed: int = 0,
        edge_prob: float = DEFAULT_EDGE_PROB,
    ) -> "InstanceSpec":
        consistency, task_het, machine_het = parse_class_code(code)
        n, q = parse_size(size)
        return cls(
            n=n,
            q=q,
            consistency=consistency,
            task_het=task_het,
            machine_het=machine_het,
            p=apps,
            edge_prob=edge_prob,
            seed=seed,
        )

    @property
    def class_code(self) -> str:
        code = next(k for k, v in CONSISTENCY_CODES.items() if v == self.consistency)
        return f"u_{code}_{self.task_het}{self.machine_het}"

    @property
    def dataset(self) -> str:
        return f"{self.n}x{self.q}"

    @property
    def stem(self) -> str:
        """File name stem: ``u_<x>_<vv><ww>_<n>x<q>_p<p>_s<seed>``."""
        return f"{self.class_code}_{self.dataset}_p{self.p}_s{self.seed}"


def parse_class_code(code: str) -> Tuple[str, str, str]:
    """Split ``u_c_hilo`` into (consistency, task heterogeneity, machine heterogeneity)."""
    parts = code.strip().lower().split("_")
    if len(parts) != 3 or parts[0] != "u":
        raise ConfigError(f"Unknown instance class {code!r}, expected u_x_vvww")
    _, consistency, heterogeneity = parts
    if consistency not in CONSISTENCY_CODES:
        raise ConfigError(
            f"Unknown consistency code {consistency!r} in {code!r}, expected one of c, i, s"
        )
    task_het, machine_het = heterogeneity[:2], heterogeneity[2:]
    if task_het not in ("hi", "lo") or machine_het not in ("hi", "lo"):
        raise ConfigError(f"Unknown heterogeneity {heterogeneity!r} in {code!r}")
    return CONSISTENCY_CODES[consistency], task_het, machine_het


def parse_size(size: str) -> Tuple[int, int]:
    """``"512x16"`` -> (512 tasks, 16 clouds)."""
    try:
        n, q = (int(part) for part in size.lower().split("x"))
    except ValueError:
        raise ConfigError(f"Invalid dataset size {size!r}, expected <tasks>x<clouds>") from None
    if n < 1 or q < 1:
        raise ConfigError(f"Invalid dataset size {size!r}")
    return n, q


def size_dep_mat(task_counts: Iterable[int]) -> int:
    """Cell count of the dependency matrix for applications with these task counts."""
    return sum(task_counts) ** 2


def _streams(seed: int) -> Tuple[np.random.Generator, np.random.Generator]:
    etc_seed, dag_seed = np.random.SeedSequence(seed).spawn(2)
    return np.random.default_rng(etc_seed), np.random.default_rng(dag_seed)


def generate_etc(
    spec: InstanceSpec, heterogeneity: Optional[HeterogeneityConfig] = None
) -> EtcMatrix:
    heterogeneity = heterogeneity or HeterogeneityConfig()
    rng, _ = _streams(spec.seed)
    task_range = heterogeneity.task_range(spec.task_het)
    machine_range = heterogeneity.machine_range(spec.machine_het)

    baseline = rng.uniform(1.0, task_range, size=spec.n)
    cells = baseline[:, np.newaxis] * rng.uniform(1.0, machine_range, size=(spec.n, spec.q))

    if spec.consistency == "consistent":
        cells = np.sort(cells, axis=1)
    elif spec.consistency == "semiconsistent":
        cells[:, 0::2] = np.sort(cells[:, 0::2], axis=1)
    return EtcMatrix(cells=cells)


def application_blocks(n: int, p: int) -> Tuple[int, ...]:
    """Application id of each task for ``p`` contiguous, near-equal blocks."""
    app_of = np.empty(n, dtype=np.int64)
    for app, block in enumerate(np.array_split(np.arange(n), p)):
        app_of[block] = app
    return tuple(int(a) for a in app_of)


def generate_dag(spec: InstanceSpec) -> Tuple[DependencyDag, Tuple[int, ...]]:
    """Random precedence inside each application block.

    A task may only depend on earlier tasks of its own block, so the graph is
    acyclic and has no cross-application edges.
    """
    _, rng = _streams(spec.seed)
    dep = np.zeros((spec.n, spec.n), dtype=np.uint8)
    for block in np.array_split(np.arange(spec.n), spec.p):
        k = block.size
        edges = np.tril(rng.random((k, k)) < spec.edge_prob, k=-1)
        dep[np.ix_(block, block)] = edges
    return DependencyDag(dep=dep), application_blocks(spec.n, spec.p)


def generate_instance(
    spec: InstanceSpec, heterogeneity: Optional[HeterogeneityConfig] = None
) -> WorkloadInstance:
    etc = generate_etc(spec, heterogeneity)
    dag, app_of = generate_dag(spec)
    counts = np.bincount(app_of, minlength=spec.p)
    logger.info(
        "generated %s: %d tasks, %d clouds, %d applications, %d edges, size_dep_mat=%d",
        spec.stem,
        spec.n,
        spec.q,
        spec.p,
        int(dag.dep.sum()),
        size_dep_mat(int(c) for c in counts),
    )
    return WorkloadInstance(etc=etc, dag=dag, app_of=app_of, p=spec.p)
