from abc import ABC, abstractmethod
from pathlib import Path
from typing import List, Optional

from app.benchmark.generator import InstanceSpec
from app.config.experiment_config import ExperimentConfig
from app.model.experiment import ExperimentRow
from app.model.schedule import FitnessReport, GaResult
from app.model.workload import Chromosome, WorkloadInstance


class ExperimentUsecase(ABC):
    @abstractmethod
    def generate(self, spec: InstanceSpec, directory: Path) -> List[Path]:
        """Generate a benchmark instance and write its files."""

    @abstractmethod
    def run(self, config: ExperimentConfig) -> List[ExperimentRow]:
        """Run every configured (instance, algorithm, seed) combination."""

    @abstractmethod
    def summarize(self, rows: List[ExperimentRow]) -> str:
        """Render the class × dataset table of mean best makespan."""

    @abstractmethod
    def load(self, prefix: Optional[Path] = None, full: bool = False) -> WorkloadInstance:
        """Load an instance from files, or the built-in demo when ``prefix`` is None."""

    @abstractmethod
    def evaluate(
        self, instance: WorkloadInstance, schedule: Optional[Path] = None
    ) -> FitnessReport:
        """Evaluate a schedule file (all cloud 0 when omitted) against an instance."""

    @abstractmethod
    def demo(self, config: ExperimentConfig, full: bool = False) -> GaResult:
        """Run the GA on the built-in demo instance."""

    @abstractmethod
    def save_schedule(self, path: Path, genes: Chromosome) -> Path:
        """Write a schedule file readable by ``evaluate``."""
