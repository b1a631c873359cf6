from abc import ABC, abstractmethod
from pathlib import Path
from typing import List

from app.benchmark.generator import InstanceSpec
from app.model.workload import Chromosome, WorkloadInstance


class InstanceRepository(ABC):
    @abstractmethod
    def load(self, prefix: Path) -> WorkloadInstance:
        pass

    @abstractmethod
    def save(
        self, instance: WorkloadInstance, spec: InstanceSpec, directory: Path
    ) -> List[Path]:
        pass

    @abstractmethod
    def load_schedule(self, path: Path, instance: WorkloadInstance) -> Chromosome:
        pass

    @abstractmethod
    def save_schedule(self, path: Path, genes: Chromosome) -> Path:
        pass
