from abc import ABC, abstractmethod

from app.model.schedule import GaResult
from app.model.workload import WorkloadInstance


class SchedulerUsecase(ABC):
    """A scheduling algorithm that maps one instance and seed to a best schedule."""

    name: str

    @abstractmethod
    def schedule(self, instance: WorkloadInstance, seed: int) -> GaResult:
        """Search for a low-makespan chromosome for ``instance``."""
