from abc import ABC, abstractmethod
from pathlib import Path
from typing import List

from app.model.experiment import ExperimentRow


class ResultRepository(ABC):
    @abstractmethod
    def start(self, path: Path) -> None:
        """Create ``path`` holding only the header."""

    @abstractmethod
    def append(self, path: Path, row: ExperimentRow) -> None:
        """Append one completed run."""

    @abstractmethod
    def read(self, path: Path) -> List[ExperimentRow]:
        pass
