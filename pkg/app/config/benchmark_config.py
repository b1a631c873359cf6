import os
from dataclasses import dataclass


@dataclass
class HeterogeneityConfig:
    """
    Upper bounds of the uniform ranges used to generate ETC matrices.

    Task baselines are drawn from U(1, task range) and each cell multiplies its
    baseline by U(1, machine range).
    """

    # Heterogeneity levels
    HIGH = "hi"
    LOW = "lo"

    # Default values
    DEFAULT_TASK_HI = 3000.0
    DEFAULT_TASK_LO = 100.0
    DEFAULT_MACHINE_HI = 1000.0
    DEFAULT_MACHINE_LO = 10.0

    task_hi: float = DEFAULT_TASK_HI
    task_lo: float = DEFAULT_TASK_LO
    machine_hi: float = DEFAULT_MACHINE_HI
    machine_lo: float = DEFAULT_MACHINE_LO

    @classmethod
    def from_env(cls) -> "HeterogeneityConfig":
        """Load range constants from environment variables."""
        return cls(
            task_hi=float(os.getenv("ETC_TASK_HI", str(cls.DEFAULT_TASK_HI))),
            task_lo=float(os.getenv("ETC_TASK_LO", str(cls.DEFAULT_TASK_LO))),
            machine_hi=float(os.getenv("ETC_MACHINE_HI", str(cls.DEFAULT_MACHINE_HI))),
            machine_lo=float(os.getenv("ETC_MACHINE_LO", str(cls.DEFAULT_MACHINE_LO))),
        )

    def task_range(self, heterogeneity: str) -> float:
        if heterogeneity == self.HIGH:
            return self.task_hi
        elif heterogeneity == self.LOW:
            return self.task_lo
        else:
            raise ValueError(f"Unsupported task heterogeneity: {heterogeneity}")

    def machine_range(self, heterogeneity: str) -> float:
        if heterogeneity == self.HIGH:
            return self.machine_hi
        elif heterogeneity == self.LOW:
            return self.machine_lo
        else:
            raise ValueError(f"Unsupported machine heterogeneity: {heterogeneity}")
