"""
Pytest configuration and fixtures shared across layers.
"""

import numpy as np
import pytest

from app.benchmark.demo import demo_instance
from app.model.workload import WorkloadInstance


@pytest.fixture
def demo() -> WorkloadInstance:
    """Nine-task example (tasks A-I, four clouds)."""
    return demo_instance()


@pytest.fixture
def full_demo() -> WorkloadInstance:
    return demo_instance(full=True)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240601)
