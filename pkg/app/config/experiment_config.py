from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from pydantic import ValidationError

from app.benchmark.generator import (
    DEFAULT_EDGE_PROB,
    TABLE_CLASSES,
    InstanceSpec,
    parse_class_code,
    parse_size,
)
from app.model.errors import ConfigError
from app.model.schedule import GaConfig


def _str_list(value: str) -> List[str]:
    return [item.strip() for item in value.split(",") if item.strip()]


def _int_list(value: str) -> List[int]:
    return [int(item) for item in _str_list(value)]


def _bool(value: str) -> bool:
    lowered = value.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {value!r}")


def _optional_int(value: str) -> Optional[int]:
    return int(value) if value.strip() else None


def _optional_str(value: str) -> Optional[str]:
    return value.strip() or None


_CONVERTERS: Dict[str, Callable[[str], Any]] = {
    "classes": _str_list,
    "sizes": _str_list,
    "apps": _int_list,
    "seeds": _int_list,
    "algos": _str_list,
    "instances": _str_list,
    "population_size": int,
    "generations": int,
    "crossover_prob": float,
    "mutation_prob": float,
    "elite_count": int,
    "budget": _optional_int,
    "edge_prob": float,
    "instance_seed": int,
    "schedule": _optional_str,
    "demo": _bool,
    "full": _bool,
    "output": str,
    "jobs": int,
    "workers": int,
}


@dataclass
class ExperimentConfig:
    """
    Experiment configuration: instance sources, GA settings, seeds and outputs.

    Values come from defaults, then an optional key=value file, then flags.
    """

    # Algorithm names
    GA = "ga"
    RANDOM = "random"
    GREEDY = "greedy"
    FIXED = "fixed"
    KNOWN_ALGOS = (GA, RANDOM, GREEDY, FIXED)

    # Default values
    DEFAULT_SIZE = "512x16"
    DEFAULT_APPS = 20
    DEFAULT_SEED = 1
    DEFAULT_OUTPUT = "results.csv"

    classes: List[str] = field(default_factory=lambda: list(TABLE_CLASSES))
    sizes: List[str] = field(default_factory=lambda: [ExperimentConfig.DEFAULT_SIZE])
    apps: List[int] = field(default_factory=lambda: [ExperimentConfig.DEFAULT_APPS])
    seeds: List[int] = field(default_factory=lambda: [ExperimentConfig.DEFAULT_SEED])
    algos: List[str] = field(default_factory=lambda: [ExperimentConfig.GA])
    population_size: int = GaConfig.DEFAULT_POPULATION_SIZE
    generations: int = GaConfig.DEFAULT_GENERATIONS
    crossover_prob: float = GaConfig.DEFAULT_CROSSOVER_PROB
    mutation_prob: float = GaConfig.DEFAULT_MUTATION_PROB
    elite_count: int = GaConfig.DEFAULT_ELITE_COUNT
    budget: Optional[int] = None
    edge_prob: float = DEFAULT_EDGE_PROB
    instance_seed: int = DEFAULT_SEED
    instances: List[str] = field(default_factory=list)
    schedule: Optional[str] = None
    demo: bool = False
    full: bool = False
    output: str = DEFAULT_OUTPUT
    jobs: int = 1
    workers: int = 1

    @classmethod
    def from_file(cls, path: Path) -> "ExperimentConfig":
        """Load a key=value file; ``#`` lines and blank lines are ignored."""
        path = Path(path)
        if not path.exists():
            raise ConfigError(f"Config file not found: {path}")

        values: Dict[str, Any] = {}
        for number, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, separator, value = line.partition("=")
            key = key.strip()
            if not separator:
                raise ConfigError(f"{path} line {number}: expected key=value, got {line!r}")
            if key not in _CONVERTERS:
                raise ConfigError(f"{path} line {number}: unknown key {key!r}")
            try:
                values[key] = _CONVERTERS[key](value)
            except ValueError as e:
                raise ConfigError(f"{path} line {number}: invalid value for {key} - {e}") from e
        return cls(**values)

    def with_overrides(self, **flags: Any) -> "ExperimentConfig":
        """Apply flags that were actually given (not None)."""
        known = {f.name for f in fields(self)}
        unknown = set(flags) - known
        if unknown:
            raise ConfigError(f"Unknown settings: {sorted(unknown)}")
        return replace(self, **{k: v for k, v in flags.items() if v is not None})

    @property
    def random_budget(self) -> int:
        """Evaluations given to random search; defaults to the GA's own budget."""
        return self.budget if self.budget is not None else self.population_size * self.generations

    def ga_config(self, seed: int) -> GaConfig:
        try:
            return GaConfig(
                population_size=self.population_size,
                generations=self.generations,
                crossover_prob=self.crossover_prob,
                mutation_prob=self.mutation_prob,
                elite_count=self.elite_count,
                seed=seed,
                workers=self.workers,
            )
        except ValidationError as e:
            raise ConfigError(f"Invalid GA settings - {e}") from e

    def instance_spec(self, code: str, size: str, apps: int) -> InstanceSpec:
        """Spec of one generated instance; invalid flag combinations are usage errors."""
        try:
            return InstanceSpec.from_code(
                code, size, apps, seed=self.instance_seed, edge_prob=self.edge_prob
            )
        except ValidationError as e:
            raise ConfigError(f"Invalid instance settings for {code} {size} p={apps} - {e}") from e

    def validate(self) -> "ExperimentConfig":
        if not self.seeds:
            raise ConfigError("At least one seed is required")
        unknown = [a for a in self.algos if a not in self.KNOWN_ALGOS]
        if unknown or not self.algos:
            raise ConfigError(
                f"Unknown algorithms {unknown}, expected some of {list(self.KNOWN_ALGOS)}"
            )
        if self.jobs < 1 or self.workers < 1:
            raise ConfigError("jobs and workers must be at least 1")
        if self.budget is not None and self.budget < 1:
            raise ConfigError("budget must be at least 1")
        for seed in self.seeds:
            self.ga_config(seed)

        if not self.demo and not self.instances:
            for code in self.classes:
                parse_class_code(code)
            for size in self.sizes:
                parse_size(size)
            if any(a < 1 for a in self.apps):
                raise ConfigError("application counts must be at least 1")
            for code in self.classes:
                for size in self.sizes:
                    for apps in self.apps:
                        self.instance_spec(code, size, apps)

        for prefix in self.instances:
            for suffix in (".etc", ".dep"):
                path = Path(f"{prefix}{suffix}")
                if not path.exists():
                    raise FileNotFoundError(f"Instance file not found: {path}")
        if self.schedule is not None and not Path(self.schedule).exists():
            raise FileNotFoundError(f"Schedule file not found: {self.schedule}")
        return self
