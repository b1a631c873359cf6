from typing import List

from pydantic import BaseModel, ConfigDict, Field


class ExperimentRow(BaseModel):
    """One completed (instance, algorithm, seed) run; field order is the CSV column order."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    class_: str = Field(alias="class")
    dataset: str
    apps: int
    algo: str
    seed: int
    best_fitness_sum: float
    best_makespan_max: float
    generations: int
    evaluations: int
    runtime_ms: float

    def as_record(self) -> dict:
        return self.model_dump(by_alias=True)


CSV_FIELDS: List[str] = [
    field.alias or name for name, field in ExperimentRow.model_fields.items()
]
