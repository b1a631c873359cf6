from typing import List

from app.model.schedule import FitnessReport, GaResult
from app.model.workload import task_label
from app.schema.core import BaseSchema


class TaskTimingResponse(BaseSchema):
    task: str
    cloud: int
    waiting_time: float
    completion_time: float


class FitnessReportResponse(BaseSchema):
    tasks: List[TaskTimingResponse]
    makespan_sum: float
    makespan_max: float
    cloud_load: List[float]

    @classmethod
    def from_report(cls, report: FitnessReport) -> "FitnessReportResponse":
        return cls(
            tasks=[
                TaskTimingResponse(
                    task=task_label(t),
                    cloud=int(report.genes[t]),
                    waiting_time=float(report.waiting[t]),
                    completion_time=float(report.completion[t]),
                )
                for t in range(report.genes.size)
            ],
            makespan_sum=report.makespan_sum,
            makespan_max=report.makespan_max,
            cloud_load=[float(v) for v in report.cloud_load],
        )


class GaResultResponse(BaseSchema):
    best_genes: List[int]
    best_fitness_sum: float
    best_makespan_max: float
    trace: List[float]
    evaluations: int
    generations: int

    @classmethod
    def from_result(cls, result: GaResult) -> "GaResultResponse":
        return cls(
            best_genes=[int(g) for g in result.best_genes],
            best_fitness_sum=result.best_fitness,
            best_makespan_max=result.best_makespan_max,
            trace=list(result.trace),
            evaluations=result.evaluations,
            generations=result.generations,
        )
