import pytest

from app.interactor.fitness import evaluate
from app.interactor.genetic import evolve
from app.model.schedule import GaConfig
from app.schema.report import FitnessReportResponse, GaResultResponse

pytestmark = pytest.mark.unit


class TestFitnessReportResponse:
    def test_camel_case_keys(self, demo):
        response = FitnessReportResponse.from_report(evaluate(demo, [0] * 9))

        payload = response.model_dump(by_alias=True)

        assert set(payload) == {"tasks", "makespanSum", "makespanMax", "cloudLoad"}
        assert payload["tasks"][4] == {
            "task": "E",
            "cloud": 0,
            "waitingTime": 10.0,
            "completionTime": 14.0,
        }


class TestGaResultResponse:
    def test_from_result(self, demo):
        result = evolve(demo, GaConfig(population_size=4, generations=3, seed=1))

        payload = GaResultResponse.from_result(result).model_dump(by_alias=True)

        assert payload["bestFitnessSum"] == result.best_fitness
        assert payload["bestGenes"] == result.best_genes.tolist()
        assert len(payload["trace"]) == 3
