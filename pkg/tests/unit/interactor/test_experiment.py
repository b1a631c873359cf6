"""
Unit tests for ExperimentInteractor.

Tests the orchestration layer with mocked repository dependencies.

Test Strategy:
- Mock InstanceRepository and ResultRepository using create_autospec
- Use the real CSV datastore under tmp_path where the written file matters
- Verify run ordering, row contents and the summary layout
- Use DeepDiff for row comparisons
"""

from pathlib import Path

import numpy as np
import pytest
from deepdiff import DeepDiff

from app.benchmark.generator import TABLE_CLASSES, InstanceSpec
from app.config.benchmark_config import HeterogeneityConfig
from app.config.experiment_config import ExperimentConfig
from app.datastore.result import CsvResultDatastore
from app.interactor.experiment import (
    DEMO_CLASS,
    ExperimentInteractor,
    InstanceSource,
    RunTask,
    build_scheduler,
    execute_run,
)
from app.interactor.baselines import FixedScheduler, GreedyScheduler, RandomSearchScheduler
from app.interactor.genetic import GeneticScheduler
from app.model.errors import InvariantViolationError
from app.model.experiment import ExperimentRow
from app.model.schedule import GaResult
from app.repository.instance import InstanceRepository
from app.repository.result import ResultRepository
from app.usecase.scheduler import SchedulerUsecase

pytestmark = pytest.mark.unit


@pytest.fixture
def mock_instances(mocker):
    return mocker.create_autospec(InstanceRepository, instance=True)


@pytest.fixture
def mock_results(mocker):
    return mocker.create_autospec(ResultRepository, instance=True)


def _row(class_, dataset, apps, algo, seed, fitness) -> ExperimentRow:
    return ExperimentRow(
        class_=class_,
        dataset=dataset,
        apps=apps,
        algo=algo,
        seed=seed,
        best_fitness_sum=fitness,
        best_makespan_max=fitness / 10,
        generations=1,
        evaluations=1,
        runtime_ms=0.5,
    )


def _without_runtime(rows):
    return [row.model_dump(exclude={"runtime_ms"}) for row in rows]


class TestExperimentInteractorRun:
    """Test suite for ExperimentInteractor.run() method."""

    def test_fixed_demo_run_writes_csv(self, tmp_path, mock_instances):
        """
        Test a single fixed-schedule run on the demo instance.

        Arrange:
            - Demo source, fixed algorithm, real CSV datastore

        Act:
            - Call run()

        Assert:
            - One row with makespan_sum 88 and makespan_max 15
            - The CSV file holds the same row
        """
        # Arrange
        output = tmp_path / "out" / "results.csv"
        results = CsvResultDatastore()
        config = ExperimentConfig(demo=True, algos=["fixed"], output=str(output))
        interactor = ExperimentInteractor(mock_instances, results, HeterogeneityConfig())

        # Act
        rows = interactor.run(config)

        # Assert
        assert len(rows) == 1
        row = rows[0]
        assert (row.class_, row.dataset, row.apps, row.algo) == (DEMO_CLASS, "9x4", 2, "fixed")
        assert row.best_fitness_sum == 88
        assert row.best_makespan_max == 15

        diff = DeepDiff(rows, results.read(output))
        assert not diff, f"Unexpected difference:\n{diff.pretty()}"
        mock_instances.load.assert_not_called()

    def test_class_grid_produces_one_row_per_run(self, mock_instances, mock_results):
        """Twelve classes and three seeds give 36 rows, appended in order."""
        # Arrange
        config = ExperimentConfig(
            sizes=["24x4"],
            apps=[3],
            seeds=[1, 2, 3],
            population_size=6,
            generations=3,
            output="results.csv",
        )
        interactor = ExperimentInteractor(mock_instances, mock_results, HeterogeneityConfig())

        # Act
        rows = interactor.run(config)

        # Assert
        assert len(rows) == 36
        assert [row.class_ for row in rows[::3]] == list(TABLE_CLASSES)
        assert [row.seed for row in rows[:3]] == [1, 2, 3]
        assert all(row.dataset == "24x4" and row.apps == 3 for row in rows)
        assert all(row.generations == 3 and row.evaluations == 18 for row in rows)
        mock_results.start.assert_called_once_with(Path("results.csv"))
        assert mock_results.append.call_count == 36

    def test_baselines_run_alongside_ga(self, mock_instances, mock_results):
        config = ExperimentConfig(
            demo=True,
            algos=["ga", "random", "greedy"],
            seeds=[4],
            population_size=8,
            generations=5,
        )
        interactor = ExperimentInteractor(mock_instances, mock_results, HeterogeneityConfig())

        rows = interactor.run(config)

        assert [row.algo for row in rows] == ["ga", "random", "greedy"]
        assert rows[1].evaluations == 40
        assert rows[2].best_fitness_sum == 59

    def test_instances_from_files(self, mock_instances, mock_results, demo, tmp_path):
        prefix = tmp_path / "case"
        for suffix in (".etc", ".dep"):
            Path(f"{prefix}{suffix}").write_text("")
        mock_instances.load.return_value = demo
        config = ExperimentConfig(instances=[str(prefix)], algos=["fixed"])
        interactor = ExperimentInteractor(mock_instances, mock_results, HeterogeneityConfig())

        rows = interactor.run(config)

        mock_instances.load.assert_called_once_with(prefix)
        assert rows[0].class_ == "case"
        assert rows[0].best_fitness_sum == 88

    def test_schedule_file_feeds_fixed_algorithm(self, mock_instances, mock_results, tmp_path):
        schedule = tmp_path / "greedy.sched"
        schedule.write_text("3 3 3 2 0 0 1 1 0\n")
        mock_instances.load_schedule.return_value = np.array([3, 3, 3, 2, 0, 0, 1, 1, 0])
        config = ExperimentConfig(demo=True, algos=["fixed"], schedule=str(schedule))
        interactor = ExperimentInteractor(mock_instances, mock_results, HeterogeneityConfig())

        rows = interactor.run(config)

        mock_instances.load_schedule.assert_called_once()
        assert rows[0].best_fitness_sum == 59

    def test_process_pool_matches_serial(self, mock_instances, mock_results):
        config = ExperimentConfig(
            demo=True,
            algos=["ga", "random"],
            seeds=[1, 2],
            population_size=6,
            generations=4,
            budget=30,
        )
        interactor = ExperimentInteractor(mock_instances, mock_results, HeterogeneityConfig())

        serial = interactor.run(config)
        parallel = interactor.run(config.with_overrides(jobs=2))

        diff = DeepDiff(_without_runtime(serial), _without_runtime(parallel))
        assert not diff, f"Unexpected difference:\n{diff.pretty()}"


class TestExecuteRun:
    def test_non_monotone_trace_with_elitism(self, mocker, demo):
        """Test that a GA trace going up under elitism is reported as an invariant violation."""
        # Arrange
        scheduler = mocker.create_autospec(SchedulerUsecase, instance=True)
        scheduler.schedule.return_value = GaResult(
            best_genes=np.zeros(9, dtype=np.int64),
            best_fitness=80.0,
            best_makespan_max=15.0,
            trace=(80.0, 85.0),
            evaluations=2,
            generations=2,
        )
        mocker.patch("app.interactor.experiment.build_scheduler", return_value=scheduler)
        task = RunTask(InstanceSource(DEMO_CLASS, demo), "ga", 1, ExperimentConfig())

        # Act / Assert
        with pytest.raises(InvariantViolationError):
            execute_run(task)

    @pytest.mark.parametrize(
        "algo, expected",
        [
            ("ga", GeneticScheduler),
            ("random", RandomSearchScheduler),
            ("greedy", GreedyScheduler),
            ("fixed", FixedScheduler),
        ],
    )
    def test_build_scheduler(self, algo, expected):
        assert isinstance(build_scheduler(algo, ExperimentConfig()), expected)

    def test_random_budget_defaults_to_ga_budget(self):
        scheduler = build_scheduler("random", ExperimentConfig(population_size=10, generations=7))

        assert scheduler.budget == 70

    def test_unknown_algorithm(self):
        with pytest.raises(ValueError):
            build_scheduler("annealing", ExperimentConfig())


class TestExperimentInteractorSummarize:
    def test_table_layout(self, mock_instances, mock_results):
        # Arrange
        rows = [
            _row("u_i_hihi", "512x16", 20, "ga", 1, 10.0),
            _row("u_i_hihi", "512x16", 20, "ga", 2, 20.0),
            _row("u_c_hihi", "512x16", 20, "ga", 1, 30.0),
            _row("u_c_hihi", "1024x32", 30, "ga", 1, 40.0),
            _row("u_c_hihi", "512x16", 20, "random", 1, 50.0),
        ]
        interactor = ExperimentInteractor(mock_instances, mock_results, HeterogeneityConfig())

        # Act
        table = interactor.summarize(rows)

        # Assert
        lines = table.splitlines()
        assert "512x16 (20 apps)" in lines[0]
        assert lines[0].index("512x16 (20 apps)") < lines[0].index("1024x32 (30 apps)")
        assert "15.00" in table
        assert table.index("u_c_hihi") < table.index("u_i_hihi")
        assert table.index("ga") < table.index("random")

    def test_no_rows(self, mock_instances, mock_results):
        interactor = ExperimentInteractor(mock_instances, mock_results, HeterogeneityConfig())

        assert interactor.summarize([]) == "(no runs)"


class TestExperimentInteractorInstances:
    def test_load_demo_without_prefix(self, mock_instances, mock_results):
        interactor = ExperimentInteractor(mock_instances, mock_results, HeterogeneityConfig())

        assert interactor.load().n == 9
        assert interactor.load(full=True).n == 14
        mock_instances.load.assert_not_called()

    def test_load_delegates_to_repository(self, mock_instances, mock_results, demo):
        mock_instances.load.return_value = demo
        interactor = ExperimentInteractor(mock_instances, mock_results, HeterogeneityConfig())

        assert interactor.load(Path("data/case")) is demo
        mock_instances.load.assert_called_once_with(Path("data/case"))

    def test_generate_saves_instance(self, mock_instances, mock_results, tmp_path):
        spec = InstanceSpec.from_code("u_s_lohi", "30x5", 3, seed=2)
        mock_instances.save.return_value = [tmp_path / "a.etc"]
        interactor = ExperimentInteractor(mock_instances, mock_results, HeterogeneityConfig())

        paths = interactor.generate(spec, tmp_path)

        assert paths == [tmp_path / "a.etc"]
        instance, saved_spec, directory = mock_instances.save.call_args.args
        assert (instance.n, instance.q, instance.p) == (30, 5, 3)
        assert saved_spec == spec and directory == tmp_path

    def test_evaluate_defaults_to_first_cloud(self, mock_instances, mock_results, demo):
        interactor = ExperimentInteractor(mock_instances, mock_results, HeterogeneityConfig())

        report = interactor.evaluate(demo)

        assert report.makespan_sum == 88
        mock_instances.load_schedule.assert_not_called()

    def test_evaluate_schedule_file(self, mock_instances, mock_results, demo):
        mock_instances.load_schedule.return_value = np.array([3, 3, 3, 2, 0, 0, 1, 1, 0])
        interactor = ExperimentInteractor(mock_instances, mock_results, HeterogeneityConfig())

        report = interactor.evaluate(demo, Path("greedy.sched"))

        mock_instances.load_schedule.assert_called_once_with(Path("greedy.sched"), demo)
        assert report.genes.tolist() == [3, 3, 3, 2, 0, 0, 1, 1, 0]

    def test_demo_runs_ga_with_first_seed(self, mock_instances, mock_results):
        interactor = ExperimentInteractor(mock_instances, mock_results, HeterogeneityConfig())
        config = ExperimentConfig(seeds=[5, 6], population_size=8, generations=4)

        result = interactor.demo(config)

        assert result.generations == 4
        assert result.best_genes.size == 9
