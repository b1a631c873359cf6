from dependency_injector import containers, providers

from app.config.app_config import AppConfig
from app.config.benchmark_config import HeterogeneityConfig
from app.datastore.instance import InstanceDatastore
from app.datastore.result import CsvResultDatastore
from app.interactor.experiment import ExperimentInteractor


class Container(containers.DeclarativeContainer):
    """DI Container - Dependency Injection Container"""

    # Application configuration
    app_config = providers.Singleton(AppConfig.from_env)

    # ETC generation ranges
    heterogeneity_config = providers.Singleton(HeterogeneityConfig.from_env)

    # Repository Layer
    instance_repository = providers.Singleton(InstanceDatastore)
    result_repository = providers.Singleton(CsvResultDatastore)

    # Usecase Layer
    experiment_usecase = providers.Factory(
        ExperimentInteractor,
        instances=instance_repository,
        results=result_repository,
        heterogeneity=heterogeneity_config,
    )
