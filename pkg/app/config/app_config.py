import logging
import os
from dataclasses import dataclass


@dataclass
class AppConfig:
    """
    Application configuration class to hold process-wide settings.
    """

    # Environment constants
    ENV_DEVELOPMENT = "development"
    ENV_PRODUCTION = "production"

    # Default values
    DEFAULT_ENV = ENV_DEVELOPMENT
    DEFAULT_LOG_LEVEL_DEV = "debug"
    DEFAULT_LOG_LEVEL_PROD = "info"
    LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

    env: str
    log_level: str

    @classmethod
    def from_env(cls) -> "AppConfig":
        """Load application configuration from environment variables."""
        env = os.getenv("ENV", cls.DEFAULT_ENV).lower()

        # Set log level based on environment
        if env == cls.ENV_DEVELOPMENT:
            log_level = os.getenv("LOG_LEVEL", cls.DEFAULT_LOG_LEVEL_DEV)
        else:
            log_level = os.getenv("LOG_LEVEL", cls.DEFAULT_LOG_LEVEL_PROD)

        return cls(env=env, log_level=log_level.lower())

    @property
    def is_development(self) -> bool:
        """Check if the application is in development mode."""
        return self.env == self.ENV_DEVELOPMENT

    @property
    def is_production(self) -> bool:
        """Check if the application is in production mode."""
        return self.env == self.ENV_PRODUCTION

    def logging_level(self) -> int:
        level = logging.getLevelName(self.log_level.upper())
        if not isinstance(level, int):
            raise ValueError(f"Unsupported log level: {self.log_level}")
        return level

    def configure_logging(self) -> None:
        """Send log records to stderr so stdout stays free for tables and JSON."""
        logging.basicConfig(level=self.logging_level(), format=self.LOG_FORMAT)
