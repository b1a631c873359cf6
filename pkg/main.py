import logging
import sys

from app.command.cli import main

logger = logging.getLogger(__name__)


if __name__ == "__main__":
    try:
        main()
    except KeyboardInterrupt:
        logger.info("Stopped by user")
        sys.exit(130)
