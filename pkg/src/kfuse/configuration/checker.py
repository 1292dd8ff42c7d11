"""Validate the configuration file."""
import logging
import yaml

from .configuration import get_config
from ..utils import exit_codes, resolve_threads

SUBCOMMAND = "check-config"
ALIASES = ["check", "config"]
LOGGER_NAME = "kfuse"


@exit_codes
def execute(args=None) -> int:
    """Load the configuration and print it with every default filled in.

    Args:
        args (argparse.Namespace, optional): The command line arguments. Defaults to None.

    Returns:
        int: The return code to provide back to the OS.
    """
    logger = logging.getLogger(__name__)
    config = get_config()

    logger.info("configuration is valid, %d worker threads will be used", resolve_threads(None, config.run.threads))
    print(yaml.safe_dump(config.as_dict(), sort_keys=False), end="")
    return 0
