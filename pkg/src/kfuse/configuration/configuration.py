"""The process-wide configuration, read from YAML by the pyrebar hooks and validated on first use."""
import argparse
import logging
import typing
import yaml

from .core import Configuration

DEFAULT_PATH = "config.yaml"
"""Configuration file read when -c is not given."""

_document: dict = {}
_config: typing.Optional[Configuration] = None


def add_args(parser: argparse.ArgumentParser):
    """Pyrebar pre-init hook to add the config-file command line parameter.

    Args:
        parser (argparse.ArgumentParser): The command line parser.
    """
    parser.add_argument(
        "-c",
        "--config",
        help=f"Path to the configuration yaml file. Defaults to {DEFAULT_PATH}; missing files leave the defaults.",
        dest="config",
        type=str,
        default=DEFAULT_PATH,
    )


def load_config(args: argparse.Namespace = None, file: str = None):
    """Pyrebar post-init hook to read the configuration file.

    The document is only validated when `get_config` is first called, so a bad file is reported by the
    subcommand that needs it.

    Args:
        args (argparse.Namespace, optional): The parsed command line arguments.
        file (str, optional): The configuration file path, used instead of `args.config`.

    Raises:
        ValueError: When neither a file nor a parsed -c option is given, or the file is not valid YAML.
    """
    path = file or getattr(args, "config", None)
    if not path:
        raise ValueError("No configuration file path specified.")

    logger = logging.getLogger(__name__)
    try:
        with open(path, "r") as f:
            document = yaml.safe_load(f)
    except OSError as e:
        logger.warning("Cannot read configuration path=%s (%s), using defaults", path, e.strerror or e)
        set_config({})
        return
    except yaml.YAMLError as e:
        raise ValueError(f"configuration file {path} is not valid YAML: {e}") from None

    set_config(document or {})
    logger.info("Loaded configuration file path=%s", path)


def get_config() -> Configuration:
    """The validated configuration, defaults filled in.

    Raises:
        ValueError: When the loaded document is not a valid configuration.

    Returns:
        Configuration: The configuration.
    """
    global _config
    if _config is None:
        _config = Configuration.from_dict(_document)
    return _config


def set_config(value: dict | Configuration):
    """Replace the configuration.

    Args:
        value (dict | Configuration): A raw document, validated on the next `get_config`, or a configuration.
    """
    global _document
    global _config
    if isinstance(value, Configuration):
        _document, _config = value.as_dict(), value
    else:
        _document, _config = value, None
