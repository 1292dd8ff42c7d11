"""Application configuration."""
from .configuration import DEFAULT_PATH, add_args, get_config, load_config, set_config
from .core import Configuration, RunData, ScreeningData, BenchData, TheoryData
