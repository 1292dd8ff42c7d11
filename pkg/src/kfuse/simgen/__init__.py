"""Seeded generators of the simulation models."""
from .rng import DrawKind, draw, make_rng, rng_draws
from .core import ModelId, ModelSpec, MODEL_MINIMUM_P, MIN_OBSERVATIONS
from .models import generate, cs_gaussian, ar_gaussian, POISSON_LOG_MEAN_CAP
