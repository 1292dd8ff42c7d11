"""Seeded random draws.

Every generator is a Philox counter-based bit generator keyed by a `SeedSequence` of the master seed and,
for replicated experiments, the replicate index. A replicate's stream therefore depends only on
(master_seed, replicate) and never on the order in which replicates are executed.
"""
import enum
import numpy as np
import typing

MIXTURE_MEANS = (3.0, -3.0)
"""Component means of the two-point normal mixture."""
MIXTURE_SD = 0.3
"""Component standard deviation of the two-point normal mixture."""


class DrawKind(enum.Enum):
    """Supported marginal distributions."""

    NORMAL = "normal"
    CAUCHY = "cauchy"
    T2 = "t2"
    UNIFORM = "uniform"
    POISSON = "poisson"
    MIXTURE = "mixture"
    """Equal-weight mixture of N(3, 0.3^2) and N(-3, 0.3^2)."""

    @classmethod
    def _missing_(cls, value: typing.Any) -> typing.Any:
        if isinstance(value, str):
            for member in cls:
                if member.value == value.lower():
                    return member

        return super()._missing_(value)


def make_rng(seed: int, replicate: typing.Optional[int] = None) -> np.random.Generator:
    """Create the generator for a seed and, optionally, a replicate index.

    Args:
        seed (int): Non-negative 64-bit master seed.
        replicate (typing.Optional[int], optional): Replicate index. Defaults to None.

    Raises:
        ValueError: When the seed or replicate is negative or exceeds 64 bits.

    Returns:
        np.random.Generator: A fresh, independent generator.
    """
    entropy = [seed] if replicate is None else [seed, replicate]
    for value in entropy:
        if not 0 <= int(value) < 2**64:
            raise ValueError(f"seeds must be non-negative 64-bit integers, got {value}")
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([int(v) for v in entropy])))


def draw(
    rng: np.random.Generator, kind: DrawKind | str, size: int | tuple[int, ...], mu: typing.Any = None
) -> np.ndarray:
    """Draw iid values from an existing generator.

    Args:
        rng (np.random.Generator): The generator, advanced by the call.
        kind (DrawKind | str): The distribution.
        size (int | tuple[int, ...]): Output shape.
        mu (typing.Any, optional): Poisson mean(s), broadcast against `size`. Defaults to None.

    Raises:
        ValueError: When the kind is unknown or a Poisson mean is missing or negative.

    Returns:
        np.ndarray: The draws.
    """
    kind = DrawKind(kind)
    if kind is DrawKind.NORMAL:
        return rng.standard_normal(size)
    if kind is DrawKind.CAUCHY:
        return rng.standard_cauchy(size)
    if kind is DrawKind.T2:
        return rng.standard_t(2, size)
    if kind is DrawKind.UNIFORM:
        return rng.random(size)
    if kind is DrawKind.MIXTURE:
        means = np.where(rng.random(size) < 0.5, MIXTURE_MEANS[0], MIXTURE_MEANS[1])
        return means + MIXTURE_SD * rng.standard_normal(size)

    if mu is None:
        raise ValueError("poisson draws require a mean")
    mu = np.asarray(mu, dtype=float)
    if np.any(~np.isfinite(mu)) or np.any(mu < 0):
        raise ValueError("poisson means must be finite and non-negative")
    return rng.poisson(mu, size).astype(np.int64)


def rng_draws(kind: DrawKind | str, seed: int, n: int, mu: typing.Any = None) -> np.ndarray:
    """Draw `n` iid values from a freshly seeded generator.

    Args:
        kind (DrawKind | str): The distribution.
        seed (int): The seed.
        n (int): Number of draws, at least 1.
        mu (typing.Any, optional): Poisson mean(s). Defaults to None.

    Returns:
        np.ndarray: The draws; identical for identical arguments.
    """
    if n < 1:
        raise ValueError(f"at least one draw is required, got n={n}")
    return draw(make_rng(seed), kind, n, mu=mu)
