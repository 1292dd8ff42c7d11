"""Covariance structures of the Gaussian design models."""
import dataclasses
import enum
import numpy as np
import scipy.linalg
import typing


class CovarianceKind(enum.Enum):
    """Supported covariance families."""

    IDENTITY = "identity"
    """Independent standard normal covariates."""
    CS = "cs"
    """Compound symmetry: unit diagonal, constant off-diagonal rho."""
    AR = "ar"
    """First order autoregressive: Sigma_ij = rho^|i-j|."""

    @classmethod
    def _missing_(cls, value: typing.Any) -> typing.Any:
        if isinstance(value, str):
            lowered = value.lower()
            aliases = {"compound_symmetry": cls.CS, "ar1": cls.AR}
            if lowered in aliases:
                return aliases[lowered]
            for member in cls:
                if member.value == lowered:
                    return member

        return super()._missing_(value)


@dataclasses.dataclass(frozen=True, kw_only=True)
class CovarianceSpec:
    """A structured p x p covariance matrix."""

    kind: CovarianceKind
    """The covariance family."""
    p: int
    """Dimension."""
    rho: float = 0.0
    """Correlation parameter, ignored for the identity."""

    def __post_init__(self):
        """Validate the parameters."""
        object.__setattr__(self, "kind", CovarianceKind(self.kind))
        object.__setattr__(self, "rho", float(self.rho) if self.kind is not CovarianceKind.IDENTITY else 0.0)

        if self.p < 1:
            raise ValueError(f"dimension must be positive, got p={self.p}")
        if not abs(self.rho) < 1:
            raise ValueError(f"|rho| must be below 1, got rho={self.rho}")
        if self.kind is CovarianceKind.CS and self.p > 1 and not self.rho > -1.0 / (self.p - 1):
            raise ValueError(f"compound symmetry needs rho > -1/(p-1) = {-1.0 / (self.p - 1):.6g}, got {self.rho}")

    def dense(self) -> np.ndarray:
        """The explicit p x p matrix.

        Returns:
            np.ndarray: Sigma.
        """
        if self.kind is CovarianceKind.IDENTITY:
            return np.eye(self.p)
        if self.kind is CovarianceKind.CS:
            return (1.0 - self.rho) * np.eye(self.p) + self.rho * np.ones((self.p, self.p))
        return scipy.linalg.toeplitz(self.rho ** np.arange(self.p))

    def __str__(self) -> str:
        """Short name, e.g. `AR(0.7)`."""
        if self.kind is CovarianceKind.IDENTITY:
            return f"I({self.p})"
        return f"{self.kind.name}({self.rho:g})"
