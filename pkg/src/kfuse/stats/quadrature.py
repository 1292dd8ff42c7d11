"""Adaptive one-dimensional quadrature."""
import math
import scipy.integrate
import typing

DEFAULT_TOL = 1.0e-8


def adaptive_quadrature(
    f: typing.Callable[[float], float], a: float, b: float, tol: float = DEFAULT_TOL, limit: int = 200
) -> float:
    """Integrate `f` over [a, b] with adaptive Gauss-Kronrod quadrature.

    Args:
        f (typing.Callable[[float], float]): Integrand, continuous on [a, b].
        a (float): Lower limit.
        b (float): Upper limit, greater than `a`.
        tol (float, optional): Absolute error target. Defaults to 1e-8.
        limit (int, optional): Maximum number of subintervals. Defaults to 200.

    Raises:
        ValueError: When the limits or tolerance are invalid, or the integrand is not finite.

    Returns:
        float: The integral estimate.
    """
    if not (math.isfinite(a) and math.isfinite(b)) or not a < b:
        raise ValueError(f"invalid integration limits [{a}, {b}]")
    if not tol > 0:
        raise ValueError(f"tolerance must be positive, got {tol}")

    def checked(x: float) -> float:
        value = f(x)
        if not math.isfinite(value):
            raise ValueError(f"integrand is not finite at x={x}")
        return value

    value, _ = scipy.integrate.quad(checked, a, b, epsabs=tol, epsrel=0.0, limit=limit)
    return float(value)
