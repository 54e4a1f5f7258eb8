"""
Definition of the :class:`IntegratorConfig` class.
"""
from dataclasses import dataclass, fields, replace
from typing import Dict, Type

from scipy.integrate import DOP853, RK45, OdeSolver

from newton_centers.numerics import messages
from newton_centers.utils.exceptions import InvalidParameterError

#: Embedded Runge-Kutta pairs available for integration.
METHODS: Dict[str, Type[OdeSolver]] = {"RK45": RK45, "DOP853": DOP853}

#: Radii of the rings of initial conditions used by the monodromy oracle.
ORACLE_RADII = (1e2, 1e3)


@dataclass(frozen=True)
class IntegratorConfig:
    """
    Tolerances and bounds shared by every integration.

    Orbits are sampled on the section y = 0, x > 0, crossed from y > 0 to
    y < 0 (the clockwise direction of a center of ẋ = y). Above
    |y| = *chart_radius* orbits continue in the chart y = 1/v at infinity.
    """

    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_time: float = 1e4
    max_steps: int = 10**6
    escape_radius: float = 1e6
    chart_radius: float = 1e3
    event_time_tol: float = 1e-13
    method: str = "RK45"

    def __post_init__(self):
        for item in fields(self):
            if item.name == "method":
                continue
            value = getattr(self, item.name)
            if not value > 0:
                message = messages.NOT_POSITIVE.format(
                    name=item.name, value=value
                )
                raise InvalidParameterError(message)
        if self.method not in METHODS:
            message = messages.BAD_METHOD.format(
                method=self.method, methods=", ".join(METHODS)
            )
            raise InvalidParameterError(message)

    @property
    def solver_class(self) -> Type[OdeSolver]:
        return METHODS[self.method]

    def refined(self, factor: float = 0.5) -> "IntegratorConfig":
        """
        Returns a copy with both tolerances multiplied by *factor*.
        """
        return replace(
            self, rel_tol=self.rel_tol * factor, abs_tol=self.abs_tol * factor
        )
