"""
Numerical corroboration of monodromy at infinity.

Orbits are launched from rings of large radius R around the origin. A
monodromic infinity makes every one of them wind once around the origin.
Orbits are followed through the chart y = 1/v at infinity (see
:mod:`newton_centers.numerics.integrate`), so centers whose orbits climb
to |y| far beyond R, or beyond the double precision range, still close up.
An orbit whose |x| reaches max(10R, escape radius) is a confident
counterexample. Anything else (time or step budget exhausted, stiffness,
non-finite states) leaves the oracle inconclusive.
"""
import math
import warnings
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from newton_centers.monodromy.newton_system import NewtonSystem
from newton_centers.numerics import messages
from newton_centers.numerics.config import ORACLE_RADII, IntegratorConfig
from newton_centers.numerics.integrate import Stepper, Termination
from newton_centers.utils.choice_enum import ChoiceEnum
from newton_centers.utils.exceptions import (
    ConcordanceWarning,
    NumericsWarning,
)

#: Number of initial conditions on each ring.
ANGLES = 8

#: Escape radius of an orbit, in units of its ring radius, unless the
#: configured escape radius is larger.
ESCAPE_FACTOR = 10


class OracleOutcome(ChoiceEnum):
    WINDS = "Winds"
    ESCAPES = "Escapes"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class RingOrbit:
    """
    One orbit launched from the ring of radius *radius* at angle *angle*.
    """

    radius: float
    angle: float
    outcome: OracleOutcome
    winding: float
    time: float
    termination: Optional[Termination] = None


@dataclass(frozen=True)
class OracleReport:
    outcome: OracleOutcome
    orbits: Tuple[RingOrbit, ...] = ()

    @property
    def monodromic(self) -> Optional[bool]:
        """
        True or False for confident outcomes, None when inconclusive.
        """
        if self.outcome is OracleOutcome.INCONCLUSIVE:
            return None
        return self.outcome is OracleOutcome.WINDS

    def details(self) -> str:
        counts = {}
        for orbit in self.orbits:
            key = (orbit.termination or orbit.outcome).value
            counts[key] = counts.get(key, 0) + 1
        return ", ".join(f"{key}: {count}" for key, count in counts.items())


def _launch(
    system: NewtonSystem,
    radius: float,
    angle: float,
    config: IntegratorConfig,
) -> RingOrbit:
    initial = (radius * math.cos(angle), radius * math.sin(angle))
    stepper = Stepper(
        system,
        initial,
        config,
        escape_radius=max(ESCAPE_FACTOR * radius, config.escape_radius),
    )
    winding = 0.0
    previous = angle
    time = 0.0
    for step in stepper:
        time = step.t1
        current = step.angle
        # Unwrap to the nearest branch
        winding += (current - previous + math.pi) % (2 * math.pi) - math.pi
        previous = current
        if abs(winding) >= 2 * math.pi:
            return RingOrbit(
                radius, angle, OracleOutcome.WINDS, winding, time
            )
    if stepper.termination is Termination.ESCAPED:
        outcome = OracleOutcome.ESCAPES
    else:
        outcome = OracleOutcome.INCONCLUSIVE
    return RingOrbit(
        radius, angle, outcome, winding, time, stepper.termination
    )


def monodromy_oracle(
    system: NewtonSystem,
    config: Optional[IntegratorConfig] = None,
    radii: Sequence[float] = ORACLE_RADII,
    angles: int = ANGLES,
) -> OracleReport:
    """
    Tests monodromy at infinity numerically. Advisory only.

    Parameters
    ----------
    system : NewtonSystem
        System with a unique equilibrium at the origin
    config : IntegratorConfig, optional
        Tolerances and bounds, by default :class:`IntegratorConfig()`
    radii : Sequence[float], optional
        Radii of the rings of initial conditions, by default
        :data:`ORACLE_RADII`
    angles : int, optional
        Initial conditions per ring, by default :data:`ANGLES`

    Returns
    -------
    OracleReport
        Escapes if any orbit escaped, Winds if every orbit wound once,
        Inconclusive otherwise
    """
    config = config or IntegratorConfig()
    orbits = tuple(
        _launch(system, radius, angle, config)
        for radius in radii
        for angle in np.linspace(0, 2 * math.pi, angles, endpoint=False)
    )
    outcomes = {orbit.outcome for orbit in orbits}
    if OracleOutcome.ESCAPES in outcomes:
        outcome = OracleOutcome.ESCAPES
    elif outcomes == {OracleOutcome.WINDS}:
        outcome = OracleOutcome.WINDS
    else:
        outcome = OracleOutcome.INCONCLUSIVE
    report = OracleReport(outcome, orbits)
    if outcome is OracleOutcome.INCONCLUSIVE:
        message = messages.ORACLE_INCONCLUSIVE.format(
            system=system, details=report.details()
        )
        warnings.warn(message, NumericsWarning)
    return report


def check_concordance(
    report: OracleReport, monodromic: bool, system: NewtonSystem
) -> bool:
    """
    Compares an oracle report with an exact verdict. A confident
    contradiction is warned about as a :class:`ConcordanceWarning` and
    returns False; inconclusive reports never contradict.
    """
    if report.monodromic is None or report.monodromic == monodromic:
        return True
    message = messages.ORACLE_DISAGREES.format(
        outcome=report.outcome.value, verdict=monodromic, system=system
    )
    warnings.warn(message, ConcordanceWarning)
    return False
