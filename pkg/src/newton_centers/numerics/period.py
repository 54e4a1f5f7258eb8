"""
Sampling of the period function of a center on the section y = 0, x > 0.
"""
import math
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, List, Optional, Sequence, Union

import numpy as np

from newton_centers.monodromy.newton_system import NewtonSystem
from newton_centers.numerics import messages
from newton_centers.numerics.config import IntegratorConfig
from newton_centers.numerics.integrate import Trajectory, integrate_orbit
from newton_centers.utils.exceptions import (
    InvalidParameterError,
    NumericsWarning,
)
from newton_centers.utils.requires_pandas import requires_pandas

#: Refinement error allowed on a converged sample, in units of
#: rel_tol·period.
CONVERGENCE_FACTOR = 10

#: Column names of period tables.
PERIOD_COLUMNS = ("amplitude", "period", "refinement_error", "converged")


@dataclass(frozen=True)
class PeriodSample:
    """
    First return time T of the orbit through (A, 0).

    *refinement_error* is the change of T between the configured tolerances
    and half of them; non-returning orbits carry NaN in both fields.
    """

    amplitude: float
    period: float
    converged: bool
    refinement_error: float

    def as_row(self) -> tuple:
        return (
            self.amplitude,
            self.period,
            self.refinement_error,
            float(self.converged),
        )


def _return_time(
    system: NewtonSystem, amplitude: float, config: IntegratorConfig
) -> Optional[float]:
    trajectory = integrate_orbit(system, (amplitude, 0.0), config)
    if not trajectory.returned:
        message = messages.NO_RETURN.format(
            amplitude=amplitude, reason=trajectory.termination.value
        )
        warnings.warn(message, NumericsWarning)
        return None
    return trajectory.end_time


def period_sample(
    system: NewtonSystem, amplitude: float, config: IntegratorConfig
) -> PeriodSample:
    """
    Measures the return time at the configured and at halved tolerances.
    The two estimates are combined by Richardson extrapolation, assuming
    the global error scales linearly with the tolerance.
    """
    if not (math.isfinite(amplitude) and amplitude > 0):
        message = messages.BAD_AMPLITUDE.format(amplitude=amplitude)
        raise InvalidParameterError(message)
    coarse = _return_time(system, amplitude, config)
    fine = _return_time(system, amplitude, config.refined())
    if coarse is None or fine is None:
        return PeriodSample(amplitude, math.nan, False, math.nan)
    error = abs(fine - coarse)
    period = 2 * fine - coarse
    converged = error < CONVERGENCE_FACTOR * config.rel_tol * period
    if not converged:
        message = messages.UNCONVERGED_PERIOD.format(
            amplitude=amplitude, error=error, period=period
        )
        warnings.warn(message, NumericsWarning)
    return PeriodSample(amplitude, period, converged, error)


def period_function(
    system: NewtonSystem,
    amplitudes: Iterable[float],
    config: Optional[IntegratorConfig] = None,
) -> List[PeriodSample]:
    """
    Samples the period function of a center.

    Parameters
    ----------
    system : NewtonSystem
        System whose origin is a (global) center
    amplitudes : Iterable[float]
        Positive x-coordinates of the starting points (A, 0)
    config : IntegratorConfig, optional
        Tolerances and bounds, by default :class:`IntegratorConfig()`

    Returns
    -------
    List[PeriodSample]
        One sample per amplitude, in the given order
    """
    config = config or IntegratorConfig()
    return [period_sample(system, a, config) for a in amplitudes]


def fit_period_exponent(samples: Sequence[PeriodSample]) -> float:
    """
    Slope of log T against log A over the converged samples.
    """
    usable = [s for s in samples if s.converged]
    amplitudes = np.log([s.amplitude for s in usable])
    periods = np.log([s.period for s in usable])
    slope, _ = np.polyfit(amplitudes, periods, 1)
    return float(slope)


@requires_pandas
def period_table(samples: Sequence[PeriodSample]):
    """
    Returns the samples as a :class:`pandas.DataFrame`.
    """
    import pandas as pd

    data = pd.DataFrame(
        [s.as_row() for s in samples], columns=list(PERIOD_COLUMNS)
    )
    data["converged"] = data["converged"].astype(bool)
    return data


def _target(destination: Union[str, Path, IO]) -> Union[Path, IO]:
    if hasattr(destination, "write"):
        return destination
    return Path(destination)


def write_period_csv(
    samples: Sequence[PeriodSample], destination: Union[str, Path, IO]
) -> Union[Path, IO]:
    """
    Writes a period table as CSV with a header row to a path or an open
    text stream.
    """
    target = _target(destination)
    rows = np.array([s.as_row() for s in samples], dtype=float).reshape(
        -1, len(PERIOD_COLUMNS)
    )
    np.savetxt(
        target,
        rows,
        delimiter=",",
        header=",".join(PERIOD_COLUMNS),
        comments="",
        fmt="%.17g",
    )
    return target


def write_trajectory_csv(
    trajectory: Trajectory, destination: Union[str, Path, IO]
) -> Union[Path, IO]:
    """
    Writes the t, x, y columns of a trajectory as CSV with a header row.
    """
    target = _target(destination)
    np.savetxt(
        target,
        trajectory.as_array(),
        delimiter=",",
        header="t,x,y",
        comments="",
        fmt="%.17g",
    )
    return target
