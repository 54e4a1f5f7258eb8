"""
Orbit integration with an embedded Runge-Kutta stepper and exact location
of section crossings on its dense output.

Orbits run in the affine plane while |y| stays below the chart radius.
Beyond it, systems of degree m ≤ 2 in y continue in the chart y = 1/v at
infinity, where x is the independent variable and the state is
(ln|v|, t):

    d ln|v| / dx = -Σ Pᵢ(x) v^(2-i),    dt / dx = v.

The line v = 0 is invariant there, so only |x| reaching the escape radius
takes an orbit to infinity. The logarithmic coordinate keeps orbits whose
|y| exceeds the double precision range finite.
"""
import math
import sys
import warnings
from dataclasses import dataclass
from typing import Callable, Iterator, List, NamedTuple, Optional, Sequence

import numpy as np
from scipy.integrate import OdeSolver
from scipy.optimize import brentq

from newton_centers.monodromy.newton_system import NewtonSystem
from newton_centers.numerics import messages
from newton_centers.numerics.config import IntegratorConfig
from newton_centers.utils.choice_enum import ChoiceEnum
from newton_centers.utils.exceptions import (
    InvalidParameterError,
    NumericsWarning,
)

#: Largest w for which exp(w) is a finite double.
MAX_EXPONENT = math.log(sys.float_info.max)

#: The chart is left once |y| falls below this fraction of the chart radius.
CHART_EXIT_FACTOR = 0.5


class Termination(ChoiceEnum):
    SECTION_RETURN = "SectionReturn"
    ESCAPED = "Escaped"
    MAX_TIME = "MaxTime"
    MAX_STEPS = "MaxSteps"
    STIFFNESS_FAILURE = "StiffnessFailure"
    NON_FINITE = "NonFinite"


class Chart(ChoiceEnum):
    AFFINE = "Affine"
    Y_INFINITY = "YInfinity"


class Step(NamedTuple):
    """
    One accepted step from *t0* to *t1*. *dense* interpolates (x, y) in t
    on affine steps and is None in the chart at infinity, where y may be
    ±inf once it leaves the double precision range. *angle* is the polar
    angle of the end point.
    """

    t0: float
    t1: float
    state0: np.ndarray
    state1: np.ndarray
    dense: Optional[Callable]
    chart: Chart = Chart.AFFINE
    angle: float = math.nan


@dataclass(frozen=True)
class Trajectory:
    """
    Integrated orbit: times and states at the accepted steps, ending at the
    section crossing when the orbit returned.
    """

    t: np.ndarray
    x: np.ndarray
    y: np.ndarray
    termination: Termination
    message: str = ""

    @property
    def returned(self) -> bool:
        return self.termination is Termination.SECTION_RETURN

    @property
    def end_time(self) -> float:
        return float(self.t[-1])

    def as_array(self) -> np.ndarray:
        """
        Columns t, x, y.
        """
        return np.column_stack([self.t, self.x, self.y])


def chart_function(system: NewtonSystem, sign: int) -> Callable:
    """
    Returns f(x, (w, t)) of the chart y = 1/v at infinity on the side
    sign(y) = *sign*, with w = ln|v|.

    Parameters
    ----------
    system : NewtonSystem
        System of degree at most 2 in y
    sign : int
        Sign of y (and v) along the orbit, ±1

    Returns
    -------
    Callable
        Right-hand side for :mod:`scipy.integrate`
    """
    coefficients = system.float_coefficients()

    def f(x, state):
        v = sign * math.exp(min(state[0], MAX_EXPONENT))
        dw = 0.0
        for i, array in enumerate(coefficients):
            dw -= np.polyval(array, x) * v ** (2 - i)
        return np.array([dw, v])

    return f


def _chart_y(sign: int, w: float) -> float:
    if -w >= MAX_EXPONENT:
        return sign * math.inf
    return sign * math.exp(-w)


class Stepper:
    """
    Drives a :mod:`scipy.integrate` solver one step at a time within the
    bounds of an :class:`IntegratorConfig`, switching between the affine
    plane and the chart at infinity. After iteration, :attr:`termination`
    tells why it stopped unless the consumer stopped first.
    """

    def __init__(
        self,
        system: NewtonSystem,
        initial: Sequence[float],
        config: IntegratorConfig,
        escape_radius: Optional[float] = None,
    ):
        initial = np.asarray(initial, dtype=float)
        if initial.shape != (2,) or not np.all(np.isfinite(initial)):
            message = messages.BAD_INITIAL_CONDITION.format(initial=initial)
            raise InvalidParameterError(message)
        self.system = system
        self.initial = initial
        self.config = config
        self.escape_radius = escape_radius or config.escape_radius
        self.has_chart = system.m <= 2
        self.termination: Optional[Termination] = None
        self.message = ""

    def _solver(self, fun, t0, state, bound) -> OdeSolver:
        return self.config.solver_class(
            fun,
            t0,
            np.asarray(state, dtype=float),
            bound,
            rtol=self.config.rel_tol,
            atol=self.config.abs_tol,
        )

    def affine_solver(self, time: float, state) -> OdeSolver:
        return self._solver(
            self.system.rhs_function(), time, state, self.config.max_time
        )

    def chart_solver(self, time: float, x: float, y: float) -> OdeSolver:
        sign = 1 if y > 0 else -1
        return self._solver(
            chart_function(self.system, sign),
            x,
            (-math.log(abs(y)), time),
            sign * self.escape_radius,
        )

    def _fail(self, time: float, reason: str):
        self.termination = Termination.STIFFNESS_FAILURE
        self.message = messages.STIFFNESS_FAILURE.format(
            initial=tuple(self.initial), time=time, reason=reason
        )
        warnings.warn(self.message, NumericsWarning)

    def _affine_step(self, solver: OdeSolver) -> Optional[Step]:
        t0, state0 = solver.t, solver.y.copy()
        message = solver.step()
        if solver.status == "failed":
            self._fail(t0, message)
            return None
        state1 = solver.y.copy()
        return Step(
            t0,
            solver.t,
            state0,
            state1,
            solver.dense_output(),
            Chart.AFFINE,
            math.atan2(state1[1], state1[0]),
        )

    def _chart_step(self, solver: OdeSolver, sign: int) -> Optional[Step]:
        x0, (w0, t0) = solver.t, solver.y.copy()
        message = solver.step()
        if solver.status == "failed":
            self._fail(t0, message)
            return None
        x1, (w1, t1) = solver.t, solver.y
        return Step(
            t0,
            t1,
            np.array([x0, _chart_y(sign, w0)]),
            np.array([x1, _chart_y(sign, w1)]),
            None,
            Chart.Y_INFINITY,
            math.atan2(sign, x1 * math.exp(min(w1, MAX_EXPONENT))),
        )

    def __iter__(self) -> Iterator[Step]:
        chart_radius = self.config.chart_radius
        exit_level = -math.log(CHART_EXIT_FACTOR * chart_radius)
        x, y = self.initial
        in_chart = self.has_chart and abs(y) > chart_radius
        if in_chart:
            sign = 1 if y > 0 else -1
            solver = self.chart_solver(0.0, x, y)
        else:
            solver = self.affine_solver(0.0, self.initial)
        for _ in range(self.config.max_steps):
            if in_chart:
                step = self._chart_step(solver, sign)
            else:
                step = self._affine_step(solver)
            if step is None:
                return
            yield step
            x, y = step.state1
            if not (math.isfinite(x) and math.isfinite(step.t1)):
                self.termination = Termination.NON_FINITE
                return
            if step.t1 >= self.config.max_time:
                self.termination = Termination.MAX_TIME
                return
            if in_chart:
                if solver.status == "finished":
                    self.termination = Termination.ESCAPED
                    return
                if solver.y[0] > exit_level:
                    in_chart = False
                    solver = self.affine_solver(step.t1, step.state1)
                continue
            if not math.isfinite(y):
                self.termination = Termination.NON_FINITE
                return
            if math.hypot(x, y) > self.escape_radius:
                self.termination = Termination.ESCAPED
                return
            if self.has_chart and abs(y) > chart_radius:
                in_chart = True
                sign = 1 if y > 0 else -1
                solver = self.chart_solver(step.t1, x, y)
        self.termination = Termination.MAX_STEPS


def section_crossing(
    step: Step, config: IntegratorConfig
) -> Optional[float]:
    """
    Time at which the step crosses y = 0 from above with x > 0, located
    by bracketing on the dense output.
    """
    if step.dense is None:
        return None
    if not (step.state0[1] > 0 and step.state1[1] <= 0):
        return None
    if step.state1[1] == 0:
        time = step.t1
    else:
        time = brentq(
            lambda t: step.dense(t)[1],
            step.t0,
            step.t1,
            xtol=config.event_time_tol,
        )
    if step.dense(time)[0] <= 0:
        return None
    return time


def integrate_orbit(
    system: NewtonSystem,
    initial: Sequence[float],
    config: Optional[IntegratorConfig] = None,
    stop_at_section: bool = True,
) -> Trajectory:
    """
    Integrates ẋ = y, ẏ = Σ Pᵢ(x)yⁱ from an initial condition.

    Parameters
    ----------
    system : NewtonSystem
        System to integrate
    initial : Sequence[float]
        (x, y) at t = 0
    config : IntegratorConfig, optional
        Tolerances and bounds, by default :class:`IntegratorConfig()`
    stop_at_section : bool, optional
        Whether to stop at the first crossing of the section y = 0, x > 0
        from above, by default True

    Returns
    -------
    Trajectory
        Accepted steps and the reason integration stopped
    """
    config = config or IntegratorConfig()
    stepper = Stepper(system, initial, config)
    times: List[float] = [0.0]
    states: List[np.ndarray] = [stepper.initial]
    termination = None
    for step in stepper:
        crossing = section_crossing(step, config) if stop_at_section else None
        if crossing is not None:
            times.append(crossing)
            states.append(step.dense(crossing))
            termination = Termination.SECTION_RETURN
            break
        times.append(step.t1)
        states.append(step.state1)
    termination = termination or stepper.termination
    states = np.array(states)
    return Trajectory(
        np.array(times),
        states[:, 0],
        states[:, 1],
        termination,
        stepper.message,
    )
