"""
Asymptotic orders of the time an orbit spends passing a side or a corner of
the polycycle at infinity, as a function of the distance *s* to it.

The models are the regular fields of the compactification near each piece,
with the real time recovered through the clock dt = x^p y^q dτ:

* side: x' = 1, y' = 0, from (0, s) to x = 1, giving O(s^q)
* hyperbolic corner: x' = x, y' = -λy, from (s, η) to x = η, giving
  O(s^ρ |ln s|^α) with ρ = min(p, λq) and α = 1 iff p = λq
* semi-hyperbolic corner: x' = x^k(1 + a x^(k-1)), y' = -λy, from (s, η) to
  x = η
"""
import warnings
from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Sequence

import numpy as np
import sympy
from scipy.integrate import solve_ivp

from newton_centers.numerics import messages
from newton_centers.numerics.config import IntegratorConfig
from newton_centers.utils.choice_enum import ChoiceEnum
from newton_centers.utils.exceptions import (
    InvalidParameterError,
    NumericsWarning,
)
from newton_centers.utils.rational import to_rational


class PassageKind(ChoiceEnum):
    SIDE = "Side"
    HYPERBOLIC = "HyperbolicCorner"
    SEMI_HYPERBOLIC = "SemiHyperbolicCorner"


class PassageLimit(ChoiceEnum):
    ZERO = "Zero"
    FINITE = "Finite"
    INFINITE = "Infinite"
    EXPONENTIAL = "Exponential"


#: Parameters required by each kind of passage.
PARAMETERS: Dict[PassageKind, tuple] = {
    PassageKind.SIDE: ("q",),
    PassageKind.HYPERBOLIC: ("p", "q", "lambda"),
    PassageKind.SEMI_HYPERBOLIC: ("p", "q", "k", "a", "lambda"),
}

#: Position of the exit section of the corner models.
ETA = 1.0

#: Default distances used by :func:`fit_passage_exponent`.
DEFAULT_DISTANCES = (1e-2, 5e-3, 2e-3)

S = sympy.Symbol("s", positive=True)


@dataclass(frozen=True)
class PassageOrder:
    """
    The order s^exponent · |ln s|^log_power, multiplied by
    exp(exponential_rate · s^exponential_power) on the exponential branch.
    """

    exponent: sympy.Expr
    log_power: int = 0
    exponential_rate: Optional[sympy.Expr] = None
    exponential_power: Optional[int] = None

    @property
    def limit(self) -> PassageLimit:
        if self.exponential_rate is not None:
            return PassageLimit.EXPONENTIAL
        if self.exponent > 0:
            return PassageLimit.ZERO
        if self.exponent < 0 or self.log_power:
            return PassageLimit.INFINITE
        return PassageLimit.FINITE

    def as_expr(self) -> sympy.Expr:
        """
        The order as an expression in the positive symbol s < 1.
        """
        expression = S**self.exponent * (-sympy.log(S)) ** self.log_power
        if self.exponential_rate is not None:
            expression *= sympy.exp(
                self.exponential_rate * S**self.exponential_power
            )
        return expression

    def __str__(self) -> str:
        return f"O({sympy.sstr(self.as_expr())})"


@dataclass(frozen=True)
class PassageTimeClass:
    kind: PassageKind
    params: Dict[str, sympy.Rational]
    order: PassageOrder

    @property
    def limit(self) -> PassageLimit:
        return self.order.limit


def _validated(kind: PassageKind, params: Mapping[str, object]) -> dict:
    required = PARAMETERS[kind]
    if set(params) != set(required):
        message = messages.MISSING_PASSAGE_PARAMETERS.format(
            kind=kind.value,
            required=", ".join(required),
            given=", ".join(sorted(params)) or "none",
        )
        raise InvalidParameterError(message)
    values = {name: to_rational(params[name]) for name in required}

    def bad(name: str, reason: str):
        message = messages.BAD_PASSAGE_PARAMETER.format(
            kind=kind.value, name=name, value=values[name], reason=reason
        )
        return InvalidParameterError(message)

    if "lambda" in values and not values["lambda"] > 0:
        raise bad("lambda", "must be positive")
    if "k" in values:
        k = values["k"]
        if not (k.is_integer and k >= 2):
            raise bad("k", "must be an integer of at least 2")
        if values["q"] == 0 and k - 1 < values["p"] < k:
            raise bad("p", "lies strictly between k - 1 and k")
    return values


def _semi_hyperbolic_order(values: dict) -> PassageOrder:
    p, q, k = values["p"], values["q"], values["k"]
    if q > 0:
        return PassageOrder(p)
    if q == 0:
        if p >= k:
            return PassageOrder(sympy.Integer(0))
        return PassageOrder(p - k + 1, int(p == k - 1))
    lam, a = values["lambda"], values["a"]
    return PassageOrder(
        -a * lam * q,
        exponential_rate=lam * q / (1 - k),
        exponential_power=int(1 - k),
    )


def passage_time_class(
    kind: PassageKind, params: Mapping[str, object]
) -> PassageTimeClass:
    """
    Classifies the passage time of a side or a corner.

    Parameters
    ----------
    kind : PassageKind
        Side, hyperbolic or semi-hyperbolic corner
    params : Mapping[str, RationalLike]
        Exactly the parameters listed in :data:`PARAMETERS` for *kind*

    Returns
    -------
    PassageTimeClass
        Parameters with the order and limit of the passage time as s → 0⁺

    Raises
    ------
    InvalidParameterError
        For missing or extra parameters, λ ≤ 0, a non-integer k < 2, or
        q = 0 with k - 1 < p < k
    """
    kind = PassageKind(kind)
    values = _validated(kind, params)
    if kind is PassageKind.SIDE:
        order = PassageOrder(values["q"])
    elif kind is PassageKind.HYPERBOLIC:
        p, q, lam = values["p"], values["q"], values["lambda"]
        order = PassageOrder(sympy.Min(p, lam * q), int(p == lam * q))
    else:
        order = _semi_hyperbolic_order(values)
    return PassageTimeClass(kind, values, order)


def _model(kind: PassageKind, values: Dict[str, float]):
    p = values.get("p", 0.0)
    q = values["q"]
    lam = values.get("lambda", 1.0)
    k = values.get("k", 2.0)
    a = values.get("a", 0.0)

    def clock(x: float, y: float) -> float:
        return x**p * y**q

    if kind is PassageKind.SIDE:

        def rhs(_, state):
            x, y, _ = state
            return [1.0, 0.0, clock(max(x, 0.0), y)]

        return rhs
    if kind is PassageKind.HYPERBOLIC:

        def rhs(_, state):
            x, y, _ = state
            return [x, -lam * y, clock(x, y)]

        return rhs

    def rhs(_, state):
        x, y, _ = state
        return [x**k + a * x ** (2 * k - 1), -lam * y, clock(x, y)]

    return rhs


def _initial(kind: PassageKind, s: float) -> list:
    if kind is PassageKind.SIDE:
        return [0.0, s, 0.0]
    return [s, ETA, 0.0]


def passage_time(
    kind: PassageKind,
    params: Mapping[str, object],
    s: float,
    config: Optional[IntegratorConfig] = None,
) -> Optional[float]:
    """
    Integrates the model field of *kind* from distance *s* to its exit
    section and returns the elapsed clock time, or None if the exit is not
    reached within ``config.max_time``.
    """
    config = config or IntegratorConfig()
    kind = PassageKind(kind)
    values = {
        name: float(value) for name, value in _validated(kind, params).items()
    }
    exit_x = 1.0 if kind is PassageKind.SIDE else ETA

    def leaves(_, state):
        return state[0] - exit_x

    leaves.terminal = True
    leaves.direction = 1
    solution = solve_ivp(
        _model(kind, values),
        (0.0, config.max_time),
        _initial(kind, s),
        method=config.method,
        rtol=config.rel_tol,
        atol=config.abs_tol,
        events=leaves,
    )
    if not solution.success or not len(solution.t_events[0]):
        message = messages.PASSAGE_NOT_REACHED.format(kind=kind.value, s=s)
        warnings.warn(message, NumericsWarning)
        return None
    return float(solution.y_events[0][0][2])


def fit_passage_exponent(
    kind: PassageKind,
    params: Mapping[str, object],
    distances: Sequence[float] = DEFAULT_DISTANCES,
    config: Optional[IntegratorConfig] = None,
) -> float:
    """
    Estimates the leading exponent of the passage time by regressing
    log t(s) on log s over the integrated model.

    Parameters
    ----------
    kind : PassageKind
        Side, hyperbolic or semi-hyperbolic corner
    params : Mapping[str, RationalLike]
        Same parameters as :func:`passage_time_class`
    distances : Sequence[float], optional
        Values of s, by default :data:`DEFAULT_DISTANCES`
    config : IntegratorConfig, optional
        Tolerances and bounds, by default :class:`IntegratorConfig()`

    Returns
    -------
    float
        Slope of the log-log fit, NaN if fewer than two passages completed
    """
    times = [
        (s, passage_time(kind, params, s, config)) for s in distances
    ]
    completed = [(s, t) for s, t in times if t is not None and t > 0]
    if len(completed) < 2:
        return float("nan")
    s_values, t_values = np.log(np.array(completed)).T
    slope, _ = np.polyfit(s_values, t_values, 1)
    return float(slope)
