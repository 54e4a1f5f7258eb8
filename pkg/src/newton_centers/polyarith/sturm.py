"""
Real root counting with Sturm sequences over QQ.
"""
from dataclasses import dataclass
from typing import List, Optional, Union

import sympy
from sympy import Poly

from newton_centers.polyarith import messages
from newton_centers.polyarith.rat_poly import X, RatPoly
from newton_centers.utils.exceptions import (
    InvalidParameterError,
    ZeroPolynomialError,
)
from newton_centers.utils.rational import to_rational

Endpoint = Union[int, sympy.Rational, sympy.Expr]


@dataclass(frozen=True)
class Interval:
    """
    A real interval with rational or infinite endpoints.

    Infinite endpoints are given as ``sympy.oo`` / ``-sympy.oo`` and are
    always open.
    """

    lower: Endpoint = -sympy.oo
    upper: Endpoint = sympy.oo
    lower_closed: bool = False
    upper_closed: bool = False

    def __post_init__(self):
        lower = self._normalize(self.lower)
        upper = self._normalize(self.upper)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        if (self.lower_closed and lower.is_infinite) or (
            self.upper_closed and upper.is_infinite
        ):
            raise InvalidParameterError(messages.CLOSED_INFINITE_ENDPOINT)
        if lower > upper:
            message = messages.EMPTY_INTERVAL.format(lower=lower, upper=upper)
            raise InvalidParameterError(message)

    @staticmethod
    def _normalize(value: Endpoint) -> sympy.Expr:
        if value in (sympy.oo, -sympy.oo):
            return value
        return to_rational(value)

    @classmethod
    def real_line(cls) -> "Interval":
        return cls()

    @classmethod
    def positive(cls) -> "Interval":
        """
        The open half-line (0, ∞).
        """
        return cls(lower=0)

    @classmethod
    def negative(cls) -> "Interval":
        """
        The open half-line (-∞, 0).
        """
        return cls(upper=0)

    @classmethod
    def closed(cls, lower: Endpoint, upper: Endpoint) -> "Interval":
        return cls(lower, upper, lower_closed=True, upper_closed=True)

    @property
    def is_empty(self) -> bool:
        return self.lower == self.upper and not (
            self.lower_closed and self.upper_closed
        )

    def __str__(self) -> str:
        left = "[" if self.lower_closed else "("
        right = "]" if self.upper_closed else ")"
        return f"{left}{self.lower}, {self.upper}{right}"


def _sign(value) -> int:
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


def _sign_near(poly: Poly, point: sympy.Expr, direction: int) -> int:
    """
    Sign of *poly* just to the right (direction=1) or left (direction=-1)
    of *point*, read off the first nonvanishing derivative.
    """
    if poly.is_zero:
        return 0
    if point is sympy.oo or point is -sympy.oo:
        at_minus_infinity = point is -sympy.oo
        parity = -1 if at_minus_infinity and poly.degree() % 2 else 1
        return _sign(poly.LC()) * parity
    derivative = poly
    order = 0
    while True:
        value = derivative.eval(point)
        if value != 0:
            return _sign(value) * (direction**order)
        derivative = derivative.diff(X)
        order += 1


def _variations(sequence: List[Poly], point, direction: int) -> int:
    signs = [_sign_near(p, point, direction) for p in sequence]
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_sequence(polynomial: RatPoly) -> List[Poly]:
    """
    Returns the Sturm sequence P, P′, -rem(P, P′), ... over QQ.

    Raises
    ------
    ZeroPolynomialError
        If the polynomial is zero
    """
    if polynomial.is_zero:
        raise ZeroPolynomialError(messages.ZERO_POLYNOMIAL)
    if polynomial.is_constant:
        return [polynomial.poly]
    return polynomial.poly.sturm()


def sturm_real_root_count(
    polynomial: RatPoly, interval: Optional[Interval] = None
) -> int:
    """
    Counts the distinct real roots of a polynomial inside an interval.

    Parameters
    ----------
    polynomial : RatPoly
        Nonzero polynomial
    interval : Interval, optional
        Open, half-open or closed interval, by default the real line

    Returns
    -------
    int
        Number of distinct roots, without multiplicity

    Raises
    ------
    ZeroPolynomialError
        If the polynomial is zero
    """
    interval = interval or Interval.real_line()
    sequence = sturm_sequence(polynomial)
    if interval.is_empty:
        return 0
    if interval.lower == interval.upper:
        return int(polynomial(interval.lower) == 0)
    count = _variations(sequence, interval.lower, 1) - _variations(
        sequence, interval.upper, -1
    )
    if interval.lower_closed and polynomial(interval.lower) == 0:
        count += 1
    if interval.upper_closed and polynomial(interval.upper) == 0:
        count += 1
    return count


def has_nonzero_real_root(polynomial: RatPoly) -> bool:
    """
    Whether the polynomial vanishes somewhere on ℝ ∖ {0}.
    """
    return (
        sturm_real_root_count(polynomial, Interval.negative())
        + sturm_real_root_count(polynomial, Interval.positive())
        > 0
    )
