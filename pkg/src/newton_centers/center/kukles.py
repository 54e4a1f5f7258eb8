"""
Closed-form global center classification for the homogeneous Kukles
family ẋ = y, ẏ = δx + Σᵢ a_{n-i,i}x^{n-i}yⁱ with δ ≤ 0.
"""
from typing import Mapping

import sympy

from newton_centers.center import messages
from newton_centers.monodromy.newton_system import NewtonSystem
from newton_centers.polyarith.rat_poly import RatPoly
from newton_centers.utils.choice_enum import ChoiceEnum
from newton_centers.utils.exceptions import InvalidParameterError
from newton_centers.utils.rational import to_rational


class KuklesReason(ChoiceEnum):
    GLOBAL_CENTER = "GlobalCenter"
    #: Some a_{n-i,i} ≠ 0 with i ≥ 3, so m ≥ 3.
    HIGHER_Y_DEGREE = "HigherYDegree"
    EVEN_DEGREE = "EvenDegree"
    #: a_{n-1,1} ≠ 0: the field rotates the reversible one in a single
    #: direction and the origin is a focus.
    FOCUS_BY_ROTATION = "FocusByRotation"
    ORIGIN_NOT_MONODROMIC = "OriginNotMonodromic"
    INFINITY_NOT_MONODROMIC = "InfinityNotMonodromic"


def _validated(delta, coefficients: Mapping[int, object], n: int):
    delta = to_rational(delta)
    if delta > 0:
        raise InvalidParameterError(messages.BAD_DELTA.format(delta=delta))
    if n < 2:
        raise InvalidParameterError(messages.BAD_KUKLES_DEGREE.format(n=n))
    values = {}
    for i, value in coefficients.items():
        if not 0 <= i <= n:
            message = messages.BAD_KUKLES_INDEX.format(i=i, n=n)
            raise InvalidParameterError(message)
        values[i] = to_rational(value)
    if all(value == 0 for value in values.values()):
        raise InvalidParameterError(messages.EMPTY_KUKLES)
    return delta, values


def kukles_system(
    delta, coefficients: Mapping[int, object], n: int
) -> NewtonSystem:
    """
    Builds the Newton system of a homogeneous Kukles system.

    Parameters
    ----------
    delta : RationalLike
        δ ≤ 0
    coefficients : Mapping[int, RationalLike]
        i ↦ a_{n-i,i}; missing indices are zero
    n : int
        Degree, at least 2

    Returns
    -------
    NewtonSystem
        Pᵢ = a_{n-i,i}x^{n-i}, plus δx in P₀

    Raises
    ------
    InvalidParameterError
        For δ > 0, n < 2, out of range indices or all coefficients zero
    """
    delta, values = _validated(delta, coefficients, n)
    polynomials = []
    for i in range(n + 1):
        p = RatPoly.monomial(n - i, values.get(i, 0))
        if i == 0:
            p = p + RatPoly.monomial(1, delta)
        polynomials.append(p)
    return NewtonSystem(polynomials)


def kukles_classification(
    delta, coefficients: Mapping[int, object], n: int
) -> KuklesReason:
    """
    Classifies a homogeneous Kukles system: it has a global center exactly
    when it reads ẏ = δx + a_{n,0}xⁿ + a_{n-2,2}x^{n-2}y² with n odd,
    a_{n,0} ≤ 0, a_{n-2,2} ≤ 0 and δ² + a_{n,0}² ≠ 0. Otherwise the first
    violated requirement is returned.

    Raises
    ------
    InvalidParameterError
        For δ > 0, n < 2, out of range indices or all coefficients zero
    """
    delta, values = _validated(delta, coefficients, n)
    zero = sympy.Integer(0)
    if any(values[i] != 0 for i in values if i >= 3):
        return KuklesReason.HIGHER_Y_DEGREE
    if n % 2 == 0:
        return KuklesReason.EVEN_DEGREE
    if values.get(1, zero) != 0:
        return KuklesReason.FOCUS_BY_ROTATION
    a_n0 = values.get(0, zero)
    if a_n0 > 0 or delta**2 + a_n0**2 == 0:
        return KuklesReason.ORIGIN_NOT_MONODROMIC
    if values.get(2, zero) > 0:
        return KuklesReason.INFINITY_NOT_MONODROMIC
    return KuklesReason.GLOBAL_CENTER


def kukles_global_center(
    delta, coefficients: Mapping[int, object], n: int
) -> bool:
    return (
        kukles_classification(delta, coefficients, n)
        is KuklesReason.GLOBAL_CENTER
    )
