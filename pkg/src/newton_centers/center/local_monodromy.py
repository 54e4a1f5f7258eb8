"""
Monodromy of the origin of a Cherkas system, read off the lowest order
terms of P₀ and P₁.
"""
from dataclasses import dataclass
from typing import Optional

import sympy

from newton_centers.center import messages
from newton_centers.monodromy.newton_system import NewtonSystem
from newton_centers.utils.choice_enum import ChoiceEnum
from newton_centers.utils.exceptions import (
    NotAnEquilibriumError,
    WrongFamilyError,
    ZeroPolynomialError,
)


class OriginCase(ChoiceEnum):
    #: Non-degenerate monodromic origin.
    W1 = "W1"
    #: Nilpotent monodromic origin.
    W2 = "W2"
    NOT_MONODROMIC = "NotMonodromicOrigin"


@dataclass(frozen=True)
class LocalMonodromyData:
    """
    Lowest order data at the origin: P₀ = a·x^ι₀ + ..., P₁ = b·x^ι₁ + ...

    *nu* is (ι₀ + 1) // 2, which satisfies ι₀ = 2ν - 1 whenever ι₀ is odd.
    *iota1* and *b* are None for P₁ ≡ 0.
    """

    nu: int
    iota0: int
    iota1: Optional[int]
    leading: sympy.Rational
    b: Optional[sympy.Rational]
    case: OriginCase

    @property
    def is_monodromic(self) -> bool:
        return self.case is not OriginCase.NOT_MONODROMIC

    def as_dict(self) -> dict:
        return {
            "nu": self.nu,
            "iota0": self.iota0,
            "iota1": self.iota1,
            "case": self.case.value,
        }


def _classify(
    nu: int, iota0: int, iota1: Optional[int], a, b
) -> OriginCase:
    if iota0 % 2 == 0 or a >= 0:
        return OriginCase.NOT_MONODROMIC
    if nu == 1:
        if iota1 is None or iota1 > 0:
            return OriginCase.W1
        return OriginCase.NOT_MONODROMIC
    if iota1 is None or iota1 > nu:
        return OriginCase.W2
    if iota1 == nu and b**2 + 4 * nu * a < 0:
        return OriginCase.W2
    return OriginCase.NOT_MONODROMIC


def local_monodromy_origin(system: NewtonSystem) -> LocalMonodromyData:
    """
    Decides whether the origin is a monodromic equilibrium.

    Parameters
    ----------
    system : NewtonSystem
        System with m ≤ 2 and P₀(0) = 0

    Returns
    -------
    LocalMonodromyData
        Lowest order data and the (W1) / (W2) classification

    Raises
    ------
    WrongFamilyError
        If m ≥ 3
    ZeroPolynomialError
        If P₀ ≡ 0
    NotAnEquilibriumError
        If P₀(0) ≠ 0
    """
    if system.m > 2:
        raise WrongFamilyError(messages.HIGH_Y_DEGREE.format(m=system.m))
    p0, p1 = system.P(0), system.P(1)
    if p0.is_zero:
        raise ZeroPolynomialError(messages.ZERO_P0)
    if p0(0) != 0:
        message = messages.NOT_AN_EQUILIBRIUM.format(value=p0(0))
        raise NotAnEquilibriumError(message)
    iota0 = p0.valuation
    nu = (iota0 + 1) // 2
    a = p0.lowest_coefficient
    iota1 = None if p1.is_zero else p1.valuation
    b = None if p1.is_zero else p1.lowest_coefficient
    case = _classify(nu, iota0, iota1, a, b)
    return LocalMonodromyData(nu, iota0, iota1, a, b, case)
