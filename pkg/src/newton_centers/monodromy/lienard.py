"""
Closed-form monodromy at infinity for Liénard systems
ẋ = y, ẏ = P₀(x) + P₁(x)y.

With ℓ₀, ℓ₁ the degrees and a, b the leading coefficients of P₀ and P₁,
infinity is monodromic if and only if

* (L1) ℓ₀ is odd, ℓ₀ > 2ℓ₁ + 1 and a < 0, or
* (L2) ℓ₀ = 2ℓ₁ + 1 and b² + 2(ℓ₀ + 1)a < 0.

Both come from a single blow-up of the 𝒳 chart, whose exceptional
divisor carries the quadratic 𝒬(v) = av² + [ℓ₀ = 2ℓ₁+1]·bv - (ℓ₀+1)/2.
"""
from typing import NamedTuple

import sympy

from newton_centers.monodromy import messages
from newton_centers.monodromy.verdict import (
    FailureCase,
    MonodromyCondition,
    MonodromyVerdict,
)
from newton_centers.polyarith.rat_poly import RatPoly
from newton_centers.utils.exceptions import WrongFamilyError


class IsochronyObstruction(NamedTuple):
    """
    *candidate* is the necessary condition for an isochronous center
    (ℓ₀ = 2ℓ₁ + 1 and b² + a(ℓ₀ + 3)²/4 = 0), *monodromic* the verdict at
    infinity.
    """

    candidate: bool
    monodromic: bool

    @property
    def obstructed(self) -> bool:
        return self.candidate and not self.monodromic


def _leading_data(p0: RatPoly, p1: RatPoly):
    if p0.is_zero or p1.is_zero:
        raise WrongFamilyError(messages.NOT_LIENARD.format(p0=p0, p1=p1))
    return (
        p0.degree,
        p1.degree,
        p0.leading_coefficient,
        p1.leading_coefficient,
    )


def blowup_quadratic(p0: RatPoly, p1: RatPoly) -> RatPoly:
    """
    Returns 𝒬(v) = av² + bv - (ℓ₀+1)/2 when ℓ₀ = 2ℓ₁ + 1 and
    av² - (ℓ₀+1)/2 otherwise.
    """
    ell0, ell1, a, b = _leading_data(p0, p1)
    linear = b if ell0 == 2 * ell1 + 1 else 0
    return RatPoly([-sympy.Rational(ell0 + 1, 2), linear, a])


def lienard_monodromy(p0: RatPoly, p1: RatPoly) -> MonodromyVerdict:
    """
    Decides monodromy at infinity of a Liénard system.

    Parameters
    ----------
    p0 : RatPoly
        P₀, nonzero
    p1 : RatPoly
        P₁, nonzero

    Returns
    -------
    MonodromyVerdict
        (L1) or (L2) when monodromic, otherwise one of the five failure
        cases, with 𝒬 recorded when it is meaningful

    Raises
    ------
    WrongFamilyError
        If P₀ or P₁ vanishes identically
    """
    ell0, ell1, a, b = _leading_data(p0, p1)
    discriminant = b**2 + 2 * (ell0 + 1) * a
    trace = {
        "ell0": sympy.Integer(ell0),
        "ell1": sympy.Integer(ell1),
        "a": a,
        "b": b,
        "discriminant": discriminant,
    }
    if ell0 <= ell1:
        return MonodromyVerdict.failure(FailureCase.LIENARD_I, trace=trace)
    if ell0 < 2 * ell1 + 1:
        return MonodromyVerdict.failure(FailureCase.LIENARD_II, trace=trace)
    quadratic = blowup_quadratic(p0, p1)
    if ell0 == 2 * ell1 + 1:
        if discriminant < 0:
            return MonodromyVerdict(
                True,
                MonodromyCondition.L2,
                trace=trace,
                blowup_polynomial=quadratic,
            )
        return MonodromyVerdict.failure(
            FailureCase.LIENARD_III, trace=trace, blowup_polynomial=quadratic
        )
    if ell0 % 2 == 0:
        return MonodromyVerdict.failure(FailureCase.LIENARD_IV, trace=trace)
    if a > 0:
        return MonodromyVerdict.failure(
            FailureCase.LIENARD_V, trace=trace, blowup_polynomial=quadratic
        )
    return MonodromyVerdict(
        True, MonodromyCondition.L1, trace=trace, blowup_polynomial=quadratic
    )


def lienard_isochrony_obstruction(
    p0: RatPoly, p1: RatPoly
) -> IsochronyObstruction:
    """
    Confronts the necessary condition for an isochronous Liénard center
    with monodromy at infinity.

    Under ℓ₀ = 2ℓ₁ + 1 the condition b² + a(ℓ₀+3)²/4 = 0 forces
    b² + 2(ℓ₀+1)a = -a(ℓ₀-1)²/4 ≥ 0, so (L2) fails and a Liénard global
    center is never isochronous.
    """
    ell0, ell1, a, b = _leading_data(p0, p1)
    candidate = (
        ell0 == 2 * ell1 + 1
        and b**2 + a * sympy.Rational((ell0 + 3) ** 2, 4) == 0
    )
    monodromic = lienard_monodromy(p0, p1).monodromic
    return IsochronyObstruction(candidate, monodromic)
