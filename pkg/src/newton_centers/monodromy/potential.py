"""
Potential systems ẋ = y, ẏ = P₀(x) and the sign predicate x·P₀(x) < 0.
"""
import sympy

from newton_centers.monodromy import messages
from newton_centers.monodromy.verdict import (
    FailureCase,
    MonodromyCondition,
    MonodromyVerdict,
)
from newton_centers.polyarith.rat_poly import RatPoly
from newton_centers.polyarith.sturm import sturm_real_root_count
from newton_centers.utils.exceptions import ZeroPolynomialError


def is_restoring(p0: RatPoly) -> bool:
    """
    Decides x·P₀(x) < 0 for every x ≠ 0 exactly.

    Writing P₀ = xᵏ·R with R(0) ≠ 0, the condition holds if and only if k
    is odd, R(0) < 0 and R has no real root.

    Parameters
    ----------
    p0 : RatPoly
        Nonzero polynomial

    Returns
    -------
    bool
        Whether P₀ pushes every point back towards x = 0

    Raises
    ------
    ZeroPolynomialError
        If P₀ ≡ 0
    """
    if p0.is_zero:
        raise ZeroPolynomialError(messages.ZERO_SIGN_POLYNOMIAL)
    k, rest = p0.strip_x_power()
    if k % 2 == 0 or rest(0) > 0:
        return False
    return sturm_real_root_count(rest) == 0


def potential_monodromy(p0: RatPoly) -> MonodromyVerdict:
    """
    Monodromy at infinity of ẋ = y, ẏ = P₀(x), compatible with a center at
    the origin.

    Parameters
    ----------
    p0 : RatPoly
        P₀

    Returns
    -------
    MonodromyVerdict
        Verdict tagged :attr:`MonodromyCondition.POTENTIAL`

    Raises
    ------
    ZeroPolynomialError
        If P₀ ≡ 0
    """
    if p0.is_zero:
        raise ZeroPolynomialError(messages.DEGENERATE_POTENTIAL)
    k, rest = p0.strip_x_power()
    trace = {"k": sympy.Integer(k), "R(0)": rest(0)}
    monodromic = is_restoring(p0)
    return MonodromyVerdict(
        monodromic,
        MonodromyCondition.POTENTIAL,
        None if monodromic else FailureCase.POTENTIAL_SIGN,
        trace=trace,
    )
