"""
The reversibility condition (C1) and the Darboux identity (C3).
"""
from typing import Optional

import sympy

from newton_centers.monodromy.newton_system import NewtonSystem
from newton_centers.polyarith.rat_poly import RatPoly

#: Darboux constant for which y + 2P₀/P₁ = 0 is an invariant curve, which
#: rules a global center out.
INVARIANT_CURVE_CONSTANT = sympy.Rational(1, 4)


def check_c1(system: NewtonSystem) -> bool:
    """
    Whether the system is reversible with respect to the x-axis, i.e.
    P₁ ≡ 0.
    """
    return system.P(1).is_zero


def darboux_residual(system: NewtonSystem, e) -> RatPoly:
    """
    Returns P₂P₀P₁ + P₀P₁′ - P₁P₀′ - e·P₁³.
    """
    p0, p1, p2 = (system.P(i) for i in range(3))
    lhs = p2 * p0 * p1 + p0 * p1.derivative() - p1 * p0.derivative()
    return lhs - p1**3 * e


def check_c3_darboux(system: NewtonSystem) -> Optional[sympy.Rational]:
    """
    Looks for the constant e with P₂P₀P₁ + P₀P₁′ - P₁P₀′ = e·P₁³.

    Parameters
    ----------
    system : NewtonSystem
        Newton system; the identity is only meaningful for P₁ ≢ 0

    Returns
    -------
    Optional[sympy.Rational]
        The unique e, or None when the identity fails for every constant
        (or P₁ ≡ 0)
    """
    p1 = system.P(1)
    if p1.is_zero:
        return None
    lhs = darboux_residual(system, 0)
    cube = p1**3
    quotient, remainder = lhs.divmod(cube)
    if not remainder.is_zero or quotient.degree > 0:
        return None
    return quotient.coefficient(0)


def excludes_global_center(e: Optional[sympy.Rational]) -> bool:
    """
    Whether the Darboux constant yields the invariant algebraic curve
    y + 2P₀(x)/P₁(x) = 0.
    """
    return e is not None and e == INVARIANT_CURVE_CONSTANT
