"""
Chart fields of the toroidal compactification at infinity.

For ẋ = y, ẏ = P₀ + P₁y + P₂y² the three charts are

* 𝒵: v = 1/y, which gives ẋ = 1, v̇ = -P₂v - P₁v² - P₀v³
* 𝒴: u = 1/x, which gives u̇ = -u^{n+2}y, ẏ = P̃₀ + P̃₁y + P̃₂y²
* 𝒳: u = 1/x, v = 1/(xy)... which gives u̇ = u^{n+2}, v̇ = P̃₂v + P̃₁v² + P̃₀v³

after removing common factors, with P̃ᵢ(u) = uⁿPᵢ(1/u).
"""
from typing import NamedTuple

import sympy

from newton_centers.monodromy import messages
from newton_centers.monodromy.newton_system import NewtonSystem
from newton_centers.polyarith.bi_rat_poly import BiRatPoly
from newton_centers.polyarith.rat_poly import RatPoly
from newton_centers.resolution.planar_field import PlanarField
from newton_centers.utils.exceptions import (
    UndefinedShiftError,
    WrongFamilyError,
    ZeroPolynomialError,
)


class ChartFields(NamedTuple):
    Z0: PlanarField
    Ystar0: PlanarField
    X0: PlanarField


def _v_polynomial(*coefficients: RatPoly, start: int = 0) -> BiRatPoly:
    """
    Σₖ cₖ(u)·v^{start+k} for univariate coefficients cₖ.
    """
    result = BiRatPoly()
    for k, coefficient in enumerate(coefficients):
        result += BiRatPoly.from_univariate(coefficient, "u", start + k)
    return result


def _check(system: NewtonSystem, allow_lienard: bool):
    if system.m > 2 or system.m < (1 if allow_lienard else 2):
        raise WrongFamilyError(messages.NOT_CHERKAS.format(m=system.m))
    if system.P(0).is_zero:
        raise ZeroPolynomialError(messages.ZERO_P0)


def chart_fields(
    system: NewtonSystem, allow_lienard: bool = False
) -> ChartFields:
    """
    Builds the three chart fields at infinity.

    Parameters
    ----------
    system : NewtonSystem
        System with m = 2 (or m = 1 with *allow_lienard*) and P₀ ≢ 0
    allow_lienard : bool, optional
        Whether to accept P₂ ≡ 0, by default False

    Returns
    -------
    ChartFields
        𝒵 in (x, v), 𝒴 in (u, y) and 𝒳 in (u, v)

    Raises
    ------
    WrongFamilyError
        If the system is not quadratic in y
    """
    _check(system, allow_lienard)
    n = system.n
    p0, p1, p2 = (system.P(i) for i in range(3))
    z0 = PlanarField(
        BiRatPoly({(0, 0): 1}), -_v_polynomial(p2, p1, p0, start=1), ("x", "v")
    )
    t0, t1, t2 = (system.reversed(i) for i in range(3))
    ystar0 = PlanarField(
        BiRatPoly({(n + 2, 1): -1}), _v_polynomial(t0, t1, t2), ("u", "y")
    )
    x0 = PlanarField(
        BiRatPoly({(n + 2, 0): 1}), _v_polynomial(t2, t1, t0, start=1)
    )
    return ChartFields(z0, ystar0, x0)


def y_star(system: NewtonSystem) -> sympy.Rational:
    """
    y* = -bₙ/(2cₙ), the double root of aₙ + bₙy + cₙy² when the
    discriminant vanishes.

    Raises
    ------
    UndefinedShiftError
        If cₙ = 0
    """
    if system.c_n == 0:
        raise UndefinedShiftError(messages.UNDEFINED_SHIFT)
    return -system.b_n / (2 * system.c_n)


def y_star_shift(system: NewtonSystem) -> PlanarField:
    """
    Translates the 𝒴 chart by y → y + y*.

    Parameters
    ----------
    system : NewtonSystem
        System with m = 2 and cₙ ≠ 0

    Returns
    -------
    PlanarField
        (-u^{n+2}(y + y*), P̃₀ + P̃₁(y + y*) + P̃₂(y + y*)²)

    Raises
    ------
    UndefinedShiftError
        If cₙ = 0
    """
    _check(system, allow_lienard=False)
    shift = y_star(system)
    n = system.n
    shifted = BiRatPoly({(0, 0): shift, (0, 1): 1})
    f = BiRatPoly({(n + 2, 0): -1}) * shifted
    g = BiRatPoly()
    for i in range(3):
        g += BiRatPoly.from_univariate(system.reversed(i)) * shifted**i
    return PlanarField(f, g, ("u", "y"))
