"""
Quasi-homogeneous blow-ups of planar vector fields.

:func:`blowup_u` is the directional blow-up u = u₁^q, v = u₁^p(φ + v₁)
along an edge of the Newton polygon, and :func:`blowup_vertical` is the
chart u = w·z^q, v = ±z^p looking at the v-axis. In both cases the common
factor of the transformed field is divided out exactly.
"""
from math import gcd
from typing import Optional

import sympy

from newton_centers.polyarith.bi_rat_poly import BiRatPoly
from newton_centers.polyarith.roots import extend_domain
from newton_centers.resolution import messages
from newton_centers.resolution.newton_polygon import support
from newton_centers.resolution.planar_field import PlanarField
from newton_centers.utils.exceptions import InvalidParameterError


def weighted_order(vector_field: PlanarField, p: int, q: int) -> int:
    """
    Returns σ = min(q·i + p·j) over the support of the field.
    """
    return min(q * i + p * j for i, j in support(vector_field))


def _check_weights(p: int, q: int):
    if p < 1 or q < 1 or gcd(p, q) != 1:
        message = messages.BAD_BLOWUP_WEIGHTS.format(p=p, q=q)
        raise InvalidParameterError(message)


def blowup_u(
    vector_field: PlanarField,
    p: int,
    q: int,
    phi: sympy.Expr,
    sigma: Optional[int] = None,
) -> PlanarField:
    """
    Blows up a field along the direction v ~ φ·u^{p/q}.

    With u = u₁^q and v = u₁^p(φ + v₁) the result is

    * F₁ = F(u, v) / u₁^{σ+q-1}
    * G₁ = q·G(u, v) / u₁^{σ+p} - p(φ + v₁)·F(u, v) / u₁^{σ+q}

    so that G₁(0, v₁) is the edge polynomial evaluated at φ + v₁.

    Parameters
    ----------
    vector_field : PlanarField
        Field to blow up
    p : int
        Weight of v
    q : int
        Weight of u, coprime with p
    phi : sympy.Expr
        Exact real number (rational or algebraic)
    sigma : int, optional
        Weighted order of the field, by default computed from the support

    Returns
    -------
    PlanarField
        Blown-up field in (u₁, v₁)

    Raises
    ------
    InexactDivisionError
        If *sigma* exceeds the weighted order of the field
    """
    _check_weights(p, q)
    phi = sympy.sympify(phi)
    if sigma is None:
        sigma = weighted_order(vector_field, p, q)
    domain = extend_domain(vector_field.domain, phi)
    vector_field = vector_field.with_domain(domain)
    shifted = BiRatPoly({(0, 0): phi, (0, 1): 1}, domain=domain)
    u_image = BiRatPoly.monomial(q, 0, domain=domain)
    v_image = BiRatPoly.monomial(p, 0, domain=domain) * shifted
    f = vector_field.F.substitute(u_image, v_image)
    g = vector_field.G.substitute(u_image, v_image)
    f1 = f.divide_u_power(sigma + q - 1)
    g1 = g.divide_u_power(sigma + p) * q - shifted * p * f.divide_u_power(
        sigma + q
    )
    return PlanarField(f1, g1, vector_field.names)


def blowup_vertical(
    vector_field: PlanarField, p: int, sign: int, q: int = 1
) -> PlanarField:
    """
    Blows up a field in the chart u = w·z^q, v = sign·z^p.

    The result, with the factor z^σ/p divided out, is

    * W = p·F / z^{σ+q} - q·sign·w·G / z^{σ+p}
    * Z = sign·G / z^{σ+p-1}

    written in the variables (w, z).

    Parameters
    ----------
    vector_field : PlanarField
        Field to blow up
    p : int
        Weight of v
    sign : int
        +1 for v > 0, -1 for v < 0
    q : int, optional
        Weight of u, by default 1

    Returns
    -------
    PlanarField
        Blown-up field in (w, z)
    """
    _check_weights(p, q)
    if sign not in (1, -1):
        raise InvalidParameterError(
            messages.BAD_VERTICAL_SIGN.format(sign=sign)
        )
    sigma = weighted_order(vector_field, p, q)
    domain = vector_field.domain
    u_image = BiRatPoly.monomial(1, q, domain=domain)
    v_image = BiRatPoly.monomial(0, p, coefficient=sign, domain=domain)
    f = vector_field.F.substitute(u_image, v_image)
    g = vector_field.G.substitute(u_image, v_image)
    w = BiRatPoly.monomial(1, 0, domain=domain)
    w_component = _divide_v_power(f, sigma + q) * p - w * (
        _divide_v_power(g, sigma + p) * (q * sign)
    )
    z_component = _divide_v_power(g, sigma + p - 1) * sign
    return PlanarField(w_component, z_component, ("w", "z"))


def _divide_v_power(polynomial: BiRatPoly, power: int) -> BiRatPoly:
    swapped = BiRatPoly(
        {(j, i): c for (i, j), c in polynomial.terms.items()},
        domain=polynomial.domain,
    ).divide_u_power(power)
    return BiRatPoly(
        {(j, i): c for (i, j), c in swapped.terms.items()},
        domain=polynomial.domain,
    )
