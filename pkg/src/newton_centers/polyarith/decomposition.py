"""
Functional decomposition F = g∘h of univariate polynomials over QQ.

For every admissible inner degree s (a proper divisor of deg F) the monic
inner component is determined by the s highest coefficients of F, so it is
computed coefficient by coefficient and then validated by expanding F in
powers of h. No factorization is involved.
"""
from typing import List, NamedTuple, Optional

import sympy

from newton_centers.polyarith import messages
from newton_centers.polyarith.rat_poly import RatPoly
from newton_centers.utils.exceptions import NoDecompositionError


class Decomposition(NamedTuple):
    """
    F = outer(inner(x)) with inner(0) = 0 and the lowest nonzero
    coefficient of inner equal to 1.
    """

    outer: RatPoly
    inner: RatPoly


def _truncated_power(
    series: List[sympy.Rational], exponent: int, length: int
):
    result = [sympy.Integer(1)] + [sympy.Integer(0)] * (length - 1)
    for _ in range(exponent):
        product = [sympy.Integer(0)] * length
        for i, a in enumerate(result):
            if a == 0:
                continue
            for j, b in enumerate(series[: length - i]):
                product[i + j] += a * b
        result = product
    return result


def _monic_inner(monic: RatPoly, outer_degree: int, inner_degree: int):
    """
    Solves for the monic inner component of the given degree with zero
    constant term: reversing, H^r ≡ rev(F) mod x^s with H(0) = 1.
    """
    n = monic.degree
    reversed_f = [monic.coefficient(n - k) for k in range(inner_degree)]
    head = [sympy.Integer(1)] + [sympy.Integer(0)] * (inner_degree - 1)
    for k in range(1, inner_degree):
        power = _truncated_power(head, outer_degree, inner_degree)
        head[k] = (reversed_f[k] - power[k]) / outer_degree
    coefficients = [sympy.Integer(0)] * (inner_degree + 1)
    for k in range(inner_degree):
        coefficients[inner_degree - k] = head[k]
    return RatPoly(coefficients)


def expand_in_powers(
    polynomial: RatPoly, inner: RatPoly
) -> Optional[List[sympy.Rational]]:
    """
    Coefficients c₀, c₁, ... with polynomial = Σ cₖ innerᵏ, or None when
    some remainder is not constant.
    """
    coefficients = []
    rest = polynomial
    while not rest.is_zero:
        quotient, remainder = rest.divmod(inner)
        if remainder.degree > 0:
            return None
        coefficients.append(remainder.coefficient(0))
        rest = quotient
    return coefficients


def decompose(
    polynomial: RatPoly, inner_degree: int
) -> Optional[Decomposition]:
    """
    Returns the decomposition with an inner component of the given degree,
    if there is one.

    Parameters
    ----------
    polynomial : RatPoly
        Polynomial F of degree at least 2
    inner_degree : int
        Degree of h, a divisor of deg F strictly between 1 and deg F

    Returns
    -------
    Optional[Decomposition]
        Normalized decomposition or None
    """
    n = polynomial.degree
    outer_degree = n // inner_degree
    leading = polynomial.leading_coefficient
    monic = polynomial * (1 / leading)
    inner = _monic_inner(monic, outer_degree, inner_degree)
    expansion = expand_in_powers(monic, inner)
    if expansion is None or len(expansion) != outer_degree + 1:
        return None
    outer = RatPoly(expansion) * leading
    scale = inner.lowest_coefficient
    inner = inner * (1 / scale)
    outer = outer.scale_argument(scale)
    return Decomposition(outer, inner)


def decompose_complete(polynomial: RatPoly) -> List[Decomposition]:
    """
    Lists the nontrivial decompositions F = g∘h, one per admissible inner
    degree, ordered by increasing deg h. Indecomposable polynomials give an
    empty list.

    Parameters
    ----------
    polynomial : RatPoly
        Polynomial of degree at least 2

    Returns
    -------
    List[Decomposition]
        Normalized decompositions

    Raises
    ------
    NoDecompositionError
        If the polynomial is constant or linear
    """
    n = polynomial.degree
    if n < 2:
        message = messages.NO_DECOMPOSITION.format(degree=n)
        raise NoDecompositionError(message)
    result = []
    for inner_degree in range(2, n):
        if n % inner_degree:
            continue
        decomposition = decompose(polynomial, inner_degree)
        if decomposition is not None:
            result.append(decomposition)
    return result
