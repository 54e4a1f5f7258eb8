"""
Definition of the :class:`FractionalSeries` class and the exact check of
the invariance residual of a truncated curve v = Φ(|u|).
"""
from dataclasses import dataclass
from typing import Optional, Tuple

import sympy
from sympy import QQ, Poly

from newton_centers.polyarith.roots import extend_domain
from newton_centers.resolution import messages
from newton_centers.resolution.descent import USign
from newton_centers.resolution.planar_field import PlanarField
from newton_centers.utils.exceptions import (
    InvalidParameterError,
    WitnessVerificationError,
)
from newton_centers.utils.rational import format_exact, format_exponent

#: Generator of series in t = |u|^{1/2}.
T = sympy.Symbol("t")

Term = Tuple[sympy.Rational, sympy.Expr]


def half_integer(value) -> sympy.Rational:
    """
    Converts *value* to a nonnegative rational with 2·value integral.

    Raises
    ------
    InvalidParameterError
        For anything else
    """
    converted = sympy.Rational(value)
    if converted < 0 or (2 * converted).q != 1:
        message = messages.BAD_ORDER_BOUND.format(bound=value)
        raise InvalidParameterError(message)
    return converted


@dataclass(frozen=True)
class FractionalSeries:
    """
    A truncated series Φ(u) = Σ φₖ|u|^{ιₖ} with half-integer exponents,
    describing a formal invariant curve v = Φ(u) on one side of u = 0.

    An empty *terms* tuple stands for the curve v = 0.
    """

    terms: Tuple[Term, ...]
    u_sign: USign
    truncation_order: sympy.Rational

    def __post_init__(self):
        exponents = [exponent for exponent, _ in self.terms]
        for exponent, coefficient in self.terms:
            if exponent <= 0 or (2 * exponent).q != 1 or coefficient == 0:
                message = messages.BAD_ORDER_BOUND.format(bound=exponent)
                raise InvalidParameterError(message)
        if any(a >= b for a, b in zip(exponents, exponents[1:])):
            message = messages.BAD_ORDER_BOUND.format(bound=exponents)
            raise InvalidParameterError(message)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"({format_exact(c)})*|u|^({format_exponent(e)})"
            for e, c in self.terms
        )

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def leading_term(self) -> Optional[Term]:
        return self.terms[0] if self.terms else None

    @property
    def domain(self):
        domain = QQ
        for _, coefficient in self.terms:
            domain = extend_domain(domain, sympy.sympify(coefficient))
        return domain

    def as_poly(self, domain=None) -> Poly:
        """
        The series as a polynomial in t = |u|^{1/2}.
        """
        if domain is None:
            domain = self.domain
        mapping = {(int(2 * e),): c for e, c in self.terms}
        return Poly.from_dict(mapping or {(0,): 0}, T, domain=domain)

    def as_dict(self) -> dict:
        return {
            "u_sign": self.u_sign.value,
            "truncation_order": format_exponent(self.truncation_order),
            "terms": [
                {
                    "exponent": format_exponent(exponent),
                    "coefficient": format_exact(coefficient),
                }
                for exponent, coefficient in self.terms
            ],
        }


def invariance_residual(
    vector_field: PlanarField,
    series: FractionalSeries,
    max_degree: Optional[int] = None,
) -> Poly:
    """
    Returns 2t·G(t², Φ) - Φ′(t)·F(t², Φ) as a polynomial in t, which
    vanishes identically exactly when v = Φ(|u|) is invariant. The field is
    rewritten in -u first for series on the negative side. Terms above
    *max_degree* may be dropped.
    """
    if series.u_sign is USign.NEGATIVE:
        vector_field = vector_field.reflect_u()
    domain = vector_field.domain.unify(series.domain)
    phi = series.as_poly(domain)
    u_image = Poly(T**2, T, domain=domain)
    f = vector_field.F.compose_univariate(u_image, phi, max_degree)
    g = vector_field.G.compose_univariate(u_image, phi, max_degree)
    return Poly(2 * T, T, domain=domain) * g - phi.diff(T) * f


def verify_witness(vector_field: PlanarField, series: FractionalSeries):
    """
    Checks that the invariance residual has no term of u-order up to the
    truncation order of the series.

    Raises
    ------
    WitnessVerificationError
        If a residual term of low order survives
    """
    limit = int(2 * series.truncation_order) + 1
    residual = invariance_residual(vector_field, series, limit)
    if residual.is_zero:
        return
    for (power,), coefficient in residual.as_dict().items():
        if power <= limit and coefficient != 0:
            message = messages.WITNESS_RESIDUAL.format(
                series=series,
                order=sympy.Rational(power - 1, 2),
                bound=series.truncation_order,
            )
            raise WitnessVerificationError(message)
