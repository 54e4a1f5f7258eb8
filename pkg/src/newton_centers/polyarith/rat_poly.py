"""
Definition of the :class:`RatPoly` class.
"""
from typing import Iterable, List, Optional, Tuple, Union

import sympy
from sympy import QQ, Poly

from newton_centers.polyarith import messages
from newton_centers.utils.exceptions import (
    InexactDivisionError,
    InvalidDegreeError,
    ZeroPolynomialError,
)
from newton_centers.utils.rational import RationalLike, to_rational

#: Indeterminate used by every univariate polynomial.
X = sympy.Symbol("x")

Scalar = Union[int, sympy.Rational]


class RatPoly:
    """
    Immutable dense univariate polynomial with exact rational coefficients.

    Coefficients are indexed by power, so ``RatPoly([1, 0, -2])`` is
    1 - 2x². Trailing zeros are dropped on construction and the zero
    polynomial has degree :attr:`ZERO_DEGREE`.

    Parameters
    ----------
    coefficients : Iterable[RationalLike], optional
        Coefficients in increasing powers, by default ()
    """

    #: Degree reported by the zero polynomial.
    ZERO_DEGREE: int = -1

    def __init__(self, coefficients: Iterable[RationalLike] = ()):
        values = [to_rational(c) for c in coefficients]
        self._poly = Poly(list(reversed(values)) or [0], X, domain=QQ)

    @classmethod
    def from_poly(cls, poly: Poly) -> "RatPoly":
        """
        Wraps an existing univariate :class:`sympy.Poly` over QQ.

        Parameters
        ----------
        poly : Poly
            Univariate polynomial

        Returns
        -------
        RatPoly
            Wrapped polynomial
        """
        instance = cls.__new__(cls)
        if poly.gens == (X,) and poly.get_domain() == QQ:
            instance._poly = poly
        else:
            instance._poly = Poly(poly.as_expr(), X, domain=QQ)
        return instance

    @classmethod
    def monomial(cls, degree: int, coefficient: RationalLike = 1) -> "RatPoly":
        """
        Returns coefficient·xᵈᵉᵍʳᵉᵉ.
        """
        return cls([0] * degree + [coefficient])

    @classmethod
    def constant(cls, value: RationalLike) -> "RatPoly":
        return cls([value])

    @property
    def poly(self) -> Poly:
        """
        The underlying :class:`sympy.Poly` in :data:`X` over QQ.

        Returns
        -------
        Poly
            Wrapped sympy polynomial
        """
        return self._poly

    @property
    def coefficients(self) -> List[sympy.Rational]:
        """
        Dense coefficient list in increasing powers, empty for zero.

        Returns
        -------
        List[sympy.Rational]
            Coefficients
        """
        if self.is_zero:
            return []
        return list(reversed(self._poly.all_coeffs()))

    @property
    def degree(self) -> int:
        if self.is_zero:
            return self.ZERO_DEGREE
        return self._poly.degree()

    @property
    def is_zero(self) -> bool:
        return self._poly.is_zero

    @property
    def is_constant(self) -> bool:
        return self.degree <= 0

    @property
    def leading_coefficient(self) -> sympy.Rational:
        return self._poly.LC()

    @property
    def valuation(self) -> int:
        """
        The lowest power carrying a nonzero coefficient.

        Returns
        -------
        int
            Valuation, :attr:`ZERO_DEGREE` for the zero polynomial
        """
        for power, coefficient in enumerate(self.coefficients):
            if coefficient != 0:
                return power
        return self.ZERO_DEGREE

    @property
    def lowest_coefficient(self) -> sympy.Rational:
        if self.is_zero:
            return sympy.Integer(0)
        return self.coefficient(self.valuation)

    def coefficient(self, power: int) -> sympy.Rational:
        """
        Returns the coefficient of xᵖᵒʷᵉʳ (zero beyond the degree).
        """
        coefficients = self.coefficients
        if 0 <= power < len(coefficients):
            return coefficients[power]
        return sympy.Integer(0)

    def __repr__(self) -> str:
        return f"RatPoly({[str(c) for c in self.coefficients]})"

    def __str__(self) -> str:
        return str(self._poly.as_expr())

    def __eq__(self, other) -> bool:
        if isinstance(other, RatPoly):
            return self._poly == other._poly
        if isinstance(other, (int, sympy.Rational)):
            return self._poly == Poly(other, X, domain=QQ)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self.coefficients))

    def _coerce(self, other) -> Poly:
        if isinstance(other, RatPoly):
            return other._poly
        return Poly(to_rational(other), X, domain=QQ)

    def __add__(self, other) -> "RatPoly":
        return RatPoly.from_poly(self._poly + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other) -> "RatPoly":
        return RatPoly.from_poly(self._poly - self._coerce(other))

    def __rsub__(self, other) -> "RatPoly":
        return RatPoly.from_poly(self._coerce(other) - self._poly)

    def __neg__(self) -> "RatPoly":
        return RatPoly.from_poly(-self._poly)

    def __mul__(self, other) -> "RatPoly":
        return RatPoly.from_poly(self._poly * self._coerce(other))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RatPoly":
        return RatPoly.from_poly(self._poly**exponent)

    def __call__(self, value: RationalLike) -> sympy.Rational:
        """
        Evaluates the polynomial exactly at a rational point.
        """
        return self._poly.eval(to_rational(value))

    def derivative(self, order: int = 1) -> "RatPoly":
        result = self._poly
        for _ in range(order):
            result = result.diff(X)
        return RatPoly.from_poly(result)

    def antiderivative(self) -> "RatPoly":
        """
        Returns the antiderivative vanishing at zero, ∫₀ˣ P.
        """
        return RatPoly(
            [0]
            + [c / (power + 1) for power, c in enumerate(self.coefficients)]
        )

    def compose(self, inner: "RatPoly") -> "RatPoly":
        """
        Returns self(inner(x)).
        """
        return RatPoly.from_poly(self._poly.compose(inner._poly))

    def gcd(self, other: "RatPoly") -> "RatPoly":
        """
        Returns the monic greatest common divisor (zero if both are zero).
        """
        return RatPoly.from_poly(self._poly.gcd(other._poly))

    def divmod(self, divisor: "RatPoly") -> Tuple["RatPoly", "RatPoly"]:
        if divisor.is_zero:
            raise ZeroPolynomialError(messages.ZERO_DIVISOR)
        quotient, remainder = self._poly.div(divisor._poly)
        return RatPoly.from_poly(quotient), RatPoly.from_poly(remainder)

    def exact_divide(self, divisor: "RatPoly") -> "RatPoly":
        """
        Divides by *divisor*, requiring a zero remainder.

        Raises
        ------
        InexactDivisionError
            If the division leaves a remainder
        """
        quotient, remainder = self.divmod(divisor)
        if not remainder.is_zero:
            message = messages.INEXACT_DIVISION.format(
                dividend=self, divisor=divisor
            )
            raise InexactDivisionError(message)
        return quotient

    def strip_x_power(self) -> Tuple[int, "RatPoly"]:
        """
        Splits off the largest power of x: self = xᵏ·R with R(0) ≠ 0.

        Returns
        -------
        Tuple[int, RatPoly]
            k and R

        Raises
        ------
        ZeroPolynomialError
            If the polynomial is zero
        """
        if self.is_zero:
            raise ZeroPolynomialError(messages.ZERO_POLYNOMIAL)
        k = self.valuation
        return k, RatPoly(self.coefficients[k:])

    def squarefree_part(self) -> "RatPoly":
        """
        Returns self / gcd(self, self′), which has the same distinct roots
        as self, each simple.
        """
        if self.is_constant:
            return self
        return self.exact_divide(self.gcd(self.derivative()))

    def scale_argument(self, factor: RationalLike) -> "RatPoly":
        """
        Returns P(factor·x).
        """
        factor = to_rational(factor)
        return RatPoly(
            [c * factor**power for power, c in enumerate(self.coefficients)]
        )

    def monic(self) -> "RatPoly":
        if self.is_zero:
            raise ZeroPolynomialError(messages.ZERO_POLYNOMIAL)
        return self * (1 / self.leading_coefficient)

    def real_roots(self) -> List[Tuple[sympy.Expr, int]]:
        """
        Returns the distinct real roots with their multiplicities, as exact
        numbers (radicals where sympy provides them, otherwise
        :class:`sympy.CRootOf` instances), in increasing order.

        Raises
        ------
        ZeroPolynomialError
            If the polynomial is zero
        """
        if self.is_zero:
            raise ZeroPolynomialError(messages.ZERO_POLYNOMIAL)
        if self.is_constant:
            return []
        return list(self._poly.real_roots(multiple=False))

    def to_floats(self) -> List[float]:
        """
        Float approximations of the coefficients, in increasing powers.
        """
        return [float(c) for c in self.coefficients]


def reverse(polynomial: RatPoly, n: int) -> RatPoly:
    """
    Returns uⁿ·P(1/u), so the coefficient of uⁿ⁻ᵏ is that of xᵏ.

    Parameters
    ----------
    polynomial : RatPoly
        Polynomial P (may be zero)
    n : int
        Degree slot, at least deg P

    Returns
    -------
    RatPoly
        Reversed polynomial

    Raises
    ------
    InvalidDegreeError
        If n is smaller than the degree of P
    """
    if n < polynomial.degree or n < 0:
        message = messages.INVALID_REVERSE_DEGREE.format(
            n=n, degree=polynomial.degree
        )
        raise InvalidDegreeError(message)
    padded = polynomial.coefficients + [0] * (
        n + 1 - len(polynomial.coefficients)
    )
    return RatPoly(reversed(padded))


def as_rat_poly(value: Optional[Union[RatPoly, Iterable]]) -> RatPoly:
    """
    Coerces coefficient lists (or None) to :class:`RatPoly`.
    """
    if value is None:
        return RatPoly()
    if isinstance(value, RatPoly):
        return value
    return RatPoly(value)
