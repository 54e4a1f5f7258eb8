"""
Definition of the :class:`NewtonSystem` class.
"""
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np
import sympy

from newton_centers.monodromy import messages
from newton_centers.polyarith.rat_poly import RatPoly, as_rat_poly, reverse
from newton_centers.utils.exceptions import ZeroPolynomialError

PolynomialLike = Union[RatPoly, Iterable]

#: Symbol used for y when printing systems.
Y = sympy.Symbol("y")


class NewtonSystem:
    """
    The planar system ẋ = y, ẏ = Σᵢ Pᵢ(x)yⁱ with rational coefficients.

    Trailing zero polynomials are dropped, so *m* is the degree in y and
    P_m ≢ 0.

    Parameters
    ----------
    polynomials : Sequence[PolynomialLike]
        P₀, P₁, ..., as :class:`RatPoly` instances or coefficient lists
        in increasing powers of x

    Raises
    ------
    ZeroPolynomialError
        If every Pᵢ vanishes
    """

    def __init__(self, polynomials: Sequence[PolynomialLike]):
        converted = [as_rat_poly(p) for p in polynomials]
        while converted and converted[-1].is_zero:
            converted.pop()
        if not converted:
            raise ZeroPolynomialError(messages.EMPTY_SYSTEM)
        self._polynomials: Tuple[RatPoly, ...] = tuple(converted)

    @classmethod
    def cherkas(
        cls, p0: PolynomialLike, p1: PolynomialLike, p2: PolynomialLike
    ) -> "NewtonSystem":
        return cls([p0, p1, p2])

    def __repr__(self) -> str:
        return f"NewtonSystem({self})"

    def __str__(self) -> str:
        return f"y' = {self.as_expr()}"

    def __eq__(self, other) -> bool:
        if not isinstance(other, NewtonSystem):
            return NotImplemented
        return self._polynomials == other._polynomials

    def __hash__(self) -> int:
        return hash(self._polynomials)

    @property
    def polynomials(self) -> Tuple[RatPoly, ...]:
        return self._polynomials

    @property
    def m(self) -> int:
        return len(self._polynomials) - 1

    @property
    def n(self) -> int:
        """
        The largest degree among the Pᵢ.
        """
        return max(p.degree for p in self._polynomials)

    def P(self, i: int) -> RatPoly:
        """
        Returns Pᵢ (zero above m).
        """
        if 0 <= i < len(self._polynomials):
            return self._polynomials[i]
        return RatPoly()

    def ell(self, i: int) -> int:
        """
        Degree ℓᵢ of Pᵢ (:attr:`RatPoly.ZERO_DEGREE` for Pᵢ ≡ 0).
        """
        return self.P(i).degree

    def top(self, i: int) -> sympy.Rational:
        """
        Coefficient of xⁿ in Pᵢ, i.e. aₙ, bₙ or cₙ for i = 0, 1, 2.
        """
        return self.P(i).coefficient(self.n)

    @property
    def a_n(self) -> sympy.Rational:
        return self.top(0)

    @property
    def b_n(self) -> sympy.Rational:
        return self.top(1)

    @property
    def c_n(self) -> sympy.Rational:
        return self.top(2)

    @property
    def discriminant(self) -> sympy.Rational:
        """
        bₙ² - 4aₙcₙ.
        """
        return self.b_n**2 - 4 * self.a_n * self.c_n

    def reversed(self, i: int) -> RatPoly:
        """
        P̃ᵢ(u) = uⁿPᵢ(1/u).
        """
        return reverse(self.P(i), self.n)

    @property
    def is_potential(self) -> bool:
        return self.m == 0

    @property
    def is_lienard(self) -> bool:
        return self.m == 1

    @property
    def is_cherkas(self) -> bool:
        return self.m == 2

    def as_expr(self) -> sympy.Expr:
        return sum(
            (p.poly.as_expr() * Y**i for i, p in enumerate(self._polynomials)),
            sympy.Integer(0),
        )

    def scaled(self, factor) -> "NewtonSystem":
        """
        Multiplies every Pᵢ by the same constant.
        """
        return NewtonSystem([p * factor for p in self._polynomials])

    def float_coefficients(self) -> List[np.ndarray]:
        """
        Float coefficient arrays of the Pᵢ, highest power first, ready for
        :func:`numpy.polyval`.
        """
        return [
            np.array(list(reversed(p.to_floats())) or [0.0], dtype=float)
            for p in self._polynomials
        ]

    def rhs(self, x: float, y: float) -> Tuple[float, float]:
        """
        Evaluates (ẋ, ẏ) in floating point.
        """
        ydot = 0.0
        for i, coefficients in enumerate(self.float_coefficients()):
            ydot += np.polyval(coefficients, x) * y**i
        return y, ydot

    def rhs_function(self):
        """
        Returns f(t, state) for :mod:`scipy.integrate`, with the coefficient
        arrays evaluated once.
        """
        coefficients = self.float_coefficients()

        def f(_, state):
            x, y = state
            ydot = 0.0
            power = 1.0
            for array in coefficients:
                ydot += np.polyval(array, x) * power
                power *= y
            return np.array([y, ydot])

        return f
