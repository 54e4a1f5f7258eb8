"""
Definition of the :class:`BiRatPoly` class.
"""
from typing import Dict, Iterable, Optional, Tuple

import sympy
from sympy import QQ, Poly

from newton_centers.polyarith import messages
from newton_centers.polyarith.rat_poly import RatPoly
from newton_centers.utils.exceptions import InexactDivisionError
from newton_centers.utils.rational import to_rational

#: First indeterminate of every bivariate polynomial.
U = sympy.Symbol("u")

#: Second indeterminate of every bivariate polynomial.
V = sympy.Symbol("v")

Monomial = Tuple[int, int]


def _truncate(poly: Poly, max_degree: Optional[int]) -> Poly:
    if max_degree is None or poly.is_zero or poly.degree() <= max_degree:
        return poly
    kept = {
        monomial: coefficient
        for monomial, coefficient in poly.as_dict().items()
        if monomial[0] <= max_degree
    }
    return Poly.from_dict(
        kept or {(0,): 0}, *poly.gens, domain=poly.get_domain()
    )


class BiRatPoly:
    """
    Immutable sparse polynomial in (u, v).

    The coefficient domain is QQ unless an irrational number has been
    adjoined (:meth:`with_domain`), in which case it is a real algebraic
    number field such as ``QQ.algebraic_field(sqrt(2))``.

    Parameters
    ----------
    terms : Dict[Tuple[int, int], object], optional
        Map from exponent pairs (i, j) to coefficients of uⁱvʲ, by default
        None (the zero polynomial)
    domain : sympy.polys.domains.Domain, optional
        Coefficient domain, by default QQ
    """

    def __init__(
        self, terms: Optional[Dict[Monomial, object]] = None, domain=QQ
    ):
        terms = terms or {}
        if domain == QQ:
            clean = {
                (int(i), int(j)): to_rational(c)
                for (i, j), c in terms.items()
            }
        else:
            clean = {
                (int(i), int(j)): sympy.sympify(c)
                for (i, j), c in terms.items()
            }
        clean = {k: c for k, c in clean.items() if c != 0}
        self._poly = Poly.from_dict(
            clean or {(0, 0): 0}, U, V, domain=domain
        )

    @classmethod
    def from_poly(cls, poly: Poly) -> "BiRatPoly":
        instance = cls.__new__(cls)
        if poly.gens != (U, V):
            poly = Poly(poly.as_expr(), U, V, domain=poly.get_domain())
        instance._poly = poly
        return instance

    @classmethod
    def monomial(
        cls, i: int, j: int, coefficient=1, domain=QQ
    ) -> "BiRatPoly":
        return cls({(i, j): coefficient}, domain=domain)

    @classmethod
    def from_univariate(
        cls, polynomial: RatPoly, variable: str = "u", shift: int = 0
    ) -> "BiRatPoly":
        """
        Embeds a univariate polynomial as a polynomial in u (or in v),
        multiplied by the other variable raised to *shift*.

        Parameters
        ----------
        polynomial : RatPoly
            Univariate polynomial
        variable : str, optional
            Either "u" or "v", by default "u"
        shift : int, optional
            Power of the other variable, by default 0

        Returns
        -------
        BiRatPoly
            Embedded polynomial
        """
        terms = {}
        for power, coefficient in enumerate(polynomial.coefficients):
            key = (power, shift) if variable == "u" else (shift, power)
            terms[key] = coefficient
        return cls(terms)

    @property
    def poly(self) -> Poly:
        return self._poly

    @property
    def domain(self):
        return self._poly.get_domain()

    @property
    def terms(self) -> Dict[Monomial, sympy.Expr]:
        """
        Map from exponent pairs to nonzero coefficients.

        Returns
        -------
        Dict[Monomial, sympy.Expr]
            Terms of the polynomial
        """
        if self._poly.is_zero:
            return {}
        return dict(self._poly.as_dict())

    @property
    def is_zero(self) -> bool:
        return self._poly.is_zero

    @property
    def degree_u(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    @property
    def degree_v(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    @property
    def u_valuation(self) -> int:
        return min((i for i, _ in self.terms), default=-1)

    def coefficient(self, i: int, j: int) -> sympy.Expr:
        """
        Returns the coefficient of uⁱvʲ (zero when absent or when an
        exponent is negative).
        """
        return self.terms.get((i, j), sympy.Integer(0))

    def __repr__(self) -> str:
        return f"BiRatPoly({self._poly.as_expr()})"

    def __str__(self) -> str:
        return str(self._poly.as_expr())

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiRatPoly):
            return NotImplemented
        return (self - other).is_zero

    def __hash__(self) -> int:
        items = sorted((k, str(c)) for k, c in self.terms.items())
        return hash(tuple(items))

    def _coerce(self, other) -> Poly:
        if isinstance(other, BiRatPoly):
            return other._poly
        return Poly(sympy.sympify(other), U, V, domain=self.domain)

    def __add__(self, other) -> "BiRatPoly":
        return BiRatPoly.from_poly(self._poly + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other) -> "BiRatPoly":
        return BiRatPoly.from_poly(self._poly - self._coerce(other))

    def __rsub__(self, other) -> "BiRatPoly":
        return BiRatPoly.from_poly(self._coerce(other) - self._poly)

    def __neg__(self) -> "BiRatPoly":
        return BiRatPoly.from_poly(-self._poly)

    def __mul__(self, other) -> "BiRatPoly":
        return BiRatPoly.from_poly(self._poly * self._coerce(other))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BiRatPoly":
        return BiRatPoly.from_poly(self._poly**exponent)

    def with_domain(self, domain) -> "BiRatPoly":
        """
        Returns the same polynomial over a (larger) coefficient domain.
        """
        if domain == self.domain:
            return self
        return BiRatPoly.from_poly(self._poly.set_domain(domain))

    def substitute(
        self, u_image: "BiRatPoly", v_image: "BiRatPoly"
    ) -> "BiRatPoly":
        """
        Returns P(u_image, v_image), the composition with a polynomial map.

        Parameters
        ----------
        u_image : BiRatPoly
            Polynomial replacing u
        v_image : BiRatPoly
            Polynomial replacing v

        Returns
        -------
        BiRatPoly
            Composed polynomial
        """
        domain = self.domain.unify(u_image.domain).unify(v_image.domain)
        u_powers = _powers(u_image.with_domain(domain)._poly)
        v_powers = _powers(v_image.with_domain(domain)._poly)
        result = Poly(0, U, V, domain=domain)
        for (i, j), coefficient in self.terms.items():
            constant = Poly(coefficient, U, V, domain=domain)
            result += constant * u_powers(i) * v_powers(j)
        return BiRatPoly.from_poly(result)

    def compose_univariate(
        self,
        u_image: Poly,
        v_image: Poly,
        max_degree: Optional[int] = None,
    ) -> Poly:
        """
        Returns P(u_image(t), v_image(t)) for two univariate polynomials in
        a common generator t, optionally truncated above *max_degree*.

        Parameters
        ----------
        u_image : Poly
            Univariate polynomial replacing u
        v_image : Poly
            Univariate polynomial (same generator) replacing v
        max_degree : int, optional
            Highest power of t to keep, by default None (no truncation)

        Returns
        -------
        Poly
            Univariate result
        """
        domain = (
            self.domain.unify(u_image.get_domain())
            .unify(v_image.get_domain())
        )
        generator = u_image.gens[0]
        u_image = u_image.set_domain(domain)
        v_image = v_image.set_domain(domain)
        u_powers = _powers(u_image, max_degree)
        v_powers = _powers(v_image, max_degree)
        result = Poly(0, generator, domain=domain)
        for (i, j), coefficient in self.terms.items():
            term = u_powers(i) * v_powers(j)
            term = _truncate(term, max_degree)
            result += term * Poly(coefficient, generator, domain=domain)
        return _truncate(result, max_degree)

    def divide_u_power(self, power: int) -> "BiRatPoly":
        """
        Divides by uᵖᵒʷᵉʳ, which must divide every term.

        Raises
        ------
        InexactDivisionError
            If some term has u-degree below *power*
        """
        terms = {}
        for (i, j), coefficient in self.terms.items():
            if i < power:
                message = messages.NEGATIVE_MONOMIAL_POWER.format(
                    polynomial=self, power=power
                )
                raise InexactDivisionError(message)
            terms[(i - power, j)] = coefficient
        return BiRatPoly(terms, domain=self.domain)

    def reflect_u(self) -> "BiRatPoly":
        """
        Returns P(-u, v).
        """
        return BiRatPoly(
            {(i, j): c * (-1) ** i for (i, j), c in self.terms.items()},
            domain=self.domain,
        )

    def reflect_v(self) -> "BiRatPoly":
        """
        Returns P(u, -v).
        """
        return BiRatPoly(
            {(i, j): c * (-1) ** j for (i, j), c in self.terms.items()},
            domain=self.domain,
        )

    def at_u_zero(self) -> Dict[int, sympy.Expr]:
        """
        Coefficients of P(0, v) by power of v.
        """
        return {j: c for (i, j), c in self.terms.items() if i == 0}

    def at_v_zero(self) -> Dict[int, sympy.Expr]:
        """
        Coefficients of P(u, 0) by power of u.
        """
        return {i: c for (i, j), c in self.terms.items() if j == 0}

    def as_expr(self, names: Iterable[str] = ("u", "v")) -> sympy.Expr:
        first, second = (sympy.Symbol(name) for name in names)
        return self._poly.as_expr().subs(
            {U: first, V: second}, simultaneous=True
        )


def _powers(base: Poly, max_degree: Optional[int] = None):
    cache = {0: Poly(1, *base.gens, domain=base.get_domain()), 1: base}

    def power(k: int) -> Poly:
        if k not in cache:
            cache[k] = _truncate(power(k - 1) * base, max_degree)
        return cache[k]

    return power
