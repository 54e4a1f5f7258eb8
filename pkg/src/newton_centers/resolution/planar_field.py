"""
Definition of the :class:`PlanarField` class.
"""
from dataclasses import dataclass, field
from typing import Tuple

import sympy

from newton_centers.polyarith.bi_rat_poly import BiRatPoly
from newton_centers.resolution import messages
from newton_centers.utils.exceptions import EmptyFieldError


@dataclass(frozen=True)
class PlanarField:
    """
    A polynomial vector field F ∂/∂u + G ∂/∂v.

    Both components are :class:`BiRatPoly` instances in the generic
    indeterminates (u, v); *names* only affects how the field is printed
    (e.g. ``("w", "z")`` after a vertical blow-up).
    """

    F: BiRatPoly
    G: BiRatPoly
    names: Tuple[str, str] = field(default=("u", "v"), compare=False)

    def __post_init__(self):
        if self.F.is_zero and self.G.is_zero:
            raise EmptyFieldError(messages.EMPTY_FIELD)
        domain = self.F.domain.unify(self.G.domain)
        object.__setattr__(self, "F", self.F.with_domain(domain))
        object.__setattr__(self, "G", self.G.with_domain(domain))

    def __str__(self) -> str:
        first, second = self.names
        f = self.F.as_expr(self.names)
        g = self.G.as_expr(self.names)
        return f"({f}) d/d{first} + ({g}) d/d{second}"

    @property
    def domain(self):
        return self.F.domain

    def f(self, i: int, j: int) -> sympy.Expr:
        """
        Coefficient f_{i,j} of uⁱvʲ in F.
        """
        return self.F.coefficient(i, j)

    def g(self, i: int, j: int) -> sympy.Expr:
        """
        Coefficient g_{i,j} of uⁱvʲ in G.
        """
        return self.G.coefficient(i, j)

    def with_domain(self, domain) -> "PlanarField":
        return PlanarField(
            self.F.with_domain(domain), self.G.with_domain(domain), self.names
        )

    def reflect_u(self) -> "PlanarField":
        """
        The same field written in ũ = -u, i.e. (-F(-ũ, v), G(-ũ, v)).
        """
        return PlanarField(-self.F.reflect_u(), self.G.reflect_u(), self.names)

    def reflect_v(self) -> "PlanarField":
        """
        The same field written in ṽ = -v, i.e. (F(u, -ṽ), -G(u, -ṽ)).
        """
        return PlanarField(self.F.reflect_v(), -self.G.reflect_v(), self.names)

    def as_dict(self) -> dict:
        return {
            "variables": list(self.names),
            "F": str(self.F.as_expr(self.names)),
            "G": str(self.G.as_expr(self.names)),
        }
