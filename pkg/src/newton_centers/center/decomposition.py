"""
Search for the composition structure Pᵢ = Aᵢ(r)·r′ behind condition (C2).

Integrating, the condition says Fᵢ = Bᵢ∘r for the antiderivatives
Fᵢ = ∫₀ˣ Pᵢ, with Bᵢ(0) = 0 and Aᵢ = Bᵢ′. Every admissible r is thus an
inner component of a decomposition of F₀ (or of F₂, F₁ when those are the
ones with a proper decomposition), normalized to r(0) = 0 with lowest
coefficient 1.
"""
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

import sympy

from newton_centers.center import messages
from newton_centers.monodromy.newton_system import NewtonSystem
from newton_centers.polyarith.decomposition import (
    decompose_complete,
    expand_in_powers,
)
from newton_centers.polyarith.rat_poly import RatPoly
from newton_centers.utils.exceptions import InvariantViolation

#: Order in which the antiderivatives drive the candidate search.
DRIVERS = (0, 2, 1)


@dataclass(frozen=True)
class CenterDecomposition:
    """
    Pᵢ = Aᵢ(r)·r′ for i = 0, 1, 2, with r = x^{2ν} + O(x^{2ν+1}) and
    A₀(0) < 0.
    """

    r: RatPoly
    A: Tuple[RatPoly, RatPoly, RatPoly]

    @property
    def kappa(self) -> int:
        return max(max(a.degree for a in self.A), 0)

    @property
    def alpha_k(self) -> sympy.Rational:
        return self.A[0].coefficient(self.kappa)

    @property
    def beta_k(self) -> sympy.Rational:
        return self.A[1].coefficient(self.kappa)

    @property
    def gamma_k(self) -> sympy.Rational:
        return self.A[2].coefficient(self.kappa)

    @property
    def y_tilde_star(self) -> Optional[sympy.Rational]:
        if self.gamma_k == 0:
            return None
        return -self.beta_k / (2 * self.gamma_k)

    @property
    def reduced_system(self) -> NewtonSystem:
        """
        The system ẏ = A₀(x) + A₁(x)y + A₂(x)y², whose 𝒳 chart and shifted
        𝒴 chart are the 𝒰⁽⁰⁾ and 𝒱⁽⁰⁾ fields of the global analysis.
        """
        return NewtonSystem(list(self.A))

    def reconstruct(self, index: int) -> RatPoly:
        return self.A[index].compose(self.r) * self.r.derivative()


def _candidates(system: NewtonSystem, nu: int) -> List[RatPoly]:
    seen = set()
    candidates = []
    for index in DRIVERS:
        driver = system.P(index).antiderivative()
        if driver.degree < 2:
            continue
        inners = [d.inner for d in decompose_complete(driver)]
        inners.append(driver * (1 / driver.lowest_coefficient))
        for inner in inners:
            if inner.valuation != 2 * nu or inner in seen:
                continue
            seen.add(inner)
            candidates.append(inner)
    return sorted(candidates, key=lambda r: r.degree)


def _try(system: NewtonSystem, r: RatPoly) -> Optional[CenterDecomposition]:
    derivatives = []
    for i in range(3):
        expansion = expand_in_powers(system.P(i).antiderivative(), r)
        if expansion is None:
            return None
        derivatives.append(RatPoly(expansion).derivative())
    if derivatives[0](0) >= 0:
        return None
    decomposition = CenterDecomposition(r, tuple(derivatives))
    for i in range(3):
        actual = decomposition.reconstruct(i)
        if actual != system.P(i):
            message = messages.BAD_RECONSTRUCTION.format(
                r=r, index=i, expected=system.P(i), actual=actual
            )
            raise InvariantViolation(message)
    return decomposition


def center_decompositions(
    system: NewtonSystem, nu: int
) -> Iterator[CenterDecomposition]:
    """
    Yields every decomposition Pᵢ = Aᵢ(r)·r′ with r(0) = 0, valuation 2ν
    and lowest coefficient 1, by increasing degree of r.
    """
    if system.P(0).is_zero:
        return
    for r in _candidates(system, nu):
        decomposition = _try(system, r)
        if decomposition is not None:
            yield decomposition


def check_c2_decomposition(
    system: NewtonSystem, nu: int
) -> Optional[CenterDecomposition]:
    """
    Looks for polynomials r and Aᵢ with Pᵢ = Aᵢ(r)·r′ for i = 0, 1, 2,
    r(x) = x^{2ν} + O(x^{2ν+1}) and A₀(0) < 0.

    Parameters
    ----------
    system : NewtonSystem
        System with P₀ ≢ 0
    nu : int
        ν from :func:`local_monodromy_origin`

    Returns
    -------
    Optional[CenterDecomposition]
        The decomposition with the lowest degree r, if any

    Raises
    ------
    InvariantViolation
        If an accepted decomposition does not reconstruct the Pᵢ
    """
    return next(center_decompositions(system, nu), None)
