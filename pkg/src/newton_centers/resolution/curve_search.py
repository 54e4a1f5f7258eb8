"""
Search for formal invariant curves v = Φ(|u|) with half-integer exponents
by undetermined coefficients.

The search keeps a worklist of partially determined curves. Each entry is
a blown-up field together with the terms found so far: once the field has
a nondegenerate linear part along v = 0 the remaining coefficients follow
one order at a time; otherwise every nonzero real root of every admissible
edge polynomial opens a new branch.
"""
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

import sympy
from sympy import Poly

from newton_centers.polyarith.bi_rat_poly import U
from newton_centers.polyarith.roots import nonzero_real_roots
from newton_centers.resolution.blowup import blowup_u
from newton_centers.resolution.descent import USign
from newton_centers.resolution.fractional_series import (
    FractionalSeries,
    Term,
    half_integer,
    verify_witness,
)
from newton_centers.resolution.newton_polygon import polygon_of
from newton_centers.resolution.planar_field import PlanarField

#: Largest admissible ramification: exponents live in ½ℤ.
MAX_RAMIFICATION = 2


@dataclass(frozen=True)
class _Branch:
    field: PlanarField
    terms: Tuple[Term, ...]
    exponent: sympy.Rational
    ramification: int


def _linear_tail(
    branch: _Branch, order_bound: sympy.Rational, allow_zero: bool
) -> Optional[Tuple[Term, ...]]:
    """
    Solves for v = Σ cₖuᵏ in the current chart, order by order, while the
    corresponding exponent stays within the bound. Returns the completed
    terms, or None when the branch has no admissible solution.
    """
    vector_field = branch.field
    domain = vector_field.domain
    f10 = domain.from_sympy(vector_field.f(1, 0))
    g01 = domain.from_sympy(vector_field.g(0, 1))
    last = int(
        sympy.floor((order_bound - branch.exponent) * branch.ramification)
    )
    terms = list(branch.terms)
    psi = Poly(0, U, domain=domain)
    identity = Poly(U, U, domain=domain)
    for k in range(1, last + 1):
        g = vector_field.G.compose_univariate(identity, psi, k)
        f = vector_field.F.compose_univariate(identity, psi, k)
        residual = g - psi.diff(U) * f
        defect = domain.from_sympy(residual.nth(k))
        slope = g01 - domain.convert(k) * f10
        if slope:
            coefficient = -defect / slope
        elif defect:
            return None
        else:
            # Resonance: any value works, pick a nonzero one for a
            # curve that would otherwise be empty.
            empty = not terms and not allow_zero
            coefficient = domain.one if empty else domain.zero
        if coefficient:
            value = domain.to_sympy(coefficient)
            psi += Poly(value * U**k, U, domain=domain)
            exponent = branch.exponent + sympy.Rational(
                k, branch.ramification
            )
            terms.append((exponent, value))
    if not terms and not allow_zero:
        return None
    return tuple(terms)


def _children(
    branch: _Branch, order_bound: sympy.Rational
) -> List[_Branch]:
    children = []
    for edge in polygon_of(branch.field):
        ramification = branch.ramification * edge.q
        if ramification > MAX_RAMIFICATION or not edge.coefficients:
            continue
        exponent = branch.exponent + sympy.Rational(edge.p, ramification)
        if exponent > order_bound:
            continue
        roots = nonzero_real_roots(edge.coefficients, branch.field.domain)
        for phi in roots:
            child = blowup_u(branch.field, edge.p, edge.q, phi)
            terms = branch.terms + ((exponent, phi),)
            children.append(_Branch(child, terms, exponent, ramification))
    return children


def _explore(
    branch: _Branch, order_bound: sympy.Rational, allow_zero: bool
) -> Union[Tuple[Term, ...], List[_Branch], None]:
    vector_field = branch.field
    if not vector_field.G.at_v_zero():
        if branch.terms or allow_zero:
            return branch.terms
    if vector_field.g(0, 0) != 0:
        return None
    if vector_field.f(1, 0) != 0 or vector_field.g(0, 1) != 0:
        return _linear_tail(branch, order_bound, allow_zero)
    return _children(branch, order_bound)


def fractional_curve_search(
    vector_field: PlanarField,
    order_bound,
    u_sign: Union[USign, int] = USign.POSITIVE,
    allow_zero: bool = False,
) -> Optional[FractionalSeries]:
    """
    Looks for a formal invariant curve v = Φ(|u|) ∈ ℝ[[|u|^{1/2}]] with
    Φ(0) = 0 through the origin of a chart field.

    Parameters
    ----------
    vector_field : PlanarField
        Chart field
    order_bound : half-integer
        Highest exponent determined
    u_sign : Union[USign, int], optional
        Side of u = 0 examined, by default positive
    allow_zero : bool, optional
        Whether the curve v = 0 itself counts as a witness, by default
        False

    Returns
    -------
    Optional[FractionalSeries]
        A verified witness truncated at *order_bound*, or None when no
        branch survives

    Raises
    ------
    WitnessVerificationError
        If a witness fails the residual check
    """
    u_sign = USign.coerce(u_sign)
    order_bound = half_integer(order_bound)
    start = vector_field
    if u_sign is USign.NEGATIVE:
        start = vector_field.reflect_u()
    worklist = [_Branch(start, (), sympy.Integer(0), 1)]
    while worklist:
        branch = worklist.pop()
        outcome = _explore(branch, order_bound, allow_zero)
        if outcome is None:
            continue
        if isinstance(outcome, list):
            worklist.extend(reversed(outcome))
            continue
        witness = FractionalSeries(outcome, u_sign, order_bound)
        verify_witness(vector_field, witness)
        return witness
    return None
