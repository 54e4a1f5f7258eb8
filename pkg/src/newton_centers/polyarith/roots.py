"""
Classification of the nonzero real roots of edge polynomials.
"""
from typing import Dict, List, NamedTuple, Optional

import sympy
from sympy import QQ, Poly

from newton_centers.polyarith import messages
from newton_centers.polyarith.rat_poly import X, RatPoly
from newton_centers.polyarith.sturm import Interval, sturm_real_root_count
from newton_centers.utils.choice_enum import ChoiceEnum
from newton_centers.utils.exceptions import ZeroPolynomialError

#: Digits used to tell apart the conjugates of an algebraic root.
CONJUGATE_DIGITS = 60


class RootKind(ChoiceEnum):
    """
    Classification of the nonzero real roots of a polynomial.
    """

    DOUBLE = "double"
    NONE = "none"
    SIMPLE = "simple"
    OTHER = "other"


class RootReport(NamedTuple):
    kind: RootKind
    root: Optional[sympy.Rational] = None
    multiplicity: int = 0


def _real_root_count(polynomial: RatPoly) -> int:
    if polynomial.is_constant:
        return 0
    return sturm_real_root_count(polynomial, Interval.real_line())


def double_root_factor(polynomial: RatPoly) -> RootReport:
    """
    Classifies the nonzero real roots of a polynomial.

    A :attr:`RootKind.DOUBLE` report carries the root φ when the nonzero
    real roots are exactly one rational φ of multiplicity two. Otherwise
    the report says whether there are no nonzero real roots, a simple
    one, or some other configuration (a multiple root of multiplicity
    other than two, several multiple roots or an irrational one).

    Parameters
    ----------
    polynomial : RatPoly
        Nonzero polynomial

    Returns
    -------
    RootReport
        Classification

    Raises
    ------
    ZeroPolynomialError
        If the polynomial is zero
    """
    if polynomial.is_zero:
        raise ZeroPolynomialError(messages.ZERO_POLYNOMIAL)
    _, rest = polynomial.strip_x_power()
    if rest.is_constant:
        return RootReport(RootKind.NONE)
    squarefree = rest.squarefree_part()
    repeated = rest.gcd(rest.derivative())
    simple = squarefree.exact_divide(squarefree.gcd(repeated))
    if _real_root_count(simple) > 0:
        return RootReport(RootKind.SIMPLE)
    if _real_root_count(squarefree) == 0:
        return RootReport(RootKind.NONE)
    real_multiple = squarefree.gcd(repeated).real_roots()
    if len(real_multiple) != 1 or not real_multiple[0][0].is_Rational:
        return RootReport(RootKind.OTHER)
    root = real_multiple[0][0]
    multiplicity = 0
    factor = RatPoly([-root, 1])
    quotient = rest
    while quotient(root) == 0:
        quotient = quotient.exact_divide(factor)
        multiplicity += 1
    if multiplicity != 2 or _real_root_count(quotient) > 0:
        return RootReport(RootKind.OTHER, root, multiplicity)
    return RootReport(RootKind.DOUBLE, root, multiplicity)


def nonzero_real_roots(
    coefficients: Dict[int, sympy.Expr], domain=QQ
) -> List[sympy.Expr]:
    """
    Distinct nonzero real roots of Σ cₖ vᵏ, in increasing order.

    Over QQ the roots come from sympy's exact real root isolation. Over an
    algebraic number field the candidates are the real roots of the norm
    (a polynomial over QQ); a candidate is kept when its minimal polynomial
    shares a factor with the input, and the conjugates of that common
    factor are told apart at :data:`CONJUGATE_DIGITS` digits.

    Parameters
    ----------
    coefficients : Dict[int, sympy.Expr]
        Coefficients by power of v
    domain : Domain, optional
        Coefficient domain, by default QQ

    Returns
    -------
    List[sympy.Expr]
        Exact real roots (radicals or :class:`sympy.CRootOf`)
    """
    if not any(c != 0 for c in coefficients.values()):
        raise ZeroPolynomialError(messages.ZERO_POLYNOMIAL)
    if domain == QQ:
        degree = max(coefficients)
        dense = [coefficients.get(k, 0) for k in range(degree + 1)]
        _, rest = RatPoly(dense).strip_x_power()
        return [root for root, _ in rest.real_roots()]
    poly = Poly.from_dict(
        {(k,): c for k, c in coefficients.items() if c != 0},
        X,
        domain=domain,
    )
    while poly.eval(0) == 0:
        poly = poly.quo(Poly(X, X, domain=domain))
    if poly.degree() <= 0:
        return []
    roots = []
    for candidate in Poly(poly.norm(), X).real_roots(multiple=False):
        candidate = candidate[0]
        minimal = Poly(
            sympy.minimal_polynomial(candidate, X), X, domain=domain
        )
        common = poly.gcd(minimal)
        if common.degree() <= 0:
            continue
        if common.degree() < minimal.degree():
            value = common.as_expr().subs(X, candidate)
            residue = sympy.N(value, CONJUGATE_DIGITS)
            threshold = sympy.Rational(1, 10 ** (CONJUGATE_DIGITS // 2))
            if abs(residue) > threshold:
                continue
        roots.append(candidate)
    return sorted(set(roots), key=lambda r: sympy.N(r, CONJUGATE_DIGITS))


def extend_domain(domain, root: sympy.Expr):
    """
    Returns the smallest field among those sympy builds containing
    *domain* and *root*.
    """
    if root.is_Rational:
        return domain
    if domain == QQ:
        return QQ.algebraic_field(root)
    return QQ.algebraic_field(*domain.orig_ext, root)
