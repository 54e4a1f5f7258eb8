"""
Decision of monodromy at infinity for Newton systems.

Systems of degree m ≥ 3 in y are never monodromic, P₀ ≡ 0 leaves the
x-axis invariant, m = 0 and m = 1 have closed-form predicates, and for
m = 2 the sign pattern of (aₙ, bₙ, cₙ) either settles the question or
points to the chart on which a blow-up descent does. Whenever a descent
runs, the formal curve search runs alongside it and the two must agree.
"""
from typing import NamedTuple, Optional, Tuple

import sympy

from newton_centers.monodromy import messages
from newton_centers.monodromy.charts import chart_fields, y_star_shift
from newton_centers.monodromy.lienard import lienard_monodromy
from newton_centers.monodromy.newton_system import NewtonSystem
from newton_centers.monodromy.potential import potential_monodromy
from newton_centers.monodromy.verdict import (
    FailureCase,
    MonodromyCondition,
    MonodromyVerdict,
)
from newton_centers.polyarith.rat_poly import RatPoly
from newton_centers.resolution.curve_search import fractional_curve_search
from newton_centers.resolution.descent import (
    DescentCertificate,
    USign,
    m1_descent,
)
from newton_centers.resolution.fractional_series import FractionalSeries
from newton_centers.resolution.planar_field import PlanarField
from newton_centers.utils.exceptions import EquivalenceViolationError


class ChartDecision(NamedTuple):
    """
    Combined outcome of the descents and curve searches on both sides of
    u = 0 of one chart.
    """

    monodromic: bool
    certificates: Tuple[DescentCertificate, DescentCertificate]
    curve: Optional[FractionalSeries]

    @property
    def terminal_polynomial(self) -> Optional[RatPoly]:
        edge = self.certificates[0].terminal.edge
        if edge is None or not edge.is_rational:
            return None
        return edge.edge_poly


def certify_chart(
    vector_field: PlanarField,
    n: int,
    depth_bound: int,
    order_bound,
    allow_zero: bool = False,
    chart: str = "X0",
) -> ChartDecision:
    """
    Runs :func:`m1_descent` and :func:`fractional_curve_search` on both
    sides of u = 0 and checks that they agree: the descent succeeds on
    both sides exactly when neither search finds a formal invariant curve.

    Parameters
    ----------
    vector_field : PlanarField
        Chart field
    n : int
        Degree of the originating system
    depth_bound : int
        Descent depth bound
    order_bound : half-integer
        Curve search order bound
    allow_zero : bool, optional
        Whether the search accepts the curve v = 0, by default False
    chart : str, optional
        Chart name used in error messages, by default "X0"

    Returns
    -------
    ChartDecision
        Verdict, the two descent certificates and a curve when one exists

    Raises
    ------
    EquivalenceViolationError
        If the descent and the curve search disagree
    """
    certificates = []
    curves = []
    for sign in USign:
        _, certificate = m1_descent(vector_field, n, depth_bound, sign)
        certificates.append(certificate)
        curves.append(
            fractional_curve_search(
                vector_field, order_bound, sign, allow_zero
            )
        )
    descent = all(certificate.verdict for certificate in certificates)
    empty = all(curve is None for curve in curves)
    if descent != empty:
        message = messages.EQUIVALENCE_VIOLATION.format(
            chart=chart,
            descent=[c.verdict for c in certificates],
            witnesses=[str(curve) for curve in curves],
        )
        raise EquivalenceViolationError(message)
    curve = next((curve for curve in curves if curve is not None), None)
    return ChartDecision(descent, tuple(certificates), curve)


def _trace(system: NewtonSystem) -> dict:
    return {
        "m": sympy.Integer(system.m),
        "n": sympy.Integer(system.n),
        "a_n": system.a_n,
        "b_n": system.b_n,
        "c_n": system.c_n,
        "discriminant": system.discriminant,
    }


def _from_chart(
    decision: ChartDecision,
    condition: MonodromyCondition,
    failure: FailureCase,
    trace: dict,
) -> MonodromyVerdict:
    if decision.monodromic:
        return MonodromyVerdict(
            True,
            condition,
            witness=decision.certificates,
            trace=trace,
            blowup_polynomial=decision.terminal_polynomial,
        )
    return MonodromyVerdict.failure(
        failure,
        witness=decision.certificates,
        curve=decision.curve,
        trace=trace,
    )


def _decide_quadratic(system: NewtonSystem) -> MonodromyVerdict:
    trace = _trace(system)
    n, a, b, c = system.n, system.a_n, system.b_n, system.c_n
    if n % 2 == 0:
        return MonodromyVerdict.failure(FailureCase.N1, trace=trace)
    if c > 0:
        return MonodromyVerdict.failure(FailureCase.N2, trace=trace)
    if c == 0:
        if b != 0:
            return MonodromyVerdict.failure(FailureCase.N3, trace=trace)
        if a > 0:
            return MonodromyVerdict.failure(FailureCase.N4, trace=trace)
        x0 = chart_fields(system, allow_lienard=True).X0
        decision = certify_chart(x0, n, n - 1, n, chart="X0")
        return _from_chart(
            decision, MonodromyCondition.M1, FailureCase.N5, trace
        )
    discriminant = system.discriminant
    if discriminant < 0:
        return MonodromyVerdict(True, MonodromyCondition.M2, trace=trace)
    if discriminant > 0:
        return MonodromyVerdict.failure(FailureCase.N6, trace=trace)
    shifted = y_star_shift(system)
    depth_bound = n if b != 0 else n + 1
    decision = certify_chart(
        shifted,
        n,
        depth_bound,
        depth_bound + 1,
        allow_zero=True,
        chart="Y0",
    )
    return _from_chart(decision, MonodromyCondition.M3, FailureCase.N7, trace)


def decide_monodromy(
    system: NewtonSystem, specialized: bool = True
) -> MonodromyVerdict:
    """
    Decides whether infinity is monodromic for a Newton system.

    Parameters
    ----------
    system : NewtonSystem
        Any Newton system
    specialized : bool, optional
        Whether Liénard systems use the closed-form predicate rather than
        the general chart path, by default True

    Returns
    -------
    MonodromyVerdict
        Exactly one verdict per system, with the witness fields that its
        condition calls for

    Raises
    ------
    EquivalenceViolationError
        If a descent disagrees with the curve search on the same chart
    """
    if system.m >= 3:
        return MonodromyVerdict.failure(
            FailureCase.DEGREE_TOO_HIGH, trace={"m": sympy.Integer(system.m)}
        )
    if system.P(0).is_zero:
        return MonodromyVerdict.failure(FailureCase.P0_ZERO)
    if system.m == 0:
        return potential_monodromy(system.P(0))
    if system.is_lienard and specialized:
        return lienard_monodromy(system.P(0), system.P(1))
    return _decide_quadratic(system)
