"""
Global center decision.

The origin of ẋ = y, ẏ = P₀ + P₁y + P₂y² is a global center exactly when n
is odd, x·P₀(x) < 0 off the origin, the origin is a monodromic center and
one of (G1), (G2), (G3) holds. Each G-condition pairs one of the local
center conditions with a monodromy condition at infinity:

* (G1) (C1) with a_ℓ₀ < 0, c_ℓ₂ < 0 and ℓ₀, ℓ₂ odd
* (G2) (C2), with the monodromy conditions applied to the reduced system
  ẏ = A₀ + A₁y + A₂y² on the half-plane u ≥ 0
* (G3) (C3) with a_ℓ₀ < 0, c_ℓ₂ < 0, b_ℓ₁² - 4a_ℓ₀c_ℓ₂ < 0 and
  ℓ₀ + ℓ₂ = 2ℓ₁
"""
import warnings
from dataclasses import dataclass, field
from typing import Dict, NamedTuple, Optional, Tuple

import sympy

from newton_centers.center import messages
from newton_centers.center.decomposition import (
    CenterDecomposition,
    center_decompositions,
)
from newton_centers.center.local_center import (
    LocalCenterVerdict,
    LocalCondition,
    decide_local_center,
)
from newton_centers.center.local_monodromy import local_monodromy_origin
from newton_centers.monodromy.charts import chart_fields, y_star_shift
from newton_centers.monodromy.decide import decide_monodromy
from newton_centers.monodromy.lienard import lienard_monodromy
from newton_centers.monodromy.newton_system import NewtonSystem
from newton_centers.monodromy.potential import (
    is_restoring,
    potential_monodromy,
)
from newton_centers.monodromy.verdict import MonodromyVerdict
from newton_centers.resolution.curve_search import fractional_curve_search
from newton_centers.resolution.descent import (
    DescentCertificate,
    USign,
    WidthPolicy,
    m1_descent,
)
from newton_centers.resolution.fractional_series import FractionalSeries
from newton_centers.resolution.planar_field import PlanarField
from newton_centers.utils.choice_enum import ChoiceEnum
from newton_centers.utils.exceptions import (
    ConcordanceWarning,
    InvariantViolation,
    PreconditionError,
)


class GlobalCondition(ChoiceEnum):
    G1 = "G1"
    G2I = "G2i"
    G2II = "G2ii"
    G2III = "G2iii"
    G3 = "G3"
    #: m = 0: the sign condition alone.
    POTENTIAL = "Potential"
    #: m = 1: a local center with (L1) or (L2) at infinity.
    LIENARD = "Lienard"
    NONE = "None"


class Rejection(ChoiceEnum):
    DEGREE_TOO_HIGH = "DegreeTooHigh"
    P0_ZERO = "P0Zero"
    EVEN_DEGREE = "EvenDegree"
    SIGN_CONDITION = "SignCondition"
    ORIGIN_NOT_MONODROMIC = "OriginNotMonodromic"
    NOT_A_CENTER = "NotACenter"
    INFINITY_NOT_MONODROMIC = "InfinityNotMonodromic"


@dataclass(frozen=True)
class GlobalCenterVerdict:
    """
    Outcome of the global center decision.

    Accepted verdicts carry the first satisfied condition in the order G1,
    G3, G2 and the monodromy verdict at infinity it implies. Rejected ones
    carry the reason, plus the formal invariant curve that defeated (G2i)
    or (G2iii) when there is one.
    """

    global_center: bool
    condition: GlobalCondition = GlobalCondition.NONE
    rejection: Optional[Rejection] = None
    local: Optional[LocalCenterVerdict] = None
    infinity: Optional[MonodromyVerdict] = None
    decomposition: Optional[CenterDecomposition] = None
    certificates: Tuple[DescentCertificate, ...] = ()
    curve: Optional[FractionalSeries] = None
    trace: Dict[str, sympy.Expr] = field(default_factory=dict)

    @property
    def darboux_constant(self) -> Optional[sympy.Rational]:
        if self.local is None:
            return None
        return self.local.darboux_constant


class G2Outcome(NamedTuple):
    condition: Optional[GlobalCondition]
    certificates: Tuple[DescentCertificate, ...] = ()
    curve: Optional[FractionalSeries] = None


def _degree_trace(system: NewtonSystem) -> dict:
    trace = {"n": sympy.Integer(system.n)}
    for i, name in enumerate("abc"):
        p = system.P(i)
        trace[f"ell{i}"] = sympy.Integer(p.degree)
        trace[f"{name}_ell{i}"] = (
            sympy.Integer(0) if p.is_zero else p.leading_coefficient
        )
    return trace


def _leading(system: NewtonSystem, i: int) -> Tuple[int, sympy.Rational]:
    p = system.P(i)
    if p.is_zero:
        return p.degree, sympy.Integer(0)
    return p.degree, p.leading_coefficient


def satisfies_g1(system: NewtonSystem) -> bool:
    ell0, a = _leading(system, 0)
    ell2, c = _leading(system, 2)
    return a < 0 and c < 0 and ell0 % 2 == 1 and ell2 % 2 == 1


def satisfies_g3(system: NewtonSystem, e: sympy.Rational) -> bool:
    """
    The inequalities of (G3). On acceptance the leading terms of the
    Darboux identity must balance, c_ℓ₂a_ℓ₀ = e·b_ℓ₁².

    Raises
    ------
    InvariantViolation
        If the balance fails on an accepted instance
    """
    ell0, a = _leading(system, 0)
    ell1, b = _leading(system, 1)
    ell2, c = _leading(system, 2)
    accepted = (
        a < 0 and c < 0 and b**2 - 4 * a * c < 0 and ell0 + ell2 == 2 * ell1
    )
    if accepted and c * a != e * b**2:
        message = messages.DARBOUX_IDENTITY.format(c=c, a=a, e=e, b=b)
        raise InvariantViolation(message)
    return accepted


def _advisory_descent(
    vector_field: PlanarField,
    kappa: int,
    chart: str,
    curve: Optional[FractionalSeries],
) -> Tuple[DescentCertificate, ...]:
    """
    Runs the half-plane descent next to the one-sided curve search. Its
    verdict is reported, never used.
    """
    try:
        verdict, certificate = m1_descent(
            vector_field,
            kappa,
            kappa + 1,
            USign.POSITIVE,
            WidthPolicy.HALF_PLANE,
        )
    except (PreconditionError, InvariantViolation) as error:
        message = messages.ADVISORY_DESCENT_FAILED.format(
            chart=chart, error=error
        )
        warnings.warn(message, ConcordanceWarning)
        return ()
    if verdict != (curve is None):
        message = messages.ADVISORY_DISAGREES.format(
            chart=chart, descent=verdict, curve=curve
        )
        warnings.warn(message, ConcordanceWarning)
    return (certificate,)


def check_g2(decomposition: CenterDecomposition) -> G2Outcome:
    """
    Applies (G2i)-(G2iii) to the leading data of a (C2) decomposition.
    """
    alpha = decomposition.alpha_k
    beta = decomposition.beta_k
    gamma = decomposition.gamma_k
    kappa = decomposition.kappa
    reduced = decomposition.reduced_system
    if gamma == 0 and beta == 0 and alpha < 0:
        u0 = chart_fields(reduced).X0
        curve = fractional_curve_search(u0, kappa, USign.POSITIVE)
        certificates = _advisory_descent(u0, kappa, "U0", curve)
        condition = GlobalCondition.G2I if curve is None else None
        return G2Outcome(condition, certificates, curve)
    if gamma >= 0:
        return G2Outcome(None)
    discriminant = beta**2 - 4 * alpha * gamma
    if discriminant < 0:
        return G2Outcome(GlobalCondition.G2II)
    if discriminant > 0:
        return G2Outcome(None)
    v0 = y_star_shift(reduced)
    bound = kappa + 1 if beta != 0 else kappa + 2
    curve = fractional_curve_search(
        v0, bound, USign.POSITIVE, allow_zero=True
    )
    certificates = _advisory_descent(v0, kappa, "V0", curve)
    condition = GlobalCondition.G2III if curve is None else None
    return G2Outcome(condition, certificates, curve)


def _check_infinity(
    system: NewtonSystem, condition: GlobalCondition
) -> MonodromyVerdict:
    infinity = decide_monodromy(system)
    if not infinity.monodromic:
        message = messages.INFINITY_DISAGREES.format(
            system=system,
            condition=condition.value,
            case=infinity.failure_case.value,
        )
        raise InvariantViolation(message)
    return infinity


def _decide_quadratic(
    system: NewtonSystem, local: LocalCenterVerdict, trace: dict
) -> GlobalCenterVerdict:
    def accept(condition: GlobalCondition, **kwargs):
        infinity = _check_infinity(system, condition)
        return GlobalCenterVerdict(
            True,
            condition,
            local=local,
            infinity=infinity,
            trace=trace,
            **kwargs,
        )

    if local.holds(LocalCondition.C1) and satisfies_g1(system):
        return accept(GlobalCondition.G1)
    if local.holds(LocalCondition.C3) and not local.invariant_curve:
        if satisfies_g3(system, local.darboux_constant):
            return accept(GlobalCondition.G3)
    curve = None
    certificates = ()
    if local.holds(LocalCondition.C2):
        for decomposition in center_decompositions(
            system, local.origin.nu
        ):
            outcome = check_g2(decomposition)
            if outcome.condition is not None:
                return accept(
                    outcome.condition,
                    decomposition=decomposition,
                    certificates=outcome.certificates,
                )
            if curve is None and outcome.curve is not None:
                curve = outcome.curve
                certificates = outcome.certificates
    return GlobalCenterVerdict(
        False,
        rejection=Rejection.INFINITY_NOT_MONODROMIC,
        local=local,
        decomposition=local.decomposition,
        certificates=certificates,
        curve=curve,
        trace=trace,
    )


def decide_global_center(system: NewtonSystem) -> GlobalCenterVerdict:
    """
    Decides whether the origin is a global center.

    Parameters
    ----------
    system : NewtonSystem
        Any Newton system

    Returns
    -------
    GlobalCenterVerdict
        Accepted with the first satisfied G-condition, or rejected with
        the first failed requirement

    Raises
    ------
    InvariantViolation
        If an accepted instance is not monodromic at infinity, or a
        decomposition or Darboux balance check fails
    """
    if system.m >= 3:
        return GlobalCenterVerdict(False, rejection=Rejection.DEGREE_TOO_HIGH)
    p0 = system.P(0)
    if p0.is_zero:
        return GlobalCenterVerdict(False, rejection=Rejection.P0_ZERO)
    trace = _degree_trace(system)
    if system.n % 2 == 0:
        return GlobalCenterVerdict(
            False, rejection=Rejection.EVEN_DEGREE, trace=trace
        )
    if not is_restoring(p0):
        return GlobalCenterVerdict(
            False, rejection=Rejection.SIGN_CONDITION, trace=trace
        )
    if not local_monodromy_origin(system).is_monodromic:
        return GlobalCenterVerdict(
            False, rejection=Rejection.ORIGIN_NOT_MONODROMIC, trace=trace
        )
    local = decide_local_center(system)
    if not local.center:
        return GlobalCenterVerdict(
            False, rejection=Rejection.NOT_A_CENTER, local=local, trace=trace
        )
    if system.m == 0:
        return GlobalCenterVerdict(
            True,
            GlobalCondition.POTENTIAL,
            local=local,
            infinity=potential_monodromy(p0),
            trace=trace,
        )
    if system.is_lienard:
        infinity = lienard_monodromy(p0, system.P(1))
        if infinity.monodromic:
            return GlobalCenterVerdict(
                True,
                GlobalCondition.LIENARD,
                local=local,
                infinity=infinity,
                trace=trace,
            )
        return GlobalCenterVerdict(
            False,
            rejection=Rejection.INFINITY_NOT_MONODROMIC,
            local=local,
            infinity=infinity,
            trace=trace,
        )
    return _decide_quadratic(system, local, trace)
