"""
Definition of the :class:`MonodromyVerdict` class and its vocabularies.
"""
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

import sympy

from newton_centers.polyarith.rat_poly import RatPoly
from newton_centers.resolution.descent import DescentCertificate
from newton_centers.resolution.fractional_series import FractionalSeries
from newton_centers.utils.choice_enum import ChoiceEnum


class MonodromyCondition(ChoiceEnum):
    M1 = "M1"
    M2 = "M2"
    M3 = "M3"
    L1 = "L1"
    L2 = "L2"
    POTENTIAL = "Potential"
    NOT_MONODROMIC = "NotMonodromic"


class FailureCase(ChoiceEnum):
    """
    Why infinity is not monodromic. N1-N7 cover systems quadratic in y,
    the Liénard cases follow the five ways (L1) and (L2) can fail.
    """

    N1 = "N1"
    N2 = "N2"
    N3 = "N3"
    N4 = "N4"
    N5 = "N5"
    N6 = "N6"
    N7 = "N7"
    DEGREE_TOO_HIGH = "DegreeTooHigh"
    P0_ZERO = "P0Zero"
    LIENARD_I = "LienardI"
    LIENARD_II = "LienardII"
    LIENARD_III = "LienardIII"
    LIENARD_IV = "LienardIV"
    LIENARD_V = "LienardV"
    POTENTIAL_SIGN = "PotentialSign"


@dataclass(frozen=True)
class MonodromyVerdict:
    """
    Outcome of a monodromy decision at infinity.

    *witness* holds the descent certificates for u > 0 and u < 0 when the
    decision went through a descent, *curve* a formal invariant curve
    found on a failing descent, and *trace* the coefficients the decision
    was read from.
    """

    monodromic: bool
    condition: MonodromyCondition
    failure_case: Optional[FailureCase] = None
    witness: Optional[Tuple[DescentCertificate, DescentCertificate]] = None
    curve: Optional[FractionalSeries] = None
    trace: Dict[str, sympy.Expr] = field(default_factory=dict)
    blowup_polynomial: Optional[RatPoly] = None

    @classmethod
    def failure(cls, case: FailureCase, **kwargs) -> "MonodromyVerdict":
        return cls(False, MonodromyCondition.NOT_MONODROMIC, case, **kwargs)
