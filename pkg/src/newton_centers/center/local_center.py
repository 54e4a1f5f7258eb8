"""
Center-focus decision at a monodromic origin.
"""
from dataclasses import dataclass
from typing import Optional, Tuple

import sympy

from newton_centers.center import messages
from newton_centers.center.conditions import (
    check_c1,
    check_c3_darboux,
    excludes_global_center,
)
from newton_centers.center.decomposition import (
    CenterDecomposition,
    check_c2_decomposition,
)
from newton_centers.center.local_monodromy import (
    LocalMonodromyData,
    local_monodromy_origin,
)
from newton_centers.monodromy.newton_system import NewtonSystem
from newton_centers.utils.choice_enum import ChoiceEnum
from newton_centers.utils.exceptions import PreconditionError


class LocalCondition(ChoiceEnum):
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"


@dataclass(frozen=True)
class LocalCenterVerdict:
    """
    Every center condition the system satisfies, in the order they are
    checked, with the Darboux constant for (C3) and the lowest degree
    decomposition for (C2).
    """

    origin: LocalMonodromyData
    conditions: Tuple[LocalCondition, ...]
    darboux_constant: Optional[sympy.Rational] = None
    decomposition: Optional[CenterDecomposition] = None

    @property
    def center(self) -> bool:
        return bool(self.conditions)

    @property
    def invariant_curve(self) -> bool:
        """
        Whether (C3) holds with e = 1/4, so y + 2P₀/P₁ = 0 is invariant.
        """
        return excludes_global_center(self.darboux_constant)

    def holds(self, condition: LocalCondition) -> bool:
        return condition in self.conditions


def decide_local_center(system: NewtonSystem) -> LocalCenterVerdict:
    """
    Decides whether a monodromic origin is a center: (C1) reversibility,
    then the Darboux identity (C3), then the composition condition (C2).

    Parameters
    ----------
    system : NewtonSystem
        System with m ≤ 2 whose origin satisfies (W1) or (W2)

    Returns
    -------
    LocalCenterVerdict
        All satisfied conditions with their witnesses

    Raises
    ------
    PreconditionError
        If the origin is not monodromic
    """
    origin = local_monodromy_origin(system)
    if not origin.is_monodromic:
        message = messages.ORIGIN_NOT_MONODROMIC.format(
            system=system, case=origin.case.value
        )
        raise PreconditionError(message)
    conditions = []
    if check_c1(system):
        conditions.append(LocalCondition.C1)
    e = check_c3_darboux(system)
    if e is not None:
        conditions.append(LocalCondition.C3)
    decomposition = check_c2_decomposition(system, origin.nu)
    if decomposition is not None:
        conditions.append(LocalCondition.C2)
    return LocalCenterVerdict(origin, tuple(conditions), e, decomposition)
