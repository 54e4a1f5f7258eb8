"""
Local and global center decisions at the origin of Cherkas systems.
"""
from newton_centers.center.conditions import (
    INVARIANT_CURVE_CONSTANT,
    check_c1,
    check_c3_darboux,
    darboux_residual,
    excludes_global_center,
)
from newton_centers.center.decomposition import (
    CenterDecomposition,
    center_decompositions,
    check_c2_decomposition,
)
from newton_centers.center.global_center import (
    GlobalCenterVerdict,
    GlobalCondition,
    Rejection,
    decide_global_center,
)
from newton_centers.center.kukles import (
    KuklesReason,
    kukles_classification,
    kukles_global_center,
    kukles_system,
)
from newton_centers.center.local_center import (
    LocalCenterVerdict,
    LocalCondition,
    decide_local_center,
)
from newton_centers.center.local_monodromy import (
    LocalMonodromyData,
    OriginCase,
    local_monodromy_origin,
)
