"""
Monodromy at infinity of Newton systems ẋ = y, ẏ = Σᵢ Pᵢ(x)yⁱ.
"""
from newton_centers.monodromy.charts import (
    ChartFields,
    chart_fields,
    y_star,
    y_star_shift,
)
from newton_centers.monodromy.decide import (
    ChartDecision,
    certify_chart,
    decide_monodromy,
)
from newton_centers.monodromy.lienard import (
    IsochronyObstruction,
    blowup_quadratic,
    lienard_isochrony_obstruction,
    lienard_monodromy,
)
from newton_centers.monodromy.newton_system import NewtonSystem
from newton_centers.monodromy.potential import (
    is_restoring,
    potential_monodromy,
)
from newton_centers.monodromy.verdict import (
    FailureCase,
    MonodromyCondition,
    MonodromyVerdict,
)
