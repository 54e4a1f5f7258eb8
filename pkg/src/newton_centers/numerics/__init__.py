"""
Floating-point cross-validation: orbit integration, period sampling,
passage-time orders and the monodromy oracle.
"""
from newton_centers.numerics.config import (
    METHODS,
    ORACLE_RADII,
    IntegratorConfig,
)
from newton_centers.numerics.integrate import (
    Chart,
    Stepper,
    Termination,
    Trajectory,
    chart_function,
    integrate_orbit,
    section_crossing,
)
from newton_centers.numerics.oracle import (
    OracleOutcome,
    OracleReport,
    RingOrbit,
    check_concordance,
    monodromy_oracle,
)
from newton_centers.numerics.passage_time import (
    PassageKind,
    PassageLimit,
    PassageOrder,
    PassageTimeClass,
    fit_passage_exponent,
    passage_time,
    passage_time_class,
)
from newton_centers.numerics.period import (
    PeriodSample,
    fit_period_exponent,
    period_function,
    period_sample,
    period_table,
    write_period_csv,
    write_trajectory_csv,
)
