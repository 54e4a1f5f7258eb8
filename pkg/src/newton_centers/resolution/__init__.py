"""
Newton polygons, quasi-homogeneous blow-ups, the blow-up descent and the
search for formal invariant curves with half-integer exponents.
"""
from newton_centers.resolution.blowup import blowup_u, blowup_vertical
from newton_centers.resolution.curve_search import fractional_curve_search
from newton_centers.resolution.descent import (
    CornerRecord,
    DescentCertificate,
    DescentLevel,
    DescentTerminal,
    TerminalReason,
    USign,
    WidthPolicy,
    m1_descent,
)
from newton_centers.resolution.fractional_series import (
    FractionalSeries,
    invariance_residual,
    verify_witness,
)
from newton_centers.resolution.newton_polygon import (
    PolygonEdge,
    SupportPoint,
    edge_polynomial,
    newton_polygon,
    polygon_of,
    support,
)
from newton_centers.resolution.planar_field import PlanarField
