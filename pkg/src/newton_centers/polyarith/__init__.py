"""
Exact arithmetic over the rationals for univariate and bivariate
polynomials, and the algebraic subroutines built on it.
"""
from newton_centers.polyarith.bi_rat_poly import U, V, BiRatPoly
from newton_centers.polyarith.decomposition import (
    Decomposition,
    decompose_complete,
    expand_in_powers,
)
from newton_centers.polyarith.rat_poly import X, RatPoly, reverse
from newton_centers.polyarith.roots import (
    RootKind,
    RootReport,
    double_root_factor,
    nonzero_real_roots,
)
from newton_centers.polyarith.sturm import (
    Interval,
    has_nonzero_real_root,
    sturm_real_root_count,
)
