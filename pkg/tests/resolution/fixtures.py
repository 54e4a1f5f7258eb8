from newton_centers.polyarith.bi_rat_poly import BiRatPoly
from newton_centers.resolution.planar_field import PlanarField


def field(f_terms: dict, g_terms: dict) -> PlanarField:
    return PlanarField(BiRatPoly(f_terms), BiRatPoly(g_terms))


#: u̇ = u⁵, v̇ = -v³ - u⁴v: one even edge without nonzero real roots.
SINGLE_EDGE = {(5, 0): 1}, {(0, 3): -1, (4, 1): -1}

#: u̇ = u³, v̇ = -v³ + 2uv²: edge polynomial -v(v - 1)².
DOUBLE_ROOT = {(3, 0): 1}, {(0, 3): -1, (1, 2): 2}

#: u̇ = u⁴, v̇ = -v⁴: an edge of height 3.
TALL_EDGE = {(4, 0): 1}, {(0, 4): -1}

#: u̇ = u⁴, v̇ = -v³: an edge of odd width.
ODD_WIDTH = {(4, 0): 1}, {(0, 3): -1}

#: u̇ = u⁴, v̇ = -v³ + uv²: two edges.
TWO_EDGES = {(4, 0): 1}, {(0, 3): -1, (1, 2): 1}

#: u̇ = 0, v̇ = v³ - uv: invariant curves v = ±√u for u > 0.
SQUARE_ROOT_CURVES = {}, {(0, 3): 1, (1, 1): -1}
