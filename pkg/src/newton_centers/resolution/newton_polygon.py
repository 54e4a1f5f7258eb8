"""
Supports, Newton polygons and edge polynomials of planar vector fields.

A term f_{a,b}uᵃvᵇ of F contributes the point (a-1, b) and a term
g_{a,b}uᵃvᵇ of G contributes (a, b-1), so the support of a field is the
set of (i, j) with (f_{i+1,j}, g_{i,j+1}) ≠ (0, 0). Either coordinate may
be -1.
"""
from dataclasses import dataclass, field
from math import gcd
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    List,
    NamedTuple,
    Optional,
    Tuple,
)

import sympy

from newton_centers.polyarith.rat_poly import RatPoly
from newton_centers.resolution import messages
from newton_centers.resolution.planar_field import PlanarField
from newton_centers.utils.exceptions import (
    EmptyFieldError,
    EmptySupportError,
    InconsistentEdgeError,
)


class SupportPoint(NamedTuple):
    i: int
    j: int


@dataclass(frozen=True)
class PolygonEdge:
    """
    A compact edge of a Newton polygon, lying on the line qi + pj = σ.

    *start* is the upper-left endpoint and *end* the lower-right one.
    *coefficients* maps each power k of v to the coefficient of vᵏ in the
    edge polynomial.
    """

    start: SupportPoint
    end: SupportPoint
    p: int
    q: int
    sigma: int
    lattice_points: Tuple[SupportPoint, ...]
    coefficients: Dict[int, sympy.Expr] = field(
        default_factory=dict, compare=False, hash=False
    )

    @property
    def width(self) -> int:
        return self.end.i - self.start.i

    @property
    def height(self) -> int:
        return self.start.j - self.end.j

    @property
    def is_rational(self) -> bool:
        return all(c.is_Rational for c in self.coefficients.values())

    @property
    def edge_poly(self) -> RatPoly:
        """
        The edge polynomial as a :class:`RatPoly` in v.

        Raises
        ------
        InconsistentEdgeError
            If the coefficients are not rational
        """
        if not self.is_rational:
            message = messages.NOT_RATIONAL_FIELD.format(field=self)
            raise InconsistentEdgeError(message)
        if not self.coefficients:
            return RatPoly()
        degree = max(self.coefficients)
        return RatPoly(
            [self.coefficients.get(k, 0) for k in range(degree + 1)]
        )

    def __str__(self) -> str:
        return f"({self.start.i},{self.start.j})-({self.end.i},{self.end.j})"


def support(vector_field: PlanarField) -> FrozenSet[SupportPoint]:
    """
    Returns the support of a vector field.

    Parameters
    ----------
    vector_field : PlanarField
        Nonzero field

    Returns
    -------
    FrozenSet[SupportPoint]
        Support points

    Raises
    ------
    EmptyFieldError
        If both components vanish
    """
    if vector_field.F.is_zero and vector_field.G.is_zero:
        raise EmptyFieldError(messages.EMPTY_FIELD)
    points = {SupportPoint(a - 1, b) for a, b in vector_field.F.terms}
    points |= {SupportPoint(a, b - 1) for a, b in vector_field.G.terms}
    return frozenset(points)


def _cross(o: SupportPoint, a: SupportPoint, b: SupportPoint) -> int:
    return (a.i - o.i) * (b.j - o.j) - (a.j - o.j) * (b.i - o.i)


def polygon_vertices(points: Iterable[SupportPoint]) -> List[SupportPoint]:
    """
    Vertices of the compact part of the lower convex semi-hull, from the
    upper-left vertex to the lower-right one.

    Raises
    ------
    EmptySupportError
        If there are no points
    """
    ordered = sorted(set(points))
    if not ordered:
        raise EmptySupportError(messages.EMPTY_SUPPORT)
    lowest = min(point.j for point in ordered)
    hull: List[SupportPoint] = []
    for point in ordered:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], point) <= 0:
            hull.pop()
        hull.append(point)
    vertices = []
    for vertex in hull:
        vertices.append(vertex)
        if vertex.j == lowest:
            break
    return vertices


def edge_coefficients(
    vector_field: PlanarField, p: int, q: int, sigma: int
) -> Dict[int, sympy.Expr]:
    """
    Coefficients of Σ (q·g_{i,j+1} - p·f_{i+1,j}) v^{j+1} over the lattice
    points of the line qi + pj = σ.
    """
    domain = vector_field.domain
    coefficients = {}
    candidates = {(a - 1, b) for a, b in vector_field.F.terms}
    candidates |= {(a, b - 1) for a, b in vector_field.G.terms}
    for i, j in candidates:
        if q * i + p * j != sigma:
            continue
        g = domain.from_sympy(vector_field.g(i, j + 1))
        f = domain.from_sympy(vector_field.f(i + 1, j))
        value = domain.convert(q) * g - domain.convert(p) * f
        if value:
            coefficients[j + 1] = domain.to_sympy(value)
    return coefficients


def _edge(vector_field, points, start, end) -> PolygonEdge:
    width, height = end.i - start.i, start.j - end.j
    divisor = gcd(width, height)
    p, q = width // divisor, height // divisor
    sigma = q * start.i + p * start.j
    on_line = tuple(
        sorted(
            point for point in points if q * point.i + p * point.j == sigma
        )
    )
    coefficients = (
        edge_coefficients(vector_field, p, q, sigma)
        if vector_field is not None
        else {}
    )
    return PolygonEdge(start, end, p, q, sigma, on_line, coefficients)


def newton_polygon(
    points: Iterable[SupportPoint], vector_field: Optional[PlanarField] = None
) -> List[PolygonEdge]:
    """
    Returns the edges of the Newton polygon of a support, ordered by
    strictly increasing slope.

    Parameters
    ----------
    points : Iterable[SupportPoint]
        Nonempty support
    vector_field : PlanarField, optional
        Field the support came from, used to fill in the edge polynomials,
        by default None

    Returns
    -------
    List[PolygonEdge]
        Compact edges (empty for a single vertex)

    Raises
    ------
    EmptySupportError
        If the support is empty
    """
    points = frozenset(points)
    vertices = polygon_vertices(points)
    return [
        _edge(vector_field, points, start, end)
        for start, end in zip(vertices, vertices[1:])
    ]


def polygon_of(vector_field: PlanarField) -> List[PolygonEdge]:
    """
    Shortcut for ``newton_polygon(support(vector_field), vector_field)``.
    """
    return newton_polygon(support(vector_field), vector_field)


def edge_polynomial(vector_field: PlanarField, edge: PolygonEdge) -> RatPoly:
    """
    Recomputes the edge polynomial of one edge of the field's polygon.

    Parameters
    ----------
    vector_field : PlanarField
        Field with rational coefficients
    edge : PolygonEdge
        An edge of the field's Newton polygon

    Returns
    -------
    RatPoly
        Edge polynomial in v

    Raises
    ------
    InconsistentEdgeError
        If *edge* is not an edge of the field's polygon
    """
    points = support(vector_field)
    on_polygon = (
        edge.start in points
        and edge.end in points
        and all(edge.q * i + edge.p * j >= edge.sigma for i, j in points)
        and edge.q * edge.end.i + edge.p * edge.end.j == edge.sigma
    )
    if not on_polygon:
        message = messages.EDGE_NOT_ON_POLYGON.format(
            edge=edge, field=vector_field
        )
        raise InconsistentEdgeError(message)
    coefficients = edge_coefficients(vector_field, edge.p, edge.q, edge.sigma)
    recomputed = PolygonEdge(
        edge.start,
        edge.end,
        edge.p,
        edge.q,
        edge.sigma,
        edge.lattice_points,
        coefficients,
    )
    return recomputed.edge_poly
