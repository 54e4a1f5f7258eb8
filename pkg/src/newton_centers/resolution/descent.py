"""
Iterated blow-up descent deciding whether a chart field turns around
the origin of its chart without a characteristic direction.

At every level the Newton polygon must consist of a single edge of height
2 whose edge polynomial has a double nonzero root φ; the field is then
blown up along v ~ φ·u^p and the process repeats. The descent succeeds
when it reaches a single edge whose edge polynomial has no nonzero real
roots.
"""
from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

import sympy

from newton_centers.polyarith.roots import (
    RootKind,
    RootReport,
    double_root_factor,
)
from newton_centers.resolution import messages
from newton_centers.resolution.blowup import blowup_u, blowup_vertical
from newton_centers.resolution.newton_polygon import PolygonEdge, polygon_of
from newton_centers.resolution.planar_field import PlanarField
from newton_centers.utils.choice_enum import ChoiceEnum
from newton_centers.utils.exceptions import (
    DepthBoundExceededError,
    InvalidParameterError,
    InvariantViolation,
    PreconditionError,
)


class USign(ChoiceEnum):
    """
    Half-plane of the chart variable u being examined.
    """

    POSITIVE = "positive"
    NEGATIVE = "negative"

    @property
    def factor(self) -> int:
        return 1 if self is USign.POSITIVE else -1

    @classmethod
    def coerce(cls, value: Union["USign", int]) -> "USign":
        if isinstance(value, USign):
            return value
        if value == 1:
            return cls.POSITIVE
        if value == -1:
            return cls.NEGATIVE
        message = messages.BAD_U_SIGN.format(value=value)
        raise InvalidParameterError(message)


class WidthPolicy(ChoiceEnum):
    """
    Whether an odd-width edge ends the descent (:attr:`FULL`, a full
    neighbourhood of u = 0) or is allowed once as a half-step with q = 2
    (:attr:`HALF_PLANE`, only u ≥ 0 matters).
    """

    FULL = "full"
    HALF_PLANE = "half_plane"


class TerminalReason(ChoiceEnum):
    NO_NONZERO_REAL_ROOTS = "NoNonzeroRealRoots"
    SIMPLE_ROOT_FOUND = "SimpleRootFound"
    ODD_WIDTH = "OddWidth"
    MULTIPLE_EDGES = "MultipleEdges"
    ZERO_LEFT_ENDPOINT = "ZeroLeftEndpoint"


@dataclass(frozen=True)
class DescentLevel:
    """
    One blow-up of the descent: the edge, its double root and the weights
    used.
    """

    edge: PolygonEdge
    phi: sympy.Rational
    p: int
    q: int = 1


@dataclass(frozen=True)
class DescentTerminal:
    edge: Optional[PolygonEdge]
    reason: TerminalReason

    @property
    def verdict(self) -> bool:
        return self.reason is TerminalReason.NO_NONZERO_REAL_ROOTS


@dataclass(frozen=True)
class CornerRecord:
    """
    Leading diagonal coefficients of a vertical blow-up of the terminal
    field at w = z = 0: W ≈ w_coefficient·w and Z ≈ z_coefficient·z. A
    corner with coefficients of opposite signs is a hyperbolic saddle.
    """

    sign: int
    w_coefficient: sympy.Expr
    z_coefficient: sympy.Expr

    @property
    def is_saddle(self) -> bool:
        return bool(self.w_coefficient * self.z_coefficient < 0)


@dataclass(frozen=True)
class DescentCertificate:
    levels: Tuple[DescentLevel, ...]
    terminal: DescentTerminal
    u_sign: USign
    depth_bound: int
    degree: int
    policy: WidthPolicy = WidthPolicy.FULL
    corners: Tuple[CornerRecord, ...] = field(default=())

    @property
    def depth(self) -> int:
        return len(self.levels)

    @property
    def verdict(self) -> bool:
        return self.terminal.verdict


def corner_records(
    vector_field: PlanarField, edge: PolygonEdge
) -> Tuple[CornerRecord, ...]:
    """
    Blows the terminal field up vertically on both sides of v = 0 and
    reads the linear part at the corner w = z = 0.
    """
    records = []
    for sign in (1, -1):
        corner = blowup_vertical(vector_field, edge.p, sign, edge.q)
        records.append(CornerRecord(sign, corner.f(1, 0), corner.g(0, 1)))
    return tuple(records)


def _classify(polynomial, level: int) -> RootReport:
    report = double_root_factor(polynomial)
    if report.kind is RootKind.OTHER:
        message = messages.UNEXPECTED_ROOTS.format(
            polynomial=polynomial, level=level
        )
        raise InvariantViolation(message)
    return report


def m1_descent(
    vector_field: PlanarField,
    n: int,
    depth_bound: int,
    u_sign: Union[USign, int] = USign.POSITIVE,
    policy: WidthPolicy = WidthPolicy.FULL,
) -> Tuple[bool, DescentCertificate]:
    """
    Runs the blow-up descent on a chart field.

    Parameters
    ----------
    vector_field : PlanarField
        Chart field with its Newton polygon starting at a height-2 edge
    n : int
        Degree of the system the chart came from, recorded in the
        certificate
    depth_bound : int
        Largest admissible number of blow-ups before the terminal level
    u_sign : Union[USign, int], optional
        Half-plane examined; the negative one is handled by rewriting the
        field in -u first, by default positive
    policy : WidthPolicy, optional
        Treatment of odd-width edges, by default :attr:`WidthPolicy.FULL`

    Returns
    -------
    Tuple[bool, DescentCertificate]
        Verdict and the certificate backing it

    Raises
    ------
    PreconditionError
        If an edge of height greater than 2 is met
    DepthBoundExceededError
        If the descent does not terminate within the bound
    """
    u_sign = USign.coerce(u_sign)
    if depth_bound < 0:
        message = messages.NEGATIVE_DEPTH_BOUND.format(bound=depth_bound)
        raise InvalidParameterError(message)
    current = vector_field
    if u_sign is USign.NEGATIVE:
        current = vector_field.reflect_u()
    levels: List[DescentLevel] = []
    ramification = 1

    def finish(edge, reason, corners=()):
        terminal = DescentTerminal(edge, reason)
        certificate = DescentCertificate(
            tuple(levels),
            terminal,
            u_sign,
            depth_bound,
            n,
            policy,
            corners,
        )
        return terminal.verdict, certificate

    for level in range(depth_bound + 2):
        edges = polygon_of(current)
        if not edges:
            return finish(None, TerminalReason.ZERO_LEFT_ENDPOINT)
        if len(edges) > 1:
            return finish(edges[0], TerminalReason.MULTIPLE_EDGES)
        edge = edges[0]
        if edge.height > 2:
            message = messages.TALL_EDGE.format(edge=edge, level=level)
            raise PreconditionError(message)
        odd = edge.width % 2 == 1
        if edge.height == 2 and odd:
            if policy is WidthPolicy.FULL or ramification == 2:
                return finish(edge, TerminalReason.ODD_WIDTH)
        report = _classify(edge.edge_poly, level)
        if report.kind is RootKind.SIMPLE:
            return finish(edge, TerminalReason.SIMPLE_ROOT_FOUND)
        if edge.height == 1:
            return finish(edge, TerminalReason.ZERO_LEFT_ENDPOINT)
        if report.kind is RootKind.NONE:
            if level > depth_bound:
                break
            corners = corner_records(current, edge)
            return finish(
                edge, TerminalReason.NO_NONZERO_REAL_ROOTS, corners
            )
        if level == depth_bound + 1:
            break
        levels.append(DescentLevel(edge, report.root, edge.p, edge.q))
        current = blowup_u(current, edge.p, edge.q, report.root)
        ramification *= edge.q
    message = messages.DEPTH_BOUND_EXCEEDED.format(
        bound=depth_bound, level=len(levels)
    )
    raise DepthBoundExceededError(message)
