"""
JSON certificates of the exact decisions.

Every exact value is written as a string: rationals as ``"p/q"``,
half-integer exponents as ``"k/2"`` and algebraic numbers in sympy's
string form, so no exact value passes through floating point.
"""
import json
from pathlib import Path
from typing import Iterable, Optional, Union

import jsonschema
import sympy

from newton_centers.center.global_center import GlobalCenterVerdict
from newton_centers.center.local_center import LocalCenterVerdict
from newton_centers.cli import messages
from newton_centers.cli.parser import format_system
from newton_centers.monodromy.newton_system import NewtonSystem
from newton_centers.monodromy.verdict import MonodromyVerdict
from newton_centers.numerics.oracle import OracleReport
from newton_centers.polyarith.rat_poly import RatPoly
from newton_centers.resolution.descent import DescentCertificate
from newton_centers.resolution.fractional_series import FractionalSeries
from newton_centers.resolution.newton_polygon import PolygonEdge
from newton_centers.utils.exceptions import InvariantViolation
from newton_centers.utils.rational import format_exact, parse_rational

SCHEMA_VERSION = "1.0"

SCHEMA_PATH = Path(__file__).parent / "schemas" / "certificate.schema.json"


def _exact(value) -> str:
    return format_exact(sympy.sympify(value))


def _polynomial(polynomial: RatPoly) -> list:
    return [_exact(c) for c in polynomial.coefficients]


def _points(points: Iterable) -> list:
    return [[point.i, point.j] for point in points]


def _optional(serializer, value):
    return None if value is None else serializer(value)


def system_dict(system: NewtonSystem) -> dict:
    return {
        "equation": format_system(system),
        "n": system.n,
        "m": system.m,
        "coefficients": [_polynomial(p) for p in system.polynomials],
    }


def system_from_dict(data: dict) -> NewtonSystem:
    """
    Rebuilds the system echoed in a certificate.
    """
    return NewtonSystem(
        [[parse_rational(c) for c in p] for p in data["coefficients"]]
    )


def edge_dict(edge: PolygonEdge) -> dict:
    return {
        "p": edge.p,
        "q": edge.q,
        "sigma": edge.sigma,
        "edge_points": _points(edge.lattice_points),
        "edge_poly": {
            str(power): _exact(value)
            for power, value in sorted(edge.coefficients.items())
        },
    }


def descent_dict(certificate: DescentCertificate) -> dict:
    """
    Serializes a descent tree: one entry per blow-up with its edge and
    root, then the terminal edge and reason.
    """
    levels = []
    for level in certificate.levels:
        entry = edge_dict(level.edge)
        entry.update(p=level.p, q=level.q, phi=_exact(level.phi))
        levels.append(entry)
    terminal = certificate.terminal
    return {
        "u_sign": certificate.u_sign.value,
        "policy": certificate.policy.value,
        "depth_bound": certificate.depth_bound,
        "degree": certificate.degree,
        "verdict": certificate.verdict,
        "levels": levels,
        "terminal": {
            "reason": terminal.reason.value,
            "edge": _optional(edge_dict, terminal.edge),
        },
        "corners": [
            {
                "sign": corner.sign,
                "w_coefficient": _exact(corner.w_coefficient),
                "z_coefficient": _exact(corner.z_coefficient),
                "saddle": corner.is_saddle,
            }
            for corner in certificate.corners
        ],
    }


def series_dict(series: FractionalSeries) -> dict:
    return series.as_dict()


def _trace(trace: dict) -> dict:
    return {key: _exact(value) for key, value in trace.items()}


def monodromy_dict(verdict: MonodromyVerdict) -> dict:
    return {
        "monodromic": verdict.monodromic,
        "condition": verdict.condition.value,
        "failure_case": _optional(lambda c: c.value, verdict.failure_case),
        "trace": _trace(verdict.trace),
        "witnesses": [descent_dict(c) for c in verdict.witness or ()],
        "curve": _optional(series_dict, verdict.curve),
        "blowup_polynomial": _optional(
            _polynomial, verdict.blowup_polynomial
        ),
    }


def local_center_dict(verdict: LocalCenterVerdict) -> dict:
    decomposition = verdict.decomposition
    return {
        "origin": verdict.origin.as_dict(),
        "center": verdict.center,
        "conditions": [c.value for c in verdict.conditions],
        "darboux_constant": _optional(_exact, verdict.darboux_constant),
        "invariant_curve": verdict.invariant_curve,
        "decomposition": None
        if decomposition is None
        else {
            "r": _polynomial(decomposition.r),
            "A": [_polynomial(a) for a in decomposition.A],
        },
    }


def global_center_dict(verdict: GlobalCenterVerdict) -> dict:
    return {
        "global_center": verdict.global_center,
        "condition": verdict.condition.value,
        "rejection": _optional(lambda r: r.value, verdict.rejection),
        "infinity": _optional(monodromy_dict, verdict.infinity),
        "witnesses": [descent_dict(c) for c in verdict.certificates],
        "curve": _optional(series_dict, verdict.curve),
        "trace": _trace(verdict.trace),
    }


def oracle_dict(report: OracleReport, agrees: bool) -> dict:
    return {
        "outcome": report.outcome.value,
        "agrees": agrees,
        "orbits": len(report.orbits),
        "details": report.details(),
    }


def build_certificate(
    system: NewtonSystem,
    monodromy: Optional[MonodromyVerdict] = None,
    local_center: Optional[LocalCenterVerdict] = None,
    global_center: Optional[GlobalCenterVerdict] = None,
    numeric: Optional[dict] = None,
) -> dict:
    """
    Assembles a certificate document from whichever verdicts were computed.

    Parameters
    ----------
    system : NewtonSystem
        Analyzed system
    monodromy : MonodromyVerdict, optional
        Verdict at infinity, by default None
    local_center : LocalCenterVerdict, optional
        Center-focus verdict at the origin, by default None
    global_center : GlobalCenterVerdict, optional
        Global center verdict, by default None
    numeric : dict, optional
        Oracle result and period table reference, by default None

    Returns
    -------
    dict
        JSON-ready certificate
    """
    return {
        "schema_version": SCHEMA_VERSION,
        "system": system_dict(system),
        "monodromy": _optional(monodromy_dict, monodromy),
        "local_center": _optional(local_center_dict, local_center),
        "global_center": _optional(global_center_dict, global_center),
        "numeric": numeric,
    }


def load_schema() -> dict:
    with open(SCHEMA_PATH) as schema_file:
        return json.load(schema_file)


def validate_certificate(document: dict) -> dict:
    """
    Validates a certificate against the committed schema.

    Raises
    ------
    InvariantViolation
        If the document does not match the schema
    """
    try:
        jsonschema.validate(instance=document, schema=load_schema())
    except jsonschema.ValidationError as error:
        message = messages.INVALID_CERTIFICATE.format(error=error.message)
        raise InvariantViolation(message)
    return document


def write_certificate(document: dict, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(json.dumps(document, indent=2, ensure_ascii=False) + "\n")
    return path


def read_certificate(path: Union[str, Path]) -> dict:
    return json.loads(Path(path).read_text())
