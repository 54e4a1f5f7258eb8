"""
Strings and string formatting templates used in this module.
"""

EMPTY_FIELD: str = "The zero vector field has no Newton polygon!"
EMPTY_SUPPORT: str = "Can not build a Newton polygon from an empty support!"
EDGE_NOT_ON_POLYGON: str = "Edge {edge} is not an edge of the Newton polygon of {field}!"
BAD_BLOWUP_WEIGHTS: str = "Blow-up weights must be positive coprime integers (got p={p}, q={q})!"
BAD_VERTICAL_SIGN: str = "Vertical blow-up sign must be +1 or -1 (got {sign})!"
NOT_RATIONAL_FIELD: str = "Edge polynomials of {field} have algebraic coefficients, use edge_coefficients() instead."
TALL_EDGE: str = "Descent requires edges of height at most 2, got {edge} at level {level}!"
UNEXPECTED_ROOTS: str = "Edge polynomial {polynomial} at level {level} has a multiple nonzero real root of multiplicity other than 2!"
DEPTH_BOUND_EXCEEDED: str = "Descent did not terminate within the depth bound {bound} (level {level})!"
NEGATIVE_DEPTH_BOUND: str = "Depth bound must be nonnegative (got {bound})!"
BAD_ORDER_BOUND: str = "Order bound must be a nonnegative half-integer (got {bound})!"
BAD_U_SIGN: str = "u_sign must be +1 or -1 (got {value!r})!"
WITNESS_RESIDUAL: str = "Invariant curve witness {series} leaves a residual term of order {order} within the truncation order {bound}!"

# flake8: noqa: E501
