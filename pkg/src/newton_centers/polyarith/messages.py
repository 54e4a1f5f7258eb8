"""
Strings and string formatting templates used by the exact arithmetic
subpackage.
"""

#: Message displayed when an operation requires a nonzero polynomial.
ZERO_POLYNOMIAL = "This operation is undefined for the zero polynomial!"

#: Message displayed on division by the zero polynomial.
ZERO_DIVISOR = "Division by the zero polynomial!"

#: Message displayed when an exact division leaves a remainder.
INEXACT_DIVISION = "{dividend} is not divisible by {divisor}!"

#: Message displayed when :func:`reverse` gets a slot below the degree.
INVALID_REVERSE_DEGREE = "Can not reverse a polynomial of degree {degree} into degree slot {n}!"

#: Message displayed when an infinite interval endpoint is marked closed.
CLOSED_INFINITE_ENDPOINT = "Infinite interval endpoints can not be closed!"

#: Message displayed for intervals with lower > upper.
EMPTY_INTERVAL = "Invalid interval: lower endpoint {lower} exceeds upper endpoint {upper}!"

#: Message displayed when decomposing a constant or linear polynomial.
NO_DECOMPOSITION = "Functional decomposition requires degree at least 2 (got {degree})!"

#: Message displayed when a monomial substitution would need a negative power.
NEGATIVE_MONOMIAL_POWER = "Can not divide {polynomial} by u^{power}: a term of lower u-degree exists!"

# flake8: noqa: E501
