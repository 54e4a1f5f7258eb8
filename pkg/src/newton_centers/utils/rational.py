"""
Exact rational helpers shared by every subpackage.

All coefficients are held as :class:`sympy.Rational` instances, which keep an
arbitrary precision numerator and a positive denominator in lowest terms.
"""
from decimal import Decimal
from fractions import Fraction
from typing import Union

import sympy

from newton_centers.utils import messages
from newton_centers.utils.exceptions import InvalidParameterError

RationalLike = Union[int, str, Fraction, Decimal, sympy.Rational]


def to_rational(value: RationalLike) -> sympy.Rational:
    """
    Converts *value* to an exact :class:`sympy.Rational`.

    Strings are read exactly: ``"0.25"`` becomes 1/4 and ``"-3/6"`` becomes
    -1/2. Floats are rejected since they do not carry an exact value.

    Parameters
    ----------
    value : RationalLike
        Value to convert

    Returns
    -------
    sympy.Rational
        Exact rational

    Raises
    ------
    InvalidParameterError
        If the value is not an exact rational
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidParameterError(messages.NOT_RATIONAL.format(value=value))
    if isinstance(value, sympy.Rational):
        return value
    if isinstance(value, (int, Fraction, Decimal)):
        return sympy.Rational(str(value))
    if isinstance(value, str):
        try:
            converted = sympy.Rational(value.strip())
        except (TypeError, ValueError, ZeroDivisionError, sympy.SympifyError):
            converted = None
        if converted is not None and converted.is_Rational:
            return converted
    else:
        converted = sympy.sympify(value)
        if converted.is_Rational:
            return converted
    raise InvalidParameterError(messages.NOT_RATIONAL.format(value=value))


def format_rational(value: sympy.Rational) -> str:
    """
    Serializes a rational as ``"p/q"`` (always with an explicit denominator).

    Parameters
    ----------
    value : sympy.Rational
        Rational to serialize

    Returns
    -------
    str
        Lossless string representation
    """
    value = sympy.Rational(value)
    return f"{value.p}/{value.q}"


def parse_rational(text: str) -> sympy.Rational:
    """
    Reads back a rational written by :func:`format_rational`.

    Parameters
    ----------
    text : str
        Serialized rational

    Returns
    -------
    sympy.Rational
        Parsed value

    Raises
    ------
    InvalidParameterError
        If the string is not of the form ``"p/q"``
    """
    numerator, slash, denominator = text.partition("/")
    if not slash:
        raise InvalidParameterError(
            messages.BAD_RATIONAL_STRING.format(value=text)
        )
    try:
        numerator, denominator = int(numerator), int(denominator)
    except ValueError:
        denominator = 0
    if denominator <= 0:
        raise InvalidParameterError(
            messages.BAD_RATIONAL_STRING.format(value=text)
        )
    return sympy.Rational(numerator, denominator)


def format_exact(value: sympy.Expr) -> str:
    """
    Serializes an exact real number: rationals as ``"p/q"``, algebraic
    numbers through :func:`sympy.sstr`.

    Parameters
    ----------
    value : sympy.Expr
        Exact number

    Returns
    -------
    str
        String representation
    """
    value = sympy.sympify(value)
    if value.is_Rational:
        return format_rational(value)
    return sympy.sstr(value)


def format_exponent(value: sympy.Rational) -> str:
    """
    Serializes a half-integer exponent as ``"k/2"``.

    Parameters
    ----------
    value : sympy.Rational
        Exponent with ``2 * value`` integral

    Returns
    -------
    str
        String representation
    """
    doubled = sympy.Rational(value) * 2
    return f"{int(doubled)}/2"
