"""
General utilities shared by the *newton_centers* subpackages.
"""
from newton_centers.utils.choice_enum import ChoiceEnum
from newton_centers.utils.rational import (
    format_exact,
    format_exponent,
    format_rational,
    parse_rational,
    to_rational,
)
from newton_centers.utils.requires_pandas import requires_pandas
