"""
Strings and string formatting templates used by the shared utilities.
"""

#: Message displayed when a value can not be converted to an exact rational.
NOT_RATIONAL = "{value!r} can not be converted to an exact rational number!"

#: Message displayed when a serialized rational does not follow "p/q".
BAD_RATIONAL_STRING = "{value!r} is not a rational serialized as 'p/q'!"

# flake8: noqa: E501
