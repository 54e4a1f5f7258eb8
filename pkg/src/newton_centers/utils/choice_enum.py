"""
Definition of the :class:`ChoiceEnum` class.
"""
from enum import Enum
from typing import Tuple


class ChoiceEnum(Enum):
    """
    An :class:`~enum.Enum` whose values are the short tags written to
    certificates, with a class method listing the available choices (used to
    populate command line ``choices``).
    """

    @classmethod
    def choices(cls) -> Tuple[Tuple[str, str], ...]:
        """
        Returns the contained items as a tuple of tuples.

        Returns
        -------
        Tuple[Tuple[str, str], ...]
            Tuple of (name, value) tuples
        """
        return tuple([(item.name, item.value) for item in cls])

    @classmethod
    def from_tag(cls, tag: str) -> "ChoiceEnum":
        """
        Returns the member whose value equals *tag*.

        Parameters
        ----------
        tag : str
            Certificate tag

        Returns
        -------
        ChoiceEnum
            Matching member

        Raises
        ------
        ValueError
            No member carries the given tag
        """
        for item in cls:
            if item.value == tag:
                return item
        raise ValueError(f"{tag!r} is not a valid {cls.__name__} tag!")
