"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class PartitionError(ValueError):
    """Base class for domain errors (CLI exit code 1)."""


class ParseError(PartitionError):
    pass


class InvalidGrowth(PartitionError):
    """A canonical sequence violates the restricted growth condition."""


class InvalidDiagram(PartitionError):
    pass


class InvalidPath(PartitionError):
    pass


class NotTwoRegular(PartitionError):
    pass


class NotNoncrossing(PartitionError):
    pass


class NotReducible(PartitionError):
    """Reduced arc set would put a loop and another arc on one vertex."""
