#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Exceptions raised by the engine.

Every error is a ``ValueError`` so callers written against plain input
validation keep working.
"""

from typing import Any, Optional


class ICPiError(ValueError):
    """Base class of all engine errors."""


class CycleParseError(ICPiError):
    """Raised when a cycle-notation string cannot be parsed.

    Args:
        message (str): Human readable diagnostic.
        token (str): Offending token of the input text.
    """

    def __init__(self, message: str, token: str = "") -> None:
        super().__init__(f"{message} (token {token!r})" if token else message)
        self.token = token


class DegreeMismatchError(ICPiError):
    """Raised when permutations or groups of different degrees are combined."""

    def __init__(self, left: int, right: int) -> None:
        super().__init__(f"degree mismatch: {left} != {right}")
        self.left = left
        self.right = right


class CapacityError(ICPiError):
    """Raised when a configured bound would be exceeded.

    Args:
        bound (str): Name of the bound (e.g. ``enumeration_bound``).
        limit (int): Configured value of the bound.
        requested (int): Size that was requested.
    """

    def __init__(self, bound: str, limit: int, requested: int) -> None:
        super().__init__(f"{bound} exceeded: {requested} > {limit}")
        self.bound = bound
        self.limit = limit
        self.requested = requested


class ContainmentError(ICPiError):
    """Raised when a subgroup argument is not contained in its ambient group."""


class NormalityError(ICPiError):
    """Raised when a subgroup argument must be normal and is not."""


class NotAPGroupError(ICPiError):
    """Raised when an operation restricted to p-groups gets another group."""


class UnknownFamilyError(ICPiError):
    """Raised for unknown named-group families or invalid family parameters."""


class GroupFileError(ICPiError):
    """Raised when a group file is missing or violates the schema.

    Args:
        message (str): Diagnostic.
        line (int, optional): Line of the offending entry, when known.
        field (str, optional): Offending field, when known.
    """

    def __init__(self, message: str, line: Optional[int] = None, field: Optional[str] = None) -> None:
        location = []
        if line is not None:
            location.append(f"line {line}")
        if field is not None:
            location.append(f"field {field!r}")
        super().__init__(f"{message} [{', '.join(location)}]" if location else message)
        self.line = line
        self.field = field


class ConfigurationError(ICPiError):
    """Raised for invalid settings, selectors or missing required arguments."""


class InvariantError(ICPiError):
    """Raised when an internal consistency check fails."""


def verify(condition: Any, message: str) -> None:
    """Raises :class:`InvariantError` with ``message`` unless ``condition`` holds."""
    if not condition:
        raise InvariantError(message)
