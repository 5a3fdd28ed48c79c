"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class BoxCountError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class DimensionMismatchError(BoxCountError, ValueError):
    """A symmetry operation or class was applied to an incompatible box."""

    exit_code = 2


class MalformedInputError(BoxCountError, ValueError):
    """Input data does not describe a valid partition / plane partition."""

    exit_code = 2


class UnsupportedMethodError(BoxCountError, ValueError):
    """The requested counting method is not available for this class."""

    exit_code = 2


class ResourceCapError(BoxCountError, RuntimeError):
    """An enumeration would exceed the configured cardinality cap."""

    exit_code = 3


class IntegrityError(BoxCountError, ArithmeticError):
    """An exact computation that must succeed did not (e.g. non-exact division)."""

    exit_code = 4


class PoleError(IntegrityError):
    """Specialising a q-expression at q = -1 hit a pole."""
