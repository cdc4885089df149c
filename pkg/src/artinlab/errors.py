"""Exception types raised by the workbench."""

from __future__ import annotations


class ArtinLabError(Exception):
    """Base class for all typed pipeline errors."""


class FieldMismatch(ArtinLabError):
    pass


class NonSplitField(ArtinLabError):
    """A needed polynomial split involves an irreducible non-linear factor."""


class NotNilpotent(ArtinLabError):
    """The relation ideal never swallowed all paths up to the length cap."""


class NotBasic(ArtinLabError):
    pass


class RadicalUnavailable(ArtinLabError):
    pass


class NonSplitEndomorphism(ArtinLabError):
    """No Fitting split found although End/rad is not one-dimensional.

    The module may be indecomposable over a field extension; the computation
    aborts instead of guessing.
    """


class Inconclusive(ArtinLabError):
    pass


class SocleAmbiguous(ArtinLabError):
    pass


class RegistryIncomplete(ArtinLabError):
    pass


class ParseError(ArtinLabError):
    def __init__(self, message: str, where: str | None = None):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)
