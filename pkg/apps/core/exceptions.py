"""
Exceptions shared by every app.
"""


class TilingError(Exception):
    """Base class for errors raised by the tiling libraries."""


class UnknownTilingError(TilingError, KeyError):
    """Raised when a tiling name is not one of the eleven vertex-transitive tilings."""

    def __init__(self, name, valid_names):
        self.name = name
        self.valid_names = tuple(valid_names)
        super().__init__(name)

    def __str__(self):
        return f"unknown tiling {self.name!r}; expected one of: {', '.join(self.valid_names)}"


class WordSyntaxError(TilingError, ValueError):
    """Raised by the word parser; `position` is the 0-based offset of the offending character."""

    def __init__(self, message, text, position):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


class FlagSystemError(TilingError):
    """A flag system violates one of its structural invariants."""


class TableFormatError(TilingError):
    """Raised when a flag table file cannot be parsed."""

    def __init__(self, message, line_number=None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class CatalogError(TilingError):
    """A generator catalog was requested for a regular tiling, or fails its invariants."""


class DisconnectedPatchError(TilingError):
    """A patch of the flag graph is not connected."""

    def __init__(self, flag):
        self.flag = flag
        super().__init__(f"flag {flag} is unreachable from the base flag; patch is disconnected")


class WalkError(TilingError):
    """A walk is not closed where a closed walk is required, or leaves a patch."""


class PeelError(TilingError):
    """Peeling did not terminate within the configured step bound."""

    def __init__(self, message, diagnostic=None):
        self.diagnostic = diagnostic or {}
        super().__init__(message)


class LemmaPreconditionError(TilingError):
    """The flags reached by two conjugators do not share the required cell."""


class RenderSpecError(TilingError, ValueError):
    """Invalid rendering parameters."""
