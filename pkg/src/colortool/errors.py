"""Exception types shared across the package."""


class ColortoolError(ValueError):
    """Base class for every error this package raises on bad input."""


class InvalidColorError(ColortoolError):
    """A color value is non-finite or outside the representable range."""


class HexParseError(InvalidColorError):
    """A hex color string is malformed.

    ``position`` is the index of the offending character within the input
    string, or None when the problem is the overall shape (e.g. length).
    """

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class InvalidSpecError(ColortoolError):
    """A palette specification violates its parameter constraints.

    ``field`` names the offending parameter when known.
    """

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


class UnknownPaletteError(ColortoolError):
    """A palette name was not found in the registry."""

    def __init__(self, message: str, suggestions: tuple[str, ...] = ()):
        super().__init__(message)
        self.suggestions = tuple(suggestions)


class RegistryFormatError(ColortoolError):
    """A palette registry file cannot be parsed.

    ``line`` is the 1-based line number of the offending record.
    """

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line


class InvalidInputError(ColortoolError):
    """An operation received an unusable argument (count, amount, severity...)."""


class UnsupportedKindError(ColortoolError):
    """The requested operation does not support this palette kind."""
