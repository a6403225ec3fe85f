"""Exception types shared across the package."""


class BoolNLError(Exception):
    """Base class for package errors."""


class ParseError(BoolNLError, ValueError):
    """Malformed function description (bin/hex/ANF string)."""


class SizeLimitError(BoolNLError, ValueError):
    """Input exceeds the size limit of the requested method."""


class DimensionError(BoolNLError, ValueError):
    """Operands are defined over different numbers of variables."""
